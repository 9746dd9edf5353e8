#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace theta {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& q) {
  return q.str();
}

} // namespace theta
