#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

#include "theta/rational.hpp"

namespace theta {

// Exact scalar of the deformed algebras: a Laurent polynomial in the formal
// unit phase mu (so lambda = mu^2 and conjugation inverts mu).  The deformation
// angle never enters as a float; eval() exists only for numeric spot checks.
class PhaseCoefficient {
 public:
  PhaseCoefficient() = default;
  explicit PhaseCoefficient(const Rational& q) {
    if (q != 0) c_[0] = q;
  }
  PhaseCoefficient(long num, long den) : PhaseCoefficient(Rational(num) / den) {}

  static PhaseCoefficient zero() { return PhaseCoefficient(); }
  static PhaseCoefficient one() { return PhaseCoefficient(Rational(1)); }
  static PhaseCoefficient mu(long k, const Rational& q = Rational(1)) {
    PhaseCoefficient p;
    if (q != 0) p.c_[static_cast<int>(k)] = q;
    return p;
  }

  const std::map<int, Rational>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
  }
  bool is_single_term() const { return c_.size() == 1; }

  void add_term(int k, const Rational& q) {
    if (q == 0) return;
    auto it = c_.find(k);
    if (it == c_.end()) {
      c_[k] = q;
    } else {
      it->second += q;
      if (it->second == 0) c_.erase(it);
    }
  }

  friend PhaseCoefficient operator+(const PhaseCoefficient& a, const PhaseCoefficient& b) {
    PhaseCoefficient r = a;
    for (const auto& [k, q] : b.c_) r.add_term(k, q);
    return r;
  }
  friend PhaseCoefficient operator-(const PhaseCoefficient& a, const PhaseCoefficient& b) {
    PhaseCoefficient r = a;
    for (const auto& [k, q] : b.c_) r.add_term(k, -q);
    return r;
  }
  friend PhaseCoefficient operator-(const PhaseCoefficient& a) {
    PhaseCoefficient r;
    for (const auto& [k, q] : a.c_) r.c_[k] = -q;
    return r;
  }
  friend PhaseCoefficient operator*(const PhaseCoefficient& a, const PhaseCoefficient& b) {
    PhaseCoefficient r;
    for (const auto& [ka, qa] : a.c_)
      for (const auto& [kb, qb] : b.c_) r.add_term(ka + kb, qa * qb);
    return r;
  }
  PhaseCoefficient& operator+=(const PhaseCoefficient& b) { return *this = *this + b; }
  PhaseCoefficient& operator-=(const PhaseCoefficient& b) { return *this = *this - b; }
  PhaseCoefficient& operator*=(const PhaseCoefficient& b) { return *this = *this * b; }

  friend bool operator==(const PhaseCoefficient& a, const PhaseCoefficient& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const PhaseCoefficient& a, const PhaseCoefficient& b) {
    return !(a == b);
  }
  friend bool operator<(const PhaseCoefficient& a, const PhaseCoefficient& b) {
    return a.c_ < b.c_;
  }

  // mu^k |-> mu^-k
  PhaseCoefficient conj() const {
    PhaseCoefficient r;
    for (const auto& [k, q] : c_) r.c_[-k] = q;
    return r;
  }

  // Reciprocal of a single-term coefficient q*mu^k; anything else has no
  // inverse in the Laurent ring and is rejected.
  PhaseCoefficient inverse() const {
    if (c_.size() != 1 || c_.begin()->second == 0)
      throw std::domain_error("phase inverse: coefficient is not a single term: " + str());
    const auto& [k, q] = *c_.begin();
    // divide rather than build Rational(1, q): a component constructor with a
    // negative denominator trips a normalize() overflow guard in this boost
    return mu(-k, Rational(1) / q);
  }

  // Evaluation at mu = exp(i pi theta); numeric layer only.
  std::complex<double> eval(double theta) const {
    std::complex<double> s(0.0, 0.0);
    for (const auto& [k, q] : c_) {
      double arg = 3.14159265358979323846 * theta * static_cast<double>(k);
      s += static_cast<double>(q) * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return s;
  }

  // Classical limit mu = 1.
  Rational eval_at_one() const {
    Rational s = 0;
    for (const auto& [k, q] : c_) s += q;
    return s;
  }

  std::string str() const;

 private:
  std::map<int, Rational> c_;  // exponent of mu -> rational coefficient
};

} // namespace theta
