#pragma once

#include <string>

#include "theta/polynomial.hpp"
#include "theta/tensor.hpp"

namespace theta {

// Canonical textual form: terms in descending monomial order, letters of a
// monomial ascending and joined by '*', exponents written by repetition,
// conjugate letters with a trailing prime, coefficient attached with " * ",
// tensor legs joined by " @ ".
std::string poly_str(const Poly& f);
std::string tensor_str(const Tensor& t);
std::string monomial_str(const Presentation& P, const Monomial& m);

// Parse an expression over the letters of P.  Accepts sums, differences,
// unary minus, parentheses, products with '*', rationals p/q, and the phase
// atoms mu, mubar, lambda, lambdabar, mu^k (k a possibly negative integer).
Poly parse_poly(const Presentation& P, const std::string& text);

std::string truncated(const std::string& s, size_t limit = 480);

} // namespace theta
