#pragma once

#include <optional>
#include <string>
#include <vector>

#include "theta/degree.hpp"
#include "theta/phase.hpp"

namespace theta {

// One generator of a twisted presentation.  Star partners are indices into the
// same letter list; parity 1 marks anticommuting (form) letters.
struct Letter {
  std::string name;
  int parity = 0;
  int star = -1;  // index of the conjugate letter, -1 if none
  std::optional<DegreeVector> degree;
};

// A finitely generated algebra whose letters q-commute:
//   x y = mu^{lam(x,y)} (-1)^{parity(x) parity(y)} y x,
// with odd letters squaring to zero.  lam is antisymmetric and star-compatible.
struct Presentation {
  std::string name;
  std::vector<Letter> letters;
  std::vector<std::vector<int>> lam;

  int size() const { return static_cast<int>(letters.size()); }
  int index_of(const std::string& n) const {
    for (int i = 0; i < size(); ++i)
      if (letters[i].name == n) return i;
    return -1;
  }
  // Throws std::logic_error on an inconsistent table.
  void validate() const;
};

// Monomial in exponent-vector form.  The order is graded, ties broken by the
// exponent of the largest letter first; it is a monomial well-order compatible
// with multiplication.
struct Monomial {
  std::vector<int> e;
  int total = 0;

  Monomial() = default;
  explicit Monomial(int nletters) : e(nletters, 0) {}

  static Monomial unit(int nletters) { return Monomial(nletters); }
  bool is_unit() const { return total == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.total != b.total) return a.total < b.total;
    for (size_t i = a.e.size(); i-- > 0;)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
  friend bool operator>(const Monomial& a, const Monomial& b) { return b < a; }
};

using Word = std::vector<int>;  // letter indices, in multiplication order

// A scalar multiple of a canonically ordered monomial; coeff is zero when the
// word annihilates (repeated odd letter).
struct OrderedTerm {
  PhaseCoefficient coeff;
  Monomial mon;
};

// Canonical word of a monomial: letters ascending with multiplicity.
Word word_of(const Monomial& m);

// Fast normal ordering by inversion counting: the phase picked up by sorting
// the word is the product of mu^{lam} and parity signs over inverted pairs.
OrderedTerm normal_order(const Presentation& P, const Word& w);

// Reference implementation by adjacent swaps; oracle for the fast path.
OrderedTerm normal_order_naive(const Presentation& P, const Word& w);

// Product of two canonical monomials.
OrderedTerm mul_monomials(const Presentation& P, const Monomial& a, const Monomial& b);

// Conjugate of a canonical monomial: star each letter and reverse the word.
OrderedTerm star_monomial(const Presentation& P, const Monomial& m);

// Multidegree of a monomial (letters must all carry degrees).
DegreeVector monomial_degree(const Presentation& P, const Monomial& m);

// True when the exponent vector of a dominates b.
bool divides(const Monomial& b, const Monomial& a);

} // namespace theta
