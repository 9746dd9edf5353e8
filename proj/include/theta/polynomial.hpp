#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "theta/presentation.hpp"

namespace theta {

// Element of a twisted presentation in normal form: an exact linear
// combination of canonically ordered monomials.
class Poly {
 public:
  Poly() : pres_(nullptr) {}
  explicit Poly(const Presentation& P) : pres_(&P) {}

  static Poly zero(const Presentation& P) { return Poly(P); }
  static Poly one(const Presentation& P) {
    Poly f(P);
    f.t_[Monomial::unit(P.size())] = PhaseCoefficient::one();
    return f;
  }
  static Poly letter(const Presentation& P, int idx);
  static Poly letter(const Presentation& P, const std::string& name);
  static Poly term(const Presentation& P, const Monomial& m, const PhaseCoefficient& c);

  const Presentation& pres() const { return *pres_; }
  const std::map<Monomial, PhaseCoefficient>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }

  void add_term(const Monomial& m, const PhaseCoefficient& c);
  PhaseCoefficient coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? PhaseCoefficient::zero() : it->second;
  }
  // Largest monomial with its coefficient; polynomial must be nonzero.
  std::pair<Monomial, PhaseCoefficient> leading() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const PhaseCoefficient& c, const Poly& a);
  friend Poly operator*(const Rational& q, const Poly& a);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly star() const;

 private:
  const Presentation* pres_;
  std::map<Monomial, PhaseCoefficient> t_;
};

// Graded derivation determined by a letter map: image letter index, or -1 for
// letters sent to zero.  Koszul sign from the parity of the passed prefix.
Poly differential(const Poly& f, const std::vector<int>& dmap);

// The single-term phase c with f g = c g f, when one exists.
std::optional<PhaseCoefficient> commutation_phase(const Poly& f, const Poly& g);

// Parity of a polynomial whose monomials all share one parity; nullopt when
// mixed (parity of a monomial = sum of letter parities mod 2).
std::optional<int> homogeneous_parity(const Poly& f);

} // namespace theta
