#pragma once

#include <map>
#include <vector>

#include "theta/polynomial.hpp"

namespace theta {

// Element of a tensor product of twisted presentations, multiplied leg-wise
// with no braiding between legs.  Keys are per-leg canonical monomials.
class Tensor {
 public:
  using Key = std::vector<Monomial>;

  Tensor() = default;
  explicit Tensor(std::vector<const Presentation*> legs) : legs_(std::move(legs)) {}

  static Tensor zero(std::vector<const Presentation*> legs) { return Tensor(std::move(legs)); }
  static Tensor unit(std::vector<const Presentation*> legs);

  int arity() const { return static_cast<int>(legs_.size()); }
  const Presentation& leg(int i) const { return *legs_[i]; }
  const std::vector<const Presentation*>& legs() const { return legs_; }
  const std::map<Key, PhaseCoefficient>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }

  void add_term(const Key& k, const PhaseCoefficient& c);
  PhaseCoefficient coeff(const Key& k) const {
    auto it = t_.find(k);
    return it == t_.end() ? PhaseCoefficient::zero() : it->second;
  }

  friend Tensor operator+(const Tensor& a, const Tensor& b);
  friend Tensor operator-(const Tensor& a, const Tensor& b);
  friend Tensor operator-(const Tensor& a);
  friend Tensor operator*(const Tensor& a, const Tensor& b);
  friend Tensor operator*(const PhaseCoefficient& c, const Tensor& a);
  friend Tensor operator*(const Rational& q, const Tensor& a);
  Tensor& operator+=(const Tensor& b) { return *this = *this + b; }
  Tensor& operator-=(const Tensor& b) { return *this = *this - b; }
  friend bool operator==(const Tensor& a, const Tensor& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

  // Leg-wise conjugate: star every leg, conjugate the coefficient.
  Tensor star() const;

 private:
  const Presentation* leg_ptr(int i) const { return legs_[i]; }
  std::vector<const Presentation*> legs_;
  std::map<Key, PhaseCoefficient> t_;
};

Tensor otimes(const Poly& a, const Poly& b);
Tensor otimes(const Poly& a, const Poly& b, const Poly& c);
// Append / prepend one leg to an existing tensor.
Tensor otimes(const Tensor& a, const Poly& b);
Tensor otimes(const Poly& a, const Tensor& b);

// Coefficient polynomials of an arity-2 tensor grouped by the monomials of one
// leg: t = sum_m collect[m] (x) m  (leg = 1), or mirrored for leg = 0.
std::map<Monomial, Poly> leg_collect(const Tensor& t, int leg);

// Collapse a leg that carries only scalars (unit monomials) out of an arity-2
// tensor; throws if a nontrivial monomial sits on that leg.
Poly contract_scalar_leg(const Tensor& t, int leg);

} // namespace theta
