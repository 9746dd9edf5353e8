#include "theta/tensor.hpp"

#include <stdexcept>

namespace theta {

Tensor Tensor::unit(std::vector<const Presentation*> legs) {
  Tensor t(legs);
  Key k;
  for (const Presentation* p : t.legs_) k.push_back(Monomial::unit(p->size()));
  t.t_[k] = PhaseCoefficient::one();
  return t;
}

void Tensor::add_term(const Key& k, const PhaseCoefficient& c) {
  if (c.is_zero()) return;
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_[k] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Tensor operator+(const Tensor& a, const Tensor& b) {
  Tensor s = a;
  if (s.legs_.empty()) s.legs_ = b.legs_;
  for (const auto& [k, c] : b.t_) s.add_term(k, c);
  return s;
}

Tensor operator-(const Tensor& a, const Tensor& b) {
  Tensor s = a;
  if (s.legs_.empty()) s.legs_ = b.legs_;
  for (const auto& [k, c] : b.t_) s.add_term(k, -c);
  return s;
}

Tensor operator-(const Tensor& a) {
  Tensor r(a.legs_);
  for (const auto& [k, c] : a.t_) r.t_[k] = -c;
  return r;
}

Tensor operator*(const Tensor& a, const Tensor& b) {
  Tensor r(a.legs_.empty() ? b.legs_ : a.legs_);
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) {
      PhaseCoefficient c = ca * cb;
      Tensor::Key k(r.arity());
      bool dead = false;
      for (int i = 0; i < r.arity(); ++i) {
        OrderedTerm ot = mul_monomials(r.leg(i), ka[i], kb[i]);
        if (ot.coeff.is_zero()) {
          dead = true;
          break;
        }
        c *= ot.coeff;
        k[i] = std::move(ot.mon);
      }
      if (!dead) r.add_term(k, c);
    }
  return r;
}

Tensor operator*(const PhaseCoefficient& c, const Tensor& a) {
  Tensor r(a.legs_);
  for (const auto& [k, ck] : a.t_) r.add_term(k, c * ck);
  return r;
}

Tensor operator*(const Rational& q, const Tensor& a) {
  return PhaseCoefficient(q) * a;
}

Tensor Tensor::star() const {
  Tensor r(legs_);
  for (const auto& [k, c] : t_) {
    PhaseCoefficient s = c.conj();
    Key sk(arity());
    bool dead = false;
    for (int i = 0; i < arity(); ++i) {
      OrderedTerm ot = star_monomial(leg(i), k[i]);
      if (ot.coeff.is_zero()) {
        dead = true;
        break;
      }
      s *= ot.coeff;
      sk[i] = std::move(ot.mon);
    }
    if (!dead) r.add_term(sk, s);
  }
  return r;
}

Tensor otimes(const Poly& a, const Poly& b) {
  Tensor r({&a.pres(), &b.pres()});
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term({ma, mb}, ca * cb);
  return r;
}

Tensor otimes(const Poly& a, const Poly& b, const Poly& c) {
  Tensor r({&a.pres(), &b.pres(), &c.pres()});
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      for (const auto& [mc, cc] : c.terms()) r.add_term({ma, mb, mc}, ca * cb * cc);
  return r;
}

Tensor otimes(const Tensor& a, const Poly& b) {
  std::vector<const Presentation*> legs = a.legs();
  legs.push_back(&b.pres());
  Tensor r(legs);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Tensor::Key k = ka;
      k.push_back(mb);
      r.add_term(k, ca * cb);
    }
  return r;
}

Tensor otimes(const Poly& a, const Tensor& b) {
  std::vector<const Presentation*> legs{&a.pres()};
  for (const Presentation* p : b.legs()) legs.push_back(p);
  Tensor r(legs);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Tensor::Key k{ma};
      k.insert(k.end(), kb.begin(), kb.end());
      r.add_term(k, ca * cb);
    }
  return r;
}

std::map<Monomial, Poly> leg_collect(const Tensor& t, int leg) {
  if (t.arity() != 2) throw std::invalid_argument("leg_collect expects an arity-2 tensor");
  const int other = 1 - leg;
  std::map<Monomial, Poly> r;
  for (const auto& [k, c] : t.terms()) {
    auto it = r.find(k[leg]);
    if (it == r.end()) it = r.emplace(k[leg], Poly(t.leg(other))).first;
    it->second.add_term(k[other], c);
  }
  return r;
}

Poly contract_scalar_leg(const Tensor& t, int leg) {
  if (t.arity() != 2) throw std::invalid_argument("contract_scalar_leg expects an arity-2 tensor");
  const int other = 1 - leg;
  Poly r(t.leg(other));
  for (const auto& [k, c] : t.terms()) {
    if (!k[leg].is_unit())
      throw std::invalid_argument("contracted leg carries a nontrivial monomial");
    r.add_term(k[other], c);
  }
  return r;
}

} // namespace theta
