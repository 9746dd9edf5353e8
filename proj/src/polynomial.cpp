#include "theta/polynomial.hpp"

#include <stdexcept>

namespace theta {

Poly Poly::letter(const Presentation& P, int idx) {
  Poly f(P);
  Monomial m(P.size());
  m.e[idx] = 1;
  m.total = 1;
  f.t_[m] = PhaseCoefficient::one();
  return f;
}

Poly Poly::letter(const Presentation& P, const std::string& name) {
  const int idx = P.index_of(name);
  if (idx < 0) throw std::invalid_argument(P.name + ": no letter named " + name);
  return letter(P, idx);
}

Poly Poly::term(const Presentation& P, const Monomial& m, const PhaseCoefficient& c) {
  Poly f(P);
  f.add_term(m, c);
  return f;
}

void Poly::add_term(const Monomial& m, const PhaseCoefficient& c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_[m] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

std::pair<Monomial, PhaseCoefficient> Poly::leading() const {
  if (t_.empty()) throw std::logic_error("leading term of zero");
  auto it = t_.rbegin();
  return {it->first, it->second};
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  if (!r.pres_) r.pres_ = b.pres_;
  for (const auto& [m, c] : b.t_) r.add_term(m, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  if (!r.pres_) r.pres_ = b.pres_;
  for (const auto& [m, c] : b.t_) r.add_term(m, -c);
  return r;
}

Poly operator-(const Poly& a) {
  Poly r(*a.pres_);
  for (const auto& [m, c] : a.t_) r.t_[m] = -c;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(*a.pres_);
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      OrderedTerm ot = mul_monomials(*a.pres_, ma, mb);
      if (ot.coeff.is_zero()) continue;
      r.add_term(ot.mon, ca * cb * ot.coeff);
    }
  return r;
}

Poly operator*(const PhaseCoefficient& c, const Poly& a) {
  Poly r(*a.pres_);
  for (const auto& [m, cm] : a.t_) r.add_term(m, c * cm);
  return r;
}

Poly operator*(const Rational& q, const Poly& a) {
  return PhaseCoefficient(q) * a;
}

Poly Poly::star() const {
  Poly r(*pres_);
  for (const auto& [m, c] : t_) {
    OrderedTerm ot = star_monomial(*pres_, m);
    if (ot.coeff.is_zero()) continue;
    r.add_term(ot.mon, c.conj() * ot.coeff);
  }
  return r;
}

Poly differential(const Poly& f, const std::vector<int>& dmap) {
  const Presentation& P = f.pres();
  Poly r(P);
  for (const auto& [m, c] : f.terms()) {
    const Word w = word_of(m);
    int prefix_parity = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      const int img = dmap[w[i]];
      if (img >= 0) {
        Word v = w;
        v[i] = img;
        OrderedTerm ot = normal_order(P, v);
        if (!ot.coeff.is_zero()) {
          PhaseCoefficient s = c * ot.coeff;
          if (prefix_parity % 2 != 0) s = -s;
          r.add_term(ot.mon, s);
        }
      }
      prefix_parity += P.letters[w[i]].parity;
    }
  }
  return r;
}

std::optional<PhaseCoefficient> commutation_phase(const Poly& f, const Poly& g) {
  const Poly fg = f * g, gf = g * f;
  if (gf.is_zero()) return fg.is_zero() ? std::optional(PhaseCoefficient::one()) : std::nullopt;
  const auto [lm, lc] = gf.leading();
  const PhaseCoefficient top = fg.coeff(lm);
  if (top.is_zero() || !lc.is_single_term()) return std::nullopt;
  const PhaseCoefficient c = top * lc.inverse();
  if (!c.is_single_term()) return std::nullopt;
  if (fg - c * gf != Poly::zero(f.pres())) return std::nullopt;
  return c;
}

std::optional<int> homogeneous_parity(const Poly& f) {
  std::optional<int> p;
  for (const auto& [m, c] : f.terms()) {
    int s = 0;
    for (int l = 0; l < f.pres().size(); ++l) s += m.e[l] * f.pres().letters[l].parity;
    s %= 2;
    if (!p)
      p = s;
    else if (*p != s)
      return std::nullopt;
  }
  return p ? p : std::optional<int>(0);
}

} // namespace theta
