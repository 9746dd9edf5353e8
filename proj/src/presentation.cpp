#include "theta/presentation.hpp"

#include <stdexcept>

namespace theta {

void Presentation::validate() const {
  const int n = size();
  if (static_cast<int>(lam.size()) != n)
    throw std::logic_error(name + ": lambda table has wrong row count");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(lam[i].size()) != n)
      throw std::logic_error(name + ": lambda table has wrong column count");
    if (lam[i][i] != 0) throw std::logic_error(name + ": lambda diagonal nonzero");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (lam[i][j] != -lam[j][i])
        throw std::logic_error(name + ": lambda table not antisymmetric");
      const int si = letters[i].star, sj = letters[j].star;
      if (si >= 0 && sj >= 0 && lam[si][sj] != lam[i][j])
        throw std::logic_error(name + ": lambda not star-compatible at " +
                               letters[i].name + "," + letters[j].name);
    }
  for (int i = 0; i < n; ++i) {
    const int si = letters[i].star;
    if (si >= 0) {
      if (letters[si].star != i)
        throw std::logic_error(name + ": star is not an involution");
      if (letters[si].parity != letters[i].parity)
        throw std::logic_error(name + ": star changes parity");
      if (letters[i].degree && letters[si].degree &&
          !(*letters[si].degree == -*letters[i].degree))
        throw std::logic_error(name + ": star does not negate the degree");
    }
  }
}

Word word_of(const Monomial& m) {
  Word w;
  w.reserve(m.total);
  for (size_t l = 0; l < m.e.size(); ++l)
    for (int k = 0; k < m.e[l]; ++k) w.push_back(static_cast<int>(l));
  return w;
}

static OrderedTerm finish(const Presentation& P, long mu_exp, long swaps, Monomial m) {
  for (int l = 0; l < P.size(); ++l)
    if (P.letters[l].parity == 1 && m.e[l] > 1) return {PhaseCoefficient::zero(), m};
  PhaseCoefficient c = PhaseCoefficient::mu(mu_exp);
  if (swaps % 2 != 0) c = -c;
  return {c, m};
}

OrderedTerm normal_order(const Presentation& P, const Word& w) {
  long mu_exp = 0, swaps = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) {
        mu_exp += P.lam[w[i]][w[j]];
        swaps += P.letters[w[i]].parity & P.letters[w[j]].parity;
      }
  Monomial m(P.size());
  for (int l : w) ++m.e[l];
  m.total = static_cast<int>(w.size());
  return finish(P, mu_exp, swaps, std::move(m));
}

OrderedTerm normal_order_naive(const Presentation& P, const Word& w) {
  Word v = w;
  long mu_exp = 0, swaps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k + 1 < v.size(); ++k)
      if (v[k] > v[k + 1]) {
        mu_exp += P.lam[v[k]][v[k + 1]];
        swaps += P.letters[v[k]].parity & P.letters[v[k + 1]].parity;
        std::swap(v[k], v[k + 1]);
        changed = true;
      }
  }
  Monomial m(P.size());
  for (int l : v) ++m.e[l];
  m.total = static_cast<int>(v.size());
  return finish(P, mu_exp, swaps, std::move(m));
}

OrderedTerm mul_monomials(const Presentation& P, const Monomial& a, const Monomial& b) {
  long mu_exp = 0, swaps = 0;
  for (int x = 0; x < P.size(); ++x) {
    if (a.e[x] == 0) continue;
    for (int y = 0; y < x; ++y) {
      if (b.e[y] == 0) continue;
      const long n = static_cast<long>(a.e[x]) * b.e[y];
      mu_exp += n * P.lam[x][y];
      swaps += n * (P.letters[x].parity & P.letters[y].parity);
    }
  }
  Monomial m(P.size());
  for (int l = 0; l < P.size(); ++l) m.e[l] = a.e[l] + b.e[l];
  m.total = a.total + b.total;
  return finish(P, mu_exp, swaps, std::move(m));
}

OrderedTerm star_monomial(const Presentation& P, const Monomial& m) {
  Word w = word_of(m);
  Word sw;
  sw.reserve(w.size());
  for (size_t i = w.size(); i-- > 0;) {
    const int s = P.letters[w[i]].star;
    if (s < 0)
      throw std::logic_error(P.name + ": letter " + P.letters[w[i]].name + " has no conjugate");
    sw.push_back(s);
  }
  return normal_order(P, sw);
}

DegreeVector monomial_degree(const Presentation& P, const Monomial& m) {
  DegreeVector d;
  bool first = true;
  for (int l = 0; l < P.size(); ++l) {
    if (m.e[l] == 0) continue;
    if (!P.letters[l].degree)
      throw std::logic_error(P.name + ": letter " + P.letters[l].name + " carries no degree");
    DegreeVector t = *P.letters[l].degree;
    for (int i = 0; i < 4; ++i) t.d[i] *= m.e[l];
    d = first ? t : d + t;
    first = false;
  }
  if (first) {
    // unit monomial: zero degree in the ambient arity
    for (int l = 0; l < P.size(); ++l)
      if (P.letters[l].degree) {
        d.arity = P.letters[l].degree->arity;
        break;
      }
  }
  return d;
}

bool divides(const Monomial& b, const Monomial& a) {
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] < b.e[i]) return false;
  return true;
}

} // namespace theta
