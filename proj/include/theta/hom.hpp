#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "theta/polynomial.hpp"
#include "theta/tensor.hpp"

namespace theta {

// Generator substitution from a presentation into polynomials or tensors.
// Multiplicative by default; antimultiplicative reverses words (antipodes),
// antilinear conjugates coefficients (star-type and j-type maps).
template <class T>
struct GenHom {
  const Presentation* src = nullptr;
  std::vector<T> images;  // one per letter of *src
  T unit;
  bool antimultiplicative = false;
  bool antilinear = false;
  std::string name;
};

using PolyHom = GenHom<Poly>;
using TensorHom = GenHom<Tensor>;

template <class T>
struct HomViolation {
  int x = -1, y = -1;  // letter indices of the offending relation (x == y: square)
  T diff;
};

template <class T>
T apply_hom(const GenHom<T>& h, const Poly& f) {
  T r = h.unit;
  r = r - r;  // zero with the right shape
  for (const auto& [m, c] : f.terms()) {
    Word w = word_of(m);
    if (h.antimultiplicative) std::reverse(w.begin(), w.end());
    T acc = h.unit;
    for (int l : w) acc = acc * h.images[l];
    r = r + (h.antilinear ? c.conj() : c) * acc;
  }
  return r;
}

// Images must satisfy every defining relation of the source: the q-commutation
// of each letter pair and the vanishing square of each odd letter.
template <class T>
std::vector<HomViolation<T>> validate_hom(const GenHom<T>& h) {
  const Presentation& P = *h.src;
  std::vector<HomViolation<T>> out;
  for (int x = 0; x < P.size(); ++x) {
    for (int y = 0; y < x; ++y) {
      PhaseCoefficient phase = PhaseCoefficient::mu(P.lam[x][y]);
      if (P.letters[x].parity == 1 && P.letters[y].parity == 1) phase = -phase;
      if (h.antilinear) phase = phase.conj();
      T d = h.antimultiplicative
                ? h.images[y] * h.images[x] - phase * (h.images[x] * h.images[y])
                : h.images[x] * h.images[y] - phase * (h.images[y] * h.images[x]);
      if (!d.is_zero()) out.push_back({x, y, std::move(d)});
    }
    if (P.letters[x].parity == 1) {
      T d = h.images[x] * h.images[x];
      if (!d.is_zero()) out.push_back({x, x, std::move(d)});
    }
  }
  return out;
}

// Apply a tensor-valued map to one leg, splicing the image legs in place;
// this is how (Delta (x) id) and (id (x) Delta) act on Delta images.
inline Tensor apply_leg_tensor(const Tensor& t, const TensorHom& h, int leg) {
  std::vector<const Presentation*> legs;
  for (int i = 0; i < t.arity(); ++i) {
    if (i == leg)
      for (const Presentation* p : h.unit.legs()) legs.push_back(p);
    else
      legs.push_back(&t.leg(i));
  }
  Tensor r(legs);
  for (const auto& [k, c] : t.terms()) {
    const Tensor img =
        apply_hom(h, Poly::term(t.leg(leg), k[leg], PhaseCoefficient::one()));
    for (const auto& [km, c2] : img.terms()) {
      Tensor::Key nk;
      for (int i = 0; i < t.arity(); ++i) {
        if (i == leg)
          nk.insert(nk.end(), km.begin(), km.end());
        else
          nk.push_back(k[i]);
      }
      r.add_term(nk, c * c2);
    }
  }
  return r;
}

// Apply a polynomial map to one leg of a tensor.  The whole map may be
// globally antilinear (conjugating the outer coefficient), as with id (x) j.
inline Tensor apply_leg(const Tensor& t, const PolyHom& h, int leg,
                        bool globally_antilinear = false) {
  std::vector<const Presentation*> legs = t.legs();
  legs[leg] = &h.unit.pres();
  Tensor r(legs);
  for (const auto& [k, c] : t.terms()) {
    const Poly img =
        apply_hom(h, Poly::term(t.leg(leg), k[leg], PhaseCoefficient::one()));
    const PhaseCoefficient cc = globally_antilinear ? c.conj() : c;
    for (const auto& [m2, c2] : img.terms()) {
      Tensor::Key nk = k;
      nk[leg] = m2;
      r.add_term(nk, cc * c2);
    }
  }
  return r;
}

} // namespace theta
