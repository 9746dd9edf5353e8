#pragma once

#include <array>
#include <stdexcept>

#include "theta/phase.hpp"

namespace theta {

// Multidegree under the torus action.  Components are stored doubled so that
// the half-integral sphere degrees stay exact integers; arity is 2 or 4.
struct DegreeVector {
  std::array<long, 4> d{0, 0, 0, 0};  // doubled components
  int arity = 2;

  friend DegreeVector operator+(const DegreeVector& a, const DegreeVector& b) {
    if (a.arity != b.arity) throw std::invalid_argument("degree arity mismatch");
    DegreeVector r = a;
    for (int i = 0; i < 4; ++i) r.d[i] += b.d[i];
    return r;
  }
  friend DegreeVector operator-(const DegreeVector& a) {
    DegreeVector r = a;
    for (int i = 0; i < 4; ++i) r.d[i] = -r.d[i];
    return r;
  }
  friend bool operator==(const DegreeVector& a, const DegreeVector& b) {
    return a.arity == b.arity && a.d == b.d;
  }
};

inline DegreeVector degree2(long twice_d1, long twice_d2) {
  DegreeVector r;
  r.d = {twice_d1, twice_d2, 0, 0};
  r.arity = 2;
  return r;
}

inline DegreeVector degree4(long twice_d1, long twice_d2, long twice_d3, long twice_d4) {
  DegreeVector r;
  r.d = {twice_d1, twice_d2, twice_d3, twice_d4};
  r.arity = 4;
  return r;
}

// Twice the symplectic pairing <r,s>; exact on the doubled storage.
// arity 2:  <r,s> = r1 s2 - r2 s1
// arity 4:  <r,s> = ((r1 s2 - r2 s1) - (r3 s4 - r4 s3)) / 2
inline long doubled_pairing(const DegreeVector& r, const DegreeVector& s) {
  if (r.arity != s.arity) throw std::invalid_argument("degree arity mismatch");
  if (r.arity == 2) {
    long num = r.d[0] * s.d[1] - r.d[1] * s.d[0];
    if (num % 2 != 0) throw std::domain_error("pairing is not half-integral");
    return num / 2;
  }
  long num = r.d[0] * s.d[1] - r.d[1] * s.d[0] - (r.d[2] * s.d[3] - r.d[3] * s.d[2]);
  if (num % 4 != 0) throw std::domain_error("pairing is not half-integral");
  return num / 4;
}

// Star-product phase mu^{<r,s>}.  Defined only when <r,s> is an integer;
// otherwise the phase lies on the double cover and is rejected.
inline PhaseCoefficient star_product_phase(const DegreeVector& r, const DegreeVector& s) {
  long twice = doubled_pairing(r, s);
  if (twice % 2 != 0)
    throw std::domain_error("star-product phase lies on the double cover of the torus");
  return PhaseCoefficient::mu(twice / 2);
}

// Commutation phase lambda^{<r,s>} = mu^{2<r,s>} between elements of the given
// multidegrees; always well defined.
inline PhaseCoefficient commutation_phase_from_degrees(const DegreeVector& r,
                                                       const DegreeVector& s) {
  return PhaseCoefficient::mu(doubled_pairing(r, s));
}

} // namespace theta
