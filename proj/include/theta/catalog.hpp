#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "theta/hom.hpp"
#include "theta/matrix.hpp"
#include "theta/polynomial.hpp"
#include "theta/rewrite.hpp"
#include "theta/tensor.hpp"

namespace theta {

// Deformed epsilon tensor on four indices: mu on 1324 and its cyclic shifts,
// mubar on 1423 and its cyclic shifts, 1 on the sixteen other permutations,
// zero off permutations.  bar_value conjugates.
struct EpsilonTensor {
  std::map<std::array<int, 4>, int> exp;  // permutation word -> mu exponent

  PhaseCoefficient value(int i, int j, int k, int l) const {
    auto it = exp.find({i, j, k, l});
    if (it == exp.end()) return PhaseCoefficient::zero();
    return PhaseCoefficient::mu(it->second);
  }
  PhaseCoefficient bar_value(int i, int j, int k, int l) const {
    return value(i, j, k, l).conj();
  }
};

// Signed letter occupying one matrix position.
struct SignedLetter {
  int letter = -1;
  int sign = 1;
};

struct RelationRow {
  int x = 0, y = 0;  // letter indices, x < y in the letter order
  PhaseCoefficient coeff;  // x y = coeff * y x
};

// Immutable collection of every presentation, matrix, map and data table the
// verification suites consume.  Built once; throws on any internal
// inconsistency (conflicting derived phases, unsolvable degrees, ...).
struct Catalog {
  // presentations
  Presentation c4;        // z1,z1',...,z4' with the eta-derived phase table
  Presentation forms;     // z letters plus odd dz letters
  Presentation s4;        // x, alpha, alpha', beta, beta'
  Presentation sl2h;      // a1,a1',...,d2' with the (algAtheta)-derived table
  Presentation c4_cl;     // classical limits: same letters, all phases 1
  Presentation sl2h_cl;

  // rewrite systems
  RewriteSystem sphere;        // sum z_j' z_j = 1 on c4
  RewriteSystem sphere_forms;  // the same relation inside the form calculus
  RewriteSystem diff_ideal;    // sphere and its differential, on forms
  RewriteSystem s4_sphere;     // alpha' alpha + beta' beta + x^2 = 1
  RewriteSystem det_rule;      // det(A) = 1 on sl2h

  // numeric data
  std::array<std::array<int, 4>, 4> eta_exp{};  // eta_{ij} = mu^{eta_exp[i][j]}
  EpsilonTensor eps;

  // matrices and generators
  AlgMatrix<Poly> u;        // 4x2 over c4
  AlgMatrix<Poly> u_forms;  // the same entries over the form calculus
  AlgMatrix<Poly> A;        // 4x4 over sl2h, signed letters
  SignedLetter A_pos[4][4];
  std::array<std::array<int, 2>, 16> letter_pos;  // sl letter -> (row, col), 0-based

  Poly r_c4, x_c4, alpha_c4, beta_c4;  // sphere radius and the S4 generators
  AlgMatrix<Poly> p_free;              // u u*
  AlgMatrix<Poly> p_red;               // u u* reduced modulo the sphere

  PolyHom j;                 // z1->z2, z2->-z1, z3->z4, z4->-z3; antilinear
  std::vector<int> d_map;    // differential letter map on forms

  Poly det;  // quantum determinant (epsilon route)

  // helpers
  PhaseCoefficient eta(int i, int j) const {  // 1-based
    return PhaseCoefficient::mu(eta_exp[i - 1][j - 1]);
  }
  int z_idx(int j, bool starred) const { return 2 * (j - 1) + (starred ? 1 : 0); }
  int dz_idx(int j, bool starred) const { return 8 + 2 * (j - 1) + (starred ? 1 : 0); }
  Poly z(int j, bool starred = false) const { return Poly::letter(c4, z_idx(j, starred)); }
  Poly zf(int j, bool starred = false) const { return Poly::letter(forms, z_idx(j, starred)); }
  Poly dz(int j, bool starred = false) const { return Poly::letter(forms, dz_idx(j, starred)); }
  Poly sl(const std::string& name) const { return Poly::letter(sl2h, name); }
  Poly d(const Poly& f) const { return differential(f, d_map); }
  // classical-limit map: same exponents, coefficients evaluated at mu = 1
  Poly classical(const Poly& f, const Presentation& target) const;
};

// Canonical catalog instance (built on first use, then shared).
const Catalog& catalog();

// Spec-level builder entry points; all return pieces of catalog().
const Presentation& build_c4_theta();
const Presentation& build_forms_c4();
const Presentation& build_sl2h();
const RewriteSystem& build_s7_theta();  // the sphere rewrite on c4 letters
struct S4Generators {
  Poly x, alpha, beta, r;
};
S4Generators build_s4_generators();
const AlgMatrix<Poly>& build_u();
const AlgMatrix<Poly>& build_p();
const PolyHom& j_map();

// x y = coeff y x for every unordered letter pair, in letter order.
std::vector<RelationRow> relation_table(const Presentation& P);

} // namespace theta
