#pragma once

#include <map>
#include <string>
#include <vector>

#include "theta/catalog.hpp"
#include "theta/hom.hpp"
#include "theta/hopf.hpp"

namespace theta {

// Left coaction of the deformed matrix bialgebra and everything derived from
// it: the inflated sphere generators, the quadric coordinates, the six
// half-minors and the 6x6 coaction matrix C on the quadric.
struct CoactionData {
  TensorHom delta_c4;     // z_j -> sum_m A_{km} (x) u_{ma} through the u embedding
  TensorHom delta_forms;  // the same plus dz_j -> (id (x) d) images
  TensorHom delta_s4;     // quadric letters through the C matrix

  std::vector<Tensor> w;  // images of z1..z4 (w1..w4)
  Tensor xt, at, bt;      // inflated x, alpha, beta
  Tensor rho2;            // inflated radius: image of sum z_j' z_j

  std::vector<Poly> X;  // (r, x, alpha, alpha', beta, beta') over c4
  std::vector<Poly> Y;  // half-minors pi_I in the capital index order
  // capital index order: 1=(12), 2=(34), 3=(14), 4=(23), 5=(13), 6=(24)
  std::vector<std::pair<int, int>> capital;  // 0-based row pairs

  AlgMatrix<Poly> C;  // 6x6 over sl2h: Delta_L(X_I) = sum_J C_{IJ} (x) X_J

  std::vector<std::vector<Rational>> ghat;          // quadric metric
  std::vector<std::vector<PhaseCoefficient>> hhat;  // minor-basis metric
  std::vector<std::vector<PhaseCoefficient>> T;     // X = T Y change of basis
  std::vector<std::vector<PhaseCoefficient>> nu;    // C commutation phases
};

const CoactionData& coaction();

// The coaction as a validated substitution map; target names the second leg:
// "c4" (or its spherical quotient "s7"), "forms", or "s4".
const TensorHom& delta_L(const std::string& target);

// Half-minor pi_{ij} = u_{i1} u_{j2} - u_{i2} u_{j1}, 0-based rows.
Poly pi_minor(int i, int j);

// Minor of the coacting matrix: m_{ij}^{ls} = A_{il} A_{js} - eta_{ls} A_{is} A_{jl},
// all indices 0-based.
Poly coaction_minor(int i, int j, int l, int s);

// Rederivation of the bialgebra relations from universality: the coaction of
// the free matrix entries on the cross-column exchange relations forces a
// unique phase between every ordered pair of matrix letters.
struct DerivedRelationReport {
  std::vector<std::vector<int>> lam;  // INT_MIN marks an underived entry
  std::vector<std::string> failures;  // malformed buckets and conflicts
  std::vector<std::string> same_column_failures;
  int instances = 0;
  bool matches_catalog = false;       // derived table == catalog table
  bool same_column_clean = false;     // leftover relations all reduce to zero
};
DerivedRelationReport derive_bialgebra_relations();

// The 6x6 coaction matrix on the quadric, read off the coaction of each X_I
// by collecting second legs; throws if a second-leg monomial falls outside
// the span of the X-basis.
AlgMatrix<Poly> extract_C();

} // namespace theta
