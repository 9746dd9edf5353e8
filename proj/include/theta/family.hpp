#pragma once

#include <string>
#include <utility>
#include <vector>

#include "theta/catalog.hpp"
#include "theta/coaction.hpp"
#include "theta/matrix.hpp"
#include "theta/tensor.hpp"

namespace theta {

// The basic instanton data and its coacted family: the connection one-form
// over the seven-sphere calculus, the inflated frame, the family projection
// and the partial isometry linking it back to the basic one, together with
// the generators of the parameter algebra cut out by the isometry subgroup.
struct FamilyData {
  AlgMatrix<Poly> u_star_u;       // 2x2 free orthonormality products of the frame
  AlgMatrix<Poly> omega;          // 2x2 connection one-form over the forms algebra
  AlgMatrix<Tensor> ut;           // 4x2 inflated frame: coaction applied entrywise
  AlgMatrix<Tensor> ut_star;      // 2x4 adjoint of the inflated frame
  AlgMatrix<Tensor> utu;          // 2x2 products (ut)* ut
  AlgMatrix<Tensor> pprime;       // 4x4 radius-scaled family projection ut (ut)*
  AlgMatrix<Tensor> vprime;       // 4x4 radius-scaled partial isometry
  AlgMatrix<Tensor> omega_tilde;  // 2x2 coacted connection one-form

  AlgMatrix<Poly> M;    // 4x4 conjugate products over the matrix bialgebra
  Poly m, n, g1, g2;    // distinguished entries generating the parameter algebra
  Poly w_half, y_half;  // (m+n)/2 and (m-n)/2, the hyperboloid coordinates
};

const FamilyData& family();

// 2 pprime assembled from the inflated quadric generators, mirroring the basic
// projection display with the inflated radius in place of the unit.
AlgMatrix<Tensor> pprime_display();

// 2 p assembled from the quadric generators with the radius in place of the unit.
AlgMatrix<Poly> basic_projection_display();

// rho^2 as the eta-weighted pairing of the conjugate products with the
// transposed entries of the free basic projection.
Tensor rho_pairing();

// rho^2 assembled from the parameter generators against the quadric generators.
Tensor rho_generator_display();

// Commutators of rho^2 with 1 (x) z for every coordinate letter z, recorded
// as they come out; the family checks only report their sizes.
std::vector<std::pair<std::string, Tensor>> rho_leg2_commutators();

// One half-bracket 1/2 ((u*)_{ai} d u_{jb} - d(u*)_{ai} u_{jb}) over the forms.
Poly connection_half_bracket(int i, int j, int a, int b);

// omega_tilde re-assembled as sum_{ij} m_{ij} (x) half-bracket(i,j).
AlgMatrix<Tensor> omega_tilde_factored();

// The same sum with m_{ij} replaced by delta_{ij}: the diagonal half-brackets
// alone, which must rebuild the basic connection one-form.
AlgMatrix<Poly> omega_sp_substitution();

} // namespace theta
