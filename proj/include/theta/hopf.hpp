#pragma once

#include <string>
#include <vector>

#include "theta/catalog.hpp"
#include "theta/hom.hpp"
#include "theta/matrix.hpp"

namespace theta {

// Coproduct, counit and antipode of the deformed matrix bialgebra, together
// with the matrix of algebraic complements the antipode is built from.
struct HopfData {
  TensorHom Delta;             // letter -> sum_k A_{ik} (x) A_{kj}
  PolyHom counit;              // A_{ij} -> delta_{ij}
  PolyHom antipode;            // antimultiplicative; on unstarred letters
                               // S(A_{ij}) = (-1)^{i+j} complement(j,i),
                               // extended to starred letters through *
  AlgMatrix<Poly> complement;  // 4x4 matrix of the hatted complements
};

const HopfData& hopf();

// Quantum determinant through the deformed epsilon tensor (row route).
Poly determinant();
// Column-route determinant through the conjugate epsilon tensor.
Poly determinant_alt();
// Laplace expansion along one row ('r') or column ('c'); 0-based index.
Poly determinant_laplace(char axis, int i);

// Hatted complement of position (i,l), 0-based: a row-ordered 3x3 quantum
// minor with epsilon and eta weights; classically the unsigned minor.
Poly algebraic_complement(int i, int l);

// Generator substitutions onto quotients: "pi_I_theta" kills b, c and the
// second quaternionic coordinate of a (a1 -> 1); "pi_J_theta" kills b, c only.
PolyHom quotient_map(const std::string& which);

// m = A* A; entry (i,j) is sum_k (A_{ki})* A_{kj}.
AlgMatrix<Poly> conjugate_product_matrix();

// Generators m_{ij} - delta_{ij} of the unitarity ideal.
AlgMatrix<Poly> sp_ideal_generators();

// Substitute the unitarity relation m_{ij} -> delta_{ij} into a double sum
// sum_{ij} m_{ij} (x) second[i][j]: only the diagonal survives.
Poly sp_unitarity_substitution(const std::vector<std::vector<Poly>>& second);

} // namespace theta
