#include "theta/hopf.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace theta {

namespace {

std::vector<std::array<int, 4>> permutations4() {
  std::array<int, 4> p = {1, 2, 3, 4};
  std::vector<std::array<int, 4>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int permutation_sign(const std::array<int, 4>& p) {
  int inv = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

HopfData make_hopf() {
  const Catalog& cat = catalog();
  HopfData H;

  H.complement = AlgMatrix<Poly>(4, 4, Poly::zero(cat.sl2h));
  for (int i = 0; i < 4; ++i)
    for (int l = 0; l < 4; ++l) H.complement.at(i, l) = algebraic_complement(i, l);

  // coproduct: matrix comultiplication, written per letter
  H.Delta.src = &cat.sl2h;
  H.Delta.unit = Tensor::unit({&cat.sl2h, &cat.sl2h});
  H.Delta.name = "Delta";
  H.Delta.images.assign(16, Tensor::zero({&cat.sl2h, &cat.sl2h}));
  for (int l = 0; l < 16; ++l) {
    const auto [i, j] = cat.letter_pos[l];
    Tensor img = Tensor::zero({&cat.sl2h, &cat.sl2h});
    for (int k = 0; k < 4; ++k) img += otimes(cat.A.at(i, k), cat.A.at(k, j));
    if (cat.A_pos[i][j].sign < 0) img = -img;
    H.Delta.images[l] = img;
  }

  // counit: identity matrix of scalars
  H.counit.src = &cat.sl2h;
  H.counit.unit = Poly::one(cat.sl2h);
  H.counit.name = "counit";
  H.counit.images.assign(16, Poly::zero(cat.sl2h));
  for (int l = 0; l < 16; ++l) {
    const auto [i, j] = cat.letter_pos[l];
    if (i == j)
      H.counit.images[l] = cat.A_pos[i][j].sign < 0 ? -Poly::one(cat.sl2h)
                                                    : Poly::one(cat.sl2h);
  }

  // antipode: transposed complements with the checkerboard sign, star-extended
  H.antipode.src = &cat.sl2h;
  H.antipode.unit = Poly::one(cat.sl2h);
  H.antipode.antimultiplicative = true;
  H.antipode.name = "S";
  H.antipode.images.assign(16, Poly::zero(cat.sl2h));
  for (int l = 0; l < 16; l += 2) {
    const auto [i, j] = cat.letter_pos[l];
    Poly img = H.complement.at(j, i);
    if ((i + j) % 2 != 0) img = -img;
    if (cat.A_pos[i][j].sign < 0) img = -img;
    H.antipode.images[l] = img;
    H.antipode.images[l + 1] = img.star();
  }
  return H;
}

} // namespace

const HopfData& hopf() {
  static const HopfData H = make_hopf();
  return H;
}

Poly determinant() { return catalog().det; }

Poly determinant_alt() {
  const Catalog& cat = catalog();
  Poly det = Poly::zero(cat.sl2h);
  for (const auto& s : permutations4()) {
    Poly term = Poly::one(cat.sl2h);
    for (int j = 0; j < 4; ++j) term *= cat.A.at(s[j] - 1, j);
    det += Rational(permutation_sign(s)) *
           (cat.eps.bar_value(s[0], s[1], s[2], s[3]) * term);
  }
  return det;
}

Poly algebraic_complement(int i, int l) {
  const Catalog& cat = catalog();
  std::array<int, 3> rows{}, cols{};
  for (int m = 0, t = 0; m < 4; ++m)
    if (m != i) rows[t++] = m;
  for (int m = 0, t = 0; m < 4; ++m)
    if (m != l) cols[t++] = m;

  Poly acc = Poly::zero(cat.sl2h);
  std::array<int, 3> idx = {0, 1, 2};  // assignment rows[m] -> cols[idx[m]]
  do {
    int inv = 0;
    for (int m = 0; m < 3; ++m)
      for (int n = m + 1; n < 3; ++n)
        if (idx[m] > idx[n]) ++inv;
    std::array<int, 4> v{};  // full value word, 1-based
    v[i] = l + 1;
    for (int m = 0; m < 3; ++m) v[rows[m]] = cols[idx[m]] + 1;
    PhaseCoefficient c = cat.eps.value(v[0], v[1], v[2], v[3]);
    if (inv % 2 != 0) c = -c;
    // rows above i contribute the column weight eta_{sigma(m), l}
    for (int m = 0; m < 3 && rows[m] < i; ++m)
      c *= PhaseCoefficient::mu(cat.eta_exp[cols[idx[m]]][l]);
    Poly term = Poly::one(cat.sl2h);
    for (int m = 0; m < 3; ++m) term *= cat.A.at(rows[m], cols[idx[m]]);
    acc += c * term;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return acc;
}

Poly determinant_laplace(char axis, int i) {
  const Catalog& cat = catalog();
  const HopfData& H = hopf();
  Poly acc = Poly::zero(cat.sl2h);
  for (int l = 0; l < 4; ++l) {
    Poly term = axis == 'r' ? cat.A.at(i, l) * H.complement.at(i, l)
                            : cat.A.at(l, i) * H.complement.at(l, i);
    if ((i + l) % 2 != 0) term = -term;
    acc += term;
  }
  return acc;
}

PolyHom quotient_map(const std::string& which) {
  const Catalog& cat = catalog();
  PolyHom h;
  h.src = &cat.sl2h;
  h.unit = Poly::one(cat.sl2h);
  h.name = which;
  h.images.assign(16, Poly::zero(cat.sl2h));
  const bool kill_a2 = which == "pi_I_theta";
  if (!kill_a2 && which != "pi_J_theta")
    throw std::invalid_argument("unknown quotient map: " + which);
  for (int l = 0; l < 16; ++l) {
    const std::string& n = cat.sl2h.letters[l].name;
    if (n[0] == 'b' || n[0] == 'c') continue;  // image zero
    if (kill_a2 && (n == "a2" || n == "a2'")) continue;
    if (kill_a2 && (n == "a1" || n == "a1'"))
      h.images[l] = Poly::one(cat.sl2h);
    else
      h.images[l] = Poly::letter(cat.sl2h, l);
  }
  return h;
}

AlgMatrix<Poly> conjugate_product_matrix() {
  const Catalog& cat = catalog();
  const Poly zero = Poly::zero(cat.sl2h);
  return mat_mul(mat_adjoint(cat.A, zero), cat.A, zero);
}

AlgMatrix<Poly> sp_ideal_generators() {
  const Catalog& cat = catalog();
  AlgMatrix<Poly> g = conjugate_product_matrix();
  for (int i = 0; i < 4; ++i) g.at(i, i) -= Poly::one(cat.sl2h);
  return g;
}

Poly sp_unitarity_substitution(const std::vector<std::vector<Poly>>& second) {
  if (second.empty()) throw std::invalid_argument("empty substitution family");
  Poly acc = second[0][0];
  for (size_t i = 1; i < second.size(); ++i) acc += second[i][i];
  return acc;
}

} // namespace theta
