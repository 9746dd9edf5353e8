#include "theta/family.hpp"

#include "theta/hom.hpp"
#include "theta/hopf.hpp"

namespace theta {

namespace {

// (u*)_{ai} over the forms presentation
Poly u_star_entry(const Catalog& cat, int a, int i) {
  return cat.u_forms.at(i, a).star();
}

Poly half_bracket(const Catalog& cat, int i, int j, int a, int b) {
  const Poly left = u_star_entry(cat, a, i) * cat.d(cat.u_forms.at(j, b));
  const Poly right = cat.d(u_star_entry(cat, a, i)) * cat.u_forms.at(j, b);
  return PhaseCoefficient(1, 2) * (left - right);
}

void init_family(FamilyData& f) {
  const Catalog& cat = catalog();
  const CoactionData& co = coaction();

  const Poly c4zero = Poly::zero(cat.c4);
  const Poly fzero = Poly::zero(cat.forms);
  const Poly slzero = Poly::zero(cat.sl2h);
  const Tensor tzero = Tensor::zero({&cat.sl2h, &cat.c4});
  const Tensor tfzero = Tensor::zero({&cat.sl2h, &cat.forms});

  // frame orthonormality, exact before any quotient
  f.u_star_u = mat_mul(mat_adjoint(cat.u, c4zero), cat.u, c4zero);

  // connection one-form of the basic instanton
  f.omega = AlgMatrix<Poly>(2, 2, fzero);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Poly s = fzero;
      for (int k = 0; k < 4; ++k) s += half_bracket(cat, k, k, a, b);
      f.omega.at(a, b) = s;
    }

  // inflated frame and the radius-scaled family projection
  f.ut = AlgMatrix<Tensor>(4, 2, tzero);
  for (int i = 0; i < 4; ++i)
    for (int a = 0; a < 2; ++a)
      f.ut.at(i, a) = apply_hom(co.delta_c4, cat.u.at(i, a));
  f.ut_star = mat_adjoint(f.ut, tzero);
  f.utu = mat_mul(f.ut_star, f.ut, tzero);
  f.pprime = mat_mul(f.ut, f.ut_star, tzero);

  // radius-scaled partial isometry against the reduced basic projection
  f.vprime = AlgMatrix<Tensor>(4, 4, tzero);
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      Tensor s = tzero;
      for (int j = 0; j < 4; ++j) s += otimes(cat.A.at(i, j), cat.p_red.at(j, k));
      f.vprime.at(i, k) = s;
    }

  // coacted connection one-form
  f.omega_tilde = AlgMatrix<Tensor>(2, 2, tfzero);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      f.omega_tilde.at(a, b) = apply_hom(co.delta_forms, f.omega.at(a, b));

  // parameter algebra of the family: conjugate products and the distinguished
  // entries, plus the hyperboloid coordinates built from them
  f.M = conjugate_product_matrix();
  f.m = f.M.at(0, 0);
  f.n = f.M.at(2, 2);
  f.g1 = f.M.at(0, 2);
  f.g2 = f.M.at(3, 0);
  f.w_half = PhaseCoefficient(1, 2) * (f.m + f.n);
  f.y_half = PhaseCoefficient(1, 2) * (f.m - f.n);
  (void)slzero;
}

} // namespace

const FamilyData& family() {
  static const FamilyData* inst = [] {
    auto* f = new FamilyData;
    init_family(*f);
    return f;
  }();
  return *inst;
}

AlgMatrix<Tensor> pprime_display() {
  const Catalog& cat = catalog();
  const CoactionData& co = coaction();
  const Tensor tzero = Tensor::zero({&cat.sl2h, &cat.c4});
  const PhaseCoefficient mu = PhaseCoefficient::mu(1), mubar = PhaseCoefficient::mu(-1);
  const Tensor at_s = co.at.star(), bt_s = co.bt.star();

  AlgMatrix<Tensor> D(4, 4, tzero);
  D.at(0, 0) = co.rho2 + co.xt;
  D.at(0, 2) = co.at;
  D.at(0, 3) = co.bt;
  D.at(1, 1) = co.rho2 + co.xt;
  D.at(1, 2) = -(mu * bt_s);
  D.at(1, 3) = mubar * at_s;
  D.at(2, 0) = at_s;
  D.at(2, 1) = -(mubar * co.bt);
  D.at(2, 2) = co.rho2 - co.xt;
  D.at(3, 0) = bt_s;
  D.at(3, 1) = mu * co.at;
  D.at(3, 3) = co.rho2 - co.xt;
  return D;
}

AlgMatrix<Poly> basic_projection_display() {
  const Catalog& cat = catalog();
  const Poly zero = Poly::zero(cat.c4);
  const PhaseCoefficient mu = PhaseCoefficient::mu(1), mubar = PhaseCoefficient::mu(-1);
  const Poly as = cat.alpha_c4.star(), bs = cat.beta_c4.star();

  AlgMatrix<Poly> D(4, 4, zero);
  D.at(0, 0) = cat.r_c4 + cat.x_c4;
  D.at(0, 2) = cat.alpha_c4;
  D.at(0, 3) = cat.beta_c4;
  D.at(1, 1) = cat.r_c4 + cat.x_c4;
  D.at(1, 2) = -(mu * bs);
  D.at(1, 3) = mubar * as;
  D.at(2, 0) = as;
  D.at(2, 1) = -(mubar * cat.beta_c4);
  D.at(2, 2) = cat.r_c4 - cat.x_c4;
  D.at(3, 0) = bs;
  D.at(3, 1) = mu * cat.alpha_c4;
  D.at(3, 3) = cat.r_c4 - cat.x_c4;
  return D;
}

Tensor rho_pairing() {
  const Catalog& cat = catalog();
  const FamilyData& f = family();
  Tensor s = Tensor::zero({&cat.sl2h, &cat.c4});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      s += PhaseCoefficient::mu(cat.eta_exp[i][j]) *
           otimes(f.M.at(i, j), cat.p_free.at(j, i));
  return PhaseCoefficient(1, 2) * s;
}

Tensor rho_generator_display() {
  const Catalog& cat = catalog();
  const FamilyData& f = family();
  const PhaseCoefficient mu = PhaseCoefficient::mu(1), mubar = PhaseCoefficient::mu(-1);
  Tensor s = otimes(f.m + f.n, cat.r_c4);
  s += otimes(f.m - f.n, cat.x_c4);
  s += otimes(mu * f.g1.star(), cat.alpha_c4);
  s += otimes(mubar * f.g2, cat.beta_c4);
  s += otimes(mubar * f.g1, cat.alpha_c4.star());
  s += otimes(mu * f.g2.star(), cat.beta_c4.star());
  return PhaseCoefficient(1, 2) * s;
}

std::vector<std::pair<std::string, Tensor>> rho_leg2_commutators() {
  const Catalog& cat = catalog();
  const Tensor rho2 = coaction().rho2;
  std::vector<std::pair<std::string, Tensor>> out;
  for (int l = 0; l < static_cast<int>(cat.c4.letters.size()); ++l) {
    const Tensor t = otimes(Poly::one(cat.sl2h), Poly::letter(cat.c4, l));
    out.push_back({cat.c4.letters[l].name, rho2 * t - t * rho2});
  }
  return out;
}

Poly connection_half_bracket(int i, int j, int a, int b) {
  return half_bracket(catalog(), i, j, a, b);
}

AlgMatrix<Tensor> omega_tilde_factored() {
  const Catalog& cat = catalog();
  const FamilyData& f = family();
  const Tensor tzero = Tensor::zero({&cat.sl2h, &cat.forms});
  AlgMatrix<Tensor> O(2, 2, tzero);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Tensor s = tzero;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          s += otimes(f.M.at(i, j), half_bracket(cat, i, j, a, b));
      O.at(a, b) = s;
    }
  return O;
}

AlgMatrix<Poly> omega_sp_substitution() {
  const Catalog& cat = catalog();
  const Poly fzero = Poly::zero(cat.forms);
  AlgMatrix<Poly> O(2, 2, fzero);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Poly s = fzero;
      for (int i = 0; i < 4; ++i) s += half_bracket(cat, i, i, a, b);
      O.at(a, b) = s;
    }
  return O;
}

} // namespace theta
