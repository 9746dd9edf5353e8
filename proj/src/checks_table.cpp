#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "theta/catalog.hpp"
#include "theta/check.hpp"
#include "theta/coaction.hpp"
#include "theta/expr.hpp"
#include "theta/hopf.hpp"

namespace theta {

namespace {

const char* kTableRef = "App. A (\"we list the explicit commutation relations\")";
const char* kDetRoutesRef =
    "Eq. (det-cond), \"(−1)^{|σ|} ε^σ A_{1,σ(1)}A_{2,σ(2)}...\"; Eq. (det2), "
    "\"(−1)^{|σ|} ε̄^σ\"; Lemma 3.2, \"computed via a Laplace expansion\"";
const char* kDetCentralRef =
    "§3.1, \"det(A_θ) is (not surprisingly) a central element\"";
const char* kComplementRef =
    "Lemma 3.1, \"Â_{il} = Σ_{σ∈S₃}(−1)^{|σ|} ε^{σ₁...l...} η^{σ₁l}···\"";
const char* kFormsCoactionRef =
    "Eq. (transu), \"ũ := Δ_L(u) = A_θ ⊗̇ u\"; forms extension: \"extended to "
    "forms by requiring it to commute with d\"";
const char* kSpIdealRef =
    "§3.2 Prop., \"Σ_k (A_{ki})* A_{kj} − δ_{ij}\" generate a Hopf ideal; Eq. "
    "(condhi), \"Δ(I) ⊆ I⊗A + A⊗I\"";
const char* kQuotientRef =
    "§3.3, \"I_θ := ⟨b_{ij}, c_{ij}, a₂, a₂*, a₁−1, a₁*−1⟩\" and \"J_θ := ⟨b_{ij}, "
    "c_{ij}⟩\"";
const char* kHomogeneousRef = "§3.3, \"A(Sp_θ(2))^{co(A(Sp(1))} ≃ A(S⁷_θ)\"";
const char* kCorrisRef = "§3.3, \"A(Sp_θ(2))^{co(A(Sp(1))} ≃ A(S⁷_θ)\"";

std::string id_name(std::string letter) {
  if (!letter.empty() && letter.back() == '\'') {
    letter.pop_back();
    letter += "_star";
  }
  return letter;
}

// The 48 rows listed in the source table, keyed by letter-name pair.
const std::map<std::pair<std::string, std::string>, std::string>& table_rows() {
  static const auto* rows = [] {
    auto* m = new std::map<std::pair<std::string, std::string>, std::string>();
    for (const auto& row : fixture_rows("appendix_a.txt")) {
      if (row.size() != 3)
        throw std::runtime_error("appendix_a.txt: expected 3 tokens per row");
      if (!m->emplace(std::make_pair(row[0], row[1]), row[2]).second)
        throw std::runtime_error("appendix_a.txt: duplicate row " + row[0] + " " + row[1]);
    }
    return m;
  }();
  return *rows;
}

PhaseCoefficient parse_phase(const Presentation& P, const std::string& text) {
  const Poly f = parse_poly(P, text);
  return f.coeff(Monomial::unit(P.size()));
}

// Ordered pairs the table displays: first letters unstarred, second letters in
// a later quaternionic block (both starred and unstarred).
std::vector<std::pair<std::string, std::string>> table_pairs() {
  std::vector<std::pair<std::string, std::string>> out;
  const std::vector<std::string> b = {"b1", "b1'", "b2", "b2'"};
  const std::vector<std::string> c = {"c1", "c1'", "c2", "c2'"};
  const std::vector<std::string> d = {"d1", "d1'", "d2", "d2'"};
  for (const char* x : {"a1", "a2"}) {
    for (const auto& y : b) out.emplace_back(x, y);
    for (const auto& y : c) out.emplace_back(x, y);
    for (const auto& y : d) out.emplace_back(x, y);
  }
  for (const char* x : {"b1", "b2"})
    for (const auto& y : c) out.emplace_back(x, y);
  for (const char* x : {"b1", "b2", "c1", "c2"})
    for (const auto& y : d) out.emplace_back(x, y);
  return out;
}

void register_appendix(Registry& r) {
  for (const auto& [x, y] : table_pairs()) {
    r.add({"appendixa." + id_name(x) + "." + id_name(y),
           "the displayed relation " + x + " " + y + " = coeff " + y + " " + x +
               " holds with the transcribed coefficient",
           kTableRef,
           {"appendix-a"},
           [x = x, y = y](CheckContext& cx) {
             const Catalog& cat = catalog();
             const auto it = table_rows().find({x, y});
             cx.is_true(it != table_rows().end(), "fixture row " + x + " " + y,
                        "row missing from appendix_a.txt");
             if (it == table_rows().end()) return;
             const PhaseCoefficient q = parse_phase(cat.sl2h, it->second);
             const Poly X = cat.sl(x), Y = cat.sl(y);
             cx.zero(X * Y - q * (Y * X), x + std::string(" ") + y + " = " +
                                              it->second + " " + y + " " + x);
           }});
  }

  r.add({"appendixa.star_closure",
         "conjugating every displayed relation yields the starred relation with the "
         "same coefficient: the reversal of the product and the conjugation of the "
         "unit phase cancel",
         kTableRef,
         {"appendix-a"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           long long rows = 0;
           for (const auto& [pair, coeff] : table_rows()) {
             const int xi = cat.sl2h.index_of(pair.first);
             const int yi = cat.sl2h.index_of(pair.second);
             const Poly Xs = Poly::letter(cat.sl2h, cat.sl2h.letters[xi].star);
             const Poly Ys = Poly::letter(cat.sl2h, cat.sl2h.letters[yi].star);
             const PhaseCoefficient q = parse_phase(cat.sl2h, coeff);
             // (x y)* = (q y x)*  gives  y* x* = q^{-1} x* y*, i.e. the starred
             // pair exchanges with the original coefficient.
             cx.zero(Xs * Ys - q * (Ys * Xs),
                     "conjugate of " + pair.first + " " + pair.second);
             ++rows;
           }
           cx.metric("rows", rows);
         }});

  r.add({"appendixa.fixture.complete",
         "the 48 displayed rows and their conjugates cover every cross-block letter "
         "pair, and every pair not covered commutes without phase",
         kTableRef,
         {"appendix-a"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           cx.is_true(table_rows().size() == 48, "row count",
                      "expected 48 rows, got " + std::to_string(table_rows().size()));
           std::set<std::pair<int, int>> covered;
           for (const auto& [pair, coeff] : table_rows()) {
             const int x = cat.sl2h.index_of(pair.first);
             const int y = cat.sl2h.index_of(pair.second);
             cx.is_true(x >= 0 && y >= 0, "row letters " + pair.first + " " + pair.second,
                        "unknown letter");
             if (x < 0 || y < 0) continue;
             covered.insert({std::min(x, y), std::max(x, y)});
             const int xs = cat.sl2h.letters[x].star, ys = cat.sl2h.letters[y].star;
             covered.insert({std::min(xs, ys), std::max(xs, ys)});
           }
           cx.metric("covered_pairs", static_cast<long long>(covered.size()));
           // cross-block pairs: 6 block pairs x 16 = 96
           cx.is_true(covered.size() == 96, "coverage",
                      "rows + conjugates cover " + std::to_string(covered.size()) +
                          " pairs, expected 96");
           long long trivial = 0;
           for (int x = 0; x < cat.sl2h.size(); ++x)
             for (int y = x + 1; y < cat.sl2h.size(); ++y) {
               if (covered.count({x, y})) continue;
               cx.is_true(cat.sl2h.lam[x][y] == 0,
                          "uncovered pair (" + cat.sl2h.letters[x].name + "," +
                              cat.sl2h.letters[y].name + ")",
                          "uncovered pair has a nontrivial phase");
               ++trivial;
             }
           cx.metric("trivial_pairs", trivial);
         }});
}

void register_determinant(Registry& r) {
  r.add({"determinant.route.bar",
         "the column route through the conjugate epsilon tensor equals the row route",
         kDetRoutesRef,
         {"determinant"},
         [](CheckContext& cx) {
           cx.zero(determinant_alt() - catalog().det, "column route minus row route");
         }});

  for (int i = 1; i <= 4; ++i) {
    r.add({"determinant.route.laplace.row." + std::to_string(i),
           "the Laplace expansion along row " + std::to_string(i) +
               " equals the epsilon-tensor determinant",
           kDetRoutesRef,
           {"determinant"},
           [i](CheckContext& cx) {
             cx.zero(determinant_laplace('r', i - 1) - catalog().det,
                     "row " + std::to_string(i) + " expansion");
           }});
    r.add({"determinant.route.laplace.col." + std::to_string(i),
           "the Laplace expansion along column " + std::to_string(i) +
               " equals the epsilon-tensor determinant",
           kDetRoutesRef,
           {"determinant"},
           [i](CheckContext& cx) {
             cx.zero(determinant_laplace('c', i - 1) - catalog().det,
                     "column " + std::to_string(i) + " expansion");
           }});
  }

  r.add({"determinant.route.coaction",
         "the coaction multiplies the top volume form by exactly the determinant",
         kFormsCoactionRef,
         {"determinant", "coaction"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           const Poly vol = cat.dz(1) * cat.dz(2, true) * cat.dz(3) * cat.dz(4, true);
           const Tensor lhs = apply_hom(coaction().delta_forms, vol);
           cx.count("volume_terms", lhs);
           cx.zero(lhs - otimes(cat.det, vol), "coaction of the volume form");
         }});

  r.add({"determinant.display",
         "the transcribed bracketed display equals the epsilon-tensor determinant",
         kDetRoutesRef,
         {"determinant"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           const Poly shown = parse_poly(cat.sl2h, fixture_text("det_display.txt"));
           cx.metric("display_terms", static_cast<long long>(shown.term_count()));
           cx.zero(shown - cat.det, "display minus engine determinant");
         }});

  r.add({"determinant.central",
         "the determinant commutes with every generator",
         kDetCentralRef,
         {"determinant"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           for (int l = 0; l < cat.sl2h.size(); ++l) {
             const Poly x = Poly::letter(cat.sl2h, l);
             cx.zero(cat.det * x - x * cat.det,
                     "commutator with " + cat.sl2h.letters[l].name);
           }
           cx.metric("letters", cat.sl2h.size());
         }});

  r.add({"determinant.classical",
         "at the classical point the quantum determinant becomes the ordinary "
         "signed-permutation determinant and every epsilon weight becomes 1",
         kDetRoutesRef,
         {"determinant"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           std::array<int, 4> perm = {0, 1, 2, 3};
           Poly det_cl = Poly::zero(cat.sl2h_cl);
           long long eps_ok = 0;
           do {
             Poly t = Poly::one(cat.sl2h_cl);
             for (int i = 0; i < 4; ++i) {
               const SignedLetter& s = cat.A_pos[i][perm[i]];
               Poly l = Poly::letter(cat.sl2h_cl, s.letter);
               t *= (s.sign < 0 ? -l : l);
             }
             int inv = 0;
             for (int i = 0; i < 4; ++i)
               for (int j = i + 1; j < 4; ++j)
                 if (perm[i] > perm[j]) ++inv;
             det_cl += (inv % 2 == 0 ? t : -t);
             if (cat.eps.value(perm[0] + 1, perm[1] + 1, perm[2] + 1, perm[3] + 1)
                     .eval_at_one() == 1)
               ++eps_ok;
           } while (std::next_permutation(perm.begin(), perm.end()));
           cx.metric("unit_epsilon_values", eps_ok);
           cx.is_true(eps_ok == 24, "epsilon at the classical point",
                      "some epsilon component does not evaluate to 1");
           cx.zero(cat.classical(cat.det, cat.sl2h_cl) - det_cl,
                   "classical limit of the determinant");
         }});

  r.add({"determinant.classical_cofactors",
         "at the classical point every algebraic complement becomes the ordinary "
         "unsigned 3x3 minor",
         kComplementRef,
         {"determinant"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           for (int i = 0; i < 4; ++i)
             for (int l = 0; l < 4; ++l) {
               std::vector<int> rows, cols;
               for (int k = 0; k < 4; ++k) {
                 if (k != i) rows.push_back(k);
                 if (k != l) cols.push_back(k);
               }
               std::array<int, 3> perm = {0, 1, 2};
               Poly minor = Poly::zero(cat.sl2h_cl);
               do {
                 Poly t = Poly::one(cat.sl2h_cl);
                 for (int k = 0; k < 3; ++k) {
                   const SignedLetter& s = cat.A_pos[rows[k]][cols[perm[k]]];
                   Poly let = Poly::letter(cat.sl2h_cl, s.letter);
                   t *= (s.sign < 0 ? -let : let);
                 }
                 int inv = 0;
                 for (int a = 0; a < 3; ++a)
                   for (int b = a + 1; b < 3; ++b)
                     if (perm[a] > perm[b]) ++inv;
                 minor += (inv % 2 == 0 ? t : -t);
               } while (std::next_permutation(perm.begin(), perm.end()));
               cx.zero(cat.classical(algebraic_complement(i, l), cat.sl2h_cl) - minor,
                       "complement (" + std::to_string(i + 1) + "," +
                           std::to_string(l + 1) + ")");
             }
         }});
}

void register_sp_ideal(Registry& r) {
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      r.add({"spideal.delta_expansion." + std::to_string(i) + "." + std::to_string(j),
             "the coproduct of unitarity generator (" + std::to_string(i) + "," +
                 std::to_string(j) +
                 ") expands over the ideal: Delta(g) = sum g_mn (x) (A*)_mi A_nj + "
                 "1 (x) g",
             kSpIdealRef,
             {"sp-ideal"},
             [i, j](CheckContext& cx) {
               const Catalog& cat = catalog();
               const HopfData& H = hopf();
               const AlgMatrix<Poly> g = sp_ideal_generators();
               const Tensor lhs = apply_hom(H.Delta, g.at(i - 1, j - 1));
               Tensor rhs = Tensor::zero({&cat.sl2h, &cat.sl2h});
               for (int m = 0; m < 4; ++m)
                 for (int n = 0; n < 4; ++n)
                   rhs += otimes(g.at(m, n),
                                 cat.A.at(m, i - 1).star() * cat.A.at(n, j - 1));
               rhs += otimes(Poly::one(cat.sl2h), g.at(i - 1, j - 1));
               cx.count("lhs_terms", lhs);
               cx.zero(lhs - rhs, "membership expansion");
             }});
    }

  r.add({"spideal.counit",
         "the counit kills every unitarity generator",
         kSpIdealRef,
         {"sp-ideal"},
         [](CheckContext& cx) {
           const HopfData& H = hopf();
           const AlgMatrix<Poly> g = sp_ideal_generators();
           for (int i = 0; i < 4; ++i)
             for (int j = 0; j < 4; ++j)
               cx.zero(apply_hom(H.counit, g.at(i, j)),
                       "counit of generator (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ")");
         }});

  r.add({"spideal.block",
         "the conjugate-product matrix restricted to the first two columns is the "
         "unitarity combination of the two quaternionic column blocks",
         kSpIdealRef,
         {"sp-ideal"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           const AlgMatrix<Poly> M = conjugate_product_matrix();
           for (int i = 0; i < 2; ++i)
             for (int j = 0; j < 2; ++j) {
               Poly sum = Poly::zero(cat.sl2h);
               for (int k = 0; k < 2; ++k)
                 sum += cat.A.at(k, i).star() * cat.A.at(k, j) +
                        cat.A.at(k + 2, i).star() * cat.A.at(k + 2, j);
               cx.zero(M.at(i, j) - sum,
                       "block entry (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ")");
             }
         }});

  r.add({"spideal.antipode_ideal",
         "the antipode maps the unitarity ideal into itself (established "
         "structurally in the source; no finite expansion is mechanised here)",
         kSpIdealRef,
         {"sp-ideal"},
         nullptr});
}

void register_homogeneous(Registry& r) {
  r.add({"homogeneous.coinv_I",
         "under the point quotient on the second leg, the coproduct fixes all eight "
         "entries of the first two matrix columns",
         kQuotientRef,
         {"homogeneous"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           const HopfData& H = hopf();
           const PolyHom piI = quotient_map("pi_I_theta");
           for (int i = 0; i < 4; ++i)
             for (int j = 0; j < 2; ++j) {
               const Poly e = cat.A.at(i, j);
               const Tensor got = apply_leg(apply_hom(H.Delta, e), piI, 1);
               cx.zero(got - otimes(e, Poly::one(cat.sl2h)),
                       "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ")");
             }
         }});

  r.add({"homogeneous.coinv_J",
         "under the block quotient on the second leg, followed by the quotient's own "
         "unitarity normalization of the surviving quaternion, the coproduct fixes "
         "the three displayed quadratic coinvariants",
         kHomogeneousRef,
         {"homogeneous"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           const HopfData& H = hopf();
           const PolyHom piJ = quotient_map("pi_J_theta");
           const Poly zero = Poly::zero(cat.sl2h);
           AlgMatrix<Poly> a(2, 2, zero), c(2, 2, zero);
           for (int i = 0; i < 2; ++i)
             for (int j = 0; j < 2; ++j) {
               a.at(i, j) = cat.A.at(i, j);
               c.at(i, j) = cat.A.at(i + 2, j);
             }
           const AlgMatrix<Poly> aas = mat_mul(a, mat_adjoint(a, zero), zero);
           const AlgMatrix<Poly> cas = mat_mul(c, mat_adjoint(a, zero), zero);
           // In the quotient the unitarity generators collapse to the single
           // normalization a1* a1 + a2* a2 = 1 of the surviving block; it is the
           // image of the unitarity ideal and is graded-central, so it rewrites.
           const Poly unit_rel = apply_hom(piJ, conjugate_product_matrix().at(0, 0)) -
                                 Poly::one(cat.sl2h);
           RewriteSystem norm(cat.sl2h, {{"quaternion normalization", unit_rel}});
           const std::vector<std::pair<std::string, Poly>> elems = {
               {"(aa*)_11", aas.at(0, 0)}, {"(ca*)_11", cas.at(0, 0)},
               {"(ca*)_12", cas.at(0, 1)}};
           for (const auto& [name, e] : elems) {
             const Tensor got = apply_leg(apply_hom(H.Delta, e), piJ, 1);
             cx.zero(norm.reduce_leg(got, 1) - otimes(e, Poly::one(cat.sl2h)), name);
           }
         }});

  r.add({"homogeneous.corris.phases",
         "the identification of the first two matrix columns with the sphere "
         "coordinates preserves all 64 commutation phases",
         kCorrisRef,
         {"homogeneous"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           const std::vector<std::pair<std::string, int>> corr = {
               {"a1", cat.z_idx(1, false)}, {"a1'", cat.z_idx(1, true)},
               {"a2", cat.z_idx(2, false)}, {"a2'", cat.z_idx(2, true)},
               {"c1", cat.z_idx(3, false)}, {"c1'", cat.z_idx(3, true)},
               {"c2", cat.z_idx(4, false)}, {"c2'", cat.z_idx(4, true)}};
           long long pairs = 0;
           for (const auto& [xn, xz] : corr)
             for (const auto& [yn, yz] : corr) {
               const int xi = cat.sl2h.index_of(xn), yi = cat.sl2h.index_of(yn);
               cx.is_true(cat.sl2h.lam[xi][yi] == cat.c4.lam[xz][yz],
                          "pair (" + xn + "," + yn + ")",
                          "matrix phase differs from coordinate phase");
               ++pairs;
             }
           cx.metric("pairs", pairs);
         }});

  r.add({"homogeneous.corris.sphere",
         "the identification sends the first unitarity diagonal entry to the sphere "
         "radius",
         kCorrisRef,
         {"homogeneous"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           PolyHom phi;
           phi.src = &cat.sl2h;
           phi.unit = Poly::one(cat.c4);
           phi.name = "column identification";
           phi.images.assign(cat.sl2h.size(), Poly::zero(cat.c4));
           const std::vector<std::pair<std::string, Poly>> corr = {
               {"a1", cat.z(1)}, {"a1'", cat.z(1, true)}, {"a2", cat.z(2)},
               {"a2'", cat.z(2, true)}, {"c1", cat.z(3)}, {"c1'", cat.z(3, true)},
               {"c2", cat.z(4)}, {"c2'", cat.z(4, true)}};
           for (const auto& [n, img] : corr) phi.images[cat.sl2h.index_of(n)] = img;
           const Poly m11 = conjugate_product_matrix().at(0, 0);
           cx.zero(apply_hom(phi, m11) - cat.r_c4, "image of the diagonal entry");
         }});

  r.add({"homogeneous.pi_I.validation",
         "the point quotient substitution violates exactly the four relations pairing "
         "the inverted unit letters with the second diagonal quaternion",
         kQuotientRef,
         {"homogeneous"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           const PolyHom piI = quotient_map("pi_I_theta");
           const auto viol = validate_hom(piI);
           cx.metric("violations", static_cast<long long>(viol.size()));
           std::set<std::pair<std::string, std::string>> got, want;
           for (const auto& v : viol)
             got.insert({cat.sl2h.letters[v.x].name, cat.sl2h.letters[v.y].name});
           for (const char* a : {"d2", "d2'"})
             for (const char* b : {"a1", "a1'"})
               want.insert({a, b});
           cx.is_true(got == want, "violation set",
                      "violations differ from the four expected pairs");
         }});

  r.add({"homogeneous.pi_J.validation",
         "the block quotient substitution is a presentation homomorphism",
         kQuotientRef,
         {"homogeneous"},
         [](CheckContext& cx) {
           const auto viol = validate_hom(quotient_map("pi_J_theta"));
           cx.metric("violations", static_cast<long long>(viol.size()));
           cx.is_true(viol.empty(), "relation validation",
                      "block quotient violates a relation");
         }});

  r.add({"homogeneous.pi_J.noncommutative",
         "the block quotient image stays noncommutative: a surviving pair still "
         "exchanges with the square phase, which is not 1 in the phase ring",
         kQuotientRef,
         {"homogeneous"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           const PolyHom piJ = quotient_map("pi_J_theta");
           const Poly a2 = apply_hom(piJ, cat.sl("a2"));
           const Poly d1 = apply_hom(piJ, cat.sl("d1"));
           cx.is_true(!a2.is_zero() && !d1.is_zero(), "surviving letters",
                      "quotient killed a diagonal letter");
           cx.zero(a2 * d1 - PhaseCoefficient::mu(2) * (d1 * a2),
                   "exchange relation in the quotient image");
           cx.is_true(PhaseCoefficient::mu(2) != PhaseCoefficient::one(),
                      "formal square phase",
                      "the square phase collapsed to 1 in the phase ring");
         }});

  r.add({"homogeneous.pi_I.matrix",
         "the point quotient sends the generator matrix to the block-diagonal matrix "
         "with a unit 2x2 block and the second diagonal quaternion",
         kQuotientRef,
         {"homogeneous"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           const PolyHom piI = quotient_map("pi_I_theta");
           for (int i = 0; i < 4; ++i)
             for (int j = 0; j < 4; ++j) {
               Poly want = Poly::zero(cat.sl2h);
               if (i < 2 && j < 2 && i == j) want = Poly::one(cat.sl2h);
               if (i >= 2 && j >= 2) want = cat.A.at(i, j);
               cx.zero(apply_hom(piI, cat.A.at(i, j)) - want,
                       "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ")");
             }
         }});

  r.add({"homogeneous.pi_J.matrix",
         "the block quotient sends the generator matrix to the direct sum of its two "
         "diagonal quaternion blocks",
         kQuotientRef,
         {"homogeneous"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           const PolyHom piJ = quotient_map("pi_J_theta");
           for (int i = 0; i < 4; ++i)
             for (int j = 0; j < 4; ++j) {
               const bool diag_block = (i < 2) == (j < 2);
               const Poly want = diag_block ? cat.A.at(i, j) : Poly::zero(cat.sl2h);
               cx.zero(apply_hom(piJ, cat.A.at(i, j)) - want,
                       "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ")");
             }
         }});
}

} // namespace

void register_table_checks(Registry& r) {
  register_appendix(r);
  register_determinant(r);
  register_sp_ideal(r);
  register_homogeneous(r);
}

} // namespace theta
