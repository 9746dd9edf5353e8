#include <random>
#include <set>
#include <string>
#include <vector>

#include "theta/catalog.hpp"
#include "theta/check.hpp"
#include "theta/expr.hpp"
#include "theta/hopf.hpp"
#include "theta/rewrite.hpp"

namespace theta {

namespace {

const char* kOracleRef = "invented — artifact plumbing (differential-testing oracle)";
const char* kCompletionRef =
    "invented — artifact plumbing (diamond-lemma completion for twisted polynomial rings)";
const char* kStarProductRef =
    "Eq. (eq:star-product), \"f_r ×_θ g_s := e^{πiθ(r₁s₂−r₂s₁)}f_r g_s\"; §3, "
    "\"e^{πiθ(r₁s₂−r₂s₁+r₃s₄−r₄s₃)}\"";

Word random_word(std::mt19937& rng, const Presentation& P, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, P.size() - 1);
  Word w(static_cast<size_t>(len(rng)));
  for (int& l : w) l = pick(rng);
  return w;
}

PhaseCoefficient random_coeff(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> exp(-2, 2);
  int n = num(rng);
  if (n == 0) n = 1;
  return PhaseCoefficient::mu(exp(rng), Rational(n) / den(rng));
}

Poly random_poly(std::mt19937& rng, const Presentation& P, int terms, int max_len) {
  Poly f = Poly::zero(P);
  for (int t = 0; t < terms; ++t) {
    const OrderedTerm ot = normal_order(P, random_word(rng, P, max_len));
    if (ot.coeff.is_zero()) continue;
    f.add_term(ot.mon, ot.coeff * random_coeff(rng));
  }
  return f;
}

const Presentation& commutative3() {
  static const Presentation* P = [] {
    auto* p = new Presentation();
    p->name = "free3";
    for (const char* n : {"e", "f", "g"}) {
      Letter l;
      l.name = n;
      l.parity = 0;
      l.star = static_cast<int>(p->letters.size());  // self-adjoint
      p->letters.push_back(l);
    }
    p->lam.assign(3, std::vector<int>(3, 0));
    p->validate();
    return p;
  }();
  return *P;
}

// Every normal form reachable by applying rules at arbitrary positions in
// arbitrary order; the commutative scratch presentation keeps this sound.
void all_normal_forms(const RewriteSystem& rs, const Poly& f,
                      std::set<std::string>& normal, std::set<std::string>& seen) {
  if (seen.size() > 4000) return;
  if (!seen.insert(poly_str(f)).second) return;
  bool reducible = false;
  for (const auto& [m, c] : f.terms()) {
    for (const RewriteRule& r : rs.rules()) {
      if (!divides(r.lm, m)) continue;
      reducible = true;
      Monomial q(f.pres().size());
      for (size_t i = 0; i < q.e.size(); ++i) q.e[i] = m.e[i] - r.lm.e[i];
      q.total = m.total - r.lm.total;
      const Poly qp = Poly::term(f.pres(), q, c * r.lc.inverse());
      all_normal_forms(rs, f - qp * (Poly::term(f.pres(), r.lm, r.lc) - r.rhs), normal,
                       seen);
    }
  }
  if (!reducible) normal.insert(poly_str(f));
}

Monomial random_monomial(std::mt19937& rng, int deg_lo, int deg_hi) {
  std::uniform_int_distribution<int> deg(deg_lo, deg_hi);
  std::uniform_int_distribution<int> pick(0, 2);
  Monomial m(3);
  const int d = deg(rng);
  for (int i = 0; i < d; ++i) ++m.e[static_cast<size_t>(pick(rng))];
  m.total = d;
  return m;
}

void register_oracle(Registry& r) {
  for (const std::string name : {"c4", "forms", "s4", "sl2h"}) {
    r.add({"oracle.normal_order." + name,
           "fast normal ordering by inversion counting agrees with the one-swap-at-a-time "
           "reference on 1000 random words of length at most 12 over " + name,
           kOracleRef,
           {"oracle"},
           [name](CheckContext& cx) {
             const Catalog& cat = catalog();
             const Presentation& P = name == "c4"    ? cat.c4
                                     : name == "forms" ? cat.forms
                                     : name == "s4"    ? cat.s4
                                                       : cat.sl2h;
             std::mt19937 rng(20260819u + static_cast<unsigned>(P.size()));
             int checked = 0;
             for (int t = 0; t < 1000; ++t) {
               const Word w = random_word(rng, P, 12);
               const OrderedTerm a = normal_order(P, w);
               const OrderedTerm b = normal_order_naive(P, w);
               const bool same =
                   a.coeff == b.coeff && (a.coeff.is_zero() || a.mon == b.mon);
               cx.is_true(same, "word #" + std::to_string(t),
                          "fast and naive normal forms disagree");
               if (same) ++checked;
             }
             cx.metric("words", checked);
           }});
  }

  r.add({"oracle.mul.associative",
         "polynomial multiplication is associative on random triples over the coordinate "
         "and matrix algebras",
         "invented — artifact plumbing",
         {"oracle"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           std::mt19937 rng(7001);
           long long cases = 0;
           for (const Presentation* P : {&cat.c4, &cat.forms, &cat.sl2h}) {
             for (int t = 0; t < 25; ++t) {
               const Poly f = random_poly(rng, *P, 3, 4);
               const Poly g = random_poly(rng, *P, 3, 4);
               const Poly h = random_poly(rng, *P, 3, 4);
               cx.zero((f * g) * h - f * (g * h), P->name + " triple");
               ++cases;
             }
           }
           cx.metric("triples", cases);
         }});

  r.add({"oracle.mul.monomials",
         "the exponent-vector product of canonical monomials matches normal ordering of "
         "the concatenated words",
         "invented — artifact plumbing",
         {"oracle"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           std::mt19937 rng(7002);
           for (const Presentation* P : {&cat.c4, &cat.forms, &cat.sl2h}) {
             for (int t = 0; t < 200; ++t) {
               Word wa = random_word(rng, *P, 6), wb = random_word(rng, *P, 6);
               const OrderedTerm a = normal_order(*P, wa);
               const OrderedTerm b = normal_order(*P, wb);
               if (a.coeff.is_zero() || b.coeff.is_zero()) continue;
               const OrderedTerm ab = mul_monomials(*P, a.mon, b.mon);
               Word w = wa;
               w.insert(w.end(), wb.begin(), wb.end());
               const OrderedTerm whole = normal_order(*P, w);
               const bool same = whole.coeff == a.coeff * b.coeff * ab.coeff &&
                                 (whole.coeff.is_zero() || whole.mon == ab.mon);
               cx.is_true(same, P->name + " word #" + std::to_string(t),
                          "monomial product disagrees with word concatenation");
             }
           }
         }});

  r.add({"oracle.star",
         "conjugation is an antilinear antihomomorphism and an involution on random "
         "polynomials",
         "§2, *-algebra structure (\"the *-algebra generated by elements z_j, z_j*\")",
         {"oracle"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           std::mt19937 rng(7003);
           for (const Presentation* P : {&cat.c4, &cat.forms, &cat.sl2h, &cat.s4}) {
             for (int t = 0; t < 40; ++t) {
               const Poly f = random_poly(rng, *P, 3, 5);
               const Poly g = random_poly(rng, *P, 3, 5);
               cx.zero((f * g).star() - g.star() * f.star(), P->name + " antihom");
               cx.zero(f.star().star() - f, P->name + " involution");
             }
           }
         }});

  r.add({"oracle.differential",
         "the exterior differential obeys the graded Leibniz rule on random homogeneous "
         "pairs and squares to zero",
         "§3.1, \"coaction Δ_L is extended to forms by requiring it to commute with d\" "
         "and calculus relations",
         {"oracle"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           std::mt19937 rng(7004);
           int pairs = 0;
           for (int t = 0; t < 250 && pairs < 120; ++t) {
             const Poly f = random_poly(rng, cat.forms, 2, 4);
             const Poly g = random_poly(rng, cat.forms, 2, 4);
             const auto pf = homogeneous_parity(f);
             if (!pf || f.is_zero()) continue;
             ++pairs;
             const Poly sign_f = (*pf == 0 ? Poly::one(cat.forms) : -Poly::one(cat.forms));
             cx.zero(cat.d(f * g) - (cat.d(f) * g + sign_f * f * cat.d(g)), "Leibniz");
             cx.zero(cat.d(cat.d(f)), "d squared");
             cx.zero(cat.d(cat.d(g)), "d squared");
           }
           cx.metric("pairs", pairs);
         }});

  r.add({"oracle.reduce.idempotent",
         "reduction modulo the sphere, determinant and differential-sphere systems is "
         "idempotent on random inputs and fixes ideal members' normal forms",
         "§3.1, \"two-sided ideal generated by det(A_θ) − 1\"",
         {"oracle"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           std::mt19937 rng(7005);
           const std::vector<std::pair<const RewriteSystem*, const Presentation*>> sys = {
               {&cat.sphere, &cat.c4},
               {&cat.det_rule, &cat.sl2h},
               {&cat.diff_ideal, &cat.forms},
               {&cat.s4_sphere, &cat.s4}};
           for (const auto& [rs, P] : sys) {
             for (int t = 0; t < 25; ++t) {
               const Poly f = random_poly(rng, *P, 3, 6);
               const Poly once = rs->reduce(f);
               cx.zero(rs->reduce(once) - once, P->name + " idempotence");
             }
           }
           cx.zero(cat.sphere.reduce(cat.r_c4) - Poly::one(cat.c4), "radius to 1");
           cx.zero(cat.det_rule.reduce(cat.det * cat.sl("a1") - cat.sl("a1")),
                   "det a1 - a1 to 0");
           cx.zero(cat.sphere.reduce(Poly::one(cat.c4)) - Poly::one(cat.c4),
                   "unit fixed");
         }});

  r.add({"oracle.reduce.order_independence",
         "on completed random rule systems over a three-letter scratch algebra, every "
         "order of rule application reaches the same normal form as the engine",
         kCompletionRef,
         {"oracle"},
         [](CheckContext& cx) {
           const Presentation& P = commutative3();
           std::mt19937 rng(7006);
           int systems = 0, inputs = 0;
           for (int s = 0; s < 12 && systems < 6; ++s) {
             std::vector<std::pair<std::string, Poly>> rels;
             std::uniform_int_distribution<int> nrules(2, 3);
             const int k = nrules(rng);
             for (int i = 0; i < k; ++i) {
               const Monomial lm = random_monomial(rng, 2, 3);
               Monomial rm = random_monomial(rng, 0, lm.total - 1);
               Poly rel = Poly::term(P, lm, PhaseCoefficient::one());
               std::uniform_int_distribution<int> keep(0, 2);
               if (keep(rng) != 0)
                 rel = rel - Poly::term(P, rm, PhaseCoefficient(1, 2));
               rels.emplace_back("r" + std::to_string(i), rel);
             }
             RewriteSystem rs(P, rels);
             RewriteSystem done;
             try {
               done = rs.completed(completion_limit());
             } catch (const CompletionLimitError&) {
               continue;  // this random sample needs more rules than the bound allows
             }
             ++systems;
             for (int t = 0; t < 6; ++t) {
               Poly f = Poly::zero(P);
               for (int j = 0; j < 3; ++j)
                 f.add_term(random_monomial(rng, 0, 4), random_coeff(rng));
               std::set<std::string> normal, seen;
               all_normal_forms(done, f, normal, seen);
               cx.is_true(normal.size() == 1,
                          "system #" + std::to_string(systems),
                          "several normal forms survive completion: " +
                              std::to_string(normal.size()));
               if (normal.size() == 1)
                 cx.is_true(*normal.begin() == poly_str(done.reduce(f)),
                            "system #" + std::to_string(systems),
                            "engine normal form differs from the exhaustive one");
               ++inputs;
             }
           }
           cx.metric("systems", systems);
           cx.metric("inputs", inputs);
           cx.is_true(systems >= 3, "sample size",
                      "too few random systems completed within the limit");
         }});

  r.add({"oracle.completion.central_single",
         "completion returns single central-relation systems unchanged",
         kCompletionRef,
         {"oracle"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           cx.is_true(cat.sphere.completed(completion_limit()).rules().size() ==
                          cat.sphere.rules().size(),
                      "sphere rule", "completion added rules to a central system");
           cx.is_true(cat.det_rule.completed(completion_limit()).rules().size() ==
                          cat.det_rule.rules().size(),
                      "determinant rule", "completion added rules to a central system");
         }});

  r.add({"oracle.hom.accept",
         "homomorphism validation accepts every structure map in the catalog",
         "Eq. (transf), \"w₁ := Δ_L(z₁)\"",
         {"oracle"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           const HopfData& H = hopf();
           cx.is_true(validate_hom(H.Delta).empty(), "coproduct", "relation violated");
           cx.is_true(validate_hom(H.counit).empty(), "counit", "relation violated");
           cx.is_true(validate_hom(H.antipode).empty(), "antipode", "relation violated");
           cx.is_true(validate_hom(cat.j).empty(), "quaternionic j", "relation violated");
           cx.is_true(validate_hom(quotient_map("pi_J_theta")).empty(),
                      "second quotient projection", "relation violated");
         }});

  r.add({"oracle.hom.reject",
         "homomorphism validation rejects deliberately corrupted image sets",
         "Eq. (transf), \"w₁ := Δ_L(z₁)\"",
         {"oracle"},
         [](CheckContext& cx) {
           const HopfData& H = hopf();
           TensorHom bad = H.Delta;
           std::swap(bad.images[bad.src->index_of("a1")],
                     bad.images[bad.src->index_of("a2")]);
           cx.is_true(!validate_hom(bad).empty(), "swapped coproduct images",
                      "validator accepted a corrupted coproduct");
           PolyHom badc = H.counit;
           badc.images[badc.src->index_of("b1")] = Poly::one(badc.unit.pres());
           cx.is_true(!validate_hom(badc).empty(), "corrupted counit",
                      "validator accepted a corrupted counit");
         }});

  r.add({"oracle.parse_roundtrip",
         "printing then parsing returns the same polynomial for random elements of every "
         "catalog presentation",
         "invented — artifact plumbing",
         {"oracle"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           std::mt19937 rng(7007);
           for (const Presentation* P : {&cat.c4, &cat.forms, &cat.s4, &cat.sl2h}) {
             for (int t = 0; t < 40; ++t) {
               const Poly f = random_poly(rng, *P, 4, 5);
               cx.zero(parse_poly(*P, poly_str(f)) - f, P->name + " roundtrip");
             }
           }
         }});

  r.add({"oracle.phase_ring",
         "the exact phase scalars form a commutative ring with involutive conjugation "
         "and invertible single terms",
         "invented — artifact plumbing (implements μ* = μ⁻¹, forced by |μ| = 1)",
         {"oracle"},
         [](CheckContext& cx) {
           std::mt19937 rng(7008);
           for (int t = 0; t < 200; ++t) {
             const PhaseCoefficient a = random_coeff(rng) + random_coeff(rng);
             const PhaseCoefficient b = random_coeff(rng);
             const PhaseCoefficient c = random_coeff(rng) + random_coeff(rng);
             cx.is_true((a + b) * c == a * c + b * c, "distributivity",
                        "(a+b)c != ac+bc");
             cx.is_true(a * b == b * a, "commutativity", "ab != ba");
             cx.is_true((a * b).conj() == a.conj() * b.conj(), "conjugation",
                        "conj not multiplicative");
             cx.is_true(a.conj().conj() == a, "involution", "conj not involutive");
             const PhaseCoefficient s = random_coeff(rng);
             cx.is_true(s * s.inverse() == PhaseCoefficient::one(), "inverse",
                        "single term times inverse differs from 1");
           }
         }});
}

void register_star_consistency(Registry& r) {
  r.add({"star.sl_pairs",
         "the commutation phase from the solved multidegrees equals the catalog phase "
         "for all 256 ordered pairs of matrix generators",
         kStarProductRef,
         {"star-consistency"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           long long pairs = 0;
           for (int x = 0; x < cat.sl2h.size(); ++x)
             for (int y = 0; y < cat.sl2h.size(); ++y) {
               const DegreeVector dx = *cat.sl2h.letters[x].degree;
               const DegreeVector dy = *cat.sl2h.letters[y].degree;
               cx.is_true(commutation_phase_from_degrees(dx, dy) ==
                              PhaseCoefficient::mu(cat.sl2h.lam[x][y]),
                          "pair (" + cat.sl2h.letters[x].name + "," +
                              cat.sl2h.letters[y].name + ")",
                          "degree pairing disagrees with the relation table");
               ++pairs;
             }
           cx.metric("pairs", pairs);
         }});

  r.add({"star.z_table",
         "the solved half-integer coordinate degrees reproduce the full coordinate "
         "commutation table through the doubled-torus pairing",
         "§3.1, \"multidegree Λ_i ⊕ (−Λ_j)\" with \"Λ = ((1,0),(−1,0),(0,1),(0,−1))\"",
         {"star-consistency"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           long long pairs = 0;
           for (int x = 0; x < cat.c4.size(); ++x)
             for (int y = 0; y < cat.c4.size(); ++y) {
               const DegreeVector dx = *cat.c4.letters[x].degree;
               const DegreeVector dy = *cat.c4.letters[y].degree;
               cx.is_true(commutation_phase_from_degrees(dx, dy) ==
                              PhaseCoefficient::mu(cat.c4.lam[x][y]),
                          "pair (" + cat.c4.letters[x].name + "," +
                              cat.c4.letters[y].name + ")",
                          "degree pairing disagrees with the relation table");
               ++pairs;
             }
           cx.metric("pairs", pairs);
         }});

  r.add({"star.s4_pairs",
         "the quadric generators' integer degrees reproduce their commutation table, "
         "and the star product of the two charged generators carries phase mu",
         kStarProductRef,
         {"star-consistency"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           for (int x = 0; x < cat.s4.size(); ++x)
             for (int y = 0; y < cat.s4.size(); ++y) {
               const DegreeVector dx = *cat.s4.letters[x].degree;
               const DegreeVector dy = *cat.s4.letters[y].degree;
               cx.is_true(commutation_phase_from_degrees(dx, dy) ==
                              PhaseCoefficient::mu(cat.s4.lam[x][y]),
                          "pair (" + cat.s4.letters[x].name + "," +
                              cat.s4.letters[y].name + ")",
                          "degree pairing disagrees with the relation table");
             }
           const DegreeVector da = *cat.s4.letters[cat.s4.index_of("alpha")].degree;
           const DegreeVector db = *cat.s4.letters[cat.s4.index_of("beta")].degree;
           cx.is_true(star_product_phase(da, db) == PhaseCoefficient::mu(1),
                      "alpha x beta", "star-product phase is not mu");
           cx.is_true(star_product_phase(da, da) == PhaseCoefficient::one(),
                      "alpha x alpha", "star-product phase of equal degrees is not 1");
         }});

  r.add({"star.classical_phases",
         "at the classical point mu = 1 every commutation phase of every presentation "
         "evaluates to 1",
         "§2, \"deformation parameter λ = e^{2πiθ}\" (\"With deformation parameter "
         "λ=e^{2πiθ}\")",
         {"star-consistency"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           long long pairs = 0;
           for (const Presentation* P : {&cat.c4, &cat.forms, &cat.s4, &cat.sl2h}) {
             for (int x = 0; x < P->size(); ++x)
               for (int y = 0; y < P->size(); ++y) {
                 cx.is_true(PhaseCoefficient::mu(P->lam[x][y]).eval_at_one() == 1,
                            P->name + " pair", "phase does not specialize to 1");
                 ++pairs;
               }
           }
           for (const Presentation* P : {&cat.c4_cl, &cat.sl2h_cl})
             for (int x = 0; x < P->size(); ++x)
               for (int y = 0; y < P->size(); ++y)
                 cx.is_true(P->lam[x][y] == 0, P->name + " table",
                            "classical table carries a nonzero exponent");
           cx.metric("pairs", pairs);
         }});
}

} // namespace

void register_engine_checks(Registry& r) {
  register_oracle(r);
  register_star_consistency(r);
}

} // namespace theta
