#include <string>
#include <vector>

#include "theta/catalog.hpp"
#include "theta/check.hpp"
#include "theta/expr.hpp"
#include "theta/hopf.hpp"

namespace theta {

namespace {

const char* kHopfMapsRef =
    "§3.1, \"Δ(A_{ij}) := Σ_k A_{ik}⊗A_{kj}\", \"ε(A_{ij}) := δ_{ij}\", "
    "\"S(A_{ij}) := (−1)^{i+j} Â_{ji}\"";
const char* kHopfAxiomsRef = "Prop. 3.3, \"constitutes a Hopf algebra\"";
const char* kComplementRef =
    "Lemma 3.1, \"Â_{il} = Σ_{σ∈S₃}(−1)^{|σ|} ε^{σ₁...l...} η^{σ₁l}···\"";
const char* kAntipodeStarRef =
    "§3, \"classical expressions for the coproduct, counit and antipode\"";

std::string id_name(std::string letter) {
  if (!letter.empty() && letter.back() == '\'') {
    letter.pop_back();
    letter += "_star";
  }
  return letter;
}

void register_structure(Registry& r) {
  r.add({"hopf.validators",
         "the coproduct and counit validate as homomorphisms and the antipode as an "
         "antihomomorphism against all defining relations",
         kHopfMapsRef,
         {"hopf"},
         [](CheckContext& cx) {
           const HopfData& H = hopf();
           cx.is_true(validate_hom(H.Delta).empty(), "coproduct",
                      "a defining relation is violated");
           cx.is_true(validate_hom(H.counit).empty(), "counit",
                      "a defining relation is violated");
           cx.is_true(validate_hom(H.antipode).empty(), "antipode",
                      "a defining relation is violated");
         }});

  const Catalog& cat = catalog();
  for (int l = 0; l < cat.sl2h.size(); ++l) {
    const std::string name = cat.sl2h.letters[l].name;
    r.add({"hopf.coassoc." + id_name(name),
           "coassociativity holds on the generator " + name,
           kHopfAxiomsRef,
           {"hopf"},
           [l](CheckContext& cx) {
             const HopfData& H = hopf();
             const Tensor& d = H.Delta.images[l];
             cx.zero(apply_leg_tensor(d, H.Delta, 0) - apply_leg_tensor(d, H.Delta, 1),
                     "(Delta x id)Delta - (id x Delta)Delta");
           }});
    r.add({"hopf.counit." + id_name(name),
           "both counit laws hold on the generator " + name,
           kHopfAxiomsRef,
           {"hopf"},
           [l](CheckContext& cx) {
             const Catalog& c = catalog();
             const HopfData& H = hopf();
             const Tensor& d = H.Delta.images[l];
             const Poly letter = Poly::letter(c.sl2h, l);
             cx.zero(contract_scalar_leg(apply_leg(d, H.counit, 0), 0) - letter,
                     "(counit x id)Delta");
             cx.zero(contract_scalar_leg(apply_leg(d, H.counit, 1), 1) - letter,
                     "(id x counit)Delta");
           }});
  }

  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      const std::string pos = std::to_string(i) + "." + std::to_string(j);
      r.add({"hopf.antipode.right." + pos,
             "the antipode convolution sum A(i,l) S(A(l,j)) at (" + pos +
                 ") equals the determinant times the identity pattern, then the "
                 "pattern after the determinant normalization",
             kHopfAxiomsRef,
             {"hopf"},
             [i, j](CheckContext& cx) {
               const Catalog& cat = catalog();
               const HopfData& H = hopf();
               Poly s = Poly::zero(cat.sl2h);
               for (int l = 0; l < 4; ++l)
                 s += cat.A.at(i - 1, l) * apply_hom(H.antipode, cat.A.at(l, j - 1));
               const Poly want =
                   i == j ? cat.det : Poly::zero(cat.sl2h);
               cx.zero(s - want, "free convolution value");
               const Poly want_red =
                   i == j ? Poly::one(cat.sl2h) : Poly::zero(cat.sl2h);
               cx.zero(cat.det_rule.reduce(s) - want_red, "normalized value");
             }});
      r.add({"hopf.antipode.left." + pos,
             "the antipode convolution sum S(A(i,l)) A(l,j) at (" + pos +
                 ") equals the determinant times the identity pattern, then the "
                 "pattern after the determinant normalization",
             kHopfAxiomsRef,
             {"hopf"},
             [i, j](CheckContext& cx) {
               const Catalog& cat = catalog();
               const HopfData& H = hopf();
               Poly s = Poly::zero(cat.sl2h);
               for (int l = 0; l < 4; ++l)
                 s += apply_hom(H.antipode, cat.A.at(i - 1, l)) * cat.A.at(l, j - 1);
               const Poly want =
                   i == j ? cat.det : Poly::zero(cat.sl2h);
               cx.zero(s - want, "free convolution value");
               const Poly want_red =
                   i == j ? Poly::one(cat.sl2h) : Poly::zero(cat.sl2h);
               cx.zero(cat.det_rule.reduce(s) - want_red, "normalized value");
             }});
      r.add({"hopf.complement.commute." + pos,
             "the matrix entry at (" + pos + ") commutes with its algebraic complement",
             kComplementRef,
             {"hopf"},
             [i, j](CheckContext& cx) {
               const Catalog& cat = catalog();
               const HopfData& H = hopf();
               const Poly& e = cat.A.at(i - 1, j - 1);
               const Poly& comp = H.complement.at(i - 1, j - 1);
               cx.metric("complement_terms",
                         static_cast<long long>(comp.term_count()));
               cx.is_true(comp.term_count() == 6, "complement size",
                          "complement is not a 6-term polynomial");
               cx.zero(e * comp - comp * e, "commutator");
             }});
    }

  r.add({"hopf.det.grouplike",
         "the determinant is grouplike: its coproduct is det (x) det",
         kHopfAxiomsRef,
         {"hopf", "determinant"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           const Tensor lhs = apply_hom(hopf().Delta, cat.det);
           cx.count("coproduct_terms", lhs);
           cx.zero(lhs - otimes(cat.det, cat.det), "coproduct of the determinant");
         }});

  r.add({"hopf.counit.det",
         "the counit sends the determinant to 1",
         kHopfAxiomsRef,
         {"hopf", "determinant"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           cx.zero(apply_hom(hopf().counit, cat.det) - Poly::one(cat.sl2h),
                   "counit of the determinant");
         }});

  r.add({"hopf.antipode.star_consistency",
         "with the antipode extended to starred letters by S(x*) := (S(x))* (design "
         "choice), the convolution law also holds for the conjugate matrix: "
         "S((A*)(i,k)) (A*)(k,j) sums to the conjugate determinant times the "
         "identity pattern, then the pattern after normalization",
         kAntipodeStarRef,
         {"hopf"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           const HopfData& H = hopf();
           for (int i = 0; i < 4; ++i)
             for (int j = 0; j < 4; ++j) {
               Poly s = Poly::zero(cat.sl2h);
               for (int k = 0; k < 4; ++k)
                 s += apply_hom(H.antipode, cat.A.at(i, k).star()) *
                      cat.A.at(k, j).star();
               const Poly want = i == j ? cat.det.star() : Poly::zero(cat.sl2h);
               cx.zero(s - want, "free conjugate convolution at (" +
                                     std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + ")");
               const Poly want_red =
                   i == j ? Poly::one(cat.sl2h) : Poly::zero(cat.sl2h);
               cx.zero(cat.det_rule.reduce(s) - want_red,
                       "normalized conjugate convolution at (" + std::to_string(i + 1) +
                           "," + std::to_string(j + 1) + ")");
             }
           cx.zero(cat.det.star() - cat.det, "determinant self-adjointness");
         }});

  r.add({"hopf.s_squared",
         "the square of the antipode fixes every generator after the determinant "
         "normalization",
         kHopfAxiomsRef,
         {"hopf"},
         [](CheckContext& cx) {
           const Catalog& cat = catalog();
           const HopfData& H = hopf();
           for (int l = 0; l < cat.sl2h.size(); ++l) {
             const Poly s2 =
                 apply_hom(H.antipode, apply_hom(H.antipode, Poly::letter(cat.sl2h, l)));
             cx.metric("s2_terms_" + cat.sl2h.letters[l].name,
                       static_cast<long long>(s2.term_count()));
             cx.zero(cat.det_rule.reduce(s2 - Poly::letter(cat.sl2h, l)),
                     "S^2 on " + cat.sl2h.letters[l].name);
           }
         },
         /*stretch=*/true});
}

} // namespace

void register_hopf_checks(Registry& r) {
  register_structure(r);
}

} // namespace theta
