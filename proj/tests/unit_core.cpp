// Core layers: exact phase coefficients, torus multidegrees, monomial order,
// and the normal-ordering kernel checked against its naive oracle.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "theta/catalog.hpp"
#include "theta/degree.hpp"
#include "theta/phase.hpp"
#include "theta/presentation.hpp"

using namespace theta;

TEST_CASE("phase coefficients form an exact commutative ring with conjugation") {
  const PhaseCoefficient mu = PhaseCoefficient::mu(1);
  const PhaseCoefficient mubar = PhaseCoefficient::mu(-1);
  CHECK(mu * mubar == PhaseCoefficient::one());
  CHECK(mu + mubar == mubar + mu);
  CHECK((mu + PhaseCoefficient::one()) * (mu - PhaseCoefficient::one()) ==
        PhaseCoefficient::mu(2) - PhaseCoefficient::one());
  CHECK(mu.conj() == mubar);
  CHECK((mu + mubar).conj() == mu + mubar);
  CHECK(PhaseCoefficient::zero().is_zero());
  CHECK(mu - mu == PhaseCoefficient::zero());

  // rational scalars embed and divide exactly, negative values included
  const PhaseCoefficient half(1, 2);
  const PhaseCoefficient mhalf(-1, 2);
  CHECK(half + mhalf == PhaseCoefficient::zero());
  CHECK(half * PhaseCoefficient(Rational(2)) == PhaseCoefficient::one());
  CHECK(PhaseCoefficient(-3, 6) == mhalf);

  // classical limit collapses every exponent to 1
  CHECK((PhaseCoefficient::mu(5) - PhaseCoefficient::mu(-5)).eval_at_one() ==
        Rational(0));
  CHECK((half * PhaseCoefficient::mu(7)).eval_at_one() == Rational(1) / 2);
}

TEST_CASE("phase inverse works for monomial phases, negative included") {
  for (int k = -4; k <= 4; ++k) {
    const PhaseCoefficient p = PhaseCoefficient::mu(k, Rational(-3) / 7);
    CHECK(p * p.inverse() == PhaseCoefficient::one());
  }
}

TEST_CASE("torus multidegrees pair symplectically and reject the double cover") {
  const DegreeVector a = degree2(1, 0);   // degree (1/2, 0)
  const DegreeVector b = degree2(0, 2);   // degree (0, 1)
  CHECK(doubled_pairing(a, b) == 1);      // <a,b> = 1/2, doubled = 1
  CHECK(doubled_pairing(b, a) == -1);
  CHECK(commutation_phase_from_degrees(a, b) == PhaseCoefficient::mu(1));
  // the star-product phase mu^{<a,b>} would need a half-integer exponent
  CHECK_THROWS_AS(star_product_phase(a, b), std::domain_error);
  CHECK(star_product_phase(a + a, b) == PhaseCoefficient::mu(1));
  // two half-integral degrees pair to a quarter-integer: rejected outright
  CHECK_THROWS_AS(doubled_pairing(degree2(1, 0), degree2(0, 1)),
                  std::domain_error);
  CHECK_THROWS_AS(doubled_pairing(a, degree4(0, 1, 0, 0)),
                  std::invalid_argument);
  const DegreeVector f = degree4(1, 0, 1, 0);
  const DegreeVector g = degree4(0, 2, 0, -2);
  CHECK(doubled_pairing(f, g) == 1);  // ((1*2) - (1*(-2))) / 4 doubled
}

TEST_CASE("monomial order is a well-order compatible with the grading") {
  const Catalog& cat = catalog();
  Monomial u = Monomial::unit(cat.c4.size());
  Monomial z1(cat.c4.size());
  z1.e[0] = 1;
  z1.total = 1;
  Monomial z1z2(cat.c4.size());
  z1z2.e[0] = 1;
  z1z2.e[2] = 1;
  z1z2.total = 2;
  CHECK(u < z1);
  CHECK(z1 < z1z2);
  CHECK(!(z1z2 < z1));
  CHECK(u.is_unit());
  CHECK(!z1.is_unit());
}

static Word random_word(std::mt19937& rng, int nletters, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<int> pick(0, nletters - 1);
  Word w(len(rng));
  for (int& l : w) l = pick(rng);
  return w;
}

TEST_CASE("fast normal ordering agrees with the naive oracle on random words") {
  const Catalog& cat = catalog();
  const Presentation* algebras[] = {&cat.c4, &cat.forms, &cat.s4, &cat.sl2h};
  std::mt19937 rng(20260819);
  for (const Presentation* P : algebras) {
    for (int trial = 0; trial < 250; ++trial) {
      const Word w = random_word(rng, P->size(), 8);
      const OrderedTerm fast = normal_order(*P, w);
      const OrderedTerm naive = normal_order_naive(*P, w);
      REQUIRE(fast.coeff == naive.coeff);
      if (!fast.coeff.is_zero()) REQUIRE(fast.mon == naive.mon);
    }
  }
}

TEST_CASE("monomial star is an involution and reverses products") {
  const Catalog& cat = catalog();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = random_word(rng, cat.sl2h.size(), 6);
    const OrderedTerm t = normal_order(cat.sl2h, w);
    if (t.coeff.is_zero()) continue;
    const OrderedTerm s = star_monomial(cat.sl2h, t.mon);
    const OrderedTerm ss = star_monomial(cat.sl2h, s.mon);
    CHECK(ss.mon == t.mon);
    CHECK(s.coeff * ss.coeff == PhaseCoefficient::one());
  }
}

TEST_CASE("monomial products associate") {
  const Catalog& cat = catalog();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const Monomial a = normal_order(cat.c4, random_word(rng, 8, 4)).mon;
    const Monomial b = normal_order(cat.c4, random_word(rng, 8, 4)).mon;
    const Monomial c = normal_order(cat.c4, random_word(rng, 8, 4)).mon;
    const OrderedTerm ab = mul_monomials(cat.c4, a, b);
    const OrderedTerm bc = mul_monomials(cat.c4, b, c);
    const OrderedTerm l = mul_monomials(cat.c4, ab.mon, c);
    const OrderedTerm r = mul_monomials(cat.c4, a, bc.mon);
    CHECK(l.mon == r.mon);
    CHECK(ab.coeff * l.coeff == bc.coeff * r.coeff);
  }
}

TEST_CASE("presentation validation rejects tampered tables") {
  const Catalog& cat = catalog();
  CHECK_NOTHROW(cat.c4.validate());
  CHECK_NOTHROW(cat.forms.validate());
  CHECK_NOTHROW(cat.s4.validate());
  CHECK_NOTHROW(cat.sl2h.validate());

  Presentation broken = cat.c4;
  broken.lam[0][1] += 1;  // destroys antisymmetry
  CHECK_THROWS_AS(broken.validate(), std::logic_error);

  Presentation diag = cat.c4;
  diag.lam[2][2] = 1;
  CHECK_THROWS_AS(diag.validate(), std::logic_error);

  Presentation badstar = cat.c4;
  badstar.letters[0].star = 0;  // z1 declared self-conjugate
  CHECK_THROWS_AS(badstar.validate(), std::logic_error);
}
