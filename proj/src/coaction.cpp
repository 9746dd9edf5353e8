#include "theta/coaction.hpp"

#include <array>
#include <climits>
#include <sstream>
#include <stdexcept>

#include "theta/expr.hpp"

namespace theta {

namespace {

struct UPosition {
  int row, col, sign;
};

// where each z letter sits inside u, with its sign
const std::array<UPosition, 8>& u_positions() {
  static const std::array<UPosition, 8> pos = {{
      {0, 0, 1},   // z1
      {1, 1, 1},   // z1'
      {0, 1, 1},   // z2
      {1, 0, -1},  // z2'
      {2, 0, 1},   // z3
      {3, 1, 1},   // z3'
      {2, 1, 1},   // z4
      {3, 0, -1},  // z4'
  }};
  return pos;
}

Poly second_leg_product(const Catalog& cat, int j, bool s1, int k, bool s2) {
  return cat.z(j, s1) * cat.z(k, s2);
}

AlgMatrix<Poly> extract_C_impl(const CoactionData& co, const Catalog& cat) {
  AlgMatrix<Poly> C(6, 6, Poly::zero(cat.sl2h));
  const PhaseCoefficient half(1, 2);
  for (int I = 0; I < 6; ++I) {
    const Tensor t = apply_hom(co.delta_c4, co.X[I]);
    auto collect = leg_collect(t, 1);
    auto q = [&](const Poly& mono_poly) {
      auto it = collect.find(mono_poly.leading().first);
      return it == collect.end() ? Poly(cat.sl2h) : it->second;
    };
    // diagonal monomials z_j z_j'
    std::array<Poly, 4> qm;
    for (int j = 1; j <= 4; ++j) qm[j - 1] = q(second_leg_product(cat, j, false, j, true));
    const Poly q13s = q(second_leg_product(cat, 1, false, 3, true));
    const Poly q24s = q(second_leg_product(cat, 2, false, 4, true));
    const Poly q1s3 = q(second_leg_product(cat, 1, true, 3, false));
    const Poly q2s4 = q(second_leg_product(cat, 2, true, 4, false));
    const Poly q14 = q(second_leg_product(cat, 1, false, 4, false));
    const Poly q23 = q(second_leg_product(cat, 2, false, 3, false));
    const Poly q1s4s = q(second_leg_product(cat, 1, true, 4, true));
    const Poly q2s3s = q(second_leg_product(cat, 2, true, 3, true));

    if (qm[0] != qm[1] || qm[2] != qm[3] || q13s != q24s || q1s3 != q2s4 ||
        q23 != -q14 || q2s3s != -q1s4s)
      throw std::runtime_error("coaction image of the quadric is not X-paired");

    size_t used = 0;
    for (const auto& [m, p] : collect) used += p.term_count();
    size_t expect = 0;
    for (const Poly* p : std::initializer_list<const Poly*>{
             &qm[0], &qm[1], &qm[2], &qm[3], &q13s, &q24s, &q1s3, &q2s4, &q14,
             &q23, &q1s4s, &q2s3s})
      expect += p->term_count();
    if (used != expect)
      throw std::runtime_error(
          "coaction image of the quadric leaves the X-monomial span");

    C.at(I, 0) = half * (qm[0] + qm[2]);
    C.at(I, 1) = half * (qm[0] - qm[2]);
    C.at(I, 2) = half * q13s;
    C.at(I, 3) = (half * PhaseCoefficient::mu(-1)) * q1s3;
    C.at(I, 4) = -(half * q14);
    C.at(I, 5) = -(half * PhaseCoefficient::mu(1)) * q1s4s;

    Tensor back = Tensor::zero({&cat.sl2h, &cat.c4});
    for (int J = 0; J < 6; ++J) back += otimes(C.at(I, J), co.X[J]);
    if (back != t)
      throw std::runtime_error("extracted C row does not reproduce the coaction");
  }
  return C;
}

CoactionData make_coaction() {
  const Catalog& cat = catalog();
  CoactionData co;

  // base coaction through the u embedding
  co.delta_c4.src = &cat.c4;
  co.delta_c4.unit = Tensor::unit({&cat.sl2h, &cat.c4});
  co.delta_c4.name = "delta_L";
  co.delta_c4.images.assign(8, Tensor::zero({&cat.sl2h, &cat.c4}));
  for (int l = 0; l < 8; ++l) {
    const UPosition& p = u_positions()[l];
    Tensor img = Tensor::zero({&cat.sl2h, &cat.c4});
    for (int m = 0; m < 4; ++m) img += otimes(cat.A.at(p.row, m), cat.u.at(m, p.col));
    if (p.sign < 0) img = -img;
    co.delta_c4.images[l] = img;
  }

  // extension to forms: dz letters coact through (id (x) d)
  co.delta_forms.src = &cat.forms;
  co.delta_forms.unit = Tensor::unit({&cat.sl2h, &cat.forms});
  co.delta_forms.name = "delta_L_forms";
  co.delta_forms.images.assign(16, Tensor::zero({&cat.sl2h, &cat.forms}));
  for (int l = 0; l < 8; ++l) {
    const UPosition& p = u_positions()[l];
    Tensor img = Tensor::zero({&cat.sl2h, &cat.forms});
    Tensor dimg = Tensor::zero({&cat.sl2h, &cat.forms});
    for (int m = 0; m < 4; ++m) {
      img += otimes(cat.A.at(p.row, m), cat.u_forms.at(m, p.col));
      dimg += otimes(cat.A.at(p.row, m), differential(cat.u_forms.at(m, p.col), cat.d_map));
    }
    if (p.sign < 0) {
      img = -img;
      dimg = -dimg;
    }
    co.delta_forms.images[l] = img;
    co.delta_forms.images[8 + l] = dimg;
  }

  for (int j = 0; j < 4; ++j) co.w.push_back(co.delta_c4.images[2 * j]);
  const auto ws = [&](int j) { return co.w[j].star(); };

  co.xt = co.w[0] * ws(0) + co.w[1] * ws(1) - co.w[2] * ws(2) - co.w[3] * ws(3);
  co.at = Rational(2) * (co.w[0] * ws(2) + co.w[1] * ws(3));
  co.bt = Rational(2) * (co.w[1] * co.w[2] - co.w[0] * co.w[3]);
  co.rho2 = ws(0) * co.w[0] + ws(1) * co.w[1] + ws(2) * co.w[2] + ws(3) * co.w[3];

  co.X = {cat.r_c4,          cat.x_c4,          cat.alpha_c4,
          cat.alpha_c4.star(), cat.beta_c4,       cat.beta_c4.star()};
  co.capital = {{0, 1}, {2, 3}, {0, 3}, {1, 2}, {0, 2}, {1, 3}};
  for (const auto& [i, j] : co.capital) co.Y.push_back(pi_minor(i, j));

  co.ghat.assign(6, std::vector<Rational>(6, Rational(0)));
  co.ghat[0][0] = -2;
  co.ghat[1][1] = 2;
  co.ghat[2][3] = co.ghat[3][2] = 1;
  co.ghat[4][5] = co.ghat[5][4] = 1;

  co.hhat.assign(6, std::vector<PhaseCoefficient>(6, PhaseCoefficient::zero()));
  co.hhat[0][1] = co.hhat[1][0] = PhaseCoefficient::one();
  co.hhat[2][3] = co.hhat[3][2] = PhaseCoefficient::mu(1);
  co.hhat[4][5] = co.hhat[5][4] = -PhaseCoefficient::mu(-1);

  co.T.assign(6, std::vector<PhaseCoefficient>(6, PhaseCoefficient::zero()));
  co.T[0][0] = co.T[0][1] = PhaseCoefficient::one();
  co.T[1][0] = PhaseCoefficient::one();
  co.T[1][1] = -PhaseCoefficient::one();
  co.T[2][2] = PhaseCoefficient(Rational(2));
  co.T[3][3] = PhaseCoefficient::mu(1, Rational(-2));
  co.T[4][4] = PhaseCoefficient(Rational(-2));
  co.T[5][5] = PhaseCoefficient::mu(-1, Rational(-2));

  co.nu.assign(6, std::vector<PhaseCoefficient>(6, PhaseCoefficient::one()));
  co.nu[2][4] = co.nu[3][5] = co.nu[4][3] = co.nu[5][2] = PhaseCoefficient::mu(2);
  co.nu[2][5] = co.nu[3][4] = co.nu[4][2] = co.nu[5][3] = PhaseCoefficient::mu(-2);

  co.C = extract_C_impl(co, cat);

  // coaction on the even sphere letters through the C matrix; the radius
  // coordinate X_1 is the unit of the sphere algebra
  co.delta_s4.src = &cat.s4;
  co.delta_s4.unit = Tensor::unit({&cat.sl2h, &cat.s4});
  co.delta_s4.name = "delta_L_s4";
  co.delta_s4.images.assign(5, Tensor::zero({&cat.sl2h, &cat.s4}));
  for (int l = 0; l < 5; ++l) {
    const int I = l + 1;
    Tensor img = otimes(co.C.at(I, 0), Poly::one(cat.s4));
    for (int J = 1; J < 6; ++J)
      img += otimes(co.C.at(I, J), Poly::letter(cat.s4, J - 1));
    co.delta_s4.images[l] = img;
  }
  return co;
}

} // namespace

const CoactionData& coaction() {
  static const CoactionData co = make_coaction();
  return co;
}

const TensorHom& delta_L(const std::string& target) {
  const CoactionData& co = coaction();
  if (target == "c4" || target == "s7") return co.delta_c4;
  if (target == "forms") return co.delta_forms;
  if (target == "s4") return co.delta_s4;
  throw std::invalid_argument("unknown coaction target: " + target);
}

Poly pi_minor(int i, int j) {
  const Catalog& cat = catalog();
  return cat.u.at(i, 0) * cat.u.at(j, 1) - cat.u.at(i, 1) * cat.u.at(j, 0);
}

Poly coaction_minor(int i, int j, int l, int s) {
  const Catalog& cat = catalog();
  return cat.A.at(i, l) * cat.A.at(j, s) -
         PhaseCoefficient::mu(cat.eta_exp[l][s]) * (cat.A.at(i, s) * cat.A.at(j, l));
}

AlgMatrix<Poly> extract_C() { return coaction().C; }

// ---------------------------------------------------------------------------
// universality: rederive the matrix-letter phases from the coacted exchange
// relations of the two u columns, treating the matrix letters as free symbols

namespace {

using FKey = std::pair<Word, Monomial>;
using FreeT = std::map<FKey, PhaseCoefficient>;

void free_add(FreeT& t, const FKey& k, const PhaseCoefficient& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

FreeT free_mul(const Presentation& c4, const FreeT& a, const FreeT& b) {
  FreeT r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      const OrderedTerm om = mul_monomials(c4, ka.second, kb.second);
      if (om.coeff.is_zero()) continue;
      Word w = ka.first;
      w.insert(w.end(), kb.first.begin(), kb.first.end());
      free_add(r, {std::move(w), om.mon}, ca * cb * om.coeff);
    }
  return r;
}

FreeT free_scale(FreeT t, const PhaseCoefficient& c) {
  for (auto& [k, v] : t) v *= c;
  return t;
}

// coaction image of u_{ka} with the matrix letters kept free (1-letter words)
FreeT free_image(const Catalog& cat, int k, int a) {
  FreeT r;
  for (int m = 0; m < 4; ++m) {
    const SignedLetter& al = cat.A_pos[k][m];
    const Poly& ue = cat.u.at(m, a);
    const auto [mono, coeff] = ue.leading();
    free_add(r, {Word{al.letter}, mono},
             coeff * PhaseCoefficient(Rational(al.sign)));
  }
  return r;
}

std::string word_str(const Catalog& cat, const Word& w) {
  std::string s;
  for (int l : w) {
    if (!s.empty()) s += "*";
    s += cat.sl2h.letters[l].name;
  }
  return s;
}

} // namespace

DerivedRelationReport derive_bialgebra_relations() {
  const Catalog& cat = catalog();
  DerivedRelationReport rep;
  rep.lam.assign(16, std::vector<int>(16, INT_MIN));
  for (int i = 0; i < 16; ++i) rep.lam[i][i] = 0;

  auto record = [&](int x, int y, int k) {
    if (rep.lam[x][y] != INT_MIN && rep.lam[x][y] != k) {
      std::ostringstream os;
      os << "conflicting phase for " << cat.sl2h.letters[x].name << ","
         << cat.sl2h.letters[y].name << ": mu^" << rep.lam[x][y] << " vs mu^" << k;
      rep.failures.push_back(os.str());
      return;
    }
    rep.lam[x][y] = k;
  };

  // part 1: cross-column exchange relations force binomial buckets
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const FreeT Fi = free_image(cat, i, 0), Fj = free_image(cat, j, 1);
      FreeT T = free_mul(cat.c4, Fi, Fj);
      const FreeT swapped = free_scale(free_mul(cat.c4, Fj, Fi),
                                       PhaseCoefficient::mu(cat.eta_exp[j][i]));
      for (const auto& [k, c] : swapped) free_add(T, k, -c);

      std::map<Monomial, std::vector<std::pair<Word, PhaseCoefficient>>> buckets;
      for (const auto& [k, c] : T) buckets[k.second].push_back({k.first, c});
      for (const auto& [mono, entries] : buckets) {
        if (entries.size() == 2 && entries[0].first.size() == 2 &&
            entries[1].first.size() == 2 &&
            entries[0].first[0] == entries[1].first[1] &&
            entries[0].first[1] == entries[1].first[0] &&
            entries[0].first[0] != entries[0].first[1]) {
          const PhaseCoefficient q = -(entries[1].second * entries[0].second.inverse());
          bool single = q.is_single_term();
          int expo = 0;
          if (single) {
            expo = q.terms().begin()->first;
            single = q.terms().begin()->second == Rational(1);
          }
          if (!single) {
            rep.failures.push_back("bucket for " +
                                   word_str(cat, entries[0].first) +
                                   " does not close with a unit phase");
            continue;
          }
          record(entries[0].first[0], entries[0].first[1], expo);
          record(entries[0].first[1], entries[0].first[0], -expo);
          ++rep.instances;
        } else {
          rep.failures.push_back("malformed coaction bucket over " +
                                 monomial_str(cat.c4, mono));
        }
      }
    }
  }

  bool complete = true;
  for (int x = 0; x < 16 && complete; ++x)
    for (int y = 0; y < 16 && complete; ++y)
      if (rep.lam[x][y] == INT_MIN) complete = false;
  rep.matches_catalog = complete && rep.failures.empty() && rep.lam == cat.sl2h.lam;

  // part 2: same-column relations must already follow from the derived table
  if (complete) {
    Presentation D = cat.sl2h;
    D.name = "derived";
    D.lam = rep.lam;
    for (int a = 0; a < 2; ++a) {
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          if (i == j) continue;
          const FreeT Fi = free_image(cat, i, a), Fj = free_image(cat, j, a);
          FreeT T = free_mul(cat.c4, Fi, Fj);
          const FreeT swapped = free_scale(free_mul(cat.c4, Fj, Fi),
                                           PhaseCoefficient::mu(cat.eta_exp[j][i]));
          for (const auto& [k, c] : swapped) free_add(T, k, -c);

          std::map<std::pair<Monomial, Monomial>, PhaseCoefficient> norm;
          for (const auto& [k, c] : T) {
            const OrderedTerm ot = normal_order(D, k.first);
            if (ot.coeff.is_zero()) continue;
            auto key = std::make_pair(ot.mon, k.second);
            auto [it, fresh] = norm.emplace(key, c * ot.coeff);
            if (!fresh) {
              it->second += c * ot.coeff;
              if (it->second.is_zero()) norm.erase(it);
            }
          }
          if (!norm.empty()) {
            std::ostringstream os;
            os << "column " << a + 1 << " pair (" << i + 1 << "," << j + 1
               << ") leaves " << norm.size() << " underived terms";
            rep.same_column_failures.push_back(os.str());
          }
        }
      }
    }
  }
  rep.same_column_clean = complete && rep.same_column_failures.empty();
  return rep;
}

} // namespace theta
