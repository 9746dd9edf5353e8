#include "theta/catalog.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace theta {

namespace {

// eta_{ij} = mu^{kEtaExp[i][j]}; the twisting matrix behind every phase table.
constexpr std::array<std::array<int, 4>, 4> kEtaExp = {{
    {{0, 0, -1, 1}},
    {{0, 0, 1, -1}},
    {{1, -1, 0, 0}},
    {{-1, 1, 0, 0}},
}};

constexpr int kUnset = INT_MIN;

void set_derived(std::vector<std::vector<int>>& lam, int x, int y, int v,
                 const char* table) {
  if (lam[x][y] != kUnset && lam[x][y] != v)
    throw std::runtime_error(std::string("conflicting derived phase in the ") +
                             table + " table");
  lam[x][y] = v;
}

void require_filled(const std::vector<std::vector<int>>& lam, const char* table) {
  const int n = static_cast<int>(lam.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (lam[i][j] == kUnset)
        throw std::runtime_error(std::string("underived phase entry in the ") +
                                 table + " table");
      if (lam[i][j] != -lam[j][i])
        throw std::runtime_error(std::string("derived phase table for ") + table +
                                 " is not antisymmetric");
    }
}

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

EpsilonTensor make_epsilon() {
  EpsilonTensor eps;
  for (const auto& p : permutations4()) eps.exp[p] = 0;
  // mu on 1324 and its cyclic shifts, mubar on 1423 and its cyclic shifts
  for (std::array<int, 4> w : {std::array<int, 4>{1, 3, 2, 4}}) {
    for (int s = 0; s < 4; ++s) {
      eps.exp[w] = 1;
      std::rotate(w.begin(), w.begin() + 1, w.end());
    }
  }
  for (std::array<int, 4> w : {std::array<int, 4>{1, 4, 2, 3}}) {
    for (int s = 0; s < 4; ++s) {
      eps.exp[w] = -1;
      std::rotate(w.begin(), w.begin() + 1, w.end());
    }
  }
  return eps;
}

// Solve for the z torus degrees from the degrees of the even-sphere
// generators: alpha = 2(z1 z3' + z2 z4') has degree (1,0), beta =
// 2(-z1 z4 + z2 z3) has degree (0,1), and the commutation phase of every z
// pair must be reproduced by the symplectic pairing of the degrees.  Entries
// are stored doubled, so half-integer degrees stay exact.
std::array<DegreeVector, 4> solve_z_degrees(const std::vector<std::vector<int>>& lam) {
  std::vector<std::array<DegreeVector, 4>> found;
  for (long p = -4; p <= 4; ++p) {
    for (long q = -4; q <= 4; ++q) {
      const std::array<std::array<long, 2>, 4> d = {{
          {{p, q}},          // z1
          {{2 - p, 2 - q}},  // z2 = deg(beta) + deg(alpha) - z1 arithmetic
          {{p - 2, q}},      // z3 = z1 - deg(alpha)
          {{-p, 2 - q}},     // z4 = deg(beta) - z1
      }};
      bool ok = true;
      for (int j = 0; j < 4 && ok; ++j) {
        for (int k = 0; k < 4 && ok; ++k) {
          const long wedge = d[j][0] * d[k][1] - d[j][1] * d[k][0];
          if (wedge % 2 != 0 || wedge / 2 != lam[2 * j][2 * k]) ok = false;
        }
      }
      if (ok)
        found.push_back({degree2(d[0][0], d[0][1]), degree2(d[1][0], d[1][1]),
                         degree2(d[2][0], d[2][1]), degree2(d[3][0], d[3][1])});
    }
  }
  if (found.empty())
    throw std::runtime_error("no torus degree assignment reproduces the z phase table");
  if (found.size() > 1)
    throw std::runtime_error("ambiguous torus degree assignment for the z letters");
  return found.front();
}

struct PosLetter {
  int letter;
  int sign;
};

void init_catalog(Catalog& cat) {
  // ---- C(4)_theta: letters and the eta-derived phase table -----------------
  {
    Presentation P;
    P.name = "c4";
    const char* names[8] = {"z1", "z1'", "z2", "z2'", "z3", "z3'", "z4", "z4'"};
    for (int i = 0; i < 8; ++i) {
      Letter L;
      L.name = names[i];
      L.star = (i % 2 == 0) ? i + 1 : i - 1;
      P.letters.push_back(L);
    }
    // u places each letter exactly once; the exchange relation
    // u_{ia} u_{jb} = eta_{ji} u_{jb} u_{ia} then pins every phase.
    const PosLetter upos[4][2] = {
        {{0, 1}, {2, 1}},    // z1   z2
        {{3, -1}, {1, 1}},   // -z2' z1'
        {{4, 1}, {6, 1}},    // z3   z4
        {{7, -1}, {5, 1}},   // -z4' z3'
    };
    P.lam.assign(8, std::vector<int>(8, kUnset));
    for (int i = 0; i < 4; ++i)
      for (int a = 0; a < 2; ++a)
        for (int j = 0; j < 4; ++j)
          for (int b = 0; b < 2; ++b)
            set_derived(P.lam, upos[i][a].letter, upos[j][b].letter,
                        kEtaExp[j][i], "c4");
    require_filled(P.lam, "c4");

    const auto zdeg = solve_z_degrees(P.lam);
    for (int j = 0; j < 4; ++j) {
      P.letters[2 * j].degree = zdeg[j];
      P.letters[2 * j + 1].degree = -zdeg[j];
    }
    P.validate();
    cat.c4 = P;

    // classical limit: same letters, every phase trivial
    Presentation C = P;
    C.name = "c4-classical";
    C.lam.assign(8, std::vector<int>(8, 0));
    C.validate();
    cat.c4_cl = C;
  }

  // ---- form calculus: z letters plus odd dz letters with the same table ----
  {
    Presentation P;
    P.name = "forms";
    P.letters = cat.c4.letters;
    for (int i = 0; i < 8; ++i) {
      Letter L;
      L.name = "d" + cat.c4.letters[i].name;
      L.parity = 1;
      L.star = 8 + ((i % 2 == 0) ? i + 1 : i - 1);
      L.degree = cat.c4.letters[i].degree;
      P.letters.push_back(L);
    }
    P.lam.assign(16, std::vector<int>(16, 0));
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j) P.lam[i][j] = cat.c4.lam[i % 8][j % 8];
    P.validate();
    cat.forms = P;
  }

  // ---- even sphere: degrees first, phases from the symplectic pairing ------
  {
    Presentation P;
    P.name = "s4";
    const struct {
      const char* name;
      long d0, d1;
      int star;
    } rows[5] = {{"x", 0, 0, 0},
                 {"alpha", 2, 0, 2},
                 {"alpha'", -2, 0, 1},
                 {"beta", 0, 2, 4},
                 {"beta'", 0, -2, 3}};
    for (const auto& r : rows) {
      Letter L;
      L.name = r.name;
      L.star = r.star;
      L.degree = degree2(r.d0, r.d1);
      P.letters.push_back(L);
    }
    P.lam.assign(5, std::vector<int>(5, 0));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        P.lam[i][j] = doubled_pairing(*P.letters[i].degree, *P.letters[j].degree);
    P.validate();
    cat.s4 = P;
  }

  // ---- SL(2,H)_theta: the A-matrix embedding derives all 120 phases --------
  {
    Presentation P;
    P.name = "sl2h";
    const char* names[16] = {"a1", "a1'", "a2", "a2'", "b1", "b1'", "b2", "b2'",
                             "c1", "c1'", "c2", "c2'", "d1", "d1'", "d2", "d2'"};
    for (int i = 0; i < 16; ++i) {
      Letter L;
      L.name = names[i];
      L.star = (i % 2 == 0) ? i + 1 : i - 1;
      P.letters.push_back(L);
    }
    const PosLetter apos[4][4] = {
        {{0, 1}, {2, 1}, {4, 1}, {6, 1}},      //  a1   a2   b1   b2
        {{3, -1}, {1, 1}, {7, -1}, {5, 1}},    // -a2'  a1' -b2'  b1'
        {{8, 1}, {10, 1}, {12, 1}, {14, 1}},   //  c1   c2   d1   d2
        {{11, -1}, {9, 1}, {15, -1}, {13, 1}}  // -c2'  c1' -d2'  d1'
    };
    // A_{ij} A_{kl} = eta_{ki} eta_{jl} A_{kl} A_{ij}; signs cancel pairwise.
    P.lam.assign(16, std::vector<int>(16, kUnset));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l)
            set_derived(P.lam, apos[i][j].letter, apos[k][l].letter,
                        kEtaExp[k][i] + kEtaExp[j][l], "sl2h");
    require_filled(P.lam, "sl2h");

    // torus degrees: row weights (1,0), (-1,0), (0,1), (0,-1), column negated
    const std::array<std::array<long, 2>, 4> W = {{{{2, 0}}, {{-2, 0}}, {{0, 2}}, {{0, -2}}}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const int l = apos[i][j].letter;
        P.letters[l].degree = degree4(W[i][0], W[i][1], -W[j][0], -W[j][1]);
        cat.A_pos[i][j] = SignedLetter{l, apos[i][j].sign};
        cat.letter_pos[l] = {i, j};
      }
    P.validate();
    cat.sl2h = P;

    Presentation C = P;
    C.name = "sl2h-classical";
    C.lam.assign(16, std::vector<int>(16, 0));
    C.validate();
    cat.sl2h_cl = C;
  }

  cat.eta_exp = kEtaExp;
  cat.eps = make_epsilon();

  // ---- matrices -------------------------------------------------------------
  auto signed_letter = [](const Presentation& P, int idx, int sign) {
    Poly p = Poly::letter(P, idx);
    return sign < 0 ? -p : p;
  };
  {
    const PosLetter upos[4][2] = {
        {{0, 1}, {2, 1}}, {{3, -1}, {1, 1}}, {{4, 1}, {6, 1}}, {{7, -1}, {5, 1}}};
    cat.u = AlgMatrix<Poly>(4, 2, Poly::zero(cat.c4));
    cat.u_forms = AlgMatrix<Poly>(4, 2, Poly::zero(cat.forms));
    for (int i = 0; i < 4; ++i)
      for (int a = 0; a < 2; ++a) {
        cat.u.at(i, a) = signed_letter(cat.c4, upos[i][a].letter, upos[i][a].sign);
        cat.u_forms.at(i, a) =
            signed_letter(cat.forms, upos[i][a].letter, upos[i][a].sign);
      }
  }
  cat.A = AlgMatrix<Poly>(4, 4, Poly::zero(cat.sl2h));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      cat.A.at(i, j) =
          signed_letter(cat.sl2h, cat.A_pos[i][j].letter, cat.A_pos[i][j].sign);

  // conjugation exchanges the two rows of each quaternionic block:
  // (A_{jk})* = (-1)^{j+k} A_{j'k'} with 1<->2 and 3<->4 on both indices
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      const int tj = j ^ 1, tk = k ^ 1;
      Poly rhs = cat.A.at(tj, tk);
      if ((j + k) % 2 != 0) rhs = -rhs;
      if (cat.A.at(j, k).star() != rhs)
        throw std::runtime_error("A-matrix star structure is inconsistent");
    }

  // ---- sphere generators and rewrite systems --------------------------------
  {
    auto z = [&](int j, bool s) { return cat.z(j, s); };
    cat.r_c4 = z(1, false) * z(1, true) + z(2, false) * z(2, true) +
               z(3, false) * z(3, true) + z(4, false) * z(4, true);
    cat.x_c4 = z(1, false) * z(1, true) + z(2, false) * z(2, true) -
               z(3, false) * z(3, true) - z(4, false) * z(4, true);
    cat.alpha_c4 = Rational(2) * (z(1, false) * z(3, true) + z(2, false) * z(4, true));
    cat.beta_c4 = Rational(2) * (z(2, false) * z(3, false) - z(1, false) * z(4, false));
    cat.sphere = RewriteSystem(cat.c4, {{"sphere", cat.r_c4 - Poly::one(cat.c4)}});
  }
  {
    cat.d_map.assign(16, -1);
    for (int i = 0; i < 8; ++i) cat.d_map[i] = 8 + i;
    Poly rf = Poly::zero(cat.forms);
    for (int j = 1; j <= 4; ++j) rf += cat.zf(j, false) * cat.zf(j, true);
    const Poly sp = rf - Poly::one(cat.forms);
    cat.sphere_forms = RewriteSystem(cat.forms, {{"sphere", sp}});
    cat.diff_ideal = RewriteSystem(
        cat.forms, {{"sphere", sp}, {"dsphere", differential(sp, cat.d_map)}});
  }
  {
    const Poly al = Poly::letter(cat.s4, "alpha"), als = Poly::letter(cat.s4, "alpha'");
    const Poly be = Poly::letter(cat.s4, "beta"), bes = Poly::letter(cat.s4, "beta'");
    const Poly xx = Poly::letter(cat.s4, "x");
    cat.s4_sphere = RewriteSystem(
        cat.s4, {{"sphere", als * al + bes * be + xx * xx - Poly::one(cat.s4)}});
  }

  // ---- quantum determinant ---------------------------------------------------
  {
    Poly det = Poly::zero(cat.sl2h);
    for (const auto& s : permutations4()) {
      Poly term = Poly::one(cat.sl2h);
      for (int i = 0; i < 4; ++i) term *= cat.A.at(i, s[i] - 1);
      det += Rational(permutation_sign(s)) * (cat.eps.value(s[0], s[1], s[2], s[3]) * term);
    }
    cat.det = det;
    cat.det_rule = RewriteSystem(cat.sl2h, {{"det", det - Poly::one(cat.sl2h)}});
  }

  // ---- projection and the quaternionic rotation -----------------------------
  cat.p_free = mat_mul(cat.u, mat_adjoint(cat.u, Poly::zero(cat.c4)), Poly::zero(cat.c4));
  cat.p_red = cat.p_free;
  for (Poly& e : cat.p_red.a) e = cat.sphere.reduce(e);

  {
    PolyHom j;
    j.src = &cat.c4;
    j.unit = Poly::one(cat.c4);
    j.antilinear = true;
    // On the twisted algebra the quaternionic structure reverses products:
    // the multiplicative reading of j would contradict z1 z3 = mu z3 z1.
    j.antimultiplicative = true;
    j.name = "j";
    j.images.assign(8, Poly::zero(cat.c4));
    // z1 -> z2, z2 -> -z1, z3 -> z4, z4 -> -z3, compatibly with conjugation
    const int img[4] = {2, -1, 4, -3};
    for (int k = 0; k < 4; ++k) {
      const int t = img[k] > 0 ? img[k] : -img[k];
      const int sg = img[k] > 0 ? 1 : -1;
      j.images[2 * k] = signed_letter(cat.c4, 2 * (t - 1), sg);
      j.images[2 * k + 1] = signed_letter(cat.c4, 2 * (t - 1) + 1, sg);
    }
    if (!validate_hom(j).empty())
      throw std::runtime_error("the quaternionic rotation j violates the z relations");
    cat.j = j;
  }
}

} // namespace

const Catalog& catalog() {
  static const Catalog* inst = [] {
    auto* c = new Catalog;
    init_catalog(*c);
    return c;
  }();
  return *inst;
}

Poly Catalog::classical(const Poly& f, const Presentation& target) const {
  Poly r(target);
  for (const auto& [m, c] : f.terms()) r.add_term(m, PhaseCoefficient(c.eval_at_one()));
  return r;
}

const Presentation& build_c4_theta() { return catalog().c4; }
const Presentation& build_forms_c4() { return catalog().forms; }
const Presentation& build_sl2h() { return catalog().sl2h; }
const RewriteSystem& build_s7_theta() { return catalog().sphere; }
S4Generators build_s4_generators() {
  const Catalog& c = catalog();
  return S4Generators{c.x_c4, c.alpha_c4, c.beta_c4, c.r_c4};
}
const AlgMatrix<Poly>& build_u() { return catalog().u; }
const AlgMatrix<Poly>& build_p() { return catalog().p_red; }
const PolyHom& j_map() { return catalog().j; }

std::vector<RelationRow> relation_table(const Presentation& P) {
  std::vector<RelationRow> out;
  for (int x = 0; x < P.size(); ++x)
    for (int y = x + 1; y < P.size(); ++y) {
      PhaseCoefficient c = PhaseCoefficient::mu(P.lam[x][y]);
      if (P.letters[x].parity == 1 && P.letters[y].parity == 1) c = -c;
      out.push_back(RelationRow{x, y, c});
    }
  return out;
}

} // namespace theta
