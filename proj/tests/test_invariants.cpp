#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "qdc/error.hpp"
#include "qdc/invariants.hpp"

using namespace qdc;

namespace {

GroundData ground(const char* name) { return make_ground(LieType::parse(name)); }

Monomial Y(int i, int p, long long k = 1) {
  Monomial m;
  m.add(i, p, k);
  return m;
}

} // namespace

TEST_CASE("monomial parsing and printing") {
  GroundData g = ground("B3");
  Monomial m = parse_monomial(g, "Y[1,0]*Y[3,3]^-1");
  CHECK(m.str() == "Y[1,0]*Y[3,3]^-1");
  CHECK(parse_monomial(g, "1").exps.empty());
  CHECK(parse_monomial(g, "Y[2,4]^3").exps.at({2, 4}) == 3);
  CHECK_THROWS_AS(parse_monomial(g, "Y[2,3]"), DomainError);  // parity
  CHECK_THROWS_AS(parse_monomial(g, "Y[9,0]"), DomainError);  // no such row
  CHECK_THROWS_AS(parse_monomial(g, "Z[1,0]"), DomainError);
  CHECK_THROWS_AS(parse_monomial(g, "Y[1 0]"), DomainError);
}

TEST_CASE("A-monomial golden values") {
  GroundData a1 = ground("A1");
  CHECK(a_monomial(a1, 1, 1) == Y(1, 0).times(Y(1, 2)));

  GroundData b3 = ground("B3");
  CHECK(a_monomial(b3, 3, 2) ==
        Y(3, 1).times(Y(3, 3)).times(Y(2, 2, -1)));
  CHECK(a_monomial(b3, 2, 2) == Y(2, 0)
                                    .times(Y(2, 4))
                                    .times(Y(1, 2, -1))
                                    .times(Y(3, 1, -1))
                                    .times(Y(3, 3, -1)));

  GroundData g2 = ground("G2");
  CHECK(a_monomial(g2, 1, 3) == Y(1, 0)
                                    .times(Y(1, 6))
                                    .times(Y(2, 1, -1))
                                    .times(Y(2, 3, -1))
                                    .times(Y(2, 5, -1)));
  CHECK(a_monomial(g2, 2, 2) == Y(2, 1).times(Y(2, 3)).times(Y(1, 2, -1)));

  CHECK_THROWS_AS(a_monomial(b3, 3, 1), DomainError);
  CHECK_THROWS_AS(a_monomial(g2, 1, 2), DomainError);
}

TEST_CASE("Q-weights of fundamental variables and A-monomials") {
  for (const char* name : {"A3", "B3", "C3", "F4", "G2"}) {
    GroundData g = ground(name);
    CoxeterPack pack = build_coxeter(validate(g, g.canonical_xi));
    INFO(name);
    // wt_Q(Y_{orbit(v), xi_v}) = gamma_v
    for (int v = 1; v <= g.m; ++v)
      CHECK(wt_Q(pack, Y(g.orbit_of[v], pack.q.xi[v])) ==
            pack.gamma_alpha[v]);
    // wt_Q(A_{i,p}) = 0 across a full period window
    RootVector zero{std::vector<long long>(g.m + 1, 0)};
    for (int i = 1; i <= g.n; ++i)
      for (int p = -2 * g.rh(); p <= 2 * g.rh(); ++p) {
        bool ok = true;
        try {
          Monomial a = a_monomial(g, i, p);
          CHECK(wt_Q(pack, a) == zero);
        } catch (const DomainError&) {
          ok = false; // wrong parity slot, nothing to check
        }
        (void)ok;
      }
    // additivity
    Monomial y1 = Y(g.orbit_of[1], pack.q.xi[1]);
    Monomial y2 = Y(g.orbit_of[g.m], pack.q.xi[g.m]);
    RootVector s = wt_Q(pack, y1.times(y2));
    RootVector t = add(wt_Q(pack, y1), wt_Q(pack, y2));
    CHECK(s == t);
  }
}

TEST_CASE("scrN golden value and skew-symmetry") {
  GroundData g2 = ground("G2");
  CoeffTable t = invert_series(g2);
  CHECK(scrN(t, 1, 6, 1, 0) == 0); // p - s = 6
  for (const char* name : {"A2", "B3", "G2"}) {
    GroundData g = ground(name);
    CoeffTable tt = invert_series(g);
    for (int i = 1; i <= g.n; ++i)
      for (int j = 1; j <= g.n; ++j)
        for (long long u = -10; u <= 10; ++u) {
          CHECK(scrN(tt, i, u, j, 0) == -scrN(tt, j, 0, i, u));
          if (i == j) CHECK(scrN(tt, i, u, i, u) == 0);
        }
  }
}

TEST_CASE("scrN_mono is bilinear in the exponents") {
  GroundData g = ground("B3");
  CoeffTable t = invert_series(g);
  Monomial a = Y(1, 0).times(Y(3, 3, -2));
  Monomial b = Y(2, 4);
  Monomial c = Y(3, 1, 3);
  CHECK(scrN_mono(t, a.times(b), c) ==
        scrN_mono(t, a, c) + scrN_mono(t, b, c));
  CHECK(scrN_mono(t, a, b) == -scrN_mono(t, b, a));
  CHECK(scrN_mono(t, Y(1, 0), Y(3, 3)) == scrN(t, 1, 0, 3, 3));
}

TEST_CASE("universal coefficient scalar is the inverse Cartan entry") {
  for (const char* name : {"A3", "B3", "C3", "F4", "G2"}) {
    GroundData g = ground(name);
    CoeffTable t = invert_series(g);
    INFO(name);
    // gather (C^{-1})_ij and check C * C^{-1} = 1 exactly over Q
    std::vector<std::vector<std::pair<long long, long long>>> inv(
        g.n + 1, std::vector<std::pair<long long, long long>>(g.n + 1));
    for (int i = 1; i <= g.n; ++i)
      for (int j = 1; j <= g.n; ++j)
        inv[i][j] = univ_coeff_blocks(t, i, j).second;
    for (int i = 1; i <= g.n; ++i)
      for (int j = 1; j <= g.n; ++j) {
        long long num = 0, den = 1;
        for (int k = 1; k <= g.n; ++k) {
          auto [kn, kd] = inv[k][j];
          num = num * kd + den * g.cartan_g[i][k] * kn;
          den *= kd;
          long long gg = std::gcd(num < 0 ? -num : num, den);
          if (gg > 1) { num /= gg; den /= gg; }
        }
        CHECK(num == (i == j ? den : 0));
      }
  }
}

TEST_CASE("degree pair of the shifted block product") {
  for (const char* name : {"A2", "B3", "C3", "G2"}) {
    GroundData g = ground(name);
    CoeffTable t = invert_series(g);
    CoxeterPack pack = build_coxeter(validate(g, g.canonical_xi));
    INFO(name);
    for (int i = 1; i <= g.n; ++i)
      for (int j = 1; j <= g.n; ++j) {
        BlockProduct bp = univ_coeff_blocks(t, i, j).first;
        for (long long p : {0, 2, 4})
          for (long long s = -6; s <= 6; ++s) {
            Monomial yp, ys;
            try {
              yp = parse_monomial(
                  g, "Y[" + std::to_string(i) + "," + std::to_string(p) + "]");
              ys = parse_monomial(
                  g, "Y[" + std::to_string(j) + "," + std::to_string(s) + "]");
            } catch (const DomainError&) {
              continue;
            }
            auto [deg, deg_inf] = deg_and_deg_inf(g, bp, s - p);
            CHECK(deg == -scrN(t, i, p, j, s));
            CHECK(deg_inf == -lambda_inf(pack, i, p, j, s));
          }
      }
  }
}

TEST_CASE("Lambda and Lambda-infinity") {
  GroundData b3 = ground("B3");
  CoeffTable t = invert_series(b3);
  CoxeterPack pack = build_coxeter(validate(b3, b3.canonical_xi));
  // d_{1,3} = (z - qs^7): a double zero contribution at s - p = 7
  CHECK(lambda(pack, t, 1, 0, 3, 7) == 2 + scrN(t, 1, 0, 3, 7));
  CHECK(lambda(pack, t, 1, 0, 3, 5) == scrN(t, 1, 0, 3, 5));
  // diagonal of Lambda-infinity is -(gamma, gamma) = -2
  for (const char* name : {"A3", "C3", "G2"}) {
    GroundData g = ground(name);
    CoxeterPack pk = build_coxeter(validate(g, g.canonical_xi));
    for (int v = 1; v <= g.m; ++v) {
      int i = g.orbit_of[v], p = pk.q.xi[v];
      CHECK(lambda_inf(pk, i, p, i, p) == -2);
    }
  }
}

TEST_CASE("dual coordinates") {
  GroundData b3 = ground("B3");
  CHECK(dual_coord(b3, 1, 0) == std::pair<int, long long>{1, 10});
  GroundData a3 = ground("A3");
  CHECK(dual_coord(a3, 1, 0) == std::pair<int, long long>{3, 4});
  GroundData f4 = ground("F4");
  CHECK(dual_coord(f4, 2, 0) == std::pair<int, long long>{2, 18});
}
