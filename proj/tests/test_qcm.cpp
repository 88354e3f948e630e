#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qdc/error.hpp"
#include "qdc/qcm.hpp"

using namespace qdc;

namespace {

CoeffTable series_table(const char* name) {
  return invert_series(make_ground(LieType::parse(name)));
}

} // namespace

TEST_CASE("quantum integers") {
  CHECK(quantum_integer(1) == LaurentPoly{{{0, 1}}});
  CHECK(quantum_integer(3) == LaurentPoly{{{-2, 1}, {0, 1}, {2, 1}}});
  CHECK(quantum_integer(0) == LaurentPoly{});
  // [-k] = -[k]
  CHECK(quantum_integer(-2) == LaurentPoly{{{-1, -1}, {1, -1}}});
}

TEST_CASE("quantum Cartan matrix entries") {
  GroundData g = make_ground(LieType::parse("G2"));
  auto C = quantum_cartan(g);
  CHECK(C[1][1] == LaurentPoly{{{-3, 1}, {3, 1}}});
  CHECK(C[2][2] == LaurentPoly{{{-1, 1}, {1, 1}}});
  CHECK(C[1][2] == LaurentPoly{{{0, -1}}});           // [c_12] = [-1]
  CHECK(C[2][1] == LaurentPoly{{{-2, -1}, {0, -1}, {2, -1}}}); // [-3]
}

TEST_CASE("low-order values of the inverse") {
  for (const char* name : {"A3", "B3", "C3", "D4", "F4", "G2"}) {
    CoeffTable t = series_table(name);
    const GroundData& g = t.g;
    INFO(name);
    for (int i = 1; i <= g.n; ++i)
      for (int j = 1; j <= g.n; ++j) {
        // vanishing below d_i and the delta at u = d_i
        for (int u = 1; u < g.d[i]; ++u) CHECK(t.get(i, j, u) == 0);
        CHECK(t.get(i, j, g.d[i]) == (i == j ? 1 : 0));
        CHECK(t.get(i, j, 0) == 0);
        CHECK(t.get(i, j, -5) == 0);
        // periodic extension beyond one double period
        CHECK(t.get(i, j, 3 + 2 * t.period) == t.get(i, j, 3));
      }
  }
}

TEST_CASE("G2 inverse golden values") {
  CoeffTable t = series_table("G2");
  CHECK(t.period == 24);
  for (int u : {3, 5, 7, 9}) {
    CHECK(t.get(1, 1, u) == 1);
    CHECK(t.get(1, 1, u + 12) == -1);
  }
  for (int u : {1, 2, 4, 6, 8, 10, 11, 12}) CHECK(t.get(1, 1, u) == 0);
  // half-period antisymmetry on the diagonal entry
  for (int u = 1; u <= 12; ++u) CHECK(t.get(2, 2, u + 12) == -t.get(2, 2, u));
}

TEST_CASE("closed-form tables agree with the series inverse") {
  for (const char* name : {"B2", "B3", "B4", "C2", "C3", "C4", "F4", "G2"}) {
    GroundData g = make_ground(LieType::parse(name));
    CoeffTable s = invert_series(g);
    CoeffTable c = closed_table(g);
    INFO(name);
    REQUIRE(s.period == c.period);
    for (int i = 1; i <= g.n; ++i)
      for (int j = 1; j <= g.n; ++j)
        for (int u = 0; u < s.period; ++u) {
          INFO("i ", i, " j ", j, " u ", u);
          CHECK(s.tab[i][j][u] == c.tab[i][j][u]);
        }
  }
  CHECK_THROWS_AS(tilde_c_closed(make_ground(LieType::parse("A2")), 1, 1),
                  DomainError);
}

TEST_CASE("combinatorial formula matches the series inverse") {
  for (const char* name : {"A4", "B3", "C3", "G2"}) {
    GroundData g = make_ground(LieType::parse(name));
    CoeffTable t = invert_series(g);
    QDatum q0 = validate(g, g.canonical_xi);
    std::vector<QDatum> qs = {q0};
    qs.push_back(reflect(q0, sources(q0).front()));
    for (const QDatum& q : qs) {
      CoxeterPack pack = build_coxeter(q);
      for (int i = 1; i <= g.n; ++i)
        for (int j = 1; j <= g.n; ++j)
          for (long long u = 1; u <= t.period; ++u) {
            INFO(name, " i ", i, " j ", j, " u ", u);
            CHECK(tilde_c_combinatorial(pack, i, j, u) == t.get(i, j, u));
          }
    }
  }
}

TEST_CASE("combinatorial formula is representative-independent") {
  GroundData g = make_ground(LieType::parse("B3"));
  CoxeterPack pack = build_coxeter(validate(g, g.canonical_xi));
  CoeffTable t = invert_series(g);
  // orbit 1 = {1, 5}, orbit 2 = {2, 4} in the A5 numbering
  for (long long u = 1; u <= t.period; ++u)
    for (int ri : {1, 5})
      for (int rj : {2, 4})
        CHECK(tilde_c_combinatorial(pack, 1, 2, u, ri, rj) == t.get(1, 2, u));
  CHECK_THROWS_AS(tilde_c_combinatorial(pack, 1, 2, 4, 3, 2), DomainError);
}

TEST_CASE("structural properties of the inverse hold for every type") {
  for (const char* name :
       {"A1", "A2", "A5", "B2", "B4", "C3", "D4", "D5", "E6", "F4", "G2"}) {
    CoeffTable t = series_table(name);
    INFO(name);
    for (auto& [what, ok] : check_tc_properties(t)) {
      INFO(what);
      CHECK(ok);
    }
  }
}

TEST_CASE("a corrupted table is caught by the property checks") {
  CoeffTable t = series_table("B3");
  t.tab[1][2][5] += 1;
  bool any_fail = false;
  for (auto& [what, ok] : check_tc_properties(t)) any_fail |= !ok;
  CHECK(any_fail);
}
