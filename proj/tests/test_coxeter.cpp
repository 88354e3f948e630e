#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qdc/coxeter.hpp"
#include "qdc/error.hpp"

using namespace qdc;

namespace {
RootVector interval_root(const GroundData& g, int a, int b) {
  RootVector r{std::vector<long long>(g.m + 1, 0)};
  for (int v = a; v <= b; ++v) r.c[v] = 1;
  return r;
}
} // namespace

TEST_CASE("canonical B_n gives tau = s_1 ... s_n sigma and gamma_i = [1,i]") {
  for (int n : {2, 3, 4}) {
    GroundData g = make_ground(LieType::parse("B" + std::to_string(n)));
    CoxeterPack pack = build_coxeter(validate(g, g.canonical_xi));
    std::vector<int> expect;
    for (int i = 1; i <= n; ++i) expect.push_back(i);
    CHECK(pack.tau.word == expect);
    CHECK(pack.tau.sigma_power == 1);
    CHECK(pack.x_prime.empty());
    for (int i = 1; i <= n; ++i) {
      CHECK(pack.i_circ[i] == i);
      CHECK(pack.gamma_alpha[i] == interval_root(g, 1, i));
    }
  }
}

TEST_CASE("canonical C_n gamma_i = alpha_1 + ... + alpha_i") {
  for (int n : {2, 3, 4}) {
    GroundData g = make_ground(LieType::parse("C" + std::to_string(n)));
    CoxeterPack pack = build_coxeter(validate(g, g.canonical_xi));
    for (int i = 1; i <= n; ++i)
      CHECK(pack.gamma_alpha[pack.i_circ[i]] == interval_root(g, 1, i));
  }
}

TEST_CASE("orders of the generalized Coxeter elements") {
  for (const char* name : {"A4", "D5", "E6", "B3", "C4", "F4", "G2"}) {
    GroundData g = make_ground(LieType::parse(name));
    CoxeterPack pack = build_coxeter(validate(g, g.canonical_xi));
    INFO(name);
    CHECK(matrix_order(pack.tau_mat, 2 * g.rh()) == g.rh());
    ActionMatrix p = identity_matrix(g);
    for (int t = 0; t < g.r; ++t) p = mat_mul(p, pack.tau_mat);
    CHECK(p == action_matrix(g, pack.tau_breve));
    if (g.r > 1) {
      ActionMatrix half = identity_matrix(g);
      for (int t = 0; t < g.rh() / 2; ++t) half = mat_mul(half, pack.tau_mat);
      CHECK(is_minus_identity(half));
    }
  }
}

TEST_CASE("gamma is a simple root exactly at sources") {
  GroundData g = make_ground(LieType::parse("B3"));
  QDatum q = validate(g, {6, 4, 7, 6, 8});
  CoxeterPack pack = build_coxeter(q);
  for (int v = 1; v <= g.m; ++v)
    CHECK((pack.gamma_alpha[v] == simple_root(g, v)) == is_source(q, v));
}

TEST_CASE("reflection compatibility at sources") {
  GroundData g = make_ground(LieType::parse("B3"));
  QDatum q = validate(g, {6, 4, 7, 6, 8});
  CHECK(check_reflection_compat(q, 1));
  CHECK(check_reflection_compat(q, 3));
  CHECK(check_reflection_compat(q, 5));
  CHECK_THROWS_AS(check_reflection_compat(q, 2), DomainError);
  CHECK_THROWS_AS(check_reflection_compat(q, 4), DomainError);
  GroundData c3 = make_ground(LieType::parse("C3"));
  QDatum qc = validate(c3, c3.canonical_xi);
  for (int v : sources(qc)) CHECK(check_reflection_compat(qc, v));
}

TEST_CASE("the twisted Coxeter height condition") {
  GroundData g = make_ground(LieType::parse("B3"));
  CHECK(twisted_coxeter_condition(validate(g, g.canonical_xi)));
  CHECK(twisted_coxeter_condition(validate(g, {6, 4, 7, 6, 8})));
  CHECK(!twisted_coxeter_condition(validate(g, {2, 4, 5, 6, 8})));
}

TEST_CASE("tau-orbit memoization matches repeated application") {
  GroundData g = make_ground(LieType::parse("F4"));
  CoxeterPack pack = build_coxeter(validate(g, g.canonical_xi));
  for (int v = 1; v <= g.m; ++v) {
    Weight cur = pack.gamma_pi[v];
    for (int k = 0; k < pack.rh() + 3; ++k) {
      CHECK(pack.tau_pow_gamma_pi(v, k) == cur);
      CHECK(pack.tau_pow_gamma(v, k) == to_root_basis(g, cur));
      cur = mat_apply(pack.tau_mat, cur);
    }
    // negative powers wrap through the full period
    CHECK(pack.tau_pow_gamma(v, -1) == pack.tau_pow_gamma(v, pack.rh() - 1));
  }
}

TEST_CASE("gamma relation along a sigma-orbit") {
  // tau^{(xi_v - xi_w)/2} gamma_v = gamma_w for v, w in one orbit
  GroundData g = make_ground(LieType::parse("F4"));
  CoxeterPack pack = build_coxeter(validate(g, g.canonical_xi));
  for (int v = 1; v <= g.m; ++v)
    for (int w = 1; w <= g.m; ++w) {
      if (g.orbit_of[v] != g.orbit_of[w]) continue;
      long long e = (pack.q.xi[v] - pack.q.xi[w]) / 2;
      CHECK(pack.tau_pow_gamma(v, e) == pack.gamma_alpha[w]);
    }
}
