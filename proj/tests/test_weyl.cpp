#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "qdc/error.hpp"
#include "qdc/weyl.hpp"

using namespace qdc;

namespace {
RootVector rv(const GroundData& g, std::vector<long long> coords) {
  RootVector b{std::vector<long long>(1, 0)};
  b.c.insert(b.c.end(), coords.begin(), coords.end());
  (void)g;
  return b;
}
} // namespace

TEST_CASE("roots of a word in A2") {
  GroundData g = make_ground(LieType::parse("A2"));
  auto betas = roots_of_reduced_word(g, {1, 2, 1});
  REQUIRE(betas.size() == 3);
  CHECK(betas[0] == rv(g, {1, 0}));
  CHECK(betas[1] == rv(g, {1, 1}));
  CHECK(betas[2] == rv(g, {0, 1}));
  CHECK(is_reduced(g, {1, 2, 1}));
  CHECK(!is_reduced(g, {1, 1}));
  CHECK_THROWS_AS(roots_of_reduced_word(g, {1, 1}), DomainError);
}

TEST_CASE("longest word enumerates the positive roots") {
  for (const char* name : {"A3", "A5", "D4", "D5", "E6"}) {
    GroundData g = make_ground(LieType::parse(name));
    auto w0 = longest_word(g);
    INFO(name);
    CHECK(static_cast<long long>(w0.size()) == g.num_pos_roots);
    auto betas = roots_of_reduced_word(g, w0);
    std::set<RootVector> from_word(betas.begin(), betas.end());
    auto all = positive_roots(g);
    std::set<RootVector> from_orbit(all.begin(), all.end());
    CHECK(from_word == from_orbit);
  }
}

TEST_CASE("positive root counts") {
  CHECK(positive_roots(make_ground(LieType::parse("A4"))).size() == 10);
  CHECK(positive_roots(make_ground(LieType::parse("D4"))).size() == 12);
  CHECK(positive_roots(make_ground(LieType::parse("E6"))).size() == 36);
}

TEST_CASE("basis change is exact and detects non-lattice weights") {
  GroundData g = make_ground(LieType::parse("A2"));
  // pi_1 is not in the root lattice of A2
  CHECK_THROWS_AS(to_root_basis(g, fundamental_weight(g, 1)), DomainError);
  // alpha_1 = 2 pi_1 - pi_2 round-trips
  RootVector a1 = simple_root(g, 1);
  CHECK(to_root_basis(g, from_root_basis(g, a1)) == a1);
  Weight w = from_root_basis(g, a1);
  CHECK(w.c[1] == 2);
  CHECK(w.c[2] == -1);
}

TEST_CASE("pairing of pi_1 with the positive roots of A_{2n-1}") {
  for (int n : {2, 3, 4}) {
    GroundData g = make_ground(LieType::parse("A" + std::to_string(2 * n - 1)));
    long long sum = 0;
    for (const auto& b : positive_roots(g))
      sum += pairing(fundamental_weight(g, 1), b);
    CHECK(sum == 2 * n - 1);
  }
}

TEST_CASE("extended Weyl elements compose and invert through sigma") {
  GroundData g = make_ground(LieType::parse("B3")); // Delta = A5, r = 2
  SignedExtWeylElt a{{1, 2}, 1};
  SignedExtWeylElt b{{3, 5}, 1};
  SignedExtWeylElt ab = compose(g, a, b);
  CHECK(ab.sigma_power == 0);
  // sigma moves the letters of b: sigma(3) = 3, sigma(5) = 1
  CHECK(ab.word == std::vector<int>{1, 2, 3, 1});
  SignedExtWeylElt lhs = compose(g, inverse(g, b), inverse(g, a));
  CHECK(same_action(g, inverse(g, ab), lhs));
  CHECK(same_action(g, compose(g, ab, inverse(g, ab)), identity_elt()));
}

TEST_CASE("action matrices track the action on weights") {
  GroundData g = make_ground(LieType::parse("D4"));
  SignedExtWeylElt e{{2, 1, 3, 2}, 0};
  ActionMatrix mat = action_matrix(g, e);
  for (int v = 1; v <= g.m; ++v)
    CHECK(mat_apply(mat, fundamental_weight(g, v)) ==
          act(g, e, fundamental_weight(g, v)));
  // the longest element of D4 acts by -1 (star = id)
  SignedExtWeylElt w0{longest_word(g), 0};
  CHECK(is_minus_identity(action_matrix(g, w0)));
  CHECK(matrix_order(action_matrix(g, w0), 4) == 2);
}

TEST_CASE("root pairing has squared length 2 on roots") {
  GroundData g = make_ground(LieType::parse("E6"));
  for (const auto& b : positive_roots(g)) CHECK(root_pairing(g, b, b) == 2);
}
