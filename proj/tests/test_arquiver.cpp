#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "qdc/arquiver.hpp"
#include "qdc/error.hpp"

using namespace qdc;

namespace {

RootVector rv(std::vector<long long> coords) {
  RootVector b{std::vector<long long>(1, 0)};
  b.c.insert(b.c.end(), coords.begin(), coords.end());
  return b;
}

// Ground data outlives the packs (QDatum keeps a pointer to it).
const GroundData& ground(const char* name) {
  static std::map<std::string, GroundData> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, make_ground(LieType::parse(name))).first;
  return it->second;
}

CoxeterPack canonical_pack(const char* name) {
  const GroundData& g = ground(name);
  return build_coxeter(validate(g, g.canonical_xi));
}

} // namespace

TEST_CASE("B3 twisted AR quiver vertex coordinates") {
  GroundData g = make_ground(LieType::parse("B3"));
  CoxeterPack pack = build_coxeter(validate(g, {6, 4, 7, 6, 8}));
  TwistedARQuiver quiver = twisted_ar_quiver(pack);
  REQUIRE(quiver.vertices.size() == 15);
  std::map<int, std::set<int>> by_node;
  for (const auto& v : quiver.vertices) by_node[v.node].insert(v.p);
  CHECK(by_node[1] == std::set<int>{6, 2});
  CHECK(by_node[2] == std::set<int>{4, 0});
  CHECK(by_node[3] == std::set<int>{7, 5, 3, 1, -1});
  CHECK(by_node[4] == std::set<int>{6, 2, -2});
  CHECK(by_node[5] == std::set<int>{8, 4, 0});
}

TEST_CASE("phi anchors, window recursion agreement, and the rh-shift") {
  for (const char* name : {"A3", "B3", "C3", "F4", "G2", "D5"}) {
    CoxeterPack pack = canonical_pack(name);
    const GroundData& g = pack.g();
    INFO(name);
    for (int v = 1; v <= g.m; ++v) {
      SignedRootIdx a = phi(pack, {v, pack.q.xi[v]});
      CHECK(a.root == pack.gamma_alpha[v]);
      CHECK(a.k == 0);
    }
    TwistedARQuiver quiver = twisted_ar_quiver(pack);
    for (const auto& x : quiver.vertices) {
      SignedRootIdx lbl = phi(pack, x);
      CHECK(lbl.k == 0);
      // stepwise recursion agrees with the window algorithm
      CHECK(phi_recursive(pack, x) == lbl);
      // Dual shift: same root one level up at (node*, p - rh)
      SignedRootIdx up =
          phi(pack, {g.star_delta[x.node], x.p - g.rh()});
      CHECK(up.root == lbl.root);
      CHECK(up.k == 1);
      SignedRootIdx down =
          phi(pack, {g.star_delta[x.node], x.p + g.rh()});
      CHECK(down.root == lbl.root);
      CHECK(down.k == -1);
    }
    CHECK_THROWS_AS(phi(pack, {1, pack.q.xi[1] + 1}), DomainError);
  }
}

TEST_CASE("labels of the twisted AR quiver biject onto the positive roots") {
  for (const char* name : {"A4", "B4", "C4", "F4", "G2"}) {
    CoxeterPack pack = canonical_pack(name);
    TwistedARQuiver quiver = twisted_ar_quiver(pack);
    INFO(name);
    CHECK(static_cast<long long>(quiver.vertices.size()) ==
          pack.g().num_pos_roots);
    std::set<RootVector> labels;
    for (const auto& [v, b] : quiver.labels) labels.insert(b);
    auto all = positive_roots(pack.g());
    CHECK(labels == std::set<RootVector>(all.begin(), all.end()));
  }
}

TEST_CASE("G2 folded quiver golden labels") {
  CoxeterPack pack = canonical_pack("G2");
  FoldedQuiver q = folded_quiver(pack);
  REQUIRE(q.vertices.size() == 12);
  std::map<FQVertex, RootVector> want = {
      {{1, 0}, rv({0, 0, 0, 1})},  {{1, 2}, rv({0, 1, 1, 1})},
      {{1, 4}, rv({1, 1, 1, 1})},  {{1, 6}, rv({1, 2, 1, 1})},
      {{1, 8}, rv({1, 1, 1, 0})},  {{1, 10}, rv({1, 1, 0, 0})},
      {{2, 1}, rv({0, 1, 0, 1})},  {{2, 3}, rv({0, 0, 1, 0})},
      {{2, 5}, rv({1, 1, 0, 1})},  {{2, 7}, rv({0, 1, 1, 0})},
      {{2, 9}, rv({1, 0, 0, 0})},  {{2, 11}, rv({0, 1, 0, 0})}};
  CHECK(q.labels == want);
  // the two inline phi-bar values
  CHECK(phi_bar(pack, {2, 1}).root == rv({0, 1, 0, 1}));
  CHECK(phi_bar(pack, {1, 0}).root == rv({0, 0, 0, 1}));
}

TEST_CASE("F4 folded quiver golden labels") {
  CoxeterPack pack = canonical_pack("F4");
  FoldedQuiver q = folded_quiver(pack);
  REQUIRE(q.vertices.size() == 36);
  auto row = [&](int i, int p0, std::vector<std::vector<long long>> roots) {
    int p = p0;
    for (auto& r : roots) {
      INFO("row ", i, " p ", p);
      CHECK(q.labels.at({i, p}) == rv(r));
      p += 2;
    }
  };
  row(1, 4,
      {{0, 0, 0, 1, 1, 1}, {1, 1, 1, 2, 1, 0}, {0, 1, 1, 1, 1, 0},
       {0, 0, 1, 1, 1, 1}, {1, 1, 1, 2, 1, 1}, {1, 1, 1, 1, 1, 0},
       {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 0}});
  row(2, 2,
      {{0, 0, 0, 1, 1, 0}, {0, 1, 1, 2, 1, 0}, {0, 1, 1, 2, 2, 1},
       {1, 1, 2, 3, 2, 1}, {1, 2, 2, 3, 2, 1}, {1, 1, 2, 2, 2, 1},
       {1, 1, 2, 2, 1, 1}, {1, 1, 1, 1, 1, 1}, {1, 0, 1, 0, 0, 0}});
  row(3, 1,
      {{0, 0, 0, 1, 0, 0}, {0, 1, 0, 1, 1, 0}, {0, 0, 1, 1, 1, 0},
       {0, 1, 1, 2, 1, 1}, {1, 1, 1, 2, 2, 1}, {1, 1, 2, 2, 1, 0},
       {0, 1, 1, 1, 1, 1}, {1, 0, 1, 1, 1, 1}, {1, 1, 1, 1, 0, 0}});
  row(4, 2,
      {{0, 1, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 1, 1, 0, 0},
       {0, 1, 0, 1, 1, 1}, {1, 0, 1, 1, 1, 0}, {0, 1, 1, 1, 0, 0},
       {0, 0, 0, 0, 1, 1}, {1, 0, 1, 1, 0, 0}, {0, 1, 0, 0, 0, 0}});
}

TEST_CASE("folding is a parity bijection") {
  GroundData g = make_ground(LieType::parse("C3"));
  for (int v = 1; v <= g.m; ++v)
    for (int p = -8; p <= 8; ++p) {
      if (!in_rep_quiver(g, {v, p})) continue;
      FQVertex f = fold(g, {v, p});
      CHECK(fold_inv(g, f) == RQVertex{v, p});
    }
  CHECK_THROWS_AS(fold_inv(g, {0, 0}), DomainError);
}

TEST_CASE("combinatorial AR quiver of (1,2,1) in A2 and the reflection functor") {
  GroundData g = make_ground(LieType::parse("A2"));
  CombARQuiver ups = comb_ar_quiver(g, {1, 2, 1});
  CHECK(ups.beta[0] == rv({1, 0}));
  CHECK(ups.beta[1] == rv({1, 1}));
  CHECK(ups.beta[2] == rv({0, 1}));
  CHECK(ups.residue.at(rv({1, 1})) == 2);
  REQUIRE(ups.arrows.size() == 2);
  CHECK(reflection_functor(g, {1, 2, 1}) == std::vector<int>{2, 1, 2});
  CHECK_THROWS_AS(comb_ar_quiver(g, {1, 2}), DomainError);
  CHECK_THROWS_AS(comb_ar_quiver(g, {1, 1, 2}), DomainError);
}

TEST_CASE("the adapted reading of Gamma is a reduced word with matching quiver") {
  CoxeterPack pack = canonical_pack("C3");
  const GroundData& g = pack.g();
  TwistedARQuiver gq = twisted_ar_quiver(pack);
  std::vector<int> word;
  for (const auto& x : gq.vertices) word.push_back(x.node);
  CombARQuiver ups = comb_ar_quiver(g, word);
  for (std::size_t k = 0; k < word.size(); ++k) {
    CHECK(ups.beta[k] == gq.labels.at(gq.vertices[k]));
    CHECK(ups.residue.at(ups.beta[k]) == gq.vertices[k].node);
  }
  std::set<std::pair<RootVector, RootVector>> ga, ua;
  for (const auto& a : gq.arrows)
    ga.emplace(gq.labels.at(a.first), gq.labels.at(a.second));
  for (const auto& a : ups.arrows)
    ua.emplace(ups.beta[a.first], ups.beta[a.second]);
  CHECK(ga == ua);
}
