#pragma once

#include <vector>

#include "qdc/ground.hpp"
#include "qdc/weyl.hpp"

namespace qdc {

// A validated height function xi on Delta_0 together with its ground data.
struct QDatum {
  const GroundData* g = nullptr;
  std::vector<int> xi; // index 1..m
};

// Vertex (node, p) of the repetition quiver Delta-hat^sigma.
struct RQVertex {
  int node = 0;
  int p = 0;
  bool operator==(const RQVertex& o) const {
    return node == o.node && p == o.p;
  }
  bool operator<(const RQVertex& o) const {
    if (node != o.node) return node < o.node;
    return p < o.p;
  }
};

// Checks H1 (equal-d edges differ by d), H2 (unique descending neighbor in
// mixed orbits), H3 (xi = epsilon mod 2d). Throws H1Violation / H2Violation /
// H3Violation naming the offending vertices.
QDatum validate(const GroundData& g, const std::vector<int>& xi);

// Nodes whose height strictly exceeds all neighbors'.
std::vector<int> sources(const QDatum& q);
bool is_source(const QDatum& q, int node);

// s_node applied to xi (lowers xi_node by 2 d_bar). Throws NotASource.
QDatum reflect(const QDatum& q, int node);

// True iff each prefix of seq reflects at a source.
bool is_adapted(const QDatum& q, const std::vector<int>& seq);

bool in_rep_quiver(const GroundData& g, const RQVertex& v);

// All arrows (node,p) -> (node',p + min(d,d')) with both ends in [pmin,pmax].
std::vector<std::pair<RQVertex, RQVertex>>
rep_quiver_arrows(const GroundData& g, int pmin, int pmax);

// Arrows of the full subquiver of Delta-hat^sigma on the vertex set X.
std::vector<std::pair<RQVertex, RQVertex>>
induced_arrows(const GroundData& g, const std::vector<RQVertex>& X);

// Canonical compatible reading: descending p, ties by ascending node id.
std::vector<RQVertex> canonical_reading(const GroundData& g,
                                        std::vector<RQVertex> X);

// All compatible readings of X (topological orders, arrow targets first).
// Intended for small X in tests; enumeration capped at `limit` readings.
std::vector<std::vector<RQVertex>>
compatible_readings(const GroundData& g, const std::vector<RQVertex>& X,
                    std::size_t limit = 1000);

// w[X] = s_{pi(x1)} ... s_{pi(xl)} along the canonical reading.
SignedExtWeylElt w_of(const GroundData& g, const std::vector<RQVertex>& X);

} // namespace qdc
