#include "qdc/qdata.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "qdc/error.hpp"

namespace qdc {

namespace {

int mod(long long a, int m) { return static_cast<int>(((a % m) + m) % m); }

std::string vtx(int node, int p) {
  return "(" + std::to_string(node) + "," + std::to_string(p) + ")";
}

} // namespace

QDatum validate(const GroundData& g, const std::vector<int>& xi_in) {
  std::vector<int> xi = xi_in;
  if (static_cast<int>(xi.size()) == g.m) xi.insert(xi.begin(), 0);
  if (static_cast<int>(xi.size()) != g.m + 1)
    throw DomainError("BadHeightFunction",
                      "expected " + std::to_string(g.m) +
                          " heights, got " + std::to_string(xi_in.size()));

  // H3: xi_node = epsilon_node mod 2 d_bar(node).
  for (int v = 1; v <= g.m; ++v) {
    int twod = 2 * g.d_bar(v);
    if (mod(xi[v] - g.epsilon_delta[v], twod) != 0)
      throw DomainError("H3Violation",
                        "xi_" + std::to_string(v) + " = " +
                            std::to_string(xi[v]) + " is not congruent to " +
                            std::to_string(g.epsilon_delta[v]) + " mod " +
                            std::to_string(twod));
  }

  // H1: adjacent nodes with equal d differ by exactly d.
  for (int v = 1; v <= g.m; ++v)
    for (int w : g.delta_adj[v]) {
      if (w < v) continue;
      int dv = g.d_bar(v), dw = g.d_bar(w);
      if (dv != dw) continue;
      if (std::abs(xi[v] - xi[w]) != dv)
        throw DomainError("H1Violation",
                          "|xi_" + std::to_string(v) + " - xi_" +
                              std::to_string(w) + "| = " +
                              std::to_string(std::abs(xi[v] - xi[w])) +
                              ", expected " + std::to_string(dv));
    }

  // H2: for each I-edge with d_i < d_j and each node of the small orbit,
  // exactly one adjacent node of the big orbit sits one step away and heads
  // a strictly descending sigma-chain of step 2.
  for (int i = 1; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j) {
      if (g.cartan_g[i][j] == 0) continue;
      int a = i, b = j; // want d_a < d_b
      if (g.d[a] > g.d[b]) std::swap(a, b);
      if (g.d[a] == g.d[b]) continue;
      for (int v = 1; v <= g.m; ++v) {
        if (g.orbit_of[v] != a) continue;
        int count = 0;
        for (int w : g.delta_adj[v]) {
          if (g.orbit_of[w] != b) continue;
          if (std::abs(xi[v] - xi[w]) != 1) continue;
          bool chain = true;
          int node = w;
          for (int l = 1; l < g.d[b]; ++l) {
            node = g.sigma[node];
            if (xi[node] != xi[w] - 2 * l) { chain = false; break; }
          }
          if (chain) ++count;
        }
        if (count != 1)
          throw DomainError("H2Violation",
                            "node " + std::to_string(v) + " has " +
                                std::to_string(count) +
                                " descending neighbors in orbit " +
                                std::to_string(b) + ", expected 1");
      }
    }

  QDatum q;
  q.g = &g;
  q.xi = std::move(xi);
  return q;
}

std::vector<int> sources(const QDatum& q) {
  std::vector<int> s;
  for (int v = 1; v <= q.g->m; ++v)
    if (is_source(q, v)) s.push_back(v);
  return s;
}

bool is_source(const QDatum& q, int node) {
  for (int w : q.g->delta_adj[node])
    if (q.xi[w] >= q.xi[node]) return false;
  return true;
}

QDatum reflect(const QDatum& q, int node) {
  if (!is_source(q, node))
    throw DomainError("NotASource",
                      "node " + std::to_string(node) +
                          " is not a source of the height function");
  std::vector<int> xi = q.xi;
  xi[node] -= 2 * q.g->d_bar(node);
  return validate(*q.g, xi);
}

bool is_adapted(const QDatum& q, const std::vector<int>& seq) {
  QDatum cur = q;
  for (int node : seq) {
    if (!is_source(cur, node)) return false;
    cur = reflect(cur, node);
  }
  return true;
}

bool in_rep_quiver(const GroundData& g, const RQVertex& v) {
  if (v.node < 1 || v.node > g.m) return false;
  return mod(v.p - g.epsilon_delta[v.node], 2 * g.d_bar(v.node)) == 0;
}

std::vector<std::pair<RQVertex, RQVertex>>
rep_quiver_arrows(const GroundData& g, int pmin, int pmax) {
  std::vector<std::pair<RQVertex, RQVertex>> arrows;
  for (int v = 1; v <= g.m; ++v)
    for (int p = pmin; p <= pmax; ++p) {
      RQVertex x{v, p};
      if (!in_rep_quiver(g, x)) continue;
      for (int w : g.delta_adj[v]) {
        int s = p + std::min(g.d_bar(v), g.d_bar(w));
        RQVertex y{w, s};
        if (s <= pmax && in_rep_quiver(g, y)) arrows.emplace_back(x, y);
      }
    }
  return arrows;
}

std::vector<std::pair<RQVertex, RQVertex>>
induced_arrows(const GroundData& g, const std::vector<RQVertex>& X) {
  std::vector<std::pair<RQVertex, RQVertex>> arrows;
  for (const auto& x : X) {
    if (!in_rep_quiver(g, x))
      throw DomainError("NotInRepQuiver",
                        "vertex " + vtx(x.node, x.p) +
                            " is not in the repetition quiver");
    for (int w : g.delta_adj[x.node]) {
      RQVertex y{w, x.p + std::min(g.d_bar(x.node), g.d_bar(w))};
      if (std::find(X.begin(), X.end(), y) != X.end()) arrows.emplace_back(x, y);
    }
  }
  return arrows;
}

std::vector<RQVertex> canonical_reading(const GroundData& g,
                                        std::vector<RQVertex> X) {
  for (const auto& x : X)
    if (!in_rep_quiver(g, x))
      throw DomainError("NotInRepQuiver",
                        "vertex " + vtx(x.node, x.p) +
                            " is not in the repetition quiver");
  std::sort(X.begin(), X.end(), [](const RQVertex& a, const RQVertex& b) {
    if (a.p != b.p) return a.p > b.p;
    return a.node < b.node;
  });
  return X;
}

std::vector<std::vector<RQVertex>>
compatible_readings(const GroundData& g, const std::vector<RQVertex>& X,
                    std::size_t limit) {
  // A reading is compatible when every arrow target precedes its source.
  auto arrows = induced_arrows(g, X);
  std::size_t n = X.size();
  std::vector<std::vector<std::size_t>> must_precede(n);
  for (const auto& ar : arrows) {
    std::size_t src =
        std::find(X.begin(), X.end(), ar.first) - X.begin();
    std::size_t tgt =
        std::find(X.begin(), X.end(), ar.second) - X.begin();
    must_precede[src].push_back(tgt);
  }

  std::vector<std::vector<RQVertex>> out;
  std::vector<bool> used(n, false);
  std::vector<std::size_t> order;
  auto rec = [&](auto&& self) -> void {
    if (out.size() >= limit) return;
    if (order.size() == n) {
      std::vector<RQVertex> reading;
      for (auto idx : order) reading.push_back(X[idx]);
      out.push_back(std::move(reading));
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (auto t : must_precede[v])
        if (!used[t]) { ok = false; break; }
      if (!ok) continue;
      used[v] = true;
      order.push_back(v);
      self(self);
      order.pop_back();
      used[v] = false;
    }
  };
  rec(rec);
  return out;
}

SignedExtWeylElt w_of(const GroundData& g, const std::vector<RQVertex>& X) {
  auto reading = canonical_reading(g, X);
  SignedExtWeylElt e;
  for (const auto& x : reading) e.word.push_back(x.node);
  return e;
}

} // namespace qdc
