#include "qdc/arquiver.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qdc/error.hpp"

namespace qdc {

namespace {

std::string vtx(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

} // namespace

SignedRootIdx phi(const CoxeterPack& pack, RQVertex v) {
  const GroundData& g = pack.g();
  if (!in_rep_quiver(g, v))
    throw DomainError("ParityError",
                      "vertex " + vtx(v.node, v.p) +
                          " is not in the repetition quiver");
  int rh = pack.rh();
  int node = v.node;
  long long p = v.p;
  long long k = 0;
  for (;;) {
    long long t = pack.q.xi[node] - p;
    long long window = rh + pack.q.xi[node] - pack.q.xi[g.star_delta[node]];
    if (t >= 0 && t < window) {
      SignedRootIdx out;
      out.root = pack.tau_pow_gamma(node, t / 2);
      out.k = k;
      return out;
    }
    if (t < 0) {
      node = g.star_delta[node];
      p -= rh;
      k -= 1;
    } else {
      node = g.star_delta[node];
      p += rh;
      k += 1;
    }
  }
}

SignedRootIdx phi_recursive(const CoxeterPack& pack, RQVertex v) {
  const GroundData& g = pack.g();
  if (!in_rep_quiver(g, v))
    throw DomainError("ParityError",
                      "vertex " + vtx(v.node, v.p) +
                          " is not in the repetition quiver");
  ActionMatrix tau_inv = action_matrix(g, inverse(g, pack.tau));
  int d = g.d_bar(v.node);
  Weight cur = pack.gamma_pi[v.node];
  long long k = 0;
  long long p = pack.q.xi[v.node];
  while (p > v.p) {
    // step (node, p) -> (node, p - 2d): apply tau^d, flip on sign change.
    for (int t = 0; t < d; ++t) cur = mat_apply(pack.tau_mat, cur);
    if (!is_positive(to_root_basis(g, cur))) {
      cur = neg(cur);
      k += 1;
    }
    p -= 2 * d;
  }
  while (p < v.p) {
    for (int t = 0; t < d; ++t) cur = mat_apply(tau_inv, cur);
    if (!is_positive(to_root_basis(g, cur))) {
      cur = neg(cur);
      k -= 1;
    }
    p += 2 * d;
  }
  SignedRootIdx out;
  out.root = to_root_basis(g, cur);
  out.k = k;
  return out;
}

TwistedARQuiver twisted_ar_quiver(const CoxeterPack& pack) {
  const GroundData& g = pack.g();
  TwistedARQuiver quiver;
  quiver.q = pack.q;
  int rh = pack.rh();
  for (int v = 1; v <= g.m; ++v) {
    int d = g.d_bar(v);
    int bound = rh + pack.q.xi[v] - pack.q.xi[g.star_delta[v]];
    for (int k = 0; 2 * d * k < bound; ++k)
      quiver.vertices.push_back({v, pack.q.xi[v] - 2 * d * k});
  }
  quiver.vertices = canonical_reading(g, quiver.vertices);
  if (static_cast<int>(quiver.vertices.size()) != g.num_pos_roots)
    throw DomainError("ARQuiverMismatch",
                      "expected " + std::to_string(g.num_pos_roots) +
                          " vertices, got " +
                          std::to_string(quiver.vertices.size()));
  std::set<RootVector> seen;
  for (const auto& x : quiver.vertices) {
    SignedRootIdx lbl = phi(pack, x);
    if (lbl.k != 0 || !is_positive(lbl.root))
      throw DomainError("ARQuiverMismatch",
                        "label of " + vtx(x.node, x.p) +
                            " is not a positive root at level 0");
    if (!seen.insert(lbl.root).second)
      throw DomainError("ARQuiverMismatch", "duplicate root label at " +
                                                vtx(x.node, x.p));
    quiver.labels[x] = lbl.root;
  }
  quiver.arrows = induced_arrows(g, quiver.vertices);
  return quiver;
}

FQVertex fold(const GroundData& g, RQVertex v) {
  return {g.orbit_of[v.node], v.p};
}

RQVertex fold_inv(const GroundData& g, FQVertex v) {
  if (v.i < 1 || v.i > g.n)
    throw DomainError("ParityError", "no orbit " + std::to_string(v.i));
  for (int node = 1; node <= g.m; ++node)
    if (g.orbit_of[node] == v.i && in_rep_quiver(g, {node, v.p}))
      return {node, v.p};
  throw DomainError("ParityError",
                    "no node of orbit " + std::to_string(v.i) +
                        " matches the parity of p = " + std::to_string(v.p));
}

SignedRootIdx phi_bar(const CoxeterPack& pack, FQVertex v) {
  return phi(pack, fold_inv(pack.g(), v));
}

FoldedQuiver folded_quiver(const CoxeterPack& pack) {
  const GroundData& g = pack.g();
  TwistedARQuiver quiver = twisted_ar_quiver(pack);
  FoldedQuiver out;
  out.q = pack.q;
  for (const auto& x : quiver.vertices) {
    FQVertex y = fold(g, x);
    out.vertices.push_back(y);
    out.labels[y] = quiver.labels.at(x);
  }
  for (const auto& ar : quiver.arrows)
    out.arrows.emplace_back(fold(g, ar.first), fold(g, ar.second));
  return out;
}

CombARQuiver comb_ar_quiver(const GroundData& g,
                            const std::vector<int>& word) {
  CombARQuiver quiver;
  quiver.word = word;
  if (static_cast<int>(word.size()) != g.num_pos_roots)
    throw DomainError("NotReducedOrNotLongest",
                      "word has length " + std::to_string(word.size()) +
                          ", expected " + std::to_string(g.num_pos_roots));
  quiver.beta = roots_of_word(g, word);
  std::set<RootVector> seen;
  for (const auto& b : quiver.beta)
    if (!is_positive(b) || !seen.insert(b).second)
      throw DomainError("NotReducedOrNotLongest",
                        "word is not a reduced word of w0");
  for (std::size_t k = 0; k < word.size(); ++k) {
    quiver.residue[quiver.beta[k]] = word[k];
    for (std::size_t j = 0; j < k; ++j) {
      if (!g.adjacent(word[j], word[k])) continue;
      bool blocked = false;
      for (std::size_t t = j + 1; t < k; ++t)
        if (word[t] == word[j] || word[t] == word[k]) { blocked = true; break; }
      if (!blocked)
        quiver.arrows.emplace_back(static_cast<int>(k), static_cast<int>(j));
    }
  }
  return quiver;
}

std::vector<int> reflection_functor(const GroundData& g,
                                    const std::vector<int>& word) {
  comb_ar_quiver(g, word); // validates
  std::vector<int> out(word.begin() + 1, word.end());
  out.push_back(g.star_delta[word.front()]);
  return out;
}

} // namespace qdc
