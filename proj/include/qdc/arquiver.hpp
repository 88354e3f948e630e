#pragma once

#include <map>
#include <vector>

#include "qdc/coxeter.hpp"

namespace qdc {

// Element (beta, k) of R-hat^+ = R^+ x Z.
struct SignedRootIdx {
  RootVector root;
  long long k = 0;
  bool operator==(const SignedRootIdx& o) const {
    return root == o.root && k == o.k;
  }
};

// phi_Q(node, p) evaluated through the memoized tau-orbits and the
// rh^vee-shift rule. Throws ParityError when (node, p) is not a repetition
// quiver vertex.
SignedRootIdx phi(const CoxeterPack& pack, RQVertex v);

// The stepwise recursion of the paper (walk from (node, xi_node) in steps of
// 2 d_bar, flipping the sign where the root leaves R^+). Test oracle only.
SignedRootIdx phi_recursive(const CoxeterPack& pack, RQVertex v);

struct TwistedARQuiver {
  QDatum q;
  std::vector<RQVertex> vertices; // (Gamma_Q)_0, deterministic order
  std::map<RQVertex, RootVector> labels;
  std::vector<std::pair<RQVertex, RQVertex>> arrows;
};

TwistedARQuiver twisted_ar_quiver(const CoxeterPack& pack);

// Folded vertex (i, p) with i in I.
struct FQVertex {
  int i = 0;
  int p = 0;
  bool operator==(const FQVertex& o) const { return i == o.i && p == o.p; }
  bool operator<(const FQVertex& o) const {
    if (i != o.i) return i < o.i;
    return p < o.p;
  }
};

struct FoldedQuiver {
  QDatum q;
  std::vector<FQVertex> vertices; // I-hat_Q = f((Gamma_Q)_0)
  std::map<FQVertex, RootVector> labels;
  std::vector<std::pair<FQVertex, FQVertex>> arrows;
};

FoldedQuiver folded_quiver(const CoxeterPack& pack);

// Folding bijection f and its inverse; fold_inv throws ParityError when no
// node of orbit i matches the parity of p.
FQVertex fold(const GroundData& g, RQVertex v);
RQVertex fold_inv(const GroundData& g, FQVertex v);

// phi-bar_Q = phi_Q o f^{-1} on I-hat.
SignedRootIdx phi_bar(const CoxeterPack& pack, FQVertex v);

// Upsilon_i for a reduced word of w0: vertices beta_k with residues i_k and
// arrows beta_k -> beta_j (j < k, i_j ~ i_k, no intermediate i_j/i_k letter).
struct CombARQuiver {
  std::vector<int> word;
  std::vector<RootVector> beta;          // index 0..N-1 along the word
  std::vector<std::pair<int, int>> arrows; // index pairs (from, to)
  std::map<RootVector, int> residue;     // R^+ -> Delta_0
};

// Throws NotReducedOrNotLongest unless word is a reduced word of w0.
CombARQuiver comb_ar_quiver(const GroundData& g, const std::vector<int>& word);

// r_{i1}: (i1, i2, ..., iN) -> (i2, ..., iN, i1*).
std::vector<int> reflection_functor(const GroundData& g,
                                    const std::vector<int>& word);

} // namespace qdc
