#pragma once

#include <vector>

#include "qdc/ground.hpp"

namespace qdc {

// Exact integer vector in the fundamental-weight basis of Delta (index 1..m).
struct Weight {
  std::vector<long long> c;
  bool operator==(const Weight& o) const { return c == o.c; }
};

// Exact integer vector in the simple-root basis of Delta (index 1..m).
struct RootVector {
  std::vector<long long> c;
  bool operator==(const RootVector& o) const { return c == o.c; }
  bool operator<(const RootVector& o) const { return c < o.c; }
};

// Element w sigma^k of W rtimes <sigma>, stored as a (not necessarily
// reduced) word to be applied right-to-left after sigma^k.
struct SignedExtWeylElt {
  std::vector<int> word; // letters in Delta_0
  int sigma_power = 0;   // mod r
};

// Integer matrix of the action on the weight lattice in the pi-basis,
// rows/cols 1..m. Used for equality, orders, and fast powers.
struct ActionMatrix {
  std::vector<std::vector<long long>> a;
  bool operator==(const ActionMatrix& o) const { return a == o.a; }
};

Weight zero_weight(const GroundData& g);
Weight fundamental_weight(const GroundData& g, int node);
Weight add(const Weight& x, const Weight& y);
Weight sub(const Weight& x, const Weight& y);
Weight neg(const Weight& x);
RootVector add(const RootVector& x, const RootVector& y);
RootVector neg(const RootVector& x);
RootVector simple_root(const GroundData& g, int node);

// s_node in the pi-basis: lambda - lambda_node * alpha_node.
Weight simple_reflect(const GroundData& g, int node, const Weight& w);
Weight sigma_apply(const GroundData& g, int k, const Weight& w);
Weight act(const GroundData& g, const SignedExtWeylElt& e, const Weight& w);
RootVector act_root(const GroundData& g, const SignedExtWeylElt& e,
                    const RootVector& b);

SignedExtWeylElt identity_elt();
SignedExtWeylElt compose(const GroundData& g, const SignedExtWeylElt& a,
                         const SignedExtWeylElt& b);
SignedExtWeylElt inverse(const GroundData& g, const SignedExtWeylElt& a);

ActionMatrix action_matrix(const GroundData& g, const SignedExtWeylElt& e);
ActionMatrix identity_matrix(const GroundData& g);
ActionMatrix mat_mul(const ActionMatrix& x, const ActionMatrix& y);
Weight mat_apply(const ActionMatrix& x, const Weight& w);
bool is_minus_identity(const ActionMatrix& x);
// Smallest k >= 1 with x^k = 1 (caps at `cap`, returns 0 if not reached).
int matrix_order(const ActionMatrix& x, int cap);

// Actions compared on all fundamental weights.
bool same_action(const GroundData& g, const SignedExtWeylElt& a,
                 const SignedExtWeylElt& b);

// (pi_i, alpha_j) = delta_ij extended bilinearly.
long long pairing(const Weight& a, const RootVector& b);
// Symmetric form with (alpha, alpha) = 2 on Delta: a^T * cartan_s * b.
long long root_pairing(const GroundData& g, const RootVector& a,
                       const RootVector& b);

// Basis change pi -> alpha; throws NotInRootLattice when w is not in Q.
RootVector to_root_basis(const GroundData& g, const Weight& w);
Weight from_root_basis(const GroundData& g, const RootVector& b);

bool is_positive(const RootVector& b);
std::vector<RootVector> positive_roots(const GroundData& g);

// beta_k = s_{i1} ... s_{i(k-1)}(alpha_{ik}); no reducedness check.
std::vector<RootVector> roots_of_word(const GroundData& g,
                                      const std::vector<int>& word);
// Same, but throws NotReduced unless every beta_k is positive.
std::vector<RootVector> roots_of_reduced_word(const GroundData& g,
                                              const std::vector<int>& word);
bool is_reduced(const GroundData& g, const std::vector<int>& word);

// A fixed reduced word for the longest element w0 of W(Delta).
std::vector<int> longest_word(const GroundData& g);

} // namespace qdc
