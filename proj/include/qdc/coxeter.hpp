#pragma once

#include <vector>

#include "qdc/qdata.hpp"

namespace qdc {

// The three Coxeter-type elements attached to a Q-datum, the roots
// gamma_iota, and the memoized tau-orbits used by every downstream formula.
struct CoxeterPack {
  QDatum q;

  std::vector<int> i_circ; // I -> node i_circ (max height in the orbit)
  std::vector<RQVertex> x_prime;

  SignedExtWeylElt tau_circ; // w[X_circ] sigma
  SignedExtWeylElt tau;      // w[X']^{-1} tau_circ w[X']
  SignedExtWeylElt tau_breve;

  ActionMatrix tau_mat;

  // gamma_pi[node] = gamma_node in pi coords; gamma_alpha in alpha coords.
  std::vector<Weight> gamma_pi;
  std::vector<RootVector> gamma_alpha;

  // orbit_pi[node][k] = tau^k gamma_node (0 <= k < rh), same in alpha coords.
  std::vector<std::vector<Weight>> orbit_pi;
  std::vector<std::vector<RootVector>> orbit_alpha;

  const GroundData& g() const { return *q.g; }
  int rh() const { return q.g->rh(); }

  // tau^k gamma_node for any integer k, via the period rh.
  const RootVector& tau_pow_gamma(int node, long long k) const;
  const Weight& tau_pow_gamma_pi(int node, long long k) const;
};

// Builds the pack and asserts Prop. "conjugation": tau^r = tau_breve,
// ord(tau) = r h^vee, and tau^{rh/2} = -1 when sigma != id.
CoxeterPack build_coxeter(const QDatum& q);

// gamma_node = (1 - tau^{d_bar}) pi_node, as a positive root.
RootVector gamma(const CoxeterPack& pack, int node);

// Both reflection identities (Prop. "conjugation"(1) and Lemma "gamma
// reflection") at a source node. Throws NotASource.
bool check_reflection_compat(const QDatum& q, int node);

// Whether xi satisfies the twisted Coxeter height condition
// xi_{sigma^k(i_circ)} = xi_{i_circ} - 2k (equivalently X' is empty).
bool twisted_coxeter_condition(const QDatum& q);

} // namespace qdc
