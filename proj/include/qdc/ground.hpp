#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qdc {

// One of the finite families A..G with its rank, e.g. "B3" or "E8".
struct LieType {
  char family = 'A'; // one of A,B,C,D,E,F,G
  int rank = 1;

  static LieType parse(const std::string& s); // case-insensitive, e.g. "g2"
  std::string str() const;

  bool simply_laced() const {
    return family == 'A' || family == 'D' || family == 'E';
  }
  bool operator==(const LieType& o) const {
    return family == o.family && rank == o.rank;
  }
};

// Classification record for one simple Lie algebra: the simply-laced diagram
// Delta with its automorphism sigma, the folding onto I, and all derived
// constants. Node/orbit labels are 1-based and follow the paper's conventions:
//   B_n <- (A_{2n-1}, v),  C_n <- (D_{n+1}, v),  F_4 <- (E_6, v),
//   G_2 <- (D_4, vtilde with 1->3->4->1).
// All vectors indexed 1..m (nodes of Delta) or 1..n (orbits I); index 0 unused.
struct GroundData {
  LieType type;

  int m = 0; // |Delta_0|
  int n = 0; // |I| = rank of the folded algebra
  int r = 1; // order of sigma

  std::vector<std::vector<int>> delta_adj; // adjacency lists on Delta_0
  std::vector<int> sigma;                  // sigma on Delta_0
  std::vector<int> orbit_of;               // Delta_0 -> I
  std::vector<int> d;                      // I -> d_i = |orbit i|
  std::vector<int> r_i;                    // I -> r / d_i

  std::vector<std::vector<int>> cartan_g; // folded Cartan matrix c_ij (n x n)
  std::vector<std::vector<int>> cartan_s; // Cartan matrix of Delta (m x m)

  int dual_coxeter = 0;        // h^vee
  long long num_pos_roots = 0; // N = |R^+| of the simply-laced Delta

  std::vector<int> star_delta; // involution * on Delta_0 (w0 alpha = -alpha*)
  std::vector<int> star_I;     // induced involution on I

  std::vector<int> epsilon_delta; // sigma-parity, values in [0, 2 d_bar)
  std::vector<int> epsilon_I;     // induced parity I -> {0,1}

  std::vector<int> canonical_xi; // canonical reference height function

  int d_bar(int node) const { return d[orbit_of[node]]; }
  int rh() const { return r * dual_coxeter; }
  bool adjacent(int a, int b) const {
    for (int x : delta_adj[a])
      if (x == b) return true;
    return false;
  }
};

GroundData make_ground(LieType t);

// Pairs (invariant name, holds?) for every GroundData invariant of the spec.
std::vector<std::pair<std::string, bool>>
check_ground_invariants(const GroundData& g);

// All LieTypes of the given maximal rank (used by the sweep suites).
std::vector<LieType> all_types_up_to_rank(int max_rank);

} // namespace qdc
