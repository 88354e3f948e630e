#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qdc/coxeter.hpp"

namespace qdc {

// Sparse Laurent polynomial over Z; no zero coefficients stored.
struct LaurentPoly {
  std::map<int, long long> c; // exponent -> coefficient

  void add(int e, long long v) {
    auto it = c.find(e);
    if (it == c.end()) {
      if (v != 0) c.emplace(e, v);
      return;
    }
    it->second += v;
    if (it->second == 0) c.erase(it);
  }
  long long coeff(int e) const {
    auto it = c.find(e);
    return it == c.end() ? 0 : it->second;
  }
  bool operator==(const LaurentPoly& o) const { return c == o.c; }
};

LaurentPoly quantum_integer(int k); // [k]_z

// C(z): diagonal z^{d_i} + z^{-d_i}, off-diagonal [c_ij]_z. 1-based n x n.
std::vector<std::vector<LaurentPoly>> quantum_cartan(const GroundData& g);

// The integers c-tilde_ij(u) over one double period 0 <= u < 2 r h^vee,
// with the standard extension: 0 for u <= 0, periodic for u > 0.
struct CoeffTable {
  GroundData g;
  int period = 0; // 2 r h^vee
  // tab[i][j][u] for 1 <= i,j <= n, 0 <= u < period.
  std::vector<std::vector<std::vector<long long>>> tab;

  long long get(int i, int j, long long u) const {
    if (u <= 0) return 0;
    return tab[i][j][static_cast<int>(u % period)];
  }
};

// Truncated power-series inversion of E(z) = C(z) z^D (Lemma "small vanish").
CoeffTable invert_series(const GroundData& g);

// Thm. "combinatorial formula" via the tau-orbits; `rep_i`/`rep_j` pick the
// orbit representatives (0 = i_circ of the pack's Q-datum).
long long tilde_c_combinatorial(const CoxeterPack& pack, int i, int j,
                                long long u, int rep_i = 0, int rep_j = 0);

// Numerator of (1 + z^{rh}) C-tilde_ij(z) for types B, C, F, G
// (Thm. "closed B"/"closed C", the F_4 list, the G_2 matrix).
// Throws UnsupportedType for simply-laced types.
LaurentPoly tilde_c_closed(const GroundData& g, int i, int j);

// Table entries recovered from the closed numerator via
// c(u + rh) = -c(u*-conjugate); returns the full CoeffTable.
CoeffTable closed_table(const GroundData& g);

// Lemma "tc1"(2)(3) and Cor. "tc2"(1)-(7), checked over one double period.
std::vector<std::pair<std::string, bool>>
check_tc_properties(const CoeffTable& t);

} // namespace qdc
