#pragma once

#include <map>
#include <string>
#include <utility>

#include "qdc/arquiver.hpp"
#include "qdc/denom.hpp"
#include "qdc/qcm.hpp"

namespace qdc {

// Laurent monomial in the variables Y_{i,p}, (i,p) in I-hat.
struct Monomial {
  std::map<std::pair<int, int>, long long> exps; // (i,p) -> u_{i,p}

  void add(int i, int p, long long k) {
    if (k == 0) return;
    auto key = std::make_pair(i, p);
    auto it = exps.find(key);
    if (it == exps.end())
      exps.emplace(key, k);
    else if ((it->second += k) == 0)
      exps.erase(it);
  }
  Monomial times(const Monomial& o) const {
    Monomial r = *this;
    for (auto& [k, v] : o.exps) r.add(k.first, k.second, v);
    return r;
  }
  bool operator==(const Monomial& o) const { return exps == o.exps; }
  std::string str() const; // "Y[1,0]*Y[2,3]^-1"
};

// Parses the CLI syntax "Y[1,0]*Y[2,3]^-1"; checks I-hat membership.
Monomial parse_monomial(const GroundData& g, const std::string& s);

// The monomial A_{i,p} of Eq. "def A"; precondition (i, p - d_i) in I-hat.
Monomial a_monomial(const GroundData& g, int i, int p);

// Q-weight: sum of u_{i,p} * (-1)^k alpha over phi-bar(i,p) = (alpha, k).
RootVector wt_Q(const CoxeterPack& pack, const Monomial& m);

// Skew pairing of Eq. "def scrN".
long long scrN(const CoeffTable& t, int i, long long p, int j, long long s);
long long scrN_mono(const CoeffTable& t, const Monomial& a, const Monomial& b);

// Product prod_m [m]^{mu_m} with [m] = (q_s^m z; q^{2h^vee})_infty.
struct BlockProduct {
  std::map<long long, long long> mu;

  void add(long long m, long long k) {
    if (k == 0) return;
    auto it = mu.find(m);
    if (it == mu.end())
      mu.emplace(m, k);
    else if ((it->second += k) == 0)
      mu.erase(it);
  }
};

// Block data of the universal coefficient a_{i,j}(z) (Thm. "univ_coeff");
// second member is the exact rational scalar exponent c-tilde_ij = (C^{-1})_ij
// as a reduced fraction (num, den).
std::pair<BlockProduct, std::pair<long long, long long>>
univ_coeff_blocks(const CoeffTable& t, int i, int j);

// Deg and Deg^infty of the shifted block product (shift in q_s units):
// Deg[m] = +1 on 2rh * Z_{<=0}, -1 on 2rh * Z_{>0}; Deg^inf[m] = 1 on 2rh Z.
std::pair<long long, long long>
deg_and_deg_inf(const GroundData& g, const BlockProduct& bp, long long shift);

// Lambda(V_{i,p}, W_{j,s}) = 2 * zero_{z=1}(d) + scrN, with the zero order
// read off as the multiplicity of exponent s - p in the fundamental d_{i,j}.
long long lambda(const CoxeterPack& pack, const CoeffTable& t, int i,
                 long long p, int j, long long s);

// Lambda^infty = -(wt_Q V, wt_Q W), Q-datum independent.
long long lambda_inf(const CoxeterPack& pack, int i, long long p, int j,
                     long long s);

// Block label of a monomial (= wt_Q).
RootVector block_label(const CoxeterPack& pack, const Monomial& m);

// Dual coordinate map (i,p) -> (i*, p + rh) (Prop. "shift hDs").
std::pair<int, long long> dual_coord(const GroundData& g, int i, long long p);

} // namespace qdc
