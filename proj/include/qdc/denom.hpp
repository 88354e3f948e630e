#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdc/qcm.hpp"

namespace qdc {

// Denominator polynomial prod_u (z - q_s^u)^{m_u} as an exponent multiset.
// Scalar units are dropped throughout (the paper's formulas are up to units).
struct QsExpPoly {
  std::map<long long, long long> mult; // exponent -> multiplicity >= 1

  void add(long long e, long long k = 1) {
    if (k == 0) return;
    auto it = mult.find(e);
    if (it == mult.end())
      mult.emplace(e, k);
    else if ((it->second += k) == 0)
      mult.erase(it);
  }
  // Shift z -> q_s^{-b} z, i.e. add b to every exponent.
  QsExpPoly shifted(long long b) const {
    QsExpPoly r;
    for (auto& [e, k] : mult) r.mult.emplace(e + b, k);
    return r;
  }
  QsExpPoly times(const QsExpPoly& o) const {
    QsExpPoly r = *this;
    for (auto& [e, k] : o.mult) r.add(e, k);
    return r;
  }
  long long multiplicity(long long e) const {
    auto it = mult.find(e);
    return it == mult.end() ? 0 : it->second;
  }
  long long degree() const {
    long long s = 0;
    for (auto& [e, k] : mult) s += k;
    return s;
  }
  bool divides(const QsExpPoly& o) const {
    for (auto& [e, k] : mult)
      if (o.multiplicity(e) < k) return false;
    return true;
  }
  bool operator==(const QsExpPoly& o) const { return mult == o.mult; }
  std::string str() const; // "(z - qs^2)(z - qs^8)^2" style
};

enum class DenomFlag { theorem, conjectural, exception };

struct DenomResult {
  QsExpPoly value;           // the returned denominator
  DenomFlag flag;
  QsExpPoly unified_product; // RHS of the unified formula (always filled)
};

// Unified KR denominator d_{i^l, j^m}(z) (Conjecture/Thm. "unified").
// Swaps the arguments when l d_i < m d_j; on the exceptions EX1-EX3 the
// appendix value is returned as `value` with the unified product alongside.
DenomResult unified_denominator(const CoeffTable& t, int i, int l, int j,
                                int m);

// The Appendix A case-by-case catalogue; throws NotInCatalogue when the pair
// (type, i, l, j, m) is not covered by a listed formula.
QsExpPoly appendix_denominator(const GroundData& g, int i, int l, int j,
                               int m);
bool in_catalogue(const GroundData& g, int i, int l, int j, int m);

// Sweeps l, m <= lmax/mmax: unified == appendix on theorem cases, appendix
// divides unified on exceptions, Prop. "generalization" on catalogued pairs.
std::vector<std::pair<std::string, bool>>
verify_unified(const GroundData& g, const CoeffTable& t, int lmax, int mmax);

} // namespace qdc
