#include "qdc/invariants.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <string>

#include "qdc/error.hpp"

namespace qdc {

namespace {

long long lmod(long long a, long long m) { return ((a % m) + m) % m; }

bool in_ihat(const GroundData& g, int i, long long p) {
  return i >= 1 && i <= g.n && lmod(p - g.epsilon_I[i], 2) == 0;
}

} // namespace

std::string Monomial::str() const {
  if (exps.empty()) return "1";
  std::string s;
  bool first = true;
  for (auto& [key, v] : exps) {
    if (!first) s += "*";
    first = false;
    s += "Y[" + std::to_string(key.first) + "," + std::to_string(key.second) +
         "]";
    if (v != 1) s += "^" + std::to_string(v);
  }
  return s;
}

Monomial parse_monomial(const GroundData& g, const std::string& s) {
  Monomial m;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw DomainError("BadMonomial", "expected '" + std::string(1, c) +
                                           "' at position " +
                                           std::to_string(pos) + " in \"" + s +
                                           "\"");
    ++pos;
  };
  auto read_int = [&]() -> long long {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw DomainError("BadMonomial", "expected an integer at position " +
                                           std::to_string(start) + " in \"" +
                                           s + "\"");
    return std::stoll(s.substr(start, pos - start));
  };
  skip_ws();
  if (pos < s.size() && s[pos] == '1' && pos + 1 == s.size()) return m;
  for (;;) {
    expect('Y');
    expect('[');
    long long i = read_int();
    expect(',');
    long long p = read_int();
    expect(']');
    long long k = 1;
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      k = read_int();
    }
    if (!in_ihat(g, static_cast<int>(i), p))
      throw DomainError("ParityError",
                        "(" + std::to_string(i) + "," + std::to_string(p) +
                            ") is not in I-hat");
    m.add(static_cast<int>(i), static_cast<int>(p), k);
    skip_ws();
    if (pos >= s.size()) break;
    expect('*');
  }
  return m;
}

Monomial a_monomial(const GroundData& g, int i, int p) {
  if (!in_ihat(g, i, p - g.d[i]))
    throw DomainError("ParityError",
                      "(" + std::to_string(i) + "," +
                          std::to_string(p - g.d[i]) + ") is not in I-hat");
  Monomial m;
  m.add(i, p - g.d[i], 1);
  m.add(i, p + g.d[i], 1);
  for (int j = 1; j <= g.n; ++j) {
    if (j == i) continue;
    switch (g.cartan_g[j][i]) {
    case -1:
      m.add(j, p, -1);
      break;
    case -2:
      m.add(j, p - 1, -1);
      m.add(j, p + 1, -1);
      break;
    case -3:
      m.add(j, p - 2, -1);
      m.add(j, p, -1);
      m.add(j, p + 2, -1);
      break;
    default:
      break;
    }
  }
  return m;
}

RootVector wt_Q(const CoxeterPack& pack, const Monomial& m) {
  const GroundData& g = pack.g();
  RootVector w{std::vector<long long>(g.m + 1, 0)};
  for (auto& [key, u] : m.exps) {
    SignedRootIdx sr = phi_bar(pack, {key.first, key.second});
    long long sign = (lmod(sr.k, 2) == 0) ? 1 : -1;
    for (int a = 1; a <= g.m; ++a) w.c[a] += u * sign * sr.root.c[a];
  }
  return w;
}

long long scrN(const CoeffTable& t, int i, long long p, int j, long long s) {
  int d = t.g.d[i];
  return t.get(i, j, p - s - d) - t.get(i, j, p - s + d) -
         t.get(i, j, s - p - d) + t.get(i, j, s - p + d);
}

long long scrN_mono(const CoeffTable& t, const Monomial& a,
                    const Monomial& b) {
  long long sum = 0;
  for (auto& [ka, u] : a.exps)
    for (auto& [kb, v] : b.exps)
      sum += u * v * scrN(t, ka.first, ka.second, kb.first, kb.second);
  return sum;
}

std::pair<BlockProduct, std::pair<long long, long long>>
univ_coeff_blocks(const CoeffTable& t, int i, int j) {
  const GroundData& g = t.g;
  BlockProduct bp;
  for (long long u = 0; u <= 2 * g.rh(); ++u) {
    long long c = t.get(i, j, u);
    bp.add(u - g.d[i], c);
    bp.add(u + g.d[i], -c);
  }
  // Scalar exponent (C^{-1})_ij of the folded Cartan matrix, exact.
  int n = g.n;
  std::vector<std::vector<long long>> num(n, std::vector<long long>(n + 1, 0));
  std::vector<std::vector<long long>> den(n, std::vector<long long>(n + 1, 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) num[r][c] = g.cartan_g[r + 1][c + 1];
    num[r][n] = (r + 1 == j) ? 1 : 0;
  }
  auto reduce = [](long long& a, long long& b) {
    long long x = std::abs(a), y = std::abs(b);
    long long gg = std::gcd(x, y);
    if (gg > 1) { a /= gg; b /= gg; }
    if (b < 0) { a = -a; b = -b; }
  };
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (num[r][col] != 0) { piv = r; break; }
    std::swap(num[col], num[piv]);
    std::swap(den[col], den[piv]);
    long long pn = num[col][col], pd = den[col][col];
    for (int c = col; c <= n; ++c) {
      long long a = num[col][c] * pd, b = den[col][c] * pn;
      reduce(a, b);
      num[col][c] = a;
      den[col][c] = b;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || num[r][col] == 0) continue;
      long long fn = num[r][col], fd = den[r][col];
      for (int c = col; c <= n; ++c) {
        long long a = num[r][c] * fd * den[col][c] -
                      fn * num[col][c] * den[r][c];
        long long b = den[r][c] * fd * den[col][c];
        reduce(a, b);
        num[r][c] = a;
        den[r][c] = b;
      }
    }
  }
  long long sn = num[i - 1][n], sd = den[i - 1][n];
  reduce(sn, sd);
  return {bp, {sn, sd}};
}

std::pair<long long, long long>
deg_and_deg_inf(const GroundData& g, const BlockProduct& bp, long long shift) {
  long long period = 2 * g.rh();
  long long deg = 0, deg_inf = 0;
  for (auto& [m, k] : bp.mu) {
    long long x = m + shift;
    if (lmod(x, period) == 0) {
      deg_inf += k;
      deg += (x <= 0) ? k : -k;
    }
  }
  return {deg, deg_inf};
}

long long lambda(const CoxeterPack& pack, const CoeffTable& t, int i,
                 long long p, int j, long long s) {
  const GroundData& g = pack.g();
  if (!in_ihat(g, i, p) || !in_ihat(g, j, s))
    throw DomainError("ParityError", "arguments are not in I-hat");
  QsExpPoly d = appendix_denominator(g, i, 1, j, 1);
  return 2 * d.multiplicity(s - p) + scrN(t, i, p, j, s);
}

long long lambda_inf(const CoxeterPack& pack, int i, long long p, int j,
                     long long s) {
  const GroundData& g = pack.g();
  SignedRootIdx a = phi_bar(pack, {i, static_cast<int>(p)});
  SignedRootIdx b = phi_bar(pack, {j, static_cast<int>(s)});
  long long sign = (lmod(a.k + b.k, 2) == 0) ? 1 : -1;
  return -sign * root_pairing(g, a.root, b.root);
}

RootVector block_label(const CoxeterPack& pack, const Monomial& m) {
  return wt_Q(pack, m);
}

std::pair<int, long long> dual_coord(const GroundData& g, int i,
                                     long long p) {
  return {g.star_I[i], p + g.rh()};
}

} // namespace qdc
