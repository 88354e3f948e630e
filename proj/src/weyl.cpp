#include "qdc/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qdc/error.hpp"

namespace qdc {

namespace {

long long llgcd(long long a, long long b) {
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

// Small exact rational for the basis-change solve (values stay tiny).
struct Frac {
  long long n = 0, d = 1;
  void reduce() {
    if (d < 0) { n = -n; d = -d; }
    long long g = llgcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
  }
};

Frac make_frac(long long n, long long d = 1) {
  Frac f{n, d};
  f.reduce();
  return f;
}
Frac fadd(Frac a, Frac b) { return make_frac(a.n * b.d + b.n * a.d, a.d * b.d); }
Frac fmul(Frac a, Frac b) { return make_frac(a.n * b.n, a.d * b.d); }
Frac fneg(Frac a) { return make_frac(-a.n, a.d); }
Frac fdiv(Frac a, Frac b) { return make_frac(a.n * b.d, a.d * b.n); }

} // namespace

Weight zero_weight(const GroundData& g) {
  return Weight{std::vector<long long>(g.m + 1, 0)};
}

Weight fundamental_weight(const GroundData& g, int node) {
  Weight w = zero_weight(g);
  w.c[node] = 1;
  return w;
}

Weight add(const Weight& x, const Weight& y) {
  Weight r = x;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += y.c[i];
  return r;
}

Weight sub(const Weight& x, const Weight& y) {
  Weight r = x;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= y.c[i];
  return r;
}

Weight neg(const Weight& x) {
  Weight r = x;
  for (auto& v : r.c) v = -v;
  return r;
}

RootVector add(const RootVector& x, const RootVector& y) {
  RootVector r = x;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += y.c[i];
  return r;
}

RootVector neg(const RootVector& x) {
  RootVector r = x;
  for (auto& v : r.c) v = -v;
  return r;
}

RootVector simple_root(const GroundData& g, int node) {
  RootVector b{std::vector<long long>(g.m + 1, 0)};
  b.c[node] = 1;
  return b;
}

Weight simple_reflect(const GroundData& g, int node, const Weight& w) {
  // alpha_node = sum_j c_s[j][node] pi_j; s(w) = w - w_node * alpha_node.
  Weight r = w;
  long long k = w.c[node];
  if (k == 0) return r;
  for (int j = 1; j <= g.m; ++j) r.c[j] -= k * g.cartan_s[j][node];
  return r;
}

Weight sigma_apply(const GroundData& g, int k, const Weight& w) {
  k = ((k % g.r) + g.r) % g.r;
  Weight r = w;
  for (int t = 0; t < k; ++t) {
    Weight s = zero_weight(g);
    for (int i = 1; i <= g.m; ++i) s.c[g.sigma[i]] = r.c[i];
    r = s;
  }
  return r;
}

Weight act(const GroundData& g, const SignedExtWeylElt& e, const Weight& w) {
  Weight r = sigma_apply(g, e.sigma_power, w);
  for (auto it = e.word.rbegin(); it != e.word.rend(); ++it)
    r = simple_reflect(g, *it, r);
  return r;
}

RootVector act_root(const GroundData& g, const SignedExtWeylElt& e,
                    const RootVector& b) {
  return to_root_basis(g, act(g, e, from_root_basis(g, b)));
}

SignedExtWeylElt identity_elt() { return SignedExtWeylElt{}; }

SignedExtWeylElt compose(const GroundData& g, const SignedExtWeylElt& a,
                         const SignedExtWeylElt& b) {
  // a b = (word_a) sigma^{ka} (word_b) sigma^{kb}
  //     = (word_a) (sigma^{ka} word_b) sigma^{ka + kb}.
  SignedExtWeylElt r;
  r.word = a.word;
  int ka = ((a.sigma_power % g.r) + g.r) % g.r;
  for (int letter : b.word) {
    int x = letter;
    for (int t = 0; t < ka; ++t) x = g.sigma[x];
    r.word.push_back(x);
  }
  r.sigma_power = (ka + b.sigma_power % g.r + g.r) % g.r;
  return r;
}

SignedExtWeylElt inverse(const GroundData& g, const SignedExtWeylElt& a) {
  // (w sigma^k)^{-1} = sigma^{-k} w^{-1} = (sigma^{-k} w^{-1}) sigma^{-k}.
  SignedExtWeylElt r;
  int k = ((a.sigma_power % g.r) + g.r) % g.r;
  int kinv = (g.r - k) % g.r;
  for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) {
    int x = *it;
    for (int t = 0; t < kinv; ++t) x = g.sigma[x];
    r.word.push_back(x);
  }
  r.sigma_power = kinv;
  return r;
}

ActionMatrix action_matrix(const GroundData& g, const SignedExtWeylElt& e) {
  ActionMatrix mat;
  mat.a.assign(g.m + 1, std::vector<long long>(g.m + 1, 0));
  for (int j = 1; j <= g.m; ++j) {
    Weight col = act(g, e, fundamental_weight(g, j));
    for (int i = 1; i <= g.m; ++i) mat.a[i][j] = col.c[i];
  }
  return mat;
}

ActionMatrix identity_matrix(const GroundData& g) {
  ActionMatrix mat;
  mat.a.assign(g.m + 1, std::vector<long long>(g.m + 1, 0));
  for (int i = 1; i <= g.m; ++i) mat.a[i][i] = 1;
  return mat;
}

ActionMatrix mat_mul(const ActionMatrix& x, const ActionMatrix& y) {
  std::size_t m = x.a.size();
  ActionMatrix r;
  r.a.assign(m, std::vector<long long>(m, 0));
  for (std::size_t i = 1; i < m; ++i)
    for (std::size_t k = 1; k < m; ++k) {
      long long v = x.a[i][k];
      if (v == 0) continue;
      for (std::size_t j = 1; j < m; ++j) r.a[i][j] += v * y.a[k][j];
    }
  return r;
}

Weight mat_apply(const ActionMatrix& x, const Weight& w) {
  std::size_t m = x.a.size();
  Weight r{std::vector<long long>(m, 0)};
  for (std::size_t i = 1; i < m; ++i)
    for (std::size_t j = 1; j < m; ++j) r.c[i] += x.a[i][j] * w.c[j];
  return r;
}

bool is_minus_identity(const ActionMatrix& x) {
  std::size_t m = x.a.size();
  for (std::size_t i = 1; i < m; ++i)
    for (std::size_t j = 1; j < m; ++j)
      if (x.a[i][j] != (i == j ? -1 : 0)) return false;
  return true;
}

int matrix_order(const ActionMatrix& x, int cap) {
  ActionMatrix p = x;
  std::size_t m = x.a.size();
  auto is_id = [m](const ActionMatrix& y) {
    for (std::size_t i = 1; i < m; ++i)
      for (std::size_t j = 1; j < m; ++j)
        if (y.a[i][j] != (i == j ? 1 : 0)) return false;
    return true;
  };
  for (int k = 1; k <= cap; ++k) {
    if (is_id(p)) return k;
    p = mat_mul(p, x);
  }
  return 0;
}

bool same_action(const GroundData& g, const SignedExtWeylElt& a,
                 const SignedExtWeylElt& b) {
  for (int j = 1; j <= g.m; ++j)
    if (!(act(g, a, fundamental_weight(g, j)) ==
          act(g, b, fundamental_weight(g, j))))
      return false;
  return true;
}

long long pairing(const Weight& a, const RootVector& b) {
  long long s = 0;
  for (std::size_t i = 1; i < a.c.size(); ++i) s += a.c[i] * b.c[i];
  return s;
}

long long root_pairing(const GroundData& g, const RootVector& a,
                       const RootVector& b) {
  long long s = 0;
  for (int i = 1; i <= g.m; ++i)
    for (int j = 1; j <= g.m; ++j) s += a.c[i] * g.cartan_s[i][j] * b.c[j];
  return s;
}

Weight from_root_basis(const GroundData& g, const RootVector& b) {
  // pi-coords of sum b_j alpha_j: a_i = sum_j c_s[i][j] b_j.
  Weight w = zero_weight(g);
  for (int i = 1; i <= g.m; ++i)
    for (int j = 1; j <= g.m; ++j) w.c[i] += g.cartan_s[i][j] * b.c[j];
  return w;
}

RootVector to_root_basis(const GroundData& g, const Weight& w) {
  // Solve cartan_s * x = w exactly by fraction-free-ish Gaussian elimination.
  int m = g.m;
  std::vector<std::vector<Frac>> aug(m, std::vector<Frac>(m + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) aug[i][j] = make_frac(g.cartan_s[i + 1][j + 1]);
    aug[i][m] = make_frac(w.c[i + 1]);
  }
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int row = col; row < m; ++row)
      if (aug[row][col].n != 0) { piv = row; break; }
    if (piv < 0)
      throw DomainError("SingularCartan", "Cartan matrix not invertible");
    std::swap(aug[col], aug[piv]);
    Frac p = aug[col][col];
    for (int j = col; j <= m; ++j) aug[col][j] = fdiv(aug[col][j], p);
    for (int row = 0; row < m; ++row) {
      if (row == col || aug[row][col].n == 0) continue;
      Frac f = aug[row][col];
      for (int j = col; j <= m; ++j)
        aug[row][j] = fadd(aug[row][j], fneg(fmul(f, aug[col][j])));
    }
  }
  RootVector b{std::vector<long long>(m + 1, 0)};
  for (int i = 0; i < m; ++i) {
    if (aug[i][m].d != 1)
      throw DomainError("NotInRootLattice",
                        "weight is not in the root lattice Q");
    b.c[i + 1] = aug[i][m].n;
  }
  return b;
}

bool is_positive(const RootVector& b) {
  bool nonzero = false;
  for (std::size_t i = 1; i < b.c.size(); ++i) {
    if (b.c[i] < 0) return false;
    if (b.c[i] > 0) nonzero = true;
  }
  return nonzero;
}

std::vector<RootVector> positive_roots(const GroundData& g) {
  // Orbit closure of the simple roots under simple reflections in the
  // alpha-basis, keeping the positive ones.
  std::set<RootVector> seen;
  std::vector<RootVector> queue;
  for (int i = 1; i <= g.m; ++i) {
    seen.insert(simple_root(g, i));
    queue.push_back(simple_root(g, i));
  }
  while (!queue.empty()) {
    RootVector b = queue.back();
    queue.pop_back();
    for (int i = 1; i <= g.m; ++i) {
      long long pair = 0;
      for (int j = 1; j <= g.m; ++j) pair += g.cartan_s[i][j] * b.c[j];
      RootVector nb = b;
      nb.c[i] -= pair;
      if (is_positive(nb) && seen.insert(nb).second) queue.push_back(nb);
    }
  }
  return std::vector<RootVector>(seen.begin(), seen.end());
}

std::vector<RootVector> roots_of_word(const GroundData& g,
                                      const std::vector<int>& word) {
  std::vector<RootVector> betas;
  betas.reserve(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) {
    RootVector b = simple_root(g, word[k]);
    for (std::size_t t = k; t-- > 0;) {
      // apply s_{word[t]} in alpha-coords
      long long pair = 0;
      for (int j = 1; j <= g.m; ++j) pair += g.cartan_s[word[t]][j] * b.c[j];
      b.c[word[t]] -= pair;
    }
    betas.push_back(b);
  }
  return betas;
}

std::vector<RootVector> roots_of_reduced_word(const GroundData& g,
                                              const std::vector<int>& word) {
  auto betas = roots_of_word(g, word);
  for (std::size_t k = 0; k < betas.size(); ++k)
    if (!is_positive(betas[k]))
      throw DomainError("NotReduced", "word is not reduced (beta_" +
                                          std::to_string(k + 1) +
                                          " is negative)");
  return betas;
}

bool is_reduced(const GroundData& g, const std::vector<int>& word) {
  auto betas = roots_of_word(g, word);
  for (auto& b : betas)
    if (!is_positive(b)) return false;
  return true;
}

std::vector<int> longest_word(const GroundData& g) {
  // Walk rho down to the antidominant chamber, recording the reflections.
  Weight lam{std::vector<long long>(g.m + 1, 1)};
  lam.c[0] = 0;
  std::vector<int> word;
  for (;;) {
    int pick = 0;
    for (int i = 1; i <= g.m; ++i)
      if (lam.c[i] > 0) { pick = i; break; }
    if (pick == 0) break;
    lam = simple_reflect(g, pick, lam);
    word.push_back(pick);
  }
  return word;
}

} // namespace qdc
