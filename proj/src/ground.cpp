#include "qdc/ground.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <queue>

#include "qdc/error.hpp"

namespace qdc {

namespace {

// Edge lists of the simply-laced diagrams with Bourbaki labels.
std::vector<std::pair<int, int>> delta_edges(char family, int m) {
  std::vector<std::pair<int, int>> e;
  if (family == 'A') {
    for (int i = 1; i < m; ++i) e.push_back({i, i + 1});
  } else if (family == 'D') {
    for (int i = 1; i + 1 <= m - 2; ++i) e.push_back({i, i + 1});
    e.push_back({m - 2, m - 1});
    e.push_back({m - 2, m});
  } else { // E6, E7, E8: chain 1-3-4-5-...-m with 2 attached to 4
    e.push_back({1, 3});
    for (int i = 3; i < m; ++i) e.push_back({i, i + 1});
    e.push_back({2, 4});
  }
  return e;
}

int dist_from_node1(const GroundData& g, int node) {
  std::vector<int> dist(g.m + 1, -1);
  std::queue<int> bfs;
  dist[1] = 0;
  bfs.push(1);
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop();
    for (int y : g.delta_adj[x])
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        bfs.push(y);
      }
  }
  return dist[node];
}

long long pos_roots_count(char family, int m) {
  switch (family) {
    case 'A': return static_cast<long long>(m) * (m + 1) / 2;
    case 'D': return static_cast<long long>(m) * (m - 1);
    default: return m == 6 ? 36 : (m == 7 ? 63 : 120);
  }
}

int dual_coxeter_number(LieType t) {
  switch (t.family) {
    case 'A': return t.rank + 1;
    case 'B': return 2 * t.rank - 1;
    case 'C': return t.rank + 1;
    case 'D': return 2 * t.rank - 2;
    case 'E': return t.rank == 6 ? 12 : (t.rank == 7 ? 18 : 30);
    case 'F': return 9;
    default: return 4; // G2
  }
}

} // namespace

LieType LieType::parse(const std::string& s) {
  if (s.size() < 2)
    throw DomainError("BadLieType", "expected a family letter and a rank");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  int rank = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw DomainError("BadLieType", "bad rank in '" + s + "'");
    rank = rank * 10 + (s[k] - '0');
  }
  LieType t{f, rank};
  bool ok = false;
  switch (f) {
    case 'A': ok = rank >= 1; break;
    case 'B':
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok) throw DomainError("BadLieType", "invalid type '" + s + "'");
  return t;
}

std::string LieType::str() const {
  return std::string(1, family) + std::to_string(rank);
}

GroundData make_ground(LieType t) {
  t = LieType::parse(t.str()); // re-validate rank bounds
  GroundData g;
  g.type = t;
  int n = t.rank;
  g.n = n;

  char uf; // unfolded family
  switch (t.family) {
    case 'B': uf = 'A'; g.m = 2 * n - 1; g.r = 2; break;
    case 'C': uf = 'D'; g.m = n + 1; g.r = 2; break;
    case 'F': uf = 'E'; g.m = 6; g.r = 2; break;
    case 'G': uf = 'D'; g.m = 4; g.r = 3; break;
    default: uf = t.family; g.m = n; g.r = 1; break;
  }

  g.delta_adj.assign(g.m + 1, {});
  g.cartan_s.assign(g.m + 1, std::vector<int>(g.m + 1, 0));
  for (int i = 1; i <= g.m; ++i) g.cartan_s[i][i] = 2;
  for (auto [a, b] : delta_edges(uf, g.m)) {
    g.delta_adj[a].push_back(b);
    g.delta_adj[b].push_back(a);
    g.cartan_s[a][b] = g.cartan_s[b][a] = -1;
  }
  for (int i = 1; i <= g.m; ++i)
    std::sort(g.delta_adj[i].begin(), g.delta_adj[i].end());

  // sigma and the orbit labels of Eq. "diagram foldings".
  g.sigma.assign(g.m + 1, 0);
  g.orbit_of.assign(g.m + 1, 0);
  for (int i = 1; i <= g.m; ++i) g.sigma[i] = i;
  switch (t.family) {
    case 'B':
      for (int i = 1; i <= g.m; ++i) {
        g.sigma[i] = 2 * n - i;
        g.orbit_of[i] = std::min(i, 2 * n - i);
      }
      break;
    case 'C':
      g.sigma[n] = n + 1;
      g.sigma[n + 1] = n;
      for (int i = 1; i <= g.m; ++i) g.orbit_of[i] = std::min(i, n);
      break;
    case 'F':
      g.sigma[1] = 6; g.sigma[6] = 1;
      g.sigma[3] = 5; g.sigma[5] = 3;
      g.orbit_of[1] = g.orbit_of[6] = 1;
      g.orbit_of[3] = g.orbit_of[5] = 2;
      g.orbit_of[4] = 3;
      g.orbit_of[2] = 4;
      break;
    case 'G':
      g.sigma[1] = 3; g.sigma[3] = 4; g.sigma[4] = 1;
      g.orbit_of[1] = g.orbit_of[3] = g.orbit_of[4] = 1;
      g.orbit_of[2] = 2;
      break;
    default:
      for (int i = 1; i <= g.m; ++i) g.orbit_of[i] = i;
      break;
  }

  g.d.assign(n + 1, 0);
  for (int i = 1; i <= g.m; ++i) g.d[g.orbit_of[i]] += 1;
  g.r_i.assign(n + 1, 0);
  for (int i = 1; i <= n; ++i) g.r_i[i] = g.r / g.d[i];

  // Folded Cartan matrix: c_ij = -ceil(d_j / d_i) on edges.
  g.cartan_g.assign(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i) g.cartan_g[i][i] = 2;
  for (int a = 1; a <= g.m; ++a)
    for (int b : g.delta_adj[a]) {
      int i = g.orbit_of[a], j = g.orbit_of[b];
      if (i != j)
        g.cartan_g[i][j] = -((g.d[j] + g.d[i] - 1) / g.d[i]);
    }

  g.dual_coxeter = dual_coxeter_number(t);
  g.num_pos_roots = pos_roots_count(uf, g.m);

  // The involution * on Delta_0 (hard-coded; cross-checked against w0 in the
  // weyl tests).
  g.star_delta.assign(g.m + 1, 0);
  for (int i = 1; i <= g.m; ++i) g.star_delta[i] = i;
  if (uf == 'A') {
    for (int i = 1; i <= g.m; ++i) g.star_delta[i] = g.m + 1 - i;
  } else if (uf == 'D' && g.m % 2 == 1) {
    g.star_delta[g.m - 1] = g.m;
    g.star_delta[g.m] = g.m - 1;
  } else if (uf == 'E' && g.m == 6) {
    g.star_delta[1] = 6; g.star_delta[6] = 1;
    g.star_delta[3] = 5; g.star_delta[5] = 3;
  }
  g.star_I.assign(n + 1, 0);
  for (int i = 1; i <= g.m; ++i)
    g.star_I[g.orbit_of[i]] = g.orbit_of[g.star_delta[i]];

  // Canonical height function (see the §3.3 conventions; ADE alternates
  // sinks and sources starting from node 1).
  g.canonical_xi.assign(g.m + 1, 0);
  switch (t.family) {
    case 'B':
      for (int i = 1; i < n; ++i) g.canonical_xi[i] = -2 * i + 4;
      g.canonical_xi[n] = -2 * n + 5;
      for (int k = n + 1; k <= 2 * n - 1; ++k)
        g.canonical_xi[k] = 2 * k - 4 * n + 2;
      break;
    case 'C':
      for (int k = 1; k <= n; ++k) g.canonical_xi[k] = 1 - k;
      g.canonical_xi[n + 1] = -n - 1;
      break;
    case 'F': {
      const int xi[7] = {0, 20, 18, 18, 17, 16, 18};
      for (int i = 1; i <= 6; ++i) g.canonical_xi[i] = xi[i];
      break;
    }
    case 'G': {
      const int xi[5] = {0, 10, 11, 8, 6};
      for (int i = 1; i <= 4; ++i) g.canonical_xi[i] = xi[i];
      break;
    }
    default:
      for (int i = 1; i <= g.m; ++i)
        g.canonical_xi[i] = -(dist_from_node1(g, i) % 2);
      break;
  }

  // epsilon = canonical xi mod 2 d_bar, per orbit node.
  g.epsilon_delta.assign(g.m + 1, 0);
  for (int i = 1; i <= g.m; ++i) {
    int mod = 2 * g.d_bar(i);
    g.epsilon_delta[i] = ((g.canonical_xi[i] % mod) + mod) % mod;
  }
  g.epsilon_I.assign(n + 1, 0);
  for (int i = 1; i <= g.m; ++i)
    g.epsilon_I[g.orbit_of[i]] = g.epsilon_delta[i] % 2;

  return g;
}

std::vector<std::pair<std::string, bool>>
check_ground_invariants(const GroundData& g) {
  std::vector<std::pair<std::string, bool>> rep;
  auto add = [&rep](const std::string& name, bool ok) {
    rep.push_back({name, ok});
  };

  bool no_adjacent_orbit = true;
  for (int i = 1; i <= g.m; ++i)
    if (g.sigma[i] != i && g.adjacent(i, g.sigma[i])) no_adjacent_orbit = false;
  add("sigma has no node adjacent to its image", no_adjacent_orbit);

  bool sigma_order = true;
  for (int i = 1; i <= g.m; ++i) {
    int x = i;
    for (int k = 0; k < g.r; ++k) x = g.sigma[x];
    if (x != i) sigma_order = false;
  }
  add("sigma^r = id", sigma_order);

  bool cartan_ok = true;
  for (int i = 1; i <= g.n && cartan_ok; ++i)
    for (int j = 1; j <= g.n; ++j) {
      int expect = 0;
      if (i == j)
        expect = 2;
      else if (g.cartan_g[i][j] != 0)
        expect = -((g.d[j] + g.d[i] - 1) / g.d[i]);
      if (g.cartan_g[i][j] != expect) {
        cartan_ok = false;
        break;
      }
    }
  add("c_ij = 2, -ceil(d_j/d_i), or 0", cartan_ok);

  bool dc_symm = true;
  for (int i = 1; i <= g.n; ++i)
    for (int j = 1; j <= g.n; ++j)
      if (static_cast<long long>(g.d[i]) * g.cartan_g[i][j] !=
          static_cast<long long>(g.d[j]) * g.cartan_g[j][i])
        dc_symm = false;
  add("d_i c_ij = d_j c_ji", dc_symm);

  add("n r h^vee = 2N", static_cast<long long>(g.n) * g.r * g.dual_coxeter ==
                            2 * g.num_pos_roots);

  // Lemma "parity" congruences with xi replaced by epsilon.
  bool eps_ok = true;
  for (int i = 1; i <= g.m; ++i) {
    int di = 2 * g.d_bar(i);
    int want = ((g.epsilon_delta[i] - 2) % di + di) % di;
    if (g.epsilon_delta[g.sigma[i]] != want) eps_ok = false;
    for (int j : g.delta_adj[i]) {
      int mn = std::min(g.d_bar(i), g.d_bar(j));
      if (((g.epsilon_delta[i] - g.epsilon_delta[j] - mn) % (2 * mn) + 2 * mn) %
              (2 * mn) !=
          0)
        eps_ok = false;
    }
  }
  add("epsilon satisfies the sigma-parity congruences", eps_ok);

  bool eps_range = true;
  for (int i = 1; i <= g.m; ++i)
    if (g.epsilon_delta[i] < 0 || g.epsilon_delta[i] >= 2 * g.d_bar(i))
      eps_range = false;
  add("epsilon in [0, 2 d_bar)", eps_range);

  bool star_ok = true;
  if (g.r > 1) {
    bool star_is_sigma = true, star_is_id = true;
    for (int i = 1; i <= g.m; ++i) {
      if (g.star_delta[i] != g.sigma[i]) star_is_sigma = false;
      if (g.star_delta[i] != i) star_is_id = false;
    }
    star_ok = (g.dual_coxeter % 2 == 0) ? star_is_id : star_is_sigma;
    for (int i = 1; i <= g.n; ++i)
      if (g.star_I[i] != i) star_ok = false;
  }
  add("star matches the h^vee parity rule; star_I = id when folded", star_ok);

  // The canonical height function is itself congruent to epsilon.
  bool xi_eps = true;
  for (int i = 1; i <= g.m; ++i) {
    int mod = 2 * g.d_bar(i);
    if (((g.canonical_xi[i] - g.epsilon_delta[i]) % mod + mod) % mod != 0)
      xi_eps = false;
  }
  add("canonical xi = epsilon mod 2 d_bar", xi_eps);

  return rep;
}

std::vector<LieType> all_types_up_to_rank(int max_rank) {
  std::vector<LieType> out;
  for (int k = 1; k <= max_rank; ++k) out.push_back({'A', k});
  for (int k = 2; k <= max_rank; ++k) out.push_back({'B', k});
  for (int k = 2; k <= max_rank; ++k) out.push_back({'C', k});
  for (int k = 4; k <= max_rank; ++k) out.push_back({'D', k});
  for (int k = 6; k <= std::min(8, max_rank); ++k) out.push_back({'E', k});
  if (max_rank >= 4) out.push_back({'F', 4});
  if (max_rank >= 2) out.push_back({'G', 2});
  return out;
}

} // namespace qdc
