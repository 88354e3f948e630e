#include "qdc/coxeter.hpp"

#include <algorithm>
#include <string>

#include "qdc/error.hpp"

namespace qdc {

namespace {

long long lmod(long long a, long long m) { return ((a % m) + m) % m; }

} // namespace

const RootVector& CoxeterPack::tau_pow_gamma(int node, long long k) const {
  return orbit_alpha[node][lmod(k, rh())];
}

const Weight& CoxeterPack::tau_pow_gamma_pi(int node, long long k) const {
  return orbit_pi[node][lmod(k, rh())];
}

CoxeterPack build_coxeter(const QDatum& q) {
  const GroundData& g = *q.g;
  CoxeterPack pack;
  pack.q = q;

  // i_circ[i]: the node of orbit i of maximal height.
  pack.i_circ.assign(g.n + 1, 0);
  for (int v = 1; v <= g.m; ++v) {
    int& best = pack.i_circ[g.orbit_of[v]];
    if (best == 0 || q.xi[v] > q.xi[best]) best = v;
  }

  std::vector<RQVertex> x_circ;
  for (int i = 1; i <= g.n; ++i)
    x_circ.push_back({pack.i_circ[i], q.xi[pack.i_circ[i]]});

  pack.tau_circ = w_of(g, x_circ);
  pack.tau_circ.sigma_power = 1 % g.r;

  // X' fills the gap between sigma(i_circ) and the top of its orbit.
  for (int i = 1; i <= g.n; ++i) {
    int ic = pack.i_circ[i];
    int sic = g.sigma[ic];
    for (int p = q.xi[sic] + 1; p <= q.xi[ic] - 2; ++p)
      if (in_rep_quiver(g, {sic, p})) pack.x_prime.push_back({sic, p});
  }
  pack.x_prime = canonical_reading(g, pack.x_prime);

  SignedExtWeylElt wxp = w_of(g, pack.x_prime);
  pack.tau = compose(g, compose(g, inverse(g, wxp), pack.tau_circ), wxp);

  std::vector<RQVertex> x_q;
  for (int v = 1; v <= g.m; ++v)
    for (int k = 0; k < g.r_i[g.orbit_of[v]]; ++k)
      x_q.push_back({v, q.xi[v] - 2 * k * g.d_bar(v)});
  pack.tau_breve = w_of(g, x_q);

  pack.tau_mat = action_matrix(g, pack.tau);

  // Prop. "conjugation": tau^r = tau_breve, ord(tau) = r h^vee, and
  // tau^{rh/2} = -1 in the twisted cases.
  ActionMatrix tau_r = identity_matrix(g);
  for (int t = 0; t < g.r; ++t) tau_r = mat_mul(tau_r, pack.tau_mat);
  if (!(tau_r == action_matrix(g, pack.tau_breve)))
    throw DomainError("CoxeterMismatch", "tau^r differs from tau_breve");
  int rh = g.rh();
  if (matrix_order(pack.tau_mat, rh) != rh)
    throw DomainError("CoxeterMismatch",
                      "tau does not have order " + std::to_string(rh));
  if (g.r > 1) {
    ActionMatrix half = identity_matrix(g);
    for (int t = 0; t < rh / 2; ++t) half = mat_mul(half, pack.tau_mat);
    if (!is_minus_identity(half))
      throw DomainError("CoxeterMismatch", "tau^{rh/2} is not -1");
  }

  // gamma_node = (1 - tau^{d_bar}) pi_node, a positive root; then the full
  // tau-orbit of each gamma, memoized in both bases.
  pack.gamma_pi.assign(g.m + 1, Weight{});
  pack.gamma_alpha.assign(g.m + 1, RootVector{});
  pack.orbit_pi.assign(g.m + 1, {});
  pack.orbit_alpha.assign(g.m + 1, {});
  for (int v = 1; v <= g.m; ++v) {
    Weight w = fundamental_weight(g, v);
    Weight img = w;
    for (int t = 0; t < g.d_bar(v); ++t) img = mat_apply(pack.tau_mat, img);
    pack.gamma_pi[v] = sub(w, img);
    pack.gamma_alpha[v] = to_root_basis(g, pack.gamma_pi[v]);
    if (!is_positive(pack.gamma_alpha[v]))
      throw DomainError("CoxeterMismatch",
                        "gamma_" + std::to_string(v) +
                            " is not a positive root");
    pack.orbit_pi[v].reserve(rh);
    pack.orbit_alpha[v].reserve(rh);
    Weight cur = pack.gamma_pi[v];
    for (int k = 0; k < rh; ++k) {
      pack.orbit_pi[v].push_back(cur);
      pack.orbit_alpha[v].push_back(to_root_basis(g, cur));
      cur = mat_apply(pack.tau_mat, cur);
    }
  }
  return pack;
}

RootVector gamma(const CoxeterPack& pack, int node) {
  return pack.gamma_alpha[node];
}

bool check_reflection_compat(const QDatum& q, int node) {
  const GroundData& g = *q.g;
  if (!is_source(q, node))
    throw DomainError("NotASource",
                      "node " + std::to_string(node) +
                          " is not a source of the height function");
  CoxeterPack before = build_coxeter(q);
  CoxeterPack after = build_coxeter(reflect(q, node));

  // s_node tau_Q s_node = tau_{s_node Q}.
  SignedExtWeylElt s;
  s.word = {node};
  SignedExtWeylElt conj = compose(g, compose(g, s, before.tau), s);
  if (!(action_matrix(g, conj) == after.tau_mat)) return false;

  // At a source, gamma_node is the simple root alpha_node.
  return before.gamma_alpha[node] == simple_root(g, node);
}

bool twisted_coxeter_condition(const QDatum& q) {
  const GroundData& g = *q.g;
  std::vector<int> i_circ(g.n + 1, 0);
  for (int v = 1; v <= g.m; ++v) {
    int& best = i_circ[g.orbit_of[v]];
    if (best == 0 || q.xi[v] > q.xi[best]) best = v;
  }
  for (int i = 1; i <= g.n; ++i) {
    int node = i_circ[i];
    for (int k = 0; k < g.d[i]; ++k) {
      int img = node;
      for (int t = 0; t < k; ++t) img = g.sigma[img];
      if (q.xi[img] != q.xi[node] - 2 * k) return false;
    }
  }
  return true;
}

} // namespace qdc
