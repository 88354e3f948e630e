#include "qdc/verify.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qdc/arquiver.hpp"
#include "qdc/denom.hpp"
#include "qdc/error.hpp"
#include "qdc/invariants.hpp"

namespace qdc {

namespace {

struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  long long range(long long lo, long long hi) { // inclusive
    return lo + static_cast<long long>(next() % (hi - lo + 1));
  }
};

long long lmod(long long a, long long m) { return ((a % m) + m) % m; }

std::string vs(const std::string& label, long long v) {
  return " " + label + "=" + std::to_string(v);
}

struct Suite {
  SuiteResult res;
  explicit Suite(std::string name) { res.name = std::move(name); }
  void fail(const std::string& witness) {
    if (res.passed) {
      res.passed = false;
      res.witness = witness;
    }
  }
};

} // namespace

std::vector<QDatum> sample_qdata(const GroundData& g, int count,
                                 std::uint64_t seed) {
  Rng rng(seed ^ (static_cast<std::uint64_t>(g.type.family) << 32 ^ g.n));
  std::vector<QDatum> out;
  QDatum cur = validate(g, g.canonical_xi);
  out.push_back(cur);
  while (static_cast<int>(out.size()) < count) {
    // a few random source reflections between snapshots
    int steps = 1 + static_cast<int>(rng.next() % 4);
    for (int t = 0; t < steps; ++t) {
      auto src = sources(cur);
      cur = reflect(cur, src[rng.next() % src.size()]);
    }
    out.push_back(cur);
  }
  return out;
}

std::vector<SuiteResult> verify_type(const GroundData& g,
                                     const CoeffTable& table,
                                     const VerifyBounds& b) {
  std::string ty = g.type.str();
  int rh = g.rh();
  int period = 2 * rh;
  Rng rng(b.seed ^ (static_cast<std::uint64_t>(g.type.family) << 24 ^ g.n));

  std::vector<QDatum> qdata = sample_qdata(g, b.num_qdata, b.seed);
  std::vector<CoxeterPack> packs;
  for (const auto& q : qdata) packs.push_back(build_coxeter(q));

  std::vector<SuiteResult> out;

  { // series, combinatorial and closed values of c-tilde agree
    Suite s("c-tilde three-way agreement [" + ty + "]");
    CoeffTable closed;
    bool have_closed = !g.type.simply_laced();
    if (have_closed) closed = closed_table(g);
    for (const auto& pack : packs)
      for (int i = 1; i <= g.n && s.res.passed; ++i)
        for (int j = 1; j <= g.n && s.res.passed; ++j)
          for (int ri = 1; ri <= g.m; ++ri) {
            if (g.orbit_of[ri] != i) continue;
            for (int rj = 1; rj <= g.m; ++rj) {
              if (g.orbit_of[rj] != j) continue;
              for (long long u = 1; u <= period && s.res.passed; ++u) {
                long long comb =
                    tilde_c_combinatorial(pack, i, j, u, ri, rj);
                if (comb != table.get(i, j, u))
                  s.fail("series vs combinatorial" + vs("i", i) + vs("j", j) +
                         vs("u", u) + vs("rep_i", ri) + vs("rep_j", rj));
                else if (have_closed && comb != closed.get(i, j, u))
                  s.fail("closed form" + vs("i", i) + vs("j", j) + vs("u", u));
              }
            }
          }
    out.push_back(s.res);
  }

  { // the periodicity / symmetry / positivity properties of c-tilde
    Suite s("c-tilde properties [" + ty + "]");
    for (auto& [name, ok] : check_tc_properties(table))
      if (!ok) s.fail(name);
    out.push_back(s.res);
  }

  { // twisted additivity of the tau-orbits
    Suite s("twisted additivity [" + ty + "]");
    const CoxeterPack& pack = packs.front();
    for (int v = 1; v <= g.m && s.res.passed; ++v) {
      int i = g.orbit_of[v];
      for (long long l = 0; l < rh && s.res.passed; ++l) {
        Weight lhs = add(pack.tau_pow_gamma_pi(v, l),
                         pack.tau_pow_gamma_pi(v, l + g.d[i]));
        Weight rhs = zero_weight(g);
        for (int jb = 1; jb <= g.n; ++jb) {
          if (g.cartan_g[jb][i] == 0 || jb == i) continue;
          int w = pack.i_circ[jb];
          int mind = std::min(g.d[i], g.d[jb]);
          long long base =
              l + (pack.q.xi[w] - pack.q.xi[v] + mind) / 2;
          for (int t = 0; t < -g.cartan_g[jb][i]; ++t)
            rhs = add(rhs, pack.tau_pow_gamma_pi(w, base + t));
        }
        if (!(lhs == rhs))
          s.fail("node " + std::to_string(v) + vs("l", l));
      }
    }
    out.push_back(s.res);
  }

  { // orders and reflection compatibility of the Coxeter pack
    Suite s("coxeter structure [" + ty + "]");
    const CoxeterPack& pack = packs.front();
    if (matrix_order(pack.tau_mat, period) != rh)
      s.fail("tau order differs from rh");
    ActionMatrix tr = identity_matrix(g);
    for (int t = 0; t < g.r; ++t) tr = mat_mul(tr, pack.tau_mat);
    if (!(tr == action_matrix(g, pack.tau_breve))) s.fail("tau^r != tau_breve");
    if (g.r > 1) {
      ActionMatrix half = identity_matrix(g);
      for (int t = 0; t < rh / 2; ++t) half = mat_mul(half, pack.tau_mat);
      if (!is_minus_identity(half)) s.fail("tau^{rh/2} != -1");
    }
    for (std::size_t qi = 0; qi < qdata.size(); ++qi) {
      const QDatum& q = qdata[qi];
      for (int v = 1; v <= g.m; ++v) {
        bool src = is_source(q, v);
        if (src && !check_reflection_compat(q, v))
          s.fail("reflection compatibility at node " + std::to_string(v));
        if ((packs[qi].gamma_alpha[v] == simple_root(g, v)) != src)
          s.fail("gamma = alpha iff source fails at node " +
                 std::to_string(v));
      }
    }
    out.push_back(s.res);
  }

  { // the closed-form phi against the stepwise recursion
    Suite s("phi window vs recursion [" + ty + "]");
    for (const auto& pack : packs) {
      for (int t = 0; t < b.random_pairs / 4 + 20; ++t) {
        int v = static_cast<int>(rng.range(1, g.m));
        int d = g.d_bar(v);
        int p = pack.q.xi[v] +
                2 * d * static_cast<int>(rng.range(-2 * rh / d, 2 * rh / d));
        SignedRootIdx a = phi(pack, {v, p});
        SignedRootIdx c = phi_recursive(pack, {v, p});
        if (!(a == c))
          s.fail("node " + std::to_string(v) + vs("p", p));
      }
      // and the anchor phi(node, xi_node) = (gamma_node, 0)
      for (int v = 1; v <= g.m; ++v) {
        SignedRootIdx a = phi(pack, {v, pack.q.xi[v]});
        if (!(a.root == pack.gamma_alpha[v]) || a.k != 0)
          s.fail("anchor at node " + std::to_string(v));
      }
    }
    out.push_back(s.res);
  }

  { // the twisted AR quiver against the combinatorial one
    Suite s("AR quiver correspondence [" + ty + "]");
    for (const auto& pack : packs) {
      try {
        TwistedARQuiver gamma_q = twisted_ar_quiver(pack);
        std::vector<int> word;
        for (const auto& x : gamma_q.vertices) word.push_back(x.node);
        CombARQuiver ups = comb_ar_quiver(g, word);
        for (std::size_t k = 0; k < word.size(); ++k) {
          const auto& x = gamma_q.vertices[k];
          if (!(ups.beta[k] == gamma_q.labels.at(x)))
            s.fail("label mismatch at position " + std::to_string(k));
          if (ups.residue.at(ups.beta[k]) != x.node)
            s.fail("residue mismatch at position " + std::to_string(k));
        }
        std::set<std::pair<RootVector, RootVector>> ga, ua;
        for (const auto& ar : gamma_q.arrows)
          ga.emplace(gamma_q.labels.at(ar.first), gamma_q.labels.at(ar.second));
        for (const auto& ar : ups.arrows)
          ua.emplace(ups.beta[ar.first], ups.beta[ar.second]);
        if (ga != ua) s.fail("arrow sets differ");
      } catch (const DomainError& e) {
        s.fail(e.what());
      }
    }
    out.push_back(s.res);
  }

  { // denominators: unified vs the catalogue, and the r_i-fold formula
    Suite s("denominator formulas [" + ty + "]");
    for (auto& [name, ok] : verify_unified(g, table, b.lmax, b.mmax))
      if (!ok) s.fail(name);
    out.push_back(s.res);
  }

  { // scrN: skew-symmetry and the gamma-weight pairing formula
    Suite s("scrN pairing [" + ty + "]");
    const CoxeterPack& pack = packs.front();
    for (int t = 0; t < b.random_pairs && s.res.passed; ++t) {
      int i = static_cast<int>(rng.range(1, g.n));
      int j = static_cast<int>(rng.range(1, g.n));
      long long p = g.epsilon_I[i] + 2 * rng.range(-period, period);
      long long sv = g.epsilon_I[j] + 2 * rng.range(-period, period);
      if (scrN(table, i, p, j, sv) != -scrN(table, j, sv, i, p))
        s.fail("skew-symmetry" + vs("i", i) + vs("p", p) + vs("j", j) +
               vs("s", sv));
      SignedRootIdx a = phi_bar(pack, {i, static_cast<int>(p)});
      SignedRootIdx c = phi_bar(pack, {j, static_cast<int>(sv)});
      long long expect = 0;
      if (!(a == c)) {
        long long sign = (lmod((p >= sv ? 1 : 0) + a.k + c.k, 2) == 0) ? 1 : -1;
        expect = sign * root_pairing(g, a.root, c.root);
      }
      if (scrN(table, i, p, j, sv) != expect)
        s.fail("gamma-weight pairing" + vs("i", i) + vs("p", p) + vs("j", j) +
               vs("s", sv));
    }
    out.push_back(s.res);
  }

  { // Deg / Deg^infty of the universal coefficient blocks
    Suite s("universal coefficient degrees [" + ty + "]");
    const CoxeterPack& pack = packs.front();
    for (int t = 0; t < b.random_pairs && s.res.passed; ++t) {
      int i = static_cast<int>(rng.range(1, g.n));
      int j = static_cast<int>(rng.range(1, g.n));
      long long p = g.epsilon_I[i] + 2 * rng.range(-period, period);
      long long sv = g.epsilon_I[j] + 2 * rng.range(-period, period);
      BlockProduct bp = univ_coeff_blocks(table, i, j).first;
      auto [deg, deg_inf] = deg_and_deg_inf(g, bp, sv - p);
      if (deg != -scrN(table, i, p, j, sv))
        s.fail("Deg vs scrN" + vs("i", i) + vs("p", p) + vs("j", j) +
               vs("s", sv));
      if (deg_inf != -lambda_inf(pack, i, p, j, sv))
        s.fail("Deg^inf vs Lambda^inf" + vs("i", i) + vs("p", p) + vs("j", j) +
               vs("s", sv));
    }
    out.push_back(s.res);
  }

  { // wt_Q kills the A-monomials, and Lambda^inf ignores the Q-datum
    Suite s("weight invariants [" + ty + "]");
    for (const auto& pack : packs)
      for (int i = 1; i <= g.n && s.res.passed; ++i)
        for (long long p = -period; p <= period; ++p) {
          if (lmod(p - g.d[i] - g.epsilon_I[i], 2) != 0) continue;
          RootVector w = wt_Q(pack, a_monomial(g, i, static_cast<int>(p)));
          RootVector zero{std::vector<long long>(g.m + 1, 0)};
          if (!(w == zero)) s.fail("wt_Q(A)" + vs("i", i) + vs("p", p));
        }
    for (int t = 0; t < b.random_pairs && s.res.passed; ++t) {
      int i = static_cast<int>(rng.range(1, g.n));
      int j = static_cast<int>(rng.range(1, g.n));
      long long p = g.epsilon_I[i] + 2 * rng.range(-period, period);
      long long sv = g.epsilon_I[j] + 2 * rng.range(-period, period);
      long long first = lambda_inf(packs.front(), i, p, j, sv);
      for (std::size_t k = 1; k < packs.size(); ++k)
        if (lambda_inf(packs[k], i, p, j, sv) != first)
          s.fail("Lambda^inf depends on the Q-datum" + vs("i", i) +
                 vs("p", p) + vs("j", j) + vs("s", sv));
    }
    out.push_back(s.res);
  }

  return out;
}

std::vector<SuiteResult> verify_all(const VerifyBounds& b) {
  std::vector<SuiteResult> out;
  for (const auto& t : all_types_up_to_rank(b.rank_max)) {
    GroundData g = make_ground(t);
    CoeffTable table = invert_series(g);
    auto part = verify_type(g, table, b);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

} // namespace qdc
