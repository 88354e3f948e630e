#include "qdc/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qdc/arquiver.hpp"
#include "qdc/denom.hpp"
#include "qdc/error.hpp"
#include "qdc/invariants.hpp"
#include "qdc/verify.hpp"

namespace qdc {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string type;
  std::string xi;
  bool canonical = false;
  std::string format = "text";
  int i = 0, j = 0, l = 1, m = 1;
  long long p = 0, s = 0;
  std::string out_path;
  std::string monomial;
  int rank_max = 6, lmax = 4, mmax = 4, pairs = 200;
  std::uint64_t seed = 20220401;
};

std::string root_str(const RootVector& b) {
  std::string s;
  for (std::size_t a = 1; a < b.c.size(); ++a) {
    if (a > 1) s += " ";
    s += std::to_string(b.c[a]);
  }
  return s;
}

json root_json(const RootVector& b) {
  json arr = json::array();
  for (std::size_t a = 1; a < b.c.size(); ++a) arr.push_back(b.c[a]);
  return arr;
}

GroundData ground_of(const Options& o) {
  if (o.type.empty())
    throw CLI::ValidationError("--type", "a Lie type is required");
  return make_ground(LieType::parse(o.type));
}

QDatum qdatum_of(const GroundData& g, const Options& o) {
  if (o.canonical) {
    if (!o.xi.empty())
      throw CLI::ValidationError("--xi", "--xi and --canonical are exclusive");
    return validate(g, g.canonical_xi);
  }
  if (o.xi.empty())
    throw CLI::ValidationError(
        "--xi", "this command needs a Q-datum: pass --xi or --canonical");
  std::string text = o.xi;
  if (text.find('{') == std::string::npos) {
    std::ifstream in(o.xi);
    if (!in)
      throw DomainError("BadHeightFunction", "cannot read xi file " + o.xi);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError("BadHeightFunction",
                      std::string("xi is not valid JSON: ") + e.what());
  }
  if (doc.contains("type") &&
      !(LieType::parse(doc["type"].get<std::string>()) == g.type))
    throw DomainError("BadHeightFunction",
                      "xi JSON type disagrees with --type");
  if (!doc.contains("xi") || !doc["xi"].is_object())
    throw DomainError("BadHeightFunction", "xi JSON needs an \"xi\" object");
  std::vector<int> xi(g.m + 1, 0);
  std::vector<bool> seen(g.m + 1, false);
  for (auto& [key, val] : doc["xi"].items()) {
    int node = 0;
    try {
      node = std::stoi(key);
    } catch (...) {
      throw DomainError("BadHeightFunction", "bad node label \"" + key + "\"");
    }
    if (node < 1 || node > g.m)
      throw DomainError("BadHeightFunction",
                        "node label " + key + " is out of range");
    xi[node] = val.get<int>();
    seen[node] = true;
  }
  for (int v = 1; v <= g.m; ++v)
    if (!seen[v])
      throw DomainError("BadHeightFunction",
                        "missing height for node " + std::to_string(v));
  return validate(g, xi);
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f)
    throw DomainError("OutputError", "cannot open " + o.out_path);
  f << text;
}

std::string cmd_ground(const Options& o) {
  GroundData g = ground_of(o);
  auto vec_str = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t a = 1; a < v.size(); ++a) {
      if (a > 1) s += " ";
      s += std::to_string(v[a]);
    }
    return s;
  };
  if (o.format == "json") {
    json doc;
    doc["type"] = g.type.str();
    doc["m"] = g.m;
    doc["n"] = g.n;
    doc["r"] = g.r;
    doc["dual_coxeter"] = g.dual_coxeter;
    doc["num_pos_roots"] = g.num_pos_roots;
    doc["d"] = std::vector<int>(g.d.begin() + 1, g.d.end());
    doc["sigma"] = std::vector<int>(g.sigma.begin() + 1, g.sigma.end());
    doc["orbit"] =
        std::vector<int>(g.orbit_of.begin() + 1, g.orbit_of.end());
    doc["star_delta"] =
        std::vector<int>(g.star_delta.begin() + 1, g.star_delta.end());
    doc["star_I"] = std::vector<int>(g.star_I.begin() + 1, g.star_I.end());
    doc["epsilon"] =
        std::vector<int>(g.epsilon_delta.begin() + 1, g.epsilon_delta.end());
    doc["canonical_xi"] =
        std::vector<int>(g.canonical_xi.begin() + 1, g.canonical_xi.end());
    return doc.dump(2) + "\n";
  }
  std::ostringstream s;
  s << "type " << g.type.str() << "\n"
    << "m " << g.m << "\n"
    << "n " << g.n << "\n"
    << "r " << g.r << "\n"
    << "dual_coxeter " << g.dual_coxeter << "\n"
    << "num_pos_roots " << g.num_pos_roots << "\n"
    << "d " << vec_str(g.d) << "\n"
    << "sigma " << vec_str(g.sigma) << "\n"
    << "orbit " << vec_str(g.orbit_of) << "\n"
    << "star_delta " << vec_str(g.star_delta) << "\n"
    << "star_I " << vec_str(g.star_I) << "\n"
    << "epsilon " << vec_str(g.epsilon_delta) << "\n"
    << "canonical_xi " << vec_str(g.canonical_xi) << "\n";
  return s.str();
}

std::string cmd_validate(const Options& o) {
  GroundData g = ground_of(o);
  QDatum q = qdatum_of(g, o);
  auto src = sources(q);
  if (o.format == "json") {
    json doc;
    doc["valid"] = true;
    doc["sources"] = src;
    return doc.dump(2) + "\n";
  }
  std::ostringstream s;
  s << "valid\nsources";
  for (int v : src) s << " " << v;
  s << "\n";
  return s.str();
}

template <typename V>
std::string quiver_output(const Options& o, const std::vector<V>& vertices,
                          const std::map<V, RootVector>& labels,
                          const std::vector<std::pair<V, V>>& arrows,
                          int rows) {
  auto row_of = [](const V& v) {
    if constexpr (std::is_same_v<V, RQVertex>)
      return v.node;
    else
      return v.i;
  };
  auto id_of = [&](const V& v) {
    return std::to_string(row_of(v)) + "_" + std::to_string(v.p);
  };
  if (o.format == "dot") {
    std::ostringstream s;
    s << "digraph quiver {\n  rankdir=LR;\n";
    for (int row = 1; row <= rows; ++row) {
      bool any = false;
      for (const auto& v : vertices)
        if (row_of(v) == row) any = true;
      if (!any) continue;
      s << "  { rank=same;";
      for (const auto& v : vertices)
        if (row_of(v) == row) s << " \"" << id_of(v) << "\";";
      s << " }\n";
    }
    for (const auto& v : vertices)
      s << "  \"" << id_of(v) << "\" [label=\"(" << root_str(labels.at(v))
        << ")\"];\n";
    for (const auto& a : arrows)
      s << "  \"" << id_of(a.first) << "\" -> \"" << id_of(a.second)
        << "\";\n";
    s << "}\n";
    return s.str();
  }
  if (o.format == "json") {
    json doc;
    doc["vertices"] = json::array();
    for (const auto& v : vertices) {
      json jv;
      jv["id"] = id_of(v);
      jv["row"] = row_of(v);
      jv["p"] = v.p;
      jv["root"] = root_json(labels.at(v));
      doc["vertices"].push_back(jv);
    }
    doc["arrows"] = json::array();
    for (const auto& a : arrows)
      doc["arrows"].push_back({id_of(a.first), id_of(a.second)});
    return doc.dump(2) + "\n";
  }
  std::ostringstream s;
  for (const auto& v : vertices)
    s << "vertex " << row_of(v) << " " << v.p << " : ("
      << root_str(labels.at(v)) << ")\n";
  for (const auto& a : arrows)
    s << "arrow (" << row_of(a.first) << "," << a.first.p << ") -> ("
      << row_of(a.second) << "," << a.second.p << ")\n";
  return s.str();
}

std::string cmd_quiver(const Options& o, bool folded) {
  GroundData g = ground_of(o);
  CoxeterPack pack = build_coxeter(qdatum_of(g, o));
  if (folded) {
    FoldedQuiver q = folded_quiver(pack);
    return quiver_output(o, q.vertices, q.labels, q.arrows, g.n);
  }
  TwistedARQuiver q = twisted_ar_quiver(pack);
  return quiver_output(o, q.vertices, q.labels, q.arrows, g.m);
}

std::string cmd_coxeter(const Options& o) {
  GroundData g = ground_of(o);
  CoxeterPack pack = build_coxeter(qdatum_of(g, o));
  auto word_str = [](const SignedExtWeylElt& e) {
    std::string s;
    for (std::size_t a = 0; a < e.word.size(); ++a) {
      if (a) s += " ";
      s += std::to_string(e.word[a]);
    }
    if (e.sigma_power != 0)
      s += (s.empty() ? "" : " ") + std::string("sigma^") +
           std::to_string(e.sigma_power);
    return s.empty() ? std::string("e") : s;
  };
  if (o.format == "json") {
    json doc;
    doc["i_circ"] =
        std::vector<int>(pack.i_circ.begin() + 1, pack.i_circ.end());
    doc["tau"] = {{"word", pack.tau.word},
                  {"sigma_power", pack.tau.sigma_power}};
    doc["tau_circ"] = {{"word", pack.tau_circ.word},
                       {"sigma_power", pack.tau_circ.sigma_power}};
    doc["tau_breve"] = {{"word", pack.tau_breve.word},
                        {"sigma_power", pack.tau_breve.sigma_power}};
    doc["order"] = pack.rh();
    doc["gamma"] = json::object();
    for (int v = 1; v <= g.m; ++v)
      doc["gamma"][std::to_string(v)] = root_json(pack.gamma_alpha[v]);
    return doc.dump(2) + "\n";
  }
  std::ostringstream s;
  s << "i_circ";
  for (int i = 1; i <= g.n; ++i) s << " " << pack.i_circ[i];
  s << "\ntau " << word_str(pack.tau) << "\n"
    << "tau_circ " << word_str(pack.tau_circ) << "\n"
    << "tau_breve " << word_str(pack.tau_breve) << "\n"
    << "order " << pack.rh() << "\n";
  for (int v = 1; v <= g.m; ++v)
    s << "gamma " << v << " : (" << root_str(pack.gamma_alpha[v]) << ")\n";
  return s.str();
}

std::string cmd_cartan_inverse(const Options& o) {
  GroundData g = ground_of(o);
  CoeffTable t = invert_series(g);
  if (o.format == "json") {
    json doc;
    for (int i = 1; i <= g.n; ++i) {
      json row;
      for (int j = 1; j <= g.n; ++j)
        row[std::to_string(j)] = t.tab[i][j];
      doc[std::to_string(i)] = row;
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream s;
  for (int i = 1; i <= g.n; ++i)
    for (int j = 1; j <= g.n; ++j)
      for (int u = 0; u < t.period; ++u) {
        if (o.format == "csv")
          s << i << "," << j << "," << u << "," << t.tab[i][j][u] << "\n";
        else
          s << "c[" << i << "][" << j << "](" << u << ") = " << t.tab[i][j][u]
            << "\n";
      }
  return s.str();
}

std::string cmd_denom(const Options& o) {
  GroundData g = ground_of(o);
  if (o.i < 1 || o.i > g.n || o.j < 1 || o.j > g.n)
    throw DomainError("BadIndex", "--i and --j must be orbit labels in I");
  CoeffTable t = invert_series(g);
  DenomResult res = unified_denominator(t, o.i, o.l, o.j, o.m);
  if (o.format == "json") {
    json doc;
    for (auto& [e, k] : res.value.mult) doc[std::to_string(e)] = k;
    return doc.dump(2) + "\n";
  }
  return res.value.str() + "\n";
}

std::string cmd_scrn(const Options& o) {
  GroundData g = ground_of(o);
  CoeffTable t = invert_series(g);
  return std::to_string(scrN(t, o.i, o.p, o.j, o.s)) + "\n";
}

std::string cmd_lambda(const Options& o, bool infinity) {
  GroundData g = ground_of(o);
  CoxeterPack pack = build_coxeter(qdatum_of(g, o));
  if (infinity)
    return std::to_string(lambda_inf(pack, o.i, o.p, o.j, o.s)) + "\n";
  CoeffTable t = invert_series(g);
  return std::to_string(lambda(pack, t, o.i, o.p, o.j, o.s)) + "\n";
}

std::string cmd_wt(const Options& o) {
  GroundData g = ground_of(o);
  CoxeterPack pack = build_coxeter(qdatum_of(g, o));
  RootVector w = wt_Q(pack, parse_monomial(g, o.monomial));
  if (o.format == "json") return root_json(w).dump(2) + "\n";
  return root_str(w) + "\n";
}

std::string cmd_verify(const Options& o, bool& all_passed) {
  VerifyBounds b;
  b.rank_max = o.rank_max;
  b.lmax = o.lmax;
  b.mmax = o.mmax;
  b.random_pairs = o.pairs;
  b.seed = o.seed;
  std::vector<SuiteResult> results;
  if (!o.type.empty()) {
    GroundData g = ground_of(o);
    results = verify_type(g, invert_series(g), b);
  } else {
    results = verify_all(b);
  }
  std::ostringstream s;
  all_passed = true;
  for (const auto& r : results) {
    if (r.passed) {
      s << "PASS " << r.name << "\n";
    } else {
      all_passed = false;
      s << "FAIL " << r.name << ": " << r.witness << "\n";
    }
  }
  return s.str();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Q-datum combinatorics of simple Lie algebras"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* c, bool needs_q) {
    c->add_option("--type", o.type, "Lie type, e.g. B3 or g2");
    c->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "dot", "json"}));
    c->add_option("--out", o.out_path, "write output to a file");
    if (needs_q) {
      c->add_option("--xi", o.xi, "height function, inline JSON or a file");
      c->add_flag("--canonical", o.canonical,
                  "use the canonical height function");
    }
    return c;
  };

  auto* c_ground = add_common(app.add_subcommand("ground", "classification data"), false);
  auto* c_validate =
      add_common(app.add_subcommand("qdatum-validate", "check H1/H2/H3"), true);
  auto* c_quiver =
      add_common(app.add_subcommand("quiver", "twisted AR quiver"), true);
  auto* c_folded = add_common(
      app.add_subcommand("folded-quiver", "folded AR quiver"), true);
  auto* c_coxeter = add_common(
      app.add_subcommand("coxeter", "generalized Coxeter elements"), true);
  auto* c_cartan = add_common(
      app.add_subcommand("cartan-inverse", "inverse quantum Cartan matrix"),
      false);
  auto* c_denom =
      add_common(app.add_subcommand("denom", "KR denominator"), false);
  c_denom->add_option("--i", o.i, "first orbit label")->required();
  c_denom->add_option("--l", o.l, "first KR level");
  c_denom->add_option("--j", o.j, "second orbit label")->required();
  c_denom->add_option("--m", o.m, "second KR level");
  auto* c_scrn =
      add_common(app.add_subcommand("scrN", "the pairing scrN"), false);
  auto* c_lambda = add_common(app.add_subcommand("lambda", "Lambda"), true);
  auto* c_lambda_inf =
      add_common(app.add_subcommand("lambda-inf", "Lambda^infty"), true);
  for (CLI::App* c : {c_scrn, c_lambda, c_lambda_inf}) {
    c->add_option("--i", o.i, "first orbit label")->required();
    c->add_option("--p", o.p, "first spectral parameter")->required();
    c->add_option("--j", o.j, "second orbit label")->required();
    c->add_option("--s", o.s, "second spectral parameter")->required();
  }
  auto* c_wt = add_common(app.add_subcommand("wt", "Q-weight of a monomial"), true);
  c_wt->add_option("monomial", o.monomial, "e.g. \"Y[1,0]*Y[2,3]^-1\"")
      ->required();
  auto* c_verify =
      add_common(app.add_subcommand("verify", "run the property suites"), false);
  c_verify->add_option("--rank-max", o.rank_max, "maximal rank");
  c_verify->add_option("--lmax", o.lmax, "maximal first KR level");
  c_verify->add_option("--mmax", o.mmax, "maximal second KR level");
  c_verify->add_option("--pairs", o.pairs, "random pairs per suite");
  c_verify->add_option("--seed", o.seed, "random seed");

  std::vector<const char*> argv;
  argv.push_back("qdc");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n"
        << "commands: ground qdatum-validate quiver folded-quiver coxeter "
           "cartan-inverse denom scrN lambda lambda-inf wt verify\n";
    return 2;
  }

  try {
    if (*c_ground) emit(o, out, cmd_ground(o));
    else if (*c_validate) emit(o, out, cmd_validate(o));
    else if (*c_quiver) emit(o, out, cmd_quiver(o, false));
    else if (*c_folded) emit(o, out, cmd_quiver(o, true));
    else if (*c_coxeter) emit(o, out, cmd_coxeter(o));
    else if (*c_cartan) emit(o, out, cmd_cartan_inverse(o));
    else if (*c_denom) emit(o, out, cmd_denom(o));
    else if (*c_scrn) emit(o, out, cmd_scrn(o));
    else if (*c_lambda) emit(o, out, cmd_lambda(o, false));
    else if (*c_lambda_inf) emit(o, out, cmd_lambda(o, true));
    else if (*c_wt) emit(o, out, cmd_wt(o));
    else if (*c_verify) {
      bool ok = false;
      emit(o, out, cmd_verify(o, ok));
      return ok ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 0;
}

} // namespace qdc
