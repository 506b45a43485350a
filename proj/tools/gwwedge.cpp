#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "gwwedge/acceptance.hpp"
#include "gwwedge/diagrams.hpp"
#include "gwwedge/errors.hpp"
#include "gwwedge/expectation.hpp"
#include "gwwedge/johnson.hpp"
#include "gwwedge/json_io.hpp"
#include "gwwedge/parser.hpp"
#include "gwwedge/relative.hpp"
#include "gwwedge/wdvv.hpp"

using namespace gwwedge;

namespace {

struct Output {
  Json body = Json::object();
  std::vector<std::pair<std::string, Rational>> table;  // csv rows (k, value)
  int status = 0;
};

struct Options {
  std::string format = "json";
  bool decimal = false;
};

struct ContactArgs {
  std::string mu0, mu_inf, tau, input;
  bool has_inf = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--mu0", mu0, "contact orders over 0, e.g. 2,-1");
    cmd->add_option("--muInf", mu_inf, "contact orders over infinity (makes a tube)");
    cmd->add_option("--tau", tau, "descendant indices of the stationary insertions, e.g. 0,2");
    cmd->add_option("--input", input, "contact data as a JSON file");
  }

  ContactData get(CLI::App* cmd) const {
    ContactData cd;
    if (!input.empty()) {
      std::ifstream in(input);
      if (!in) throw ConfigError("cannot open " + input);
      cd = contact_from_json(Json::parse(in));
    } else {
      if (mu0.empty()) throw ConfigError("need --mu0 or --input");
      cd.mu0 = parse_int_list(mu0);
      cd.tube = cmd->count("--muInf") > 0;
      cd.mu_inf = parse_int_list(mu_inf);
      cd.insertions = parse_int_list(tau);
    }
    cd.validate();
    return cd;
  }
};

void approximate(Output& out, const Options& opt, const std::string& key, const Rational& q) {
  if (opt.decimal) out.body["approximate"][key] = "~" + to_decimal(q);
}

void emit(const Output& out, const Options& opt) {
  if (opt.format == "json") {
    std::cout << out.body.dump() << "\n";
  } else if (opt.format == "csv") {
    std::cout << "k,value\n";
    if (!out.table.empty()) {
      for (const auto& [k, v] : out.table) std::cout << k << "," << to_string(v) << "\n";
    } else {
      for (const auto& [k, v] : out.body.items())
        if (v.is_string() || v.is_number() || v.is_boolean())
          std::cout << k << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  } else {
    for (const auto& [k, v] : out.body.items())
      std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump(2)) << "\n";
  }
}

Output cmd_invariant(const ContactData& cd, const std::string& via, const Options& opt) {
  Output out;
  Rational v;
  if (via == "operator") {
    v = invariant(cd);
  } else if (via == "limit") {
    v = relative_via_limit(cd).value;
  } else {
    throw ConfigError("--via must be operator or limit");
  }
  out.body["value"] = rational_json(v);
  approximate(out, opt, "value", v);
  return out;
}

Output cmd_gf(const ContactData& cd, int order, bool disconnected, const Options& opt) {
  if (order < 1) throw ConfigError("--order must be at least 1");
  Output out;
  Series f = disconnected ? one_point_tube_disconnected(cd, order) : one_point_tube_connected(cd, order);
  // z-powers 1..order-1 carry tau_0..tau_{order-2}
  for (int k = 0; k + 1 < order; ++k) {
    Rational c = f.coeff({k + 1});
    if (c == 0) continue;
    const std::string key = "tau" + std::to_string(k);
    out.body[key] = rational_json(c);
    out.table.emplace_back(std::to_string(k), c);
    approximate(out, opt, key, c);
  }
  return out;
}

Output cmd_vev(const std::string& expr, int order, std::optional<int> cap, bool connected) {
  if (order < 1) throw ConfigError("--order must be at least 1");
  SExpr e = parse_sexpr(expr);
  auto vars = expression_variables(e);
  RingPtr ring = vars.empty() ? scalar_ring()
                              : make_ring(vars, std::vector<int>(vars.size(), order), std::vector<int>(vars.size(), -1));
  Series s = connected ? connected_vev(build_factors(e, ring), ring, cap) : vev(build_operator(e, ring), ring, cap);
  Output out;
  out.body["variables"] = vars;
  out.body["series"] = series_json(s);
  if (vars.empty()) out.body["value"] = rational_json(s.constant_term());
  for (const auto& [ex, c] : s.terms()) {
    std::string k;
    for (std::size_t i = 0; i < ex.size(); ++i) k += (i ? ";" : "") + std::to_string(ex[i]);
    out.table.emplace_back(k.empty() ? "0" : k, c);
  }
  return out;
}

struct JohnsonArgs {
  int r = 0, s = 0, t_degree = 3;
  std::string mode = "t0", samples;
  std::optional<int> degree_bound;
};

Output cmd_johnson(const ContactData& cd, const JohnsonArgs& a, const Options& opt) {
  const int s = a.s > 0 ? a.s : (cd.tube ? a.r : 1);
  // with s = 1 the factor e^{-t alpha_{-1}} supplies mu_inf = (1^d)
  bool ones = cd.tube && s == 1;
  if (ones)
    for (int x : cd.mu_inf)
      if (x != 1) throw DomainError("s = 1 only realizes contact orders (1,...,1) over infinity");
  ContactData lim = cd;
  Rational scale = 1;
  if (ones) {
    lim.tube = false;
    lim.mu_inf.clear();
    scale = factorial(cd.degree());
  }
  OrbifoldRequest q;
  q.r = a.r;
  q.s = s;
  q.d = cd.degree();
  q.left = ages_of(cd.mu0, a.r, cd.insertions);
  if (lim.tube) q.right = ages_of(cd.mu_inf, s);
  scale *= power(Rational(a.r), static_cast<int>(cd.negative0().size())) *
           power(Rational(s), static_cast<int>(lim.negative_inf().size()));
  Output out;
  if (a.mode == "full") {
    q.mode = EquivariantMode::Full;
    q.t_degree = a.t_degree;
    out.body["value"] = series_json(orbifold_bracket(q) * scale);
    return out;
  }
  if (a.mode != "t0") throw ConfigError("--mode must be t0 or full");
  const Rational v = orbifold_bracket(q).constant_term() * scale;
  out.body["value"] = rational_json(v);
  approximate(out, opt, "value", v);
  LimitResult lr = relative_via_limit(lim, parse_int_list(a.samples), a.degree_bound);
  Json poly = Json::array();
  for (const auto& c : lr.polynomial) poly.push_back(rational_json(c * (ones ? factorial(cd.degree()) : Rational(1))));
  out.body["r_polynomial"] = poly;
  const Rational limit = lr.value * (ones ? factorial(cd.degree()) : Rational(1));
  out.body["limit"] = rational_json(limit);
  approximate(out, opt, "limit", limit);
  return out;
}

Output cmd_diagrams(const std::string& labels) {
  std::vector<int> k;
  for (int m : parse_int_list(labels)) k.push_back(-m);  // label m has r-energy -m
  int total = 0;
  for (int x : k) total += x;
  if (k.empty() || total != 0) throw DomainError("r-energies must sum to zero");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k.size(); ++i) names.push_back("O" + std::to_string(i));
  Output out;
  Json list = Json::array();
  for (const auto& J : enumerate_K(k)) {
    Json j = diagram_json(J);
    j["expression"] = L_of_J_expression(J, names);
    list.push_back(j);
  }
  out.body["r_energies"] = k;
  out.body["K"] = list;
  out.body["count"] = list.size();
  return out;
}

Output cmd_wdvv(int a, const std::string& b_text, int d, const std::string& mode, const Options& opt) {
  std::vector<int> b = parse_int_list(b_text);
  if (a <= 0) throw DomainError("a must be positive");
  for (int x : b)
    if (x >= 0) throw DomainError("b entries must be negative");
  int total = a;
  for (int x : b) total += x;
  if (total != d) throw DomainError("a + sum b must equal d");
  InvariantEvaluator::Mode m = InvariantEvaluator::Mode::Recursive;
  if (mode == "closed") {
    m = InvariantEvaluator::Mode::ClosedForm;
  } else if (mode != "recursive") {
    throw ConfigError("--mode must be recursive or closed");
  }
  InvariantEvaluator ev(m);
  std::vector<BasisClass> ins{BasisClass::zero(a), BasisClass::inf(d)};
  for (int x : b) ins.push_back(BasisClass::zero(x));
  const Rational v = ev.I(ins, d);
  Output out;
  out.body["value"] = rational_json(v);
  out.body["closed_form"] = rational_json(family_closed_form(a, b, d));
  approximate(out, opt, "value", v);
  std::vector<FamilyInstance> used = ev.solved();
  if (used.empty() && !b.empty()) used.push_back({a, b, d});
  bool ok = true;
  Json residuals = Json::array();
  for (const auto& f : used) {
    Rational res = wdvv_residual(f.a, f.b, f.d);
    ok = ok && res == 0;
    residuals.push_back({{"a", f.a}, {"b", f.b}, {"d", f.d}, {"residual", rational_json(res)}});
  }
  out.body["residual_check"] = {{"passed", ok}, {"instances", residuals}};
  if (!ok) out.status = 4;
  return out;
}

Output cmd_verify(const std::string& suite, const Options& opt) {
  Output out;
  Json list = Json::array();
  bool ok = true;
  for (const auto& r : run_suite(suite)) {
    if (opt.format == "pretty") std::cerr << summary_line(r) << std::endl;
    list.push_back(criterion_json(r));
    ok = ok && r.passed;
  }
  out.body["criteria"] = list;
  out.body["passed"] = ok;
  if (!ok) out.status = 1;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relative Gromov-Witten invariants of P^1 through the infinite wedge"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_flag("--decimal", opt.decimal, "add approximate decimal renderings, marked with ~");

  ContactArgs inv_args, gf_args, j_args;
  std::string via = "operator";
  auto* inv = app.add_subcommand("invariant", "one relative invariant");
  inv_args.attach(inv);
  inv->add_option("--via", via, "operator or limit");

  int gf_order = 6;
  bool disconnected = false;
  auto* gf = app.add_subcommand("gf", "one-point generating function, tau_k for k + 1 < order");
  gf_args.attach(gf);
  gf->add_option("--order", gf_order, "z-powers below this are reported");
  gf->add_flag("--disconnected", disconnected);

  std::string expr;
  int vev_order = 4;
  std::optional<int> cap;
  bool connected = false;
  auto* vv = app.add_subcommand("vev", "vacuum expectation of a prefix operator expression");
  vv->add_option("--expr", expr, "e.g. (* (alpha 1) (E 0 z) (alpha -1))")->required();
  vv->add_option("--order", vev_order, "truncation order per variable");
  vv->add_option("--cap", cap, "energy cap");
  vv->add_flag("--connected", connected, "ordered cumulant of the top-level factors");

  JohnsonArgs ja;
  auto* jo = app.add_subcommand("johnson", "orbifold bracket and its polynomial in r");
  j_args.attach(jo);
  jo->add_option("--r", ja.r)->required();
  jo->add_option("--s", ja.s, "defaults to r for tubes and 1 for caps");
  jo->add_option("--mode", ja.mode, "t0 or full");
  jo->add_option("--t-degree", ja.t_degree, "t-truncation in full mode");
  jo->add_option("--samples", ja.samples, "r samples for the fit, e.g. 4,5,6,7");
  jo->add_option("--degree-bound", ja.degree_bound);

  std::string energies;
  auto* dg = app.add_subcommand("diagrams", "valid interaction diagrams");
  dg->add_option("--energies", energies, "labels m_i of R_{m_i}; the r-energy is -m_i")->required()->allow_extra_args(false);

  int wa = 0, wd = 0;
  std::string wb, wmode = "recursive";
  auto* wv = app.add_subcommand("wdvv", "I_d([0]_a, [0]_b.., [inf]_d) from the WDVV recursion");
  wv->add_option("--a", wa)->required();
  wv->add_option("--b", wb)->required();
  wv->add_option("--d", wd)->required();
  wv->add_option("--mode", wmode, "recursive or closed");

  std::string suite = "all";
  auto* ve = app.add_subcommand("verify", "run acceptance suites");
  ve->add_option("--suite", suite, "all, a suite name or a criterion number");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Output out;
    if (*inv) out = cmd_invariant(inv_args.get(inv), via, opt);
    if (*gf) out = cmd_gf(gf_args.get(gf), gf_order, disconnected, opt);
    if (*vv) out = cmd_vev(expr, vev_order, cap, connected);
    if (*jo) out = cmd_johnson(j_args.get(jo), ja, opt);
    if (*dg) out = cmd_diagrams(energies);
    if (*wv) out = cmd_wdvv(wa, wb, wd, wmode, opt);
    if (*ve) out = cmd_verify(suite, opt);
    emit(out, opt);
    return out.status;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    // domain errors, unsupported configurations, caps and degree bounds
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
