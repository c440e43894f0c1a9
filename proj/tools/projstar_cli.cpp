/**
 * @file projstar_cli.cpp
 * @brief `projstar` command-line front end.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
 * 3 excluded weight.
 */
#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "projstar/ambient.hpp"
#include "projstar/io.hpp"
#include "projstar/multilinear.hpp"
#include "projstar/onedim.hpp"
#include "projstar/starprod.hpp"
#include "projstar/suites.hpp"

using namespace projstar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExcluded = 3;

struct RunConfig {
  int n = 2;
  bool n_given = false;
  std::string connection_path;
  std::string mu_text;
  bool formal_mu = false;
  std::uint64_t seed = 1;
  int maxdeg = 2;
  int cases = 6;
  bool json = false;
};

Connection make_connection(const RunConfig& cfg) {
  if (cfg.connection_path.empty()) return Connection(cfg.n);
  Connection conn = load_connection(cfg.connection_path);
  if (cfg.n_given && conn.dim() != cfg.n)
    throw ParseError("--n " + std::to_string(cfg.n) + " disagrees with the connection file (n = " +
                     std::to_string(conn.dim()) + ")");
  return conn;
}

Poly make_mu(const RunConfig& cfg) {
  if (cfg.formal_mu && !cfg.mu_text.empty()) throw ParseError("--mu and --formal-mu are mutually exclusive");
  if (cfg.mu_text.empty()) return Poly::variable(var::kMu);
  return Poly(parse_rat(cfg.mu_text));
}

/// "poly" or "poly:weight".
SymTensorField parse_field(int n, const std::string& text, const Rat& default_weight) {
  const auto colon = text.rfind(':');
  Rat weight = default_weight;
  std::string body = text;
  if (colon != std::string::npos) {
    body = text.substr(0, colon);
    weight = parse_rat(text.substr(colon + 1));
  }
  return SymTensorField::from_symbol(n, weight, parse_poly(body));
}

WeightedFunction1D parse_1d(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos) throw ParseError("expected 'poly:sigma', got '" + text + "'");
  Poly u = parse_poly(text.substr(0, colon));
  VarMask allowed = 1u << var::x(0);
  if (!u.uses_only(allowed)) throw ParseError("one-dimensional inputs may only use x1");
  return WeightedFunction1D{parse_rat(text.substr(colon + 1)), u};
}

void emit_series(const RunConfig& cfg, const std::vector<Poly>& terms, const std::string& label, Json header) {
  if (cfg.json) {
    header["terms"] = series_to_json(terms);
    std::cout << header.dump(2) << "\n";
  } else {
    std::cout << series_to_text(terms, label);
  }
}

Json header_for(const RunConfig& cfg, const Connection& conn, const Poly& mu, const std::string& command) {
  Json h;
  h["command"] = command;
  h["n"] = conn.dim();
  h["mu"] = mu.to_string();
  (void)cfg;
  return h;
}

int cmd_lift(const RunConfig& cfg, const std::string& tensor, const std::string& weight) {
  Connection conn = make_connection(cfg);
  SymTensorField a = SymTensorField::from_symbol(conn.dim(), parse_rat(weight), parse_poly(tensor));
  if (is_excluded_weight(conn.dim(), a.k, a.weight)) {
    SymTensorField op = excluded_weight_operator(a, conn);
    std::cerr << "error: weight " << to_string(a.weight) << " is excluded for valence " << a.k << " in dimension "
              << conn.dim() << "; the invariant operator K(a) of valence " << op.k << " is " << op.body.to_string()
              << "\n";
    return kExitExcluded;
  }
  AmbientSymTensor lift = invariant_lift(a, conn);
  if (cfg.json) {
    Json j;
    j["command"] = "lift";
    j["n"] = conn.dim();
    j["k"] = a.k;
    j["weight"] = to_string(a.weight);
    Json comps = Json::object();
    for (int m = a.k; m >= 0; --m) comps[std::to_string(m)] = poly_to_json(lift.component(m).body);
    j["components"] = comps;
    std::cout << j.dump(2) << "\n";
  } else {
    for (int m = a.k; m >= 0; --m) std::cout << "a_" << m << ": " << lift.component(m).body.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_lbeta(const RunConfig& cfg, int beta, const std::vector<std::string>& args) {
  Connection conn = make_connection(cfg);
  std::vector<SymTensorField> fields;
  for (const auto& t : args) fields.push_back(parse_field(conn.dim(), t, Rat(0)));
  SymTensorField out = l_beta(fields, beta, conn);
  if (cfg.json) {
    Json j;
    j["command"] = "lbeta";
    j["n"] = conn.dim();
    j["beta"] = beta;
    j["weight"] = to_string(out.weight);
    j["result"] = poly_to_json(out.body);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "L_" << beta << " (weight " << to_string(out.weight) << "): " << out.body.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_quantize(const RunConfig& cfg, const std::string& symbol, const std::string& weight) {
  Connection conn = make_connection(cfg);
  Poly mu = make_mu(cfg);
  SymTensorField a = SymTensorField::from_symbol(conn.dim(), parse_rat(weight), parse_poly(symbol));
  Poly op = quantize_symbol(a, mu, conn);
  if (cfg.json) {
    Json j = header_for(cfg, conn, mu, "quantize");
    j["operator"] = poly_to_json(op);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << op.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_star(const RunConfig& cfg, const std::string& a, const std::string& b, bool infinity) {
  Connection conn = make_connection(cfg);
  Poly pa = parse_poly(a), pb = parse_poly(b);
  if (infinity) {
    if (!cfg.mu_text.empty() || cfg.formal_mu) throw ParseError("star-inf takes no density weight");
    Json h;
    h["command"] = "star-inf";
    h["n"] = conn.dim();
    emit_series(cfg, star_infinity(pa, pb, conn), "c", h);
    return kExitOk;
  }
  Poly mu = make_mu(cfg);
  emit_series(cfg, star_product(pa, pb, mu, conn), "eps", header_for(cfg, conn, mu, "star"));
  return kExitOk;
}

int cmd_gauge(const RunConfig& cfg, const std::string& symbol) {
  if (cfg.connection_path.empty()) throw ParseError("gauge needs --connection for the target structure");
  Connection conn = make_connection(cfg);
  Poly mu = make_mu(cfg);
  emit_series(cfg, gauge_transform(Connection(conn.dim()), conn, parse_poly(symbol), mu), "eps",
              header_for(cfg, conn, mu, "gauge"));
  return kExitOk;
}

int cmd_rc(const RunConfig& cfg, const std::string& mode, const std::vector<std::string>& args, int k,
           const std::vector<int>& ks, int order) {
  std::vector<WeightedFunction1D> us;
  for (const auto& a : args) us.push_back(parse_1d(a));
  auto print_1d = [&](const WeightedFunction1D& r, const std::string& label) {
    if (cfg.json) {
      Json j;
      j["command"] = "rc";
      j["mode"] = mode;
      j["sigma"] = to_string(r.sigma);
      j["result"] = poly_to_json(r.u);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << label << " (sigma " << to_string(r.sigma) << "): " << r.u.to_string() << "\n";
    }
  };
  if (mode == "bracket") {
    if (us.size() != 2) throw ParseError("rc bracket takes two arguments");
    print_1d(rc_bracket(us[0], us[1], k), "R_" + std::to_string(k));
    return kExitOk;
  }
  if (mode == "multilinear") {
    if (ks.size() != us.size()) throw ParseError("--ks must list one order per argument");
    print_1d(rc_multilinear(us, ks), "R");
    return kExitOk;
  }
  if (mode == "cmz") {
    if (us.size() != 2) throw ParseError("rc cmz takes two arguments");
    Graded1D g = cfg.mu_text.empty() ? cmz_infinity_product(us[0], us[1], order)
                                     : cmz_mu_product(us[0], us[1], parse_rat(cfg.mu_text), order);
    std::vector<Poly> terms;
    Json weights = Json::object();
    for (std::size_t r = 0; r < g.size(); ++r) {
      terms.push_back(g[r].u);
      weights[std::to_string(r)] = to_string(g[r].sigma);
    }
    Json h;
    h["command"] = "rc";
    h["mode"] = "cmz";
    h["mu"] = cfg.mu_text.empty() ? "infinity" : cfg.mu_text;
    h["sigma"] = weights;
    emit_series(cfg, terms, "hbar", h);
    return kExitOk;
  }
  throw ParseError("unknown rc mode '" + mode + "' (bracket, multilinear, cmz)");
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  SuiteConfig sc;
  sc.n = cfg.n;
  sc.seed = cfg.seed;
  sc.maxdeg = cfg.maxdeg;
  sc.cases = cfg.cases;
  SuiteReport rep = run_suite(suite, sc);
  if (cfg.json) {
    Json j;
    j["suite"] = rep.suite;
    j["n"] = cfg.n;
    j["seed"] = cfg.seed;
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
      Json e;
      e["name"] = c.name;
      e["holds"] = c.holds;
      e["cases"] = c.cases;
      if (!c.holds) e["detail"] = c.detail;
      checks.push_back(e);
    }
    j["checks"] = checks;
    j["pass"] = rep.all_pass();
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks) {
      std::cout << (c.holds ? "PASS " : "FAIL ") << rep.suite << "/" << c.name << " (" << c.cases << " cases)";
      if (!c.holds) std::cout << ": " << c.detail;
      std::cout << "\n";
    }
    std::cout << (rep.all_pass() ? "suite passed\n" : "suite FAILED\n");
  }
  return rep.all_pass() ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projectively invariant symbol calculus and star products"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  auto* nopt = app.add_option("--n", cfg.n, "Base dimension")->check(CLI::Range(1, kMaxDim));
  app.add_option("--connection", cfg.connection_path, "JSON connection file (default: flat)");
  app.add_option("--mu", cfg.mu_text, "Rational density weight");
  app.add_flag("--formal-mu", cfg.formal_mu, "Keep the density weight as the formal variable mu");
  app.add_option("--seed", cfg.seed, "Seed for verification suites");
  app.add_option("--maxdeg", cfg.maxdeg, "Coefficient degree of random suite inputs")->check(CLI::Range(0, 8));
  app.add_option("--cases", cfg.cases, "Random cases per suite check")->check(CLI::Range(1, 10000));
  app.add_flag("--json", cfg.json, "JSON output");

  std::string tensor, weight = "0", a, b, suite, mode;
  int beta = 0, k = 0, order = 4;
  std::vector<std::string> args;
  std::vector<int> ks;

  auto* lift = app.add_subcommand("lift", "Invariant ambient lift of a symmetric tensor");
  lift->add_option("tensor", tensor, "Tensor as a polynomial in x and z")->required();
  lift->add_option("--weight", weight, "Density weight");

  auto* lb = app.add_subcommand("lbeta", "Invariant multilinear operator L_beta");
  lb->add_option("beta", beta, "Number of free indices")->required()->check(CLI::NonNegativeNumber);
  lb->add_option("args", args, "Arguments as poly or poly:weight")->required();

  auto* quant = app.add_subcommand("quantize", "Symbol of the invariant quantization of a symmetric tensor");
  quant->add_option("symbol", tensor, "Symbol as a polynomial in x and z")->required();
  quant->add_option("--weight", weight, "Density weight of the symbol");

  auto* star = app.add_subcommand("star", "Star product expansion B_r(a, b)");
  star->add_option("a", a)->required();
  star->add_option("b", b)->required();

  auto* sinf = app.add_subcommand("star-inf", "Commutative limit product");
  sinf->add_option("a", a)->required();
  sinf->add_option("b", b)->required();

  auto* rc = app.add_subcommand("rc", "One-dimensional brackets and products (args as poly:sigma)");
  rc->add_option("mode", mode, "bracket | multilinear | cmz")->required();
  rc->add_option("args", args)->required();
  rc->add_option("--k", k, "Bracket order")->check(CLI::NonNegativeNumber);
  rc->add_option("--ks", ks, "Orders for the multilinear bracket")->delimiter(',');
  rc->add_option("--order", order, "Truncation order for cmz")->check(CLI::Range(0, 12));

  auto* gauge = app.add_subcommand("gauge", "Gauge transform from the flat structure to --connection");
  gauge->add_option("symbol", tensor)->required();

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  cfg.n_given = nopt->count() > 0;

  try {
    if (*lift) return cmd_lift(cfg, tensor, weight);
    if (*lb) return cmd_lbeta(cfg, beta, args);
    if (*quant) return cmd_quantize(cfg, tensor, weight);
    if (*star) return cmd_star(cfg, a, b, false);
    if (*sinf) return cmd_star(cfg, a, b, true);
    if (*rc) return cmd_rc(cfg, mode, args, k, ks, order);
    if (*gauge) return cmd_gauge(cfg, tensor);
    if (*verify) return cmd_verify(cfg, suite);
  } catch (const ExcludedWeight& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitExcluded;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
