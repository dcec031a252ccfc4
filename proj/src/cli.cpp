#include "ellrs/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ellrs/errors.hpp"
#include "ellrs/serialization.hpp"

namespace ellrs {

namespace {

struct RunConfig {
  int n = 2;
  int m = 1;
  double g = 1.0;
  double p = 0.0;
  std::optional<double> alpha;
  bool level_locked_flag = false;
  bool free_flag = false;
  std::string mu;
  std::string lam;
  int r = 1;
  std::string route = "verlinde";
  std::string format = "json";
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  std::string precision = "double";
  std::string suite = "all";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "Number of particles")->capture_default_str();
  sub->add_option("--m", cfg.m, "Level")->capture_default_str();
  sub->add_option("--g", cfg.g, "Coupling")->capture_default_str();
  sub->add_option("--p", cfg.p, "Nome")->capture_default_str();
  sub->add_option("--alpha", cfg.alpha, "Scale (free mode)");
  sub->add_flag("--level-locked", cfg.level_locked_flag, "alpha = 2 pi/(m + n g)");
  sub->add_flag("--free", cfg.free_flag, "Free mode with explicit --alpha");
  sub->add_option("--format", cfg.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--out", cfg.out, "Output file (default stdout)");
  sub->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  sub->add_option("--precision", cfg.precision, "double or extended")
      ->check(CLI::IsMember({"double", "extended"}))
      ->capture_default_str();
}

Partition parse_partition(const std::string& text, const char* flag, int n) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError(std::string(flag) + ": '" + text + "' is not a comma-separated integer list");
    }
  }
  if (static_cast<int>(parts.size()) != n)
    throw UsageError(std::string(flag) + " must have exactly n = " + std::to_string(n) + " entries");
  return Partition(std::move(parts));
}

ModelParams make_params(const RunConfig& cfg, bool locked_by_default) {
  if (cfg.level_locked_flag && cfg.free_flag) throw UsageError("--level-locked and --free are exclusive");
  const bool locked = cfg.level_locked_flag || (!cfg.free_flag && locked_by_default && !cfg.alpha);
  const Precision prec = precision_from_string(cfg.precision);
  if (locked) {
    if (cfg.alpha) throw UsageError("--alpha cannot be combined with level-locked mode");
    return ModelParams::locked(cfg.n, cfg.m, cfg.g, cfg.p, prec);
  }
  if (!cfg.alpha) throw UsageError("free mode requires --alpha (or pass --level-locked)");
  return ModelParams::free(cfg.n, cfg.g, cfg.p, *cfg.alpha, prec, cfg.m);
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string csv_partition(const Partition& p) {
  std::string s = "\"";
  for (int j = 0; j < p.n(); ++j) s += (j ? "," : "") + std::to_string(p[j]);
  return s + "\"";
}

void emit(const RunConfig& cfg, const std::string& body, std::ostream& out) {
  if (cfg.out.empty()) {
    out << body;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(cfg.out);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot open " + tmp.string() + " for writing");
    f << body;
    if (!f) throw UsageError("write to " + tmp.string() + " failed");
  }
  fs::rename(tmp, target);
}

Json header(const ModelParams& params, std::uint64_t seed, const char* command) {
  return Json{{"command", command}, {"params", to_json(params)}, {"seed", seed}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string cmd_poly(const RunConfig& cfg) {
  const ModelParams params = make_params(cfg, false);
  const Partition mu = parse_partition(cfg.mu, "--mu", cfg.n);
  const PolynomialInE P = build_P(mu, params);
  if (cfg.format == "csv") {
    std::string s = "key,coeff\n";
    for (const auto& [k, c] : P.terms()) s += csv_partition(k) + "," + fmt(c) + "\n";
    return s;
  }
  Json j = header(params, cfg.seed, "poly");
  j["mu"] = to_json(mu);
  j["c_mu"] = c_norm(mu, params);
  j["terms"] = to_json(P);
  return dump(j);
}

std::string expansion_csv(const Expansion& e) {
  std::string s = "nu,value\n";
  for (const auto& [nu, v] : e) s += csv_partition(nu) + "," + fmt(v) + "\n";
  return s;
}

std::string cmd_lr(const RunConfig& cfg) {
  const ModelParams params = make_params(cfg, false);
  const Partition lam = parse_partition(cfg.lam, "--lam", cfg.n);
  const Partition mu = parse_partition(cfg.mu, "--mu", cfg.n);
  const Expansion c = lr_coefficients(lam, mu, params);
  if (cfg.format == "csv") return expansion_csv(c);
  Json j = header(params, cfg.seed, "lr");
  j["lam"] = to_json(lam);
  j["mu"] = to_json(mu);
  j["coefficients"] = to_json(c);
  return dump(j);
}

std::string cmd_pieri(const RunConfig& cfg) {
  const ModelParams params = make_params(cfg, false);
  const Partition lam = parse_partition(cfg.lam, "--lam", cfg.n);
  if (cfg.r < 1 || cfg.r > cfg.n) throw UsageError("--r must satisfy 1 <= r <= n");
  Expansion c;
  for (const auto& nu : vertical_strips(lam, cfg.r)) c[nu] = psi_prime(lam, nu, params);
  if (cfg.format == "csv") return expansion_csv(c);
  Json j = header(params, cfg.seed, "pieri");
  j["lam"] = to_json(lam);
  j["r"] = cfg.r;
  j["coefficients"] = to_json(c);
  return dump(j);
}

std::string cmd_spectrum(const RunConfig& cfg) {
  const ModelParams params = make_params(cfg, true);
  const SpectrumResult s = joint_spectrum(params, cfg.seed);
  if (cfg.format == "csv") {
    std::string out = "label,r,re,im,dual_norm\n";
    for (const auto& pt : s.points)
      for (std::size_t r = 0; r < pt.e.size(); ++r)
        out += csv_partition(pt.label) + "," + std::to_string(r + 1) + "," + fmt(pt.e[r].real()) + "," +
               fmt(pt.e[r].imag()) + "," + fmt(pt.dual_norm) + "\n";
    return out;
  }
  Json j = header(params, cfg.seed, "spectrum");
  j["spectrum"] = to_json(s);
  return dump(j);
}

std::string cmd_fusion(const RunConfig& cfg) {
  const ModelParams params = make_params(cfg, true);
  if (cfg.route != "verlinde" && cfg.route != "lr" && cfg.route != "both")
    throw UsageError("--route must be verlinde, lr or both");
  std::optional<FusionTable> v, l;
  if (cfg.route != "lr") v = fusion_table(params, Route::Verlinde);
  if (cfg.route != "verlinde") l = fusion_table(params, Route::LR);

  if (cfg.format == "csv") {
    const FusionTable& t = v ? *v : *l;
    std::string s = v && l ? "lam,mu,kappa,verlinde,lr,diff\n" : "lam,mu,kappa,value\n";
    for (const auto& a : t.basis)
      for (const auto& b : t.basis)
        for (const auto& k : t.basis) {
          if (v && l) {
            const double x = v->get(a, b, k), y = l->get(a, b, k);
            if (x == 0.0 && y == 0.0) continue;
            s += csv_partition(a) + "," + csv_partition(b) + "," + csv_partition(k) + "," + fmt(x) + "," +
                 fmt(y) + "," + fmt(x - y) + "\n";
          } else {
            const double x = t.get(a, b, k);
            if (x == 0.0) continue;
            s += csv_partition(a) + "," + csv_partition(b) + "," + csv_partition(k) + "," + fmt(x) + "\n";
          }
        }
    return s;
  }
  Json j = header(params, kDefaultSeed, "fusion");
  j["route"] = cfg.route;
  if (v) j["verlinde"] = to_json(*v);
  if (l) j["lr"] = to_json(*l);
  if (v && l) {
    Json entries = Json::array();
    for (const auto& a : v->basis)
      for (const auto& b : v->basis)
        for (const auto& k : v->basis) {
          const double d = v->get(a, b, k) - l->get(a, b, k);
          if (d != 0.0)
            entries.push_back(Json{{"lam", to_json(a)}, {"mu", to_json(b)}, {"kappa", to_json(k)}, {"diff", d}});
        }
    j["diff"] = Json{{"max_abs", max_difference(*v, *l)}, {"entries", std::move(entries)}};
  }
  return dump(j);
}

std::string cmd_smatrix(const RunConfig& cfg) {
  const ModelParams params = make_params(cfg, true);
  const SMatrix s = s_matrix(params);
  if (cfg.format == "csv") {
    std::string out = "lam,nu,re,im\n";
    for (Eigen::Index i = 0; i < s.S.rows(); ++i)
      for (Eigen::Index k = 0; k < s.S.cols(); ++k)
        out += csv_partition(s.basis[static_cast<std::size_t>(i)]) + "," +
               csv_partition(s.basis[static_cast<std::size_t>(k)]) + "," + fmt(s.S(i, k).real()) + "," +
               fmt(s.S(i, k).imag()) + "\n";
    return out;
  }
  Json j = header(params, kDefaultSeed, "smatrix");
  j["smatrix"] = to_json(s);
  return dump(j);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n < 2) throw UsageError("verify needs --n >= 2");
  const auto reports = run_suite(cfg.suite, cfg.n, cfg.m);
  bool all = true;
  for (const auto& r : reports) {
    all = all && r.passed;
    char line[256];
    std::snprintf(line, sizeof line, "%-4s %-52s abs=%.3e rel=%.3e tol=%.1e%s\n", r.passed ? "PASS" : "FAIL",
                  r.id.c_str(), r.max_abs, r.max_rel, r.tolerance, r.relative ? " (rel)" : "");
    out << line;
    if (!r.note.empty()) out << "     " << r.note << "\n";
  }
  if (!cfg.out.empty()) {
    Json j{{"command", "verify"}, {"suite", cfg.suite}, {"n", cfg.n}, {"m", cfg.m}, {"seed", cfg.seed}};
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    j["reports"] = std::move(arr);
    j["passed"] = all;
    emit(cfg, dump(j), out);
  }
  return all ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic Ruijsenaars eigenpolynomials, LR coefficients and level-m fusion rings"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* poly = app.add_subcommand("poly", "Eigenpolynomial P_mu in e_1..e_n");
  add_common(poly, cfg);
  poly->add_option("--mu", cfg.mu, "Partition, e.g. 2,0");

  auto* lr = app.add_subcommand("lr", "Elliptic Littlewood-Richardson coefficients");
  add_common(lr, cfg);
  lr->add_option("--lam", cfg.lam, "Partition");
  lr->add_option("--mu", cfg.mu, "Partition");

  auto* pieri = app.add_subcommand("pieri", "Pieri coefficients psi'_{nu/lam}");
  add_common(pieri, cfg);
  pieri->add_option("--lam", cfg.lam, "Partition");
  pieri->add_option("--r", cfg.r, "Strip size")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "Joint spectrum of the truncated operators");
  add_common(spectrum, cfg);

  auto* fusion = app.add_subcommand("fusion", "Fusion structure constants");
  add_common(fusion, cfg);
  fusion->add_option("--route", cfg.route, "verlinde, lr or both")->capture_default_str();

  auto* smatrix = app.add_subcommand("smatrix", "Elliptic S-matrix and its inverse");
  add_common(smatrix, cfg);

  auto* verify = app.add_subcommand("verify", "Run oracle suites");
  add_common(verify, cfg);
  verify->add_option("--suite", cfg.suite, "limits, ring, spectrum or all")
      ->check(CLI::IsMember({"limits", "ring", "spectrum", "all"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(cfg, out);
    std::string body;
    if (poly->parsed()) body = cmd_poly(cfg);
    if (lr->parsed()) body = cmd_lr(cfg);
    if (pieri->parsed()) body = cmd_pieri(cfg);
    if (spectrum->parsed()) body = cmd_spectrum(cfg);
    if (fusion->parsed()) body = cmd_fusion(cfg);
    if (smatrix->parsed()) body = cmd_smatrix(cfg);
    emit(cfg, body, out);
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "IOError: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ellrs
