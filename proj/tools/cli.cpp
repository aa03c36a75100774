#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zfr/annealer.hpp"
#include "zfr/polyfile.hpp"
#include "zfr/regions.hpp"

namespace zfr::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string shortest(double x) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TrigPoly<Real> load_poly(const std::string& path, const PolyFile& fallback) {
  return to_trig_poly<Real>(path.empty() ? fallback : read_poly_file(path));
}

Real json_real(const nlohmann::json& v) {
  return Real(v.is_string() ? v.get<std::string>() : v.dump());
}

void apply_params(RegionParams<Real>& p, const std::string& path) {
  if (path.empty()) return;
  const auto j = nlohmann::json::parse(read_text(path));
  if (!j.is_object()) throw UsageError(path + ": expected a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "A") p.richert.A = json_real(v);
    else if (key == "B") p.richert.B = json_real(v);
    else if (key == "E") p.E = json_real(v);
    else if (key == "M1") p.M1 = json_real(v);
    else if (key == "log_T0") p.log_T0 = json_real(v);
    else if (key == "K") p.K = v.get<int>();
    else if (key == "R") {
      if (v.is_string() && v.get<std::string>() == "auto") p.R = std::nullopt;
      else p.R = json_real(v);
    } else {
      throw UsageError(path + ": unknown parameter '" + key + "'");
    }
  }
}

Kappa2Convention parse_kappa2(const std::string& s) {
  if (s == "consistent") return Kappa2Convention::Consistent;
  if (s == "published") return Kappa2Convention::Published;
  throw UsageError("--kappa2 must be consistent or published");
}

const RegionBound& bound_named(const std::string& name) {
  for (const auto& b : standard_bounds())
    if (b.name == name) return b;
  std::string known;
  for (const auto& b : standard_bounds()) known += " " + b.name;
  throw UsageError("unknown bound '" + name + "'; known:" + known);
}

struct Output {
  bool json = false;
  int digits = 0;
  std::string out_path;

  void emit(std::ostream& os, const VerificationReport& r) const {
    const std::string text = json ? to_json(r, digits) : to_text(r, digits);
    if (out_path.empty()) {
      os << text;
    } else {
      std::ofstream f(out_path);
      if (!f) throw UsageError("cannot write " + out_path);
      f << text;
    }
  }
};

VerificationReport simple_report(std::string title) {
  VerificationReport r;
  r.title = std::move(title);
  r.precision = Real::default_precision();
  r.pass = true;
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-free region constants: verification, search and envelopes", "zfr"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  unsigned precision = kDefaultDigits;
  Output o;
  app.add_option("--precision", precision, "Working precision in decimal digits")->check(CLI::Range(20u, 5000u));
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--digits", o.digits, "Print values to this many significant digits (0: displayed precision)")
      ->check(CLI::Range(0, 1000));
  app.add_option("--out", o.out_path, "Write the output here instead of stdout");

  std::string poly_path, params_path, kappa2 = "consistent";
  bool best_m1 = false;
  auto* thm1 = app.add_subcommand("verify-thm1", "Check the all-heights Korobov-Vinogradov chain");
  thm1->add_option("--poly", poly_path, "Polynomial file (default: bundled degree 40)");
  thm1->add_option("--params", params_path, "JSON file overriding A, B, E, M1, R, log_T0, K");
  thm1->add_option("--kappa2", kappa2, "consistent | published");
  thm1->add_flag("--best-m1", best_m1, "Also find the largest closing M1");

  std::string log_t0 = "1000";
  auto* thm4 = app.add_subcommand("verify-thm4", "Check the intermediate-region chain");
  thm4->add_option("--poly", poly_path, "Polynomial file (default: bundled degree 40)");
  thm4->add_option("--log-t0", log_t0, "log of the starting height");

  auto* asym = app.add_subcommand("asymptotic", "Asymptotic constant q and R2 of a polynomial");
  asym->add_option("--poly", poly_path, "Polynomial file (default: bundled degree 46)");
  std::string B_text = "4.45";
  asym->add_option("--B", B_text, "Richert exponent constant");

  std::string config_path, log_path, objective;
  std::optional<std::uint64_t> seed;
  std::optional<int> chains, degree;
  std::optional<long> iters;
  bool perturb_last = false;
  auto* ann = app.add_subcommand("anneal", "Search generator vectors by simulated annealing");
  ann->add_option("--config", config_path, "JSON annealing config");
  ann->add_option("--degree", degree, "Polynomial degree");
  ann->add_option("--seed", seed, "Master seed");
  ann->add_option("--chains", chains, "Independent chains");
  ann->add_option("--iters", iters, "Iterations per (step, temperature) level");
  ann->add_option("--objective", objective, "R2 | R1");
  ann->add_flag("--perturb-last", perturb_last, "Also perturb the last generator");
  ann->add_option("--poly-out", poly_path, "Write the best polynomial here as a generator file");
  ann->add_option("--log", log_path, "Append a JSON line to this run log");

  std::optional<double> at_log, from_log, to_log;
  int steps = 100;
  auto* env = app.add_subcommand("envelope", "Widest known zero-free region by height");
  env->add_option("--log-t", at_log, "Single height, as log t");
  env->add_option("--from-log", from_log, "CSV range start (log t)");
  env->add_option("--to-log", to_log, "CSV range end (log t)");
  env->add_option("--steps", steps, "CSV intervals")->check(CLI::PositiveNumber);

  std::string bound_a, bound_b;
  double lo = 0, hi = 0;
  auto* cross = app.add_subcommand("crossover", "Height where two region widths cross");
  cross->add_option("--a", bound_a, "First bound name")->required();
  cross->add_option("--b", bound_b, "Second bound name")->required();
  cross->add_option("--lo", lo, "Search start (log t)")->required();
  cross->add_option("--hi", hi, "Search end (log t)")->required();

  std::vector<std::string> factors;
  bool one_plus_cos = false;
  int file_digits = 40;
  auto* expand = app.add_subcommand("expand", "Write a cosine coefficient file");
  expand->add_option("--poly", poly_path, "Generator file to convert");
  expand->add_option("--factor", factors, "a:m for a factor (a + cos x)^m; repeatable");
  expand->add_flag("--one-plus-cos", one_plus_cos, "Include a (1 + cos x) factor");
  expand->add_option("--file-digits", file_digits, "Significant digits written")->check(CLI::Range(5, 1000));

  std::string c_text;
  auto* pnt = app.add_subcommand("pnt-exponent", "Prime number theorem exponent for a region constant");
  pnt->add_option("--c", c_text, "Region constant")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    ScopedPrecision prec(precision);

    if (*thm1) {
      auto params = RegionParams<Real>::defaults();
      if (!poly_path.empty()) {
        params.poly = load_poly(poly_path, bundled_p40());
        params.K = int(params.poly.degree());
      }
      apply_params(params, params_path);
      const auto r = verify_theorem1(params, {parse_kappa2(kappa2), best_m1});
      o.emit(out, r);
      return r.pass ? 0 : 1;
    }
    if (*thm4) {
      const auto r = verify_theorem4(load_poly(poly_path, bundled_p40()), Real(log_t0));
      o.emit(out, r);
      return r.pass ? 0 : 1;
    }
    if (*asym) {
      const auto p = load_poly(poly_path, bundled_p46());
      const auto a = asymptotic_quantity(p, Real(B_text));
      auto r = simple_report("asymptotic");
      r.inputs = {{"degree", std::to_string(p.degree())}, {"B", B_text}};
      r.values.push_back({"theta", a.theta, 14, Rounding::Nearest});
      r.values.push_back({"q", a.q, 10, Rounding::Down});
      r.values.push_back({"R2", a.R2, 13, Rounding::Up});
      o.emit(out, r);
      return 0;
    }
    if (*ann) {
      AnnealConfig cfg = config_path.empty() ? AnnealConfig{} : parse_anneal_config(read_text(config_path));
      if (degree) cfg.degree = *degree;
      if (seed) cfg.seed = *seed;
      if (chains) cfg.chains = *chains;
      if (iters) cfg.iters_per_level = *iters;
      if (perturb_last) cfg.perturb_last = true;
      if (!objective.empty()) {
        if (objective == "R2") cfg.objective = Objective::R2;
        else if (objective == "R1") cfg.objective = Objective::R1;
        else throw UsageError("--objective must be R2 or R1");
      }
      cfg.verify_digits = precision;
      cfg.validate();
      const auto res = anneal(cfg);
      auto r = simple_report("anneal");
      r.inputs = {{"degree", std::to_string(cfg.degree)},
                  {"objective", cfg.objective == Objective::R2 ? "R2" : "R1"},
                  {"seed", std::to_string(cfg.seed)},
                  {"chains", std::to_string(cfg.chains)},
                  {"perturb_last", cfg.perturb_last ? "true" : "false"},
                  {"rng", res.rng}};
      const Real best(res.verified_objective);
      r.values.push_back({"winning_chain", Real(res.winning_chain), 0, Rounding::Nearest});
      r.values.push_back({"objective", best, 13, Rounding::Up});
      if (cfg.objective == Objective::R2)
        r.values.push_back({"q", pow(Real(shortest(cfg.B)), Real(2) / Real(3)) / best, 10, Rounding::Down});
      for (Eigen::Index k = 0; k < res.best_generators.size(); ++k)
        r.values.push_back({"c" + std::to_string(k), Real(res.best_generators(k)), 12, Rounding::Nearest});
      r.links.push_back({"verified_matches_hot_loop", abs(best - Real(res.best_objective)), "<=", Real("1e-8"),
                         !res.precision_flag});
      r.pass = !res.precision_flag;
      if (!r.pass) r.first_failure = "verified_matches_hot_loop";
      if (!poly_path.empty()) {
        PolyFile f;
        f.kind = CoeffKind::Generators;
        f.comments = {"annealed, degree " + std::to_string(cfg.degree) + ", seed " + std::to_string(cfg.seed)};
        for (Eigen::Index k = 0; k < res.best_generators.size(); ++k)
          f.values.push_back(shortest(res.best_generators(k)));
        write_poly_file(poly_path, f);
      }
      if (!log_path.empty()) {
        std::ofstream log(log_path, std::ios::app);
        if (!log) throw UsageError("cannot append to " + log_path);
        log << run_log_line(cfg, res) << '\n';
      }
      o.emit(out, r);
      return r.pass ? 0 : 1;
    }
    if (*env) {
      if (at_log) {
        const auto e = envelope(*at_log);
        auto r = simple_report("envelope");
        r.inputs = {{"log_t", shortest(*at_log)}, {"bound", e.bound->name}, {"provenance", e.bound->provenance}};
        r.values.push_back({"width", Real(e.width), 17, Rounding::Nearest});
        o.emit(out, r);
        return 0;
      }
      if (!from_log || !to_log) throw UsageError("envelope needs --log-t or both --from-log and --to-log");
      std::ostringstream csv;
      csv << "log_t,width,source\n";
      for (int i = 0; i <= steps; ++i) {
        const double L = *from_log + (*to_log - *from_log) * i / steps;
        const auto e = envelope(L);
        csv << shortest(L) << ',' << shortest(e.width) << ',' << e.bound->name << '\n';
      }
      if (o.out_path.empty()) {
        out << csv.str();
      } else {
        std::ofstream f(o.out_path);
        if (!f) throw UsageError("cannot write " + o.out_path);
        f << csv.str();
      }
      return 0;
    }
    if (*cross) {
      const double x = crossover(bound_named(bound_a), bound_named(bound_b), lo, hi);
      auto r = simple_report("crossover");
      r.inputs = {{"a", bound_a}, {"b", bound_b}, {"lo", shortest(lo)}, {"hi", shortest(hi)}};
      r.values.push_back({"log_t", Real(x), 2, Rounding::Nearest});
      o.emit(out, r);
      return 0;
    }
    if (*expand) {
      if (poly_path.empty() == factors.empty()) throw UsageError("expand needs exactly one of --poly or --factor");
      std::vector<std::string> comments;
      TrigPoly<Real> p = poly_path.empty() ? TrigPoly<Real>::from_cosine_coeffs(Vector<Real>::Ones(1))
                                           : load_poly(poly_path, bundled_p40());
      if (!factors.empty()) {
        std::vector<LinearCosFactor<Real>> fs;
        std::string desc;
        for (const auto& f : factors) {
          const auto colon = f.find(':');
          const std::string a = f.substr(0, colon);
          int m = 1;
          if (colon != std::string::npos) {
            const std::string ms = f.substr(colon + 1);
            const auto rr = std::from_chars(ms.data(), ms.data() + ms.size(), m);
            if (rr.ec != std::errc() || rr.ptr != ms.data() + ms.size()) throw UsageError("bad factor '" + f + "'");
          }
          try {
            fs.push_back({Real(a), m});
          } catch (const std::exception&) {
            throw UsageError("bad factor '" + f + "'");
          }
          desc += " (" + a + " + cos x)^" + std::to_string(m);
        }
        if (one_plus_cos) desc += " (1 + cos x)";
        p = expand_product_form<Real>(fs, one_plus_cos);
        comments.push_back("product" + desc);
      } else {
        comments.push_back("expanded from " + poly_path);
      }
      const std::string text = format_poly_file(cosine_file_from(p, file_digits, comments));
      if (o.out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(o.out_path);
        if (!f) throw UsageError("cannot write " + o.out_path);
        f << text;
      }
      return 0;
    }
    if (*pnt) {
      auto r = simple_report("pnt-exponent");
      r.inputs = {{"c", c_text}};
      r.values.push_back({"d", pnt_exponent(Real(c_text)), 4, Rounding::Down});
      o.emit(out, r);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace zfr::cli
