#include "zfr/annealer.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "json.hpp"
#include "zfr/regions.hpp"
#include "zfr/smoothing.hpp"

namespace zfr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRescoreWindow = 1e-6;
constexpr double kVerifyTolerance = 1e-8;

const char* objective_name(Objective o) { return o == Objective::R2 ? "R2" : "R1"; }

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

// 4.45 as the decimal 4.45, not its binary neighbour.
Real shortest_decimal(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return Real(std::string(buf, res.ptr));
}

template <class Scalar>
Scalar r1_objective(const TrigPoly<Scalar>& p, const Scalar& B) {
  using std::pow;
  RegionParams<Scalar> params(p);
  params.K = int(p.degree());
  params.R = std::nullopt;
  params.richert.B = B;
  const auto m1 = best_closing_m1(params);
  if (!m1) return Scalar(kInf);
  return pow(B, Scalar(2) / Scalar(3)) / *m1;
}

}  // namespace

std::vector<double> geometric_schedule(double first, double last, int levels) {
  if (levels < 1 || !(first > 0) || !(last > 0)) throw std::invalid_argument("geometric_schedule: bad arguments");
  if (levels == 1) return {first};
  std::vector<double> out(static_cast<std::size_t>(levels));
  for (int i = 0; i < levels; ++i) out[std::size_t(i)] = first * std::pow(last / first, double(i) / (levels - 1));
  out.back() = last;
  return out;
}

std::vector<double> default_temperatures() {
  auto t = geometric_schedule(1e-2, 1e-5, 11);
  t.push_back(0.0);
  return t;
}

AnnealConfig::AnnealConfig() : step_schedule(geometric_schedule(60.0, 2.0, 8)), temp_schedule(default_temperatures()) {}

void AnnealConfig::validate() const {
  auto fail = [](const std::string& m) { throw std::invalid_argument("anneal config: " + m); };
  if (degree < 2) fail("degree must be >= 2");
  if (!(init_range > 0)) fail("init_range must be > 0");
  if (step_schedule.empty() || !strictly_decreasing(step_schedule)) fail("step_schedule must be strictly decreasing");
  if (!(step_schedule.back() > 0)) fail("step sizes must be > 0");
  if (temp_schedule.empty() || !strictly_decreasing(temp_schedule)) fail("temp_schedule must be strictly decreasing");
  if (temp_schedule.back() != 0.0) fail("temp_schedule must end at 0");
  if (iters_per_level < 1) fail("iters_per_level must be >= 1");
  if (chains < 1) fail("chains must be >= 1");
  if (!(B > 0)) fail("B must be > 0");
  if (verify_digits < 20) fail("verify_digits must be >= 20");
  if (!initial.empty() && initial.size() != std::size_t(degree) + 1) fail("initial must have degree + 1 entries");
}

AnnealConfig parse_anneal_config(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("anneal config: expected a JSON object");
  AnnealConfig c;
  for (const auto& [key, v] : j.items()) {
    if (key == "degree") c.degree = v.get<int>();
    else if (key == "init_range") c.init_range = v.get<double>();
    else if (key == "step_schedule") c.step_schedule = v.get<std::vector<double>>();
    else if (key == "temp_schedule") c.temp_schedule = v.get<std::vector<double>>();
    else if (key == "iters_per_level") c.iters_per_level = v.get<long>();
    else if (key == "objective") {
      const auto s = v.get<std::string>();
      if (s == "R2") c.objective = Objective::R2;
      else if (s == "R1") c.objective = Objective::R1;
      else throw std::invalid_argument("anneal config: objective must be R2 or R1");
    } else if (key == "seed") c.seed = v.get<std::uint64_t>();
    else if (key == "chains") c.chains = v.get<int>();
    else if (key == "perturb_last") c.perturb_last = v.get<bool>();
    else if (key == "B") c.B = v.get<double>();
    else if (key == "verify_digits") c.verify_digits = v.get<unsigned>();
    else if (key == "initial") c.initial = v.get<std::vector<double>>();
    else throw std::invalid_argument("anneal config: unknown key '" + key + "'");
  }
  c.validate();
  return c;
}

std::string anneal_config_json(const AnnealConfig& c) {
  nlohmann::ordered_json j;
  j["degree"] = c.degree;
  j["init_range"] = c.init_range;
  j["step_schedule"] = c.step_schedule;
  j["temp_schedule"] = c.temp_schedule;
  j["iters_per_level"] = c.iters_per_level;
  j["objective"] = objective_name(c.objective);
  j["seed"] = c.seed;
  j["chains"] = c.chains;
  j["perturb_last"] = c.perturb_last;
  j["B"] = c.B;
  j["verify_digits"] = c.verify_digits;
  j["initial"] = c.initial;
  return j.dump();
}

std::uint64_t config_hash(const AnnealConfig& c) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : anneal_config_json(c)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

ChainRng::ChainRng(std::uint64_t seed, int chain)
    : stream_seed_(splitmix64(seed + std::uint64_t(chain) * 0x9E3779B97F4A7C15ull)), gen_(stream_seed_) {}

double ChainRng::uniform() { return double(gen_() >> 11) * 0x1.0p-53; }

int ChainRng::index(int lo, int hi) {
  const std::uint64_t span = std::uint64_t(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do x = gen_();
  while (x >= limit);
  return lo + int(x % span);
}

Vector<double> random_init(const AnnealConfig& cfg, ChainRng& rng, long max_tries, long* tries) {
  Vector<double> c(cfg.degree + 1);
  for (long t = 1; t <= max_tries; ++t) {
    c(0) = 1.0;
    for (int k = 1; k <= cfg.degree; ++k) c(k) = rng.uniform(0.0, cfg.init_range);
    const double norm2 = c.squaredNorm();
    const double r1 = c.head(cfg.degree).dot(c.tail(cfg.degree));
    if (2.0 * r1 > norm2) {
      if (tries) *tries = t;
      return c;
    }
  }
  throw SearchError("random_init: no admissible generator vector after " + std::to_string(max_tries) + " draws");
}

double objective_value(Objective obj, const Vector<double>& b, double b_sum, double B, double& theta_hint) {
  try {
    if (obj == Objective::R2) {
      theta_hint = solve_theta(1.0, b(1), std::optional<double>(theta_hint));
      return std::pow(B, 2.0 / 3.0) / asymptotic_q(theta_hint, 1.0, b_sum);
    }
    const auto p = TrigPoly<double>::from_cosine_coeffs(b);
    theta_hint = solve_theta(p.b0(), p.b1(), std::optional<double>(theta_hint));
    return r1_objective(p, B);
  } catch (const std::domain_error&) {
    return kInf;
  }
}

Real objective_value_real(Objective obj, const TrigPoly<Real>& p, const Real& B) {
  if (obj == Objective::R2) return asymptotic_quantity(p, B).R2;
  return r1_objective(p, B);
}

AnnealState::AnnealState(Vector<double> generators, Objective obj, double B)
    : c_(std::move(generators)), obj_(obj), B_(B), value_(kInf), theta_(1.0) {
  recompute();
  if (admissible()) value_ = objective_value(obj_, cosine_coeffs(), b_sum(), B_, theta_);
}

void AnnealState::recompute() {
  const Eigen::Index n = c_.size();
  r_.resize(n);
  for (Eigen::Index m = 0; m < n; ++m) r_(m) = c_.head(n - m).dot(c_.tail(n - m));
}

Vector<double> AnnealState::cosine_coeffs() const {
  Vector<double> b = 2.0 * r_ / r_(0);
  b(0) = 1.0;
  return b;
}

double AnnealState::b_sum() const { return 2.0 * r_.tail(r_.size() - 1).sum() / r_(0); }

bool AnnealState::admissible() const {
  for (Eigen::Index m = 1; m < r_.size(); ++m)
    if (r_(m) < 0) return false;
  return 2.0 * r_(1) > r_(0);
}

void AnnealState::shift(int k, double s) {
  const Eigen::Index n = c_.size();
  for (Eigen::Index m = 1; m < n; ++m) {
    double t = 0;
    if (k + m < n) t += c_(k + m);
    if (k - m >= 0) t += c_(k - m);
    r_(m) += s * t;
  }
  r_(0) += s * (2.0 * c_(k) + s);
  c_(k) += s;
}

StepOutcome AnnealState::step(int k, double s, double temperature, double u) {
  saved_r_ = r_;
  const double old_c = c_(k);
  shift(k, s);
  auto undo = [&] {
    c_(k) = old_c;
    r_.swap(saved_r_);
  };
  if (!admissible()) {
    undo();
    return StepOutcome::Inadmissible;
  }
  double theta = theta_;
  const double v = objective_value(obj_, cosine_coeffs(), b_sum(), B_, theta);
  if (v < value_) {
    value_ = v;
    theta_ = theta;
    return StepOutcome::Improved;
  }
  if (temperature > 0 && std::isfinite(v) && u < std::exp(-(v - value_) / temperature)) {
    value_ = v;
    theta_ = theta;
    return StepOutcome::AcceptedWorse;
  }
  undo();
  return StepOutcome::Rejected;
}

AnnealResult anneal_chain(const AnnealConfig& cfg, int chain) {
  cfg.validate();
  ChainRng rng(cfg.seed, chain);
  long tries = 0;
  Vector<double> start;
  if (cfg.initial.empty()) {
    start = random_init(cfg, rng, 1000000, &tries);
  } else {
    start = Eigen::Map<const Vector<double>>(cfg.initial.data(), Eigen::Index(cfg.initial.size()));
  }
  AnnealState st(start, cfg.objective, cfg.B);
  const Real B = shortest_decimal(cfg.B);
  auto real_value = [&](const Vector<double>& c) {
    return objective_value_real(cfg.objective, TrigPoly<Real>::from_generators(c.cast<Real>()), B);
  };

  AnnealResult res;
  res.best_generators = st.generators();
  res.best_objective = st.objective();
  res.seed = cfg.seed;
  res.rng = kRngDescription;
  res.winning_chain = chain;
  ChainSummary summary{chain, rng.stream_seed(), tries, st.objective(), 0, 0};
  std::optional<Real> best_real;

  const int last_k = cfg.perturb_last ? cfg.degree : cfg.degree - 1;
  for (double S : cfg.step_schedule) {
    for (double T : cfg.temp_schedule) {
      LevelStats lv{S, T};
      for (long i = 0; i < cfg.iters_per_level; ++i) {
        const int k = rng.index(1, last_k);
        const double s = rng.uniform(-S, S);
        const double u = rng.uniform();
        ++lv.attempted;
        switch (st.step(k, s, T, u)) {
          case StepOutcome::Inadmissible: ++lv.inadmissible; continue;
          case StepOutcome::Rejected: ++lv.rejected; continue;
          case StepOutcome::Improved: ++lv.improved; break;
          case StepOutcome::AcceptedWorse: ++lv.accepted_worse; break;
        }
        const double v = st.objective();
        if (v < res.best_objective - kRescoreWindow) {
          res.best_generators = st.generators();
          res.best_objective = v;
          best_real.reset();
        } else if (v < res.best_objective + kRescoreWindow && st.generators() != res.best_generators) {
          if (!best_real) best_real = real_value(res.best_generators);
          Real cand = real_value(st.generators());
          ++summary.rescored;
          if (cand < *best_real) {
            res.best_generators = st.generators();
            res.best_objective = v;
            best_real = std::move(cand);
          }
        }
      }
      lv.objective_end = st.objective();
      lv.best_end = res.best_objective;
      res.levels.push_back(lv);
    }
  }
  summary.best_objective = res.best_objective;
  res.chains.push_back(summary);

  const Real verified = best_real ? *best_real : real_value(res.best_generators);
  res.verified_objective = to_significant(verified, int(cfg.verify_digits));
  res.precision_flag = !(abs(verified - Real(res.best_objective)) <= Real(kVerifyTolerance));
  return res;
}

AnnealResult anneal(const AnnealConfig& cfg) {
  cfg.validate();
  ScopedPrecision prec(cfg.verify_digits);
  std::vector<AnnealResult> results(std::size_t(cfg.chains));
  std::vector<std::exception_ptr> errors(std::size_t(cfg.chains));
  {
    std::vector<std::jthread> pool;
    for (int i = 0; i < cfg.chains; ++i)
      pool.emplace_back([&, i] {
        try {
          results[std::size_t(i)] = anneal_chain(cfg, i);
        } catch (...) {
          errors[std::size_t(i)] = std::current_exception();
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i)
    if (results[i].best_objective < results[best].best_objective) best = i;
  std::vector<ChainSummary> summaries;
  for (const auto& r : results) summaries.push_back(r.chains.front());
  AnnealResult out = std::move(results[best]);
  out.chains = std::move(summaries);
  return out;
}

std::string run_log_line(const AnnealConfig& cfg, const AnnealResult& r) {
  nlohmann::ordered_json j;
  j["seed"] = cfg.seed;
  j["config_hash"] = hex64(config_hash(cfg));
  j["degree"] = cfg.degree;
  j["objective"] = objective_name(cfg.objective);
  j["chains"] = cfg.chains;
  j["winning_chain"] = r.winning_chain;
  j["best_objective"] = r.best_objective;
  j["verified_objective"] = r.verified_objective;
  j["precision_flag"] = r.precision_flag;
  j["generators"] = std::vector<double>(r.best_generators.data(), r.best_generators.data() + r.best_generators.size());
  j["rng"] = r.rng;
  return j.dump();
}

}  // namespace zfr
