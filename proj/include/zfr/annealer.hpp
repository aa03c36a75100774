#pragma once

// Simulated annealing over generator vectors c_0 = 1, c_1..c_K. The
// polynomial is |sum c_k e^{ikx}|^2 / sum c_k^2, so every state is
// non-negative; admissibility (b_1 > b_0) is enforced by rejection.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "zfr/numeric.hpp"
#include "zfr/trigpoly.hpp"

namespace zfr {

enum class Objective { R2, R1 };

struct AnnealConfig {
  int degree = 4;
  double init_range = 150.0;  // c_k ~ U[0, init_range]
  std::vector<double> step_schedule;  // defaults to geometric 60 -> 2, 8 levels
  std::vector<double> temp_schedule;  // defaults to default_temperatures()
  long iters_per_level = 8000;
  Objective objective = Objective::R2;
  std::uint64_t seed = 1;
  int chains = 1;
  /// Also perturb c_K. Off by default: only 1 <= k < K is drawn.
  bool perturb_last = false;
  double B = 4.45;
  unsigned verify_digits = 50;
  /// Start every chain here instead of a random draw (second-phase runs).
  std::vector<double> initial;

  AnnealConfig();
  /// Throws std::invalid_argument when an invariant does not hold.
  void validate() const;
};

/// `levels` values from `first` to `last`, geometrically spaced.
std::vector<double> geometric_schedule(double first, double last, int levels);

/// 11 geometric levels from 1e-2 down to 1e-5, then 0.
std::vector<double> default_temperatures();

AnnealConfig parse_anneal_config(const std::string& json_text);
std::string anneal_config_json(const AnnealConfig& cfg);
/// FNV-1a over the canonical JSON of the config.
std::uint64_t config_hash(const AnnealConfig& cfg);

class SearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 64-bit stream for one chain: mt19937_64 seeded with
/// splitmix64(seed + chain * 0x9E3779B97F4A7C15).
class ChainRng {
 public:
  ChainRng(std::uint64_t seed, int chain);
  std::uint64_t stream_seed() const { return stream_seed_; }
  /// (x >> 11) * 2^-53, in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int index(int lo, int hi);

 private:
  std::uint64_t stream_seed_;
  std::mt19937_64 gen_;
};

inline constexpr const char* kRngDescription =
    "mt19937_64 per chain, seeded by splitmix64(seed + chain * 0x9E3779B97F4A7C15)";

std::uint64_t splitmix64(std::uint64_t x);

/// c_0 = 1 and c_k ~ U[0, H], redrawn until b_1 > b_0. Throws SearchError
/// after `max_tries` draws.
Vector<double> random_init(const AnnealConfig& cfg, ChainRng& rng, long max_tries = 1000000, long* tries = nullptr);

/// Objective of a polynomial with b_0 = 1. theta_hint warm-starts the solve
/// and receives the new theta. Returns +inf when no value exists.
double objective_value(Objective obj, const Vector<double>& b, double b_sum, double B, double& theta_hint);
Real objective_value_real(Objective obj, const TrigPoly<Real>& p, const Real& B);

enum class StepOutcome { Inadmissible, Improved, AcceptedWorse, Rejected };

/// One Markov chain position with unnormalized autocorrelations
/// r_m = sum_j c_j c_{j+m}, kept current in O(K) per move.
class AnnealState {
 public:
  AnnealState(Vector<double> generators, Objective obj, double B);

  const Vector<double>& generators() const { return c_; }
  const Vector<double>& autocorrelations() const { return r_; }
  /// b_0 = 1, b_m = 2 r_m / r_0.
  Vector<double> cosine_coeffs() const;
  double objective() const { return value_; }
  double theta() const { return theta_; }
  bool admissible() const;

  /// Adds s to c_k and accepts per the Metropolis rule with draw u in [0, 1).
  StepOutcome step(int k, double s, double temperature, double u);

  /// Recomputes r from c.
  void recompute();

 private:
  void shift(int k, double s);
  double b_sum() const;

  Vector<double> c_;
  Vector<double> r_;
  Vector<double> saved_r_;
  Objective obj_;
  double B_;
  double value_;
  double theta_;
};

struct LevelStats {
  double step;
  double temperature;
  long attempted = 0;
  long inadmissible = 0;
  long improved = 0;
  long accepted_worse = 0;
  long rejected = 0;
  double objective_end = 0;
  double best_end = 0;
  double acceptance_rate() const {
    const long admissible = attempted - inadmissible;
    return admissible > 0 ? double(improved + accepted_worse) / double(admissible) : 0.0;
  }
};

struct ChainSummary {
  int chain;
  std::uint64_t stream_seed;
  long init_tries;
  double initial_objective;
  double best_objective;
  long rescored;  // ties with the incumbent settled at verify_digits
};

struct AnnealResult {
  Vector<double> best_generators;
  double best_objective;
  std::string verified_objective;  // recomputed at verify_digits
  bool precision_flag;             // |hot loop - verified| > 1e-8
  int winning_chain;
  std::vector<LevelStats> levels;  // winning chain
  std::vector<ChainSummary> chains;
  std::uint64_t seed;
  std::string rng;

  TrigPoly<double> polynomial() const { return TrigPoly<double>::from_generators(best_generators); }
};

/// Runs one chain; deterministic in (cfg, chain).
AnnealResult anneal_chain(const AnnealConfig& cfg, int chain);

/// Runs cfg.chains chains on threads and keeps the best (ties to the lower
/// chain index). Sets the Real default precision to cfg.verify_digits for the
/// duration.
AnnealResult anneal(const AnnealConfig& cfg);

/// One JSON object (no trailing newline) for the run log.
std::string run_log_line(const AnnealConfig& cfg, const AnnealResult& r);

}  // namespace zfr
