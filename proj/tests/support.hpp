#pragma once

#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>

#include "zfr/numeric.hpp"

namespace zfr::test {

inline std::filesystem::path data_dir() {
  if (const char* env = std::getenv("ZFR_DATA_DIR")) return env;
  return std::filesystem::path(__FILE__).parent_path().parent_path() / "data";
}

inline Real R(const char* text) { return Real(text); }

inline Real uniform_real(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  // Widen to a full-precision value so later arithmetic is not stuck at 53 bits.
  return Real(d(rng)) + Real(d(rng)) * Real("1e-17");
}

}  // namespace zfr::test
