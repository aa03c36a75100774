#pragma once

// Analytic inputs about zeta used by the region proofs: the Richert growth
// bound parameters, the bound on log zeta(1 + eta), the sub-Weyl exponent,
// the N(T) error term and the zero-counting and zero-sum estimates near 1+it.
//
// Heights are passed as log t throughout.

#include <cmath>
#include <stdexcept>
#include <string_view>

#include "zfr/numeric.hpp"

namespace zfr {

template <class Scalar>
struct RichertParams {
  Scalar A = decimal<Scalar>("76.2");
  Scalar B = decimal<Scalar>("4.45");
};

/// L1 = log(Kt + 1), L2 = log L1 for a height given as log t.
template <class Scalar>
struct LogScales {
  Scalar log_t;
  Scalar L1;
  Scalar L2;
  int K;
};

/// Throws std::domain_error unless t >= 3 and L2 > 0.
template <class Scalar>
LogScales<Scalar> log_scales(const Scalar& log_t, int K) {
  using std::exp;
  using std::log;
  if (K < 1) throw std::domain_error("log_scales: K must be >= 1");
  if (log_t < log(Scalar(3))) throw std::domain_error("log_scales: need t >= 3");
  // log(Kt + 1) = log t + log(K + 1/t) never forms t itself.
  const Scalar L1 = log_t + log(Scalar(K) + exp(-log_t));
  const Scalar L2 = log(L1);
  if (!(L2 > Scalar(0))) throw std::domain_error("log_scales: need Kt + 1 > e");
  return {log_t, L1, L2, K};
}

inline constexpr std::string_view kSubWeylConstant = "307.098";
/// Constant term of the zero-sum bound at 1 + it.
inline constexpr std::string_view kZeroSumConstant = "206.7";
/// The same constant after the j-sum in the direct region bound; kept separate.
inline constexpr std::string_view kZeroSumConstantShifted = "209.1";
inline constexpr std::string_view kZeroCountConstant = "0.479";
inline constexpr std::string_view kZeroSumDrop = "0.213";
inline constexpr std::string_view kZeroCountDivisor = "1.879";

/// gamma*eta - log(eta), an upper bound for log zeta(1 + eta).
template <class Scalar>
Scalar ramare_log_zeta(const Scalar& eta) {
  using std::log;
  if (!(eta > Scalar(0))) throw std::domain_error("ramare_log_zeta: need eta > 0");
  return euler_gamma<Scalar>() * eta - log(eta);
}

/// J(t) = (27/164) log t + log 307.098.
template <class Scalar>
Scalar subweyl_J(const Scalar& log_t) {
  using std::log;
  return Scalar(27) / Scalar(164) * log_t + log(decimal<Scalar>(kSubWeylConstant));
}

/// 0.1038 log T + 0.2573 log log T + 9.3675, for T >= e.
template <class Scalar>
Scalar NT_error(const Scalar& log_T) {
  using std::log;
  if (log_T < Scalar(1)) throw std::domain_error("NT_error: need T >= e");
  return decimal<Scalar>("0.1038") * log_T + decimal<Scalar>("0.2573") * log(log_T) + decimal<Scalar>("9.3675");
}

/// (1/0.3758)(1/3.1421 - 0.6914/5), which the zero-count bound rounds up to 0.479.
template <class Scalar>
Scalar zero_count_constant_exact() {
  return (Scalar(1) / decimal<Scalar>("3.1421") - decimal<Scalar>("0.6914") / Scalar(5)) / decimal<Scalar>("0.3758");
}

/// 0.479 - 1/(2 * 1.879), which the zero-sum bound rounds up to 0.213.
template <class Scalar>
Scalar zero_sum_drop_exact() {
  return decimal<Scalar>(kZeroCountConstant) - Scalar(1) / (Scalar(2) * decimal<Scalar>(kZeroCountDivisor));
}

namespace detail {

template <class Scalar>
void check_eta(const Scalar& eta, const char* who) {
  if (!(eta > Scalar(0)) || eta > Scalar(1) / Scalar(4))
    throw std::domain_error(std::string(who) + ": need 0 < eta <= 1/4");
}

}  // namespace detail

/// Upper bound for N(t, eta), the number of zeros with |1 + it - rho| <= eta.
/// Requires t >= 100 and 0 < eta <= 1/4.
template <class Scalar>
Scalar N_t_eta_bound(const Scalar& log_t, const Scalar& eta, const RichertParams<Scalar>& rp = {}) {
  using std::log;
  using std::sqrt;
  detail::check_eta(eta, "N_t_eta_bound");
  if (log_t < log(Scalar(100))) throw std::domain_error("N_t_eta_bound: need t >= 100");
  return decimal<Scalar>("1.3478") * eta * sqrt(eta) * rp.B * log_t + decimal<Scalar>(kZeroCountConstant) +
         (log(rp.A) - log(eta) + Scalar(2) / Scalar(3) * log(log_t)) / decimal<Scalar>(kZeroCountDivisor);
}

/// Upper bound for the sum of 1/|1 + it - rho|^2 over zeros with
/// |1 + it - rho| >= eta, given a value N_t_eta for N(t, eta).
/// Requires t >= 10000 and 0 < eta <= 1/4.
template <class Scalar>
Scalar zero_sum_bound(const Scalar& log_t, const Scalar& eta, const Scalar& N_t_eta,
                      const RichertParams<Scalar>& rp = {}) {
  using std::log;
  using std::sqrt;
  detail::check_eta(eta, "zero_sum_bound");
  if (log_t < log(Scalar(10000))) throw std::domain_error("zero_sum_bound: need t >= 10000");
  const Scalar linear =
      (decimal<Scalar>("5.409") + decimal<Scalar>("5.392") * rp.B * (Scalar(1) / sqrt(eta) - Scalar(2))) * log_t;
  const Scalar brace = (log(rp.A) - log(eta) + Scalar(2) / Scalar(3) * log(log_t)) / decimal<Scalar>(kZeroCountDivisor) +
                       decimal<Scalar>(kZeroSumDrop) - N_t_eta;
  return linear + decimal<Scalar>(kZeroSumConstant) + brace / (eta * eta);
}

}  // namespace zfr
