#pragma once

// Zero-free region pipelines: the asymptotic constant of a polynomial, the
// chain of inequalities behind the all-heights Korobov-Vinogradov region, the
// intermediate (sub-Weyl) region chain, the prime number theorem exponent and
// the envelope of known regions as a function of height.

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zfr/numeric.hpp"
#include "zfr/polyfile.hpp"
#include "zfr/smoothing.hpp"
#include "zfr/trigpoly.hpp"
#include "zfr/zetabounds.hpp"

namespace zfr {

// ---------------------------------------------------------------------------
// Asymptotic constant

template <class Scalar>
struct AsymptoticQuantity {
  Scalar theta;
  Scalar q;   // cos^2(theta) (4/3)^(2/3) (b0/b) (1 + b0/b)^(-1/3)
  Scalar R2;  // B^(2/3) / q
};

template <class Scalar>
Scalar asymptotic_q(const Scalar& theta, const Scalar& b0, const Scalar& b_sum) {
  using std::cos;
  using std::pow;
  const Scalar c = cos(theta);
  const Scalar ratio = b0 / b_sum;
  return c * c * pow(Scalar(4) / Scalar(3), Scalar(2) / Scalar(3)) * ratio /
         pow(Scalar(1) + ratio, Scalar(1) / Scalar(3));
}

/// Throws std::domain_error for an inadmissible polynomial.
template <class Scalar>
AsymptoticQuantity<Scalar> asymptotic_quantity(const TrigPoly<Scalar>& p,
                                               const Scalar& B = decimal<Scalar>("4.45")) {
  using std::pow;
  if (!p.admissible()) throw std::domain_error("asymptotic_quantity: polynomial is not admissible");
  AsymptoticQuantity<Scalar> out;
  out.theta = solve_theta(p.b0(), p.b1());
  out.q = asymptotic_q(out.theta, p.b0(), p.b_sum());
  out.R2 = pow(B, Scalar(2) / Scalar(3)) / out.q;
  return out;
}

// ---------------------------------------------------------------------------
// Parameters of the all-heights region

enum class Kappa2Convention {
  Consistent,  // kappa2 = gamma (L2/L1)^(2/3), so kappa2 E / B^(2/3) = gamma eta(T0)
  Published,   // kappa2 = gamma (L2/(B L1))^(2/3) as displayed; undershoots by B^(2/3)
};

template <class Scalar>
struct RegionParams {
  explicit RegionParams(TrigPoly<Scalar> p) : poly(std::move(p)) {}

  /// A = 76.2, B = 4.45, E = 1.8821259, M1 = 0.048976, R = 416,
  /// log T0 = 52238, K = 40 and the bundled degree-40 polynomial.
  static RegionParams defaults() { return RegionParams(to_trig_poly<Scalar>(bundled_p40())); }

  RichertParams<Scalar> richert;
  Scalar E = decimal<Scalar>("1.8821259");
  Scalar M1 = decimal<Scalar>("0.048976");
  /// nullopt selects the largest R allowed by the lambda constraint,
  /// floor(E L2(T0) / M1) - 1.
  std::optional<Scalar> R = Scalar(416);
  Scalar log_T0 = Scalar(52238);
  int K = 40;
  TrigPoly<Scalar> poly;
};

/// eta(t) = E (L2 / (B L1))^(2/3).
template <class Scalar>
Scalar eta_of(const Scalar& E, const Scalar& B, const LogScales<Scalar>& s) {
  using std::pow;
  return E * pow(s.L2 / (B * s.L1), Scalar(2) / Scalar(3));
}

// ---------------------------------------------------------------------------
// Chain of constants for the all-heights region

template <class Scalar>
struct Theorem1Chain {
  Scalar R;
  Scalar theta, cos2, w0, Wprime0;
  Scalar slope;  // -W'(0) b1 / (w(0) b0)
  Scalar C5;
  Scalar ratio_b;  // b / b0
  Scalar L1, L2, eta, lambda_ratio;  // at T0; lambda_ratio = E L2 / M1
  Scalar kappa1, kappa2, kappa3, kappa4;
  Scalar slope_kappa4;
  Scalar leading;  // (b/b0 + 1)/(3E) + (b/b0) E^(1/2) / 2
  Scalar a, c, d, f, g;
  Scalar Y_T0;
  Scalar numerator;  // cos^2 - slope kappa4 / log T0
  Scalar M_bound;
  Scalar R1;  // B^(2/3) / M1
};

/// Y as a function of L2 alone (L1 = e^L2).
template <class Scalar>
Scalar Y_of(const Theorem1Chain<Scalar>& ch, const Scalar& L2) {
  using std::exp;
  using std::log;
  using std::pow;
  const Scalar lg = log(L2);
  const Scalar L2sq = L2 * L2;
  return ch.a / L2 + ch.c / L2sq - ch.d * exp(-L2 / Scalar(3)) / pow(L2, Scalar(2) / Scalar(3)) - ch.f * lg / L2 -
         ch.g * lg / L2sq;
}

/// E = ((4/3)(1 + b0/b))^(2/3), the choice minimizing the asymptotic constant.
template <class Scalar>
Scalar ford_E(const TrigPoly<Scalar>& p) {
  using std::pow;
  return pow(Scalar(4) / Scalar(3) * (Scalar(1) + p.b0() / p.b_sum()), Scalar(2) / Scalar(3));
}

template <class Scalar>
Scalar auto_R(const Scalar& E, const Scalar& M1, const Scalar& L2) {
  using std::floor;
  return floor(E * L2 / M1) - Scalar(1);
}

template <class Scalar>
Theorem1Chain<Scalar> theorem1_chain(const RegionParams<Scalar>& p, Kappa2Convention conv = Kappa2Convention::Consistent) {
  using std::cos;
  using std::exp;
  using std::log;
  using std::pow;
  using std::sqrt;
  const Scalar one(1), two(2), three(3);
  const Scalar two3 = two / three, one3 = one / three;
  const Scalar& A = p.richert.A;
  const Scalar& B = p.richert.B;
  const Scalar& E = p.E;
  const Scalar& M1 = p.M1;
  const auto s = log_scales(p.log_T0, p.K);

  Theorem1Chain<Scalar> ch;
  ch.L1 = s.L1;
  ch.L2 = s.L2;
  ch.eta = eta_of(E, B, s);
  ch.lambda_ratio = E * s.L2 / M1;
  ch.R = p.R ? *p.R : auto_R(E, M1, s.L2);

  const auto k = smoothing_constants(solve_theta(p.poly.b0(), p.poly.b1()));
  ch.theta = k.theta;
  ch.cos2 = cos(k.theta) * cos(k.theta);
  ch.w0 = k.w0;
  ch.Wprime0 = k.Wprime0;
  ch.slope = -k.Wprime0 * p.poly.b1() / (k.w0 * p.poly.b0());
  ch.C5 = C5_of_R(ch.R, k.theta);
  ch.ratio_b = p.poly.b_sum() / p.poly.b0();
  const Scalar& r = ch.ratio_b;

  const Scalar& lT0 = p.log_T0;
  const Scalar llT0 = log(lT0);
  ch.kappa1 = pow(s.L1 / s.L2, two3) / (pow(lT0, two3) * pow(llT0, one3));
  const Scalar gamma = euler_gamma<Scalar>();
  ch.kappa2 = conv == Kappa2Convention::Consistent ? gamma * pow(s.L2 / s.L1, two3)
                                                   : gamma * pow(s.L2 / (B * s.L1), two3);
  ch.kappa3 = one3 + decimal<Scalar>("5.409") +
              decimal<Scalar>(kZeroSumConstantShifted) / (log(Scalar(p.K)) + lT0);
  const Scalar logK = log(Scalar(p.K) + exp(-lT0));
  ch.kappa4 = pow(Scalar(10), Scalar(-100)) * (one + logK / lT0) + logK;
  ch.slope_kappa4 = ch.slope * ch.kappa4;

  const Scalar sqE = sqrt(E);
  const Scalar B23 = pow(B, two3);
  ch.leading = (r + one) / (three * E) + r * sqE / two;
  const Scalar CrM = ch.C5 * r * M1;
  const Scalar logs = log(A) + two3 * log(B) - log(E);
  const Scalar div = decimal<Scalar>(kZeroCountDivisor);
  ch.a = decimal<Scalar>("1.5") * ch.kappa1 * M1 / (E * E) +
         (r * log(A) + two3 * log(B) - log(E) + ch.kappa2 * E / B23) / (two * E) +
         CrM * (decimal<Scalar>("5.392") / sqE + Scalar(4) / (three * div * E * E));
  ch.c = CrM / (E * E) * (logs / div + decimal<Scalar>(kZeroSumDrop));
  ch.d = -CrM * (ch.kappa3 - decimal<Scalar>("10.784") * B) / pow(B, Scalar(4) / three);
  ch.f = one / (three * E);
  ch.g = CrM / (E * E) * two3 / div;
  ch.Y_T0 = Y_of(ch, s.L2);
  ch.numerator = ch.cos2 - ch.slope_kappa4 / lT0;
  ch.M_bound = ch.numerator / (ch.leading + ch.Y_T0);
  ch.R1 = B23 / M1;
  return ch;
}

// ---------------------------------------------------------------------------
// Y(t) <= Y(T0) for t >= T0

template <class Scalar>
struct YBoundCertificate {
  bool certified = false;
  Scalar L2_start;  // L2(T0)
  Scalar L2_end;    // beyond this, a/L2 + c/L2^2 < Y(T0)
  int pieces = 0;
  Scalar max_derivative_bound;  // largest upper bound of dY/dL2 over the pieces
  Scalar tail_bound;            // a/L2_end + c/L2_end^2
  std::string reason;
};

/// On [L2(T0), U] dY/dL2 is bounded above piece by piece using the
/// monotonicity of each term; past U the negative terms are dropped and
/// a/L2 + c/L2^2 < Y(T0). Needs a, c, d, f, g >= 0 and L2(T0) > e.
template <class Scalar>
YBoundCertificate<Scalar> certify_Y_bound(const Theorem1Chain<Scalar>& ch, int pieces = 1000) {
  using std::exp;
  using std::log;
  using std::pow;
  YBoundCertificate<Scalar> cert;
  cert.L2_start = ch.L2;
  cert.pieces = pieces;
  const Scalar zero(0);
  if (ch.a < zero || ch.c < zero || ch.d < zero || ch.f < zero || ch.g < zero) {
    cert.reason = "a Y coefficient has an unexpected sign";
    return cert;
  }
  if (!(log(ch.L2) > Scalar(1))) {
    cert.reason = "L2(T0) <= e";
    return cert;
  }
  if (!(ch.Y_T0 > zero)) {
    cert.reason = "Y(T0) <= 0, the tail bound cannot close";
    return cert;
  }
  auto tail = [&](const Scalar& x) { return ch.a / x + ch.c / (x * x); };
  Scalar U = ch.L2;
  for (int i = 0; i < 100000 && !(tail(U) < ch.Y_T0); ++i) U *= decimal<Scalar>("1.001");
  if (!(tail(U) < ch.Y_T0)) {
    cert.reason = "no tail cut-off found";
    return cert;
  }
  cert.L2_end = U;
  cert.tail_bound = tail(U);
  const Scalar h = (U - ch.L2) / Scalar(pieces);
  Scalar worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < pieces; ++i) {
    const Scalar x0 = ch.L2 + h * Scalar(i);
    const Scalar x1 = i + 1 == pieces ? U : ch.L2 + h * Scalar(i + 1);
    const Scalar bound = -ch.a / (x1 * x1) - Scalar(2) * ch.c / (x1 * x1 * x1) +
                         ch.d * exp(-x0 / Scalar(3)) / pow(x0, Scalar(2) / Scalar(3)) *
                             (Scalar(1) / Scalar(3) + Scalar(2) / (Scalar(3) * x0)) +
                         ch.f * (log(x1) - Scalar(1)) / (x0 * x0) +
                         ch.g * (Scalar(2) * log(x1) - Scalar(1)) / (x0 * x0 * x0);
    if (bound > worst) worst = bound;
  }
  cert.max_derivative_bound = worst;
  cert.certified = worst < zero;
  if (!cert.certified) cert.reason = "derivative bound is not negative on some piece";
  return cert;
}

// ---------------------------------------------------------------------------
// Links of the chain, generic in the scalar

template <class Scalar>
struct ChainLink {
  std::string name;
  Scalar lhs;
  std::string relation;  // "<", "<=", ">", ">=", "=="
  Scalar rhs;
  bool pass;
};

template <class Scalar>
ChainLink<Scalar> make_link(std::string name, Scalar lhs, std::string_view rel, Scalar rhs) {
  bool ok = false;
  if (rel == "<") ok = lhs < rhs;
  else if (rel == "<=") ok = lhs <= rhs;
  else if (rel == ">") ok = lhs > rhs;
  else if (rel == ">=") ok = lhs >= rhs;
  else throw std::invalid_argument("make_link: unknown relation");
  return {std::move(name), std::move(lhs), std::string(rel), std::move(rhs), ok};
}

/// Width of the intermediate region, 0.05035/h - 0.0349/h^2 with
/// h = (27/164) log t + 7.096.
template <class Scalar>
Scalar intermediate_width(const Scalar& log_t) {
  const Scalar h = Scalar(27) / Scalar(164) * log_t + decimal<Scalar>("7.096");
  return decimal<Scalar>("0.05035") / h - decimal<Scalar>("0.0349") / (h * h);
}

template <class Scalar>
std::vector<ChainLink<Scalar>> theorem1_links(const RegionParams<Scalar>& p, const Theorem1Chain<Scalar>& ch) {
  using std::exp;
  using std::log;
  using std::pow;
  const Scalar& B = p.richert.B;
  const Scalar two3 = Scalar(2) / Scalar(3);
  const Scalar B23 = pow(B, two3);
  std::vector<ChainLink<Scalar>> links;
  links.push_back(make_link<Scalar>("polynomial_admissible", Scalar(p.poly.admissible() ? 1 : 0), ">=", Scalar(1)));
  links.push_back(make_link<Scalar>("degree_matches_K", Scalar(int(p.poly.degree())), ">=", Scalar(p.K)));
  links.push_back(make_link<Scalar>("K_matches_degree", Scalar(p.K), ">=", Scalar(int(p.poly.degree()))));
  links.push_back(make_link<Scalar>("R_at_least_3", ch.R, ">=", Scalar(3)));
  links.push_back(make_link<Scalar>("eta_below_quarter", ch.eta, "<", Scalar(1) / Scalar(4)));
  // lambda <= eta M1/(E L2) <= eta/(R + 1)
  links.push_back(make_link<Scalar>("lambda_below_eta_over_R_plus_1", ch.lambda_ratio, ">=", ch.R + Scalar(1)));
  // 1 - beta < eta M1/(E L2) < eta/2
  links.push_back(make_link<Scalar>("one_minus_beta_below_half_eta", ch.lambda_ratio, ">", Scalar(2)));
  links.push_back(make_link<Scalar>("first_term_coefficient",
                                    decimal<Scalar>("0.087") * pi<Scalar>() * pi<Scalar>() * p.poly.b1() / p.poly.b0(),
                                    "<=", decimal<Scalar>("1.5")));
  // log zeta(1 + eta) <= gamma eta - log eta needs gamma eta <= kappa2 E / B^(2/3)
  // for all t >= T0; eta is largest at T0. Both sides agree exactly under the
  // consistent convention, so allow rounding in the last few digits.
  {
    const Scalar lhs = euler_gamma<Scalar>() * ch.eta;
    const Scalar rhs = ch.kappa2 * p.E / B23;
    const Scalar slack = Scalar(1) + Scalar(64) * std::numeric_limits<Scalar>::epsilon();
    auto link = make_link<Scalar>("log_zeta_term_bounded_by_kappa2", lhs, "<=", rhs);
    link.pass = lhs <= rhs * slack;
    links.push_back(std::move(link));
  }
  links.push_back(make_link<Scalar>("L1_at_least_log_KT0", ch.L1, ">=", log(Scalar(p.K)) + p.log_T0));
  {
    const auto cert = certify_Y_bound(ch);
    links.push_back(make_link<Scalar>("Y_bounded_by_Y_T0", Scalar(cert.certified ? 1 : 0), ">=", Scalar(1)));
  }
  {
    // Zeros in [T0 - 1, T0) are excluded by the intermediate region.
    const Scalar lTm1 = p.log_T0 + log(Scalar(1) - exp(-p.log_T0));
    const Scalar needed = p.M1 / (B23 * pow(lTm1, two3) * pow(log(lTm1), Scalar(1) / Scalar(3)));
    links.push_back(make_link<Scalar>("intermediate_region_covers_T0", intermediate_width(p.log_T0), ">", needed));
  }
  links.push_back(make_link<Scalar>("numerator_positive", ch.numerator, ">", Scalar(0)));
  links.push_back(make_link<Scalar>("M_bound_exceeds_M1", ch.M_bound, ">", p.M1));
  return links;
}

template <class Scalar>
bool all_pass(const std::vector<ChainLink<Scalar>>& links) {
  for (const auto& l : links)
    if (!l.pass) return false;
  return true;
}

template <class Scalar>
bool theorem1_closes(const RegionParams<Scalar>& p, Kappa2Convention conv = Kappa2Convention::Consistent) {
  try {
    const auto ch = theorem1_chain(p, conv);
    return all_pass(theorem1_links(p, ch));
  } catch (const std::domain_error&) {
    return false;
  }
}

/// Largest M1 for which the chain closes, by bisection. Closing is monotone
/// in M1 (the M bound falls and the target rises as M1 grows). Returns the
/// unrounded bisection limit; nullopt if it does not close at `lo`.
template <class Scalar>
std::optional<Scalar> best_closing_m1(RegionParams<Scalar> p, Kappa2Convention conv = Kappa2Convention::Consistent,
                                      int iterations = 50) {
  Scalar lo = decimal<Scalar>("1e-4"), hi = decimal<Scalar>("0.2");
  p.M1 = lo;
  if (!theorem1_closes(p, conv)) return std::nullopt;
  p.M1 = hi;
  if (theorem1_closes(p, conv)) return hi;
  for (int i = 0; i < iterations; ++i) {
    const Scalar mid = (lo + hi) / Scalar(2);
    p.M1 = mid;
    if (theorem1_closes(p, conv)) lo = mid;
    else hi = mid;
  }
  return lo;
}

template <class Scalar>
struct EOptimum {
  Scalar E;
  Scalar M1;
};

/// Golden-section search over E in [lo, hi] maximizing best_closing_m1,
/// with R chosen automatically for each E.
template <class Scalar>
EOptimum<Scalar> optimize_E(RegionParams<Scalar> p, Kappa2Convention conv = Kappa2Convention::Consistent,
                            Scalar lo = Scalar(1), Scalar hi = Scalar(3), int iterations = 40) {
  using std::sqrt;
  p.R = std::nullopt;
  auto score = [&](const Scalar& E) {
    p.E = E;
    const auto m = best_closing_m1(p, conv, 40);
    return m ? *m : Scalar(0);
  };
  const Scalar invphi = (sqrt(Scalar(5)) - Scalar(1)) / Scalar(2);
  Scalar x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
  Scalar f1 = score(x1), f2 = score(x2);
  for (int i = 0; i < iterations; ++i) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = score(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = score(x1);
    }
  }
  return f1 < f2 ? EOptimum<Scalar>{x2, f2} : EOptimum<Scalar>{x1, f1};
}

// ---------------------------------------------------------------------------
// Right side of the zero inequality, evaluated directly

template <class Scalar>
struct DirectRhsTerms {
  Scalar eta;
  Scalar T1, T2, T3;
  Scalar C5;
  /// 0.087 pi^2 (b1/b0) T1 + T2 + C5 (b/b0) T3, with log zeta(1 + eta)
  /// replaced by gamma eta - log eta.
  Scalar total;
  /// Same with the first coefficient rounded up to 1.5.
  Scalar assembled;
};

/// Requires 0 < eta(t) <= 1/4, R >= 3 and t >= 10000.
template <class Scalar>
DirectRhsTerms<Scalar> direct_region_rhs(const RegionParams<Scalar>& p, const Scalar& one_minus_beta, const Scalar& lambda,
                                 const Scalar& log_t) {
  using std::log;
  using std::pow;
  using std::sqrt;
  if (log_t < log(Scalar(10000))) throw std::domain_error("direct_region_rhs: need t >= 10000");
  const auto s = log_scales(log_t, p.K);
  const Scalar& A = p.richert.A;
  const Scalar& B = p.richert.B;
  DirectRhsTerms<Scalar> out;
  out.eta = eta_of(p.E, B, s);
  if (!(out.eta > Scalar(0)) || out.eta > Scalar(1) / Scalar(4))
    throw std::domain_error("direct_region_rhs: need 0 < eta <= 1/4");
  const Scalar R = p.R ? *p.R : auto_R(p.E, p.M1, s.L2);
  if (R < Scalar(3)) throw std::domain_error("direct_region_rhs: need R >= 3");
  const Scalar theta = solve_theta(p.poly.b0(), p.poly.b1());
  out.C5 = C5_of_R(R, theta);
  const Scalar r = p.poly.b_sum() / p.poly.b0();
  const Scalar& eta = out.eta;
  const Scalar two3 = Scalar(2) / Scalar(3);
  out.T1 = one_minus_beta / (eta * eta);
  out.T2 = (r * (two3 * s.L2 + B * eta * sqrt(eta) * s.L1 + log(A)) + ramare_log_zeta(eta)) / (Scalar(2) * eta);
  const Scalar linear =
      (decimal<Scalar>("5.409") + decimal<Scalar>("5.392") * B * (Scalar(1) / sqrt(eta) - Scalar(2))) * s.L1;
  const Scalar inner = (log(A) - log(eta) + two3 * s.L2) / decimal<Scalar>(kZeroCountDivisor) +
                       decimal<Scalar>(kZeroSumDrop);
  out.T3 = lambda * (s.L1 / Scalar(3) + linear + decimal<Scalar>(kZeroSumConstantShifted) + inner / (eta * eta));
  const Scalar first = decimal<Scalar>("0.087") * pi<Scalar>() * pi<Scalar>() * p.poly.b1() / p.poly.b0();
  out.total = first * out.T1 + out.T2 + out.C5 * r * out.T3;
  out.assembled = decimal<Scalar>("1.5") * out.T1 + out.T2 + out.C5 * r * out.T3;
  return out;
}

// ---------------------------------------------------------------------------
// Prime number theorem exponent

/// d = (5^6 / (2^2 3^4 c^3))^(1/5) for a region constant c.
template <class Scalar>
Scalar pnt_exponent(const Scalar& c) {
  using std::pow;
  if (!(c > Scalar(0))) throw std::domain_error("pnt_exponent: need c > 0");
  return pow(Scalar(15625) / (Scalar(324) * c * c * c), Scalar(1) / Scalar(5));
}

// ---------------------------------------------------------------------------
// Reports

struct ReportValue {
  std::string key;
  Real value;
  int decimals;  // digits after the point when displayed
  Rounding rounding;
};

struct ReportLink {
  std::string name;
  Real lhs;
  std::string relation;
  Real rhs;
  bool pass;
};

struct VerificationReport {
  std::string title;
  unsigned precision = kDefaultDigits;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<ReportValue> values;
  std::vector<ReportLink> links;
  std::vector<std::string> notes;
  bool pass = false;
  std::optional<std::string> first_failure;

  const ReportValue* find(std::string_view key) const;
  const ReportLink* find_link(std::string_view name) const;
  /// Value string as printed: at its display precision when digits == 0,
  /// otherwise with `digits` significant digits.
  std::string format(const ReportValue& v, int digits = 0) const;
};

/// key: value lines with stable keys.
std::string to_text(const VerificationReport& r, int digits = 0);
/// JSON document carrying the same strings as to_text.
std::string to_json(const VerificationReport& r, int digits = 0);

struct Theorem1Options {
  Kappa2Convention kappa2 = Kappa2Convention::Consistent;
  bool find_best_m1 = false;
};

VerificationReport verify_theorem1(const RegionParams<Real>& params, const Theorem1Options& options = {});

VerificationReport verify_theorem4(const TrigPoly<Real>& p, const Real& log_t0 = Real(1000));

// ---------------------------------------------------------------------------
// Envelope, in double precision over log t

struct RegionBound {
  std::string name;
  std::function<double(double)> width;  // of log t
  double valid_from_log;
  double valid_to_log;
  std::string provenance;

  bool valid_at(double log_t) const { return log_t >= valid_from_log && log_t <= valid_to_log; }
};

RegionBound rh_verified_bound();
RegionBound classical_bound();
RegionBound ford_medium_bound();
RegionBound intermediate_bound();
RegionBound korobov_vinogradov_bound();

/// The candidates in tie-break order.
const std::vector<RegionBound>& standard_bounds();

struct EnvelopeResult {
  const RegionBound* bound;
  double width;
};

/// Widest bound valid at log t (t >= 3), ties to the earlier listing.
EnvelopeResult envelope(double log_t);

/// Root in log t of width_a - width_b, by bisection to relative width 1e-6.
/// Throws std::domain_error without a sign change on [lo, hi].
double crossover(const RegionBound& a, const RegionBound& b, double lo_log, double hi_log);

}  // namespace zfr
