#pragma once

// Constants of the Heath-Brown smoothing weight attached to a polynomial
// (the angle theta, w(0), W'(0), the closed form of W_0 and the tail bounds
// H(R), C_5(R)), plus the auxiliary weights used for the classical region.

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <stdexcept>

#include "zfr/numeric.hpp"
#include "zfr/trigpoly.hpp"

namespace zfr {

namespace detail {

template <class Scalar>
Scalar theta_residual(const Scalar& b0, const Scalar& b1, const Scalar& t) {
  using std::sin;
  using std::tan;
  const Scalar s = sin(t);
  return b0 * s * s - b1 * (Scalar(1) - t / tan(t));
}

template <class Scalar>
Scalar theta_residual_derivative(const Scalar& b0, const Scalar& b1, const Scalar& t) {
  using std::sin;
  using std::tan;
  const Scalar s = sin(t);
  return b0 * sin(Scalar(2) * t) + b1 * (Scalar(1) / tan(t) - t / (s * s));
}

}  // namespace detail

/// Root of b0 sin^2(t) = b1 (1 - t cot t) in (0, pi/2).
///
/// Bisection down to a bracket of width 1e-3, then Newton steps kept inside
/// the bracket (a step that leaves it is replaced by a bisection). With a
/// `hint` the bisection phase is skipped and Newton starts there.
/// A root exists iff 1 < b1/b0 < 3; otherwise throws std::domain_error.
template <class Scalar>
Scalar solve_theta(const Scalar& b0, const Scalar& b1, std::optional<Scalar> hint = std::nullopt) {
  using std::abs;
  if (!(b0 > Scalar(0))) throw std::domain_error("solve_theta: b0 must be positive");
  if (!(b1 > b0)) throw std::domain_error("solve_theta: need b1 > b0");
  const Scalar margin = decimal<Scalar>("1e-6");
  Scalar lo = margin;
  Scalar hi = pi<Scalar>() / Scalar(2) - margin;
  // f > 0 near 0 (when b1 < 3 b0) and f -> b0 - b1 < 0 at pi/2.
  if (!(detail::theta_residual(b0, b1, lo) > Scalar(0)))
    throw std::domain_error("solve_theta: no sign change on (0, pi/2); need b1 < 3 b0");

  auto shrink = [&](const Scalar& t, const Scalar& f) {
    if (f > Scalar(0)) lo = t;
    else hi = t;
  };

  Scalar t;
  if (hint && *hint > lo && *hint < hi) {
    t = *hint;
  } else {
    const Scalar width = decimal<Scalar>("1e-3");
    while (hi - lo > width) {
      Scalar mid = (lo + hi) / Scalar(2);
      shrink(mid, detail::theta_residual(b0, b1, mid));
    }
    t = (lo + hi) / Scalar(2);
  }

  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  for (int iter = 0; iter < 200; ++iter) {
    const Scalar f = detail::theta_residual(b0, b1, t);
    if (f == Scalar(0)) return t;
    shrink(t, f);
    const Scalar df = detail::theta_residual_derivative(b0, b1, t);
    Scalar next = t - f / df;
    if (!(df < Scalar(0)) || !(next > lo) || !(next < hi)) next = (lo + hi) / Scalar(2);
    const Scalar step = abs(next - t);
    t = std::move(next);
    if (step <= Scalar(4) * eps * t || hi - lo <= Scalar(4) * eps * t) break;
  }
  return t;
}

template <class Scalar>
Scalar solve_theta(const TrigPoly<Scalar>& p) {
  return solve_theta(p.b0(), p.b1());
}

/// w(0) = (t tan t + 3 t cot t - 3) sec^2 t.
template <class Scalar>
Scalar w_at_zero(const Scalar& theta) {
  using std::cos;
  using std::tan;
  const Scalar tn = tan(theta);
  const Scalar c = cos(theta);
  return (theta * tn + Scalar(3) * theta / tn - Scalar(3)) / (c * c);
}

/// W'(0) from its closed form.
template <class Scalar>
Scalar W_prime_at_zero(const Scalar& theta) {
  using std::cos;
  using std::sin;
  using std::tan;
  const Scalar s = sin(theta);
  const Scalar t2 = theta * theta;
  const Scalar inner = Scalar(3) * (Scalar(4) * t2 - Scalar(5)) + theta * (Scalar(15) - Scalar(4) * t2) / tan(theta);
  return (inner / s - Scalar(3) * theta / cos(theta)) / (Scalar(3) * s);
}

template <class Scalar>
struct SmoothingConstants {
  Scalar theta;
  Scalar w0;
  Scalar Wprime0;
  Scalar c0, c1, c2, c3;
};

template <class Scalar>
SmoothingConstants<Scalar> smoothing_constants(const Scalar& theta) {
  using std::cos;
  using std::sin;
  using std::tan;
  const Scalar s = sin(theta), c = cos(theta), tn = tan(theta);
  const Scalar tn2 = tn * tn;
  SmoothingConstants<Scalar> k;
  k.theta = theta;
  k.w0 = w_at_zero(theta);
  k.Wprime0 = W_prime_at_zero(theta);
  k.c0 = Scalar(1) / (s * c * c * c);
  k.c1 = (theta - s * c) * tn2 * tn2;
  k.c2 = tn2 * tn * s * s;
  k.c3 = (theta - s * c) * tn2;
  return k;
}

template <class Scalar>
SmoothingConstants<Scalar> smoothing_constants(const TrigPoly<Scalar>& p) {
  return smoothing_constants(solve_theta(p));
}

/// W_0(z) = W(z) - w(0)/z. Throws std::domain_error at z = 0 and z^2 = -tan^2 theta.
template <class Scalar>
std::complex<Scalar> W0_eval(const std::complex<Scalar>& z, const Scalar& theta) {
  using std::cos;
  using std::exp;
  using std::sin;
  using std::tan;
  using C = std::complex<Scalar>;
  const auto k = smoothing_constants(theta);
  const Scalar tn = tan(theta);
  const C z2 = z * z;
  const C pole = z2 + C(tn * tn, Scalar(0));
  if (z == C(0, 0) || pole == C(0, 0)) throw std::domain_error("W0_eval: z is a pole");
  // exp(-2 theta cot(theta) z), done by hand so Scalar needs only real exp/sin/cos.
  const Scalar d = Scalar(-2) * theta / tn;
  const Scalar mag = exp(d * z.real());
  const C e(mag * cos(d * z.imag()), mag * sin(d * z.imag()));
  const C zp1 = z + C(1, 0);
  const C num = C(k.c0, 0) * (C(k.c2, 0) * (zp1 * zp1 * e + z2 - C(1, 0)) - C(k.c1, 0) * z - C(k.c3, 0) * z2 * z);
  return num / (z2 * pole * pole);
}

template <class Scalar>
Scalar modulus(const std::complex<Scalar>& z) {
  using std::sqrt;
  return sqrt(z.real() * z.real() + z.imag() * z.imag());
}

namespace detail {

template <class Scalar>
void check_tail_range(const Scalar& R, const Scalar& theta, const char* who) {
  using std::tan;
  const Scalar tn = tan(theta);
  if (!(R >= Scalar(3))) throw std::domain_error(std::string(who) + ": need R >= 3");
  if (!(tn * tn < R * R)) throw std::domain_error(std::string(who) + ": need tan^2 theta < R^2");
}

}  // namespace detail

/// H(R), the constant in |W_0(z)| <= H(R)/|z|^3 for Re z >= -1, |z| >= R.
template <class Scalar>
Scalar H_of_R(const Scalar& R, const Scalar& theta) {
  using std::exp;
  using std::tan;
  detail::check_tail_range(R, theta, "H_of_R");
  const auto k = smoothing_constants(theta);
  const Scalar tn = tan(theta);
  const Scalar shrink = Scalar(1) - tn * tn / (R * R);
  const Scalar R3 = R * R * R;
  const Scalar brace =
      k.c2 * (R + 1) * (R + 1) / R3 * (exp(Scalar(2) * theta / tn) + Scalar(1)) + k.c1 / (R * R) + k.c3;
  return k.c0 / (shrink * shrink) * brace;
}

/// C_5(R) = H(R)(R+1)^2/(R^3 w(0)) + 1 + 1/R.
template <class Scalar>
Scalar C5_of_R(const Scalar& R, const Scalar& theta) {
  detail::check_tail_range(R, theta, "C5_of_R");
  return H_of_R(R, theta) * (R + 1) * (R + 1) / (R * R * R * w_at_zero(theta)) + Scalar(1) + Scalar(1) / R;
}

/// Right end of the support of h1: 2 theta cot(theta) / lambda.
template <class Scalar>
Scalar h1_support_end(const Scalar& lambda, const Scalar& theta) {
  using std::tan;
  return Scalar(2) * theta / (tan(theta) * lambda);
}

/// Right end of the support of h4: -2 theta / (lambda tan theta), theta in (pi/2, pi).
template <class Scalar>
Scalar h4_support_end(const Scalar& lambda, const Scalar& theta) {
  using std::tan;
  return Scalar(-2) * theta / (lambda * tan(theta));
}

/// First auxiliary weight, 0 < theta < pi/2. Zero outside [0, h1_support_end].
template <class Scalar>
Scalar h1(const Scalar& u, const Scalar& lambda, const Scalar& theta) {
  using std::cos;
  using std::sin;
  using std::tan;
  if (u < Scalar(0) || u > h1_support_end(lambda, theta)) return Scalar(0);
  const Scalar tn = tan(theta);
  const Scalar sec2 = Scalar(1) / (cos(theta) * cos(theta));
  const Scalar lu = lambda * u;
  const Scalar arg = lu * tn;
  const Scalar brace = lambda * sec2 * (theta / (lambda * tn) - u / Scalar(2)) * cos(arg) + Scalar(2) * theta / tn - lu +
                       sin(Scalar(2) * theta - arg) / sin(Scalar(2) * theta) -
                       Scalar(2) * (Scalar(1) + sin(theta - arg) / sin(theta));
  return lambda * sec2 * brace;
}

/// Fourth auxiliary weight, pi/2 < theta < pi. Zero outside [0, h4_support_end].
template <class Scalar>
Scalar h4(const Scalar& u, const Scalar& lambda, const Scalar& theta) {
  using std::cos;
  using std::sin;
  using std::tan;
  const Scalar half_pi = pi<Scalar>() / Scalar(2);
  if (!(theta > half_pi && theta < Scalar(2) * half_pi)) throw std::domain_error("h4: need pi/2 < theta < pi");
  if (u < Scalar(0) || u > h4_support_end(lambda, theta)) return Scalar(0);
  const Scalar tn = tan(theta);
  const Scalar sec2 = Scalar(1) / (cos(theta) * cos(theta));
  const Scalar lu = lambda * u;
  const Scalar arg = lu * tn;
  const Scalar brace = lambda * sec2 * (-theta / (lambda * tn) - u / Scalar(2)) * cos(arg) - Scalar(2) * theta / tn - lu -
                       sin(Scalar(2) * theta + arg) / sin(Scalar(2) * theta) +
                       Scalar(2) * (Scalar(1) + sin(theta + arg) / sin(theta));
  return lambda * sec2 * brace;
}

/// d1(theta) = 2 theta cot theta.
template <class Scalar>
Scalar d1(const Scalar& theta) {
  using std::tan;
  return Scalar(2) * theta / tan(theta);
}

/// g1(theta) = h1(0; 1, theta).
template <class Scalar>
Scalar g1(const Scalar& theta) {
  return h1(Scalar(0), Scalar(1), theta);
}

/// Largest y for which e^y <= exp_cubic_bound(y) is claimed.
inline constexpr std::string_view kExpCubicLimit = "1.89355";

/// 1 + y + y^2/2 + y^3/3.47, an upper bound for e^y on 0 <= y <= 1.89355.
/// Throws std::domain_error outside that range (the bound fails for y < 0).
template <class Scalar>
Scalar exp_cubic_bound(const Scalar& y) {
  if (y > decimal<Scalar>(kExpCubicLimit)) throw std::domain_error("exp_cubic_bound: y > 1.89355");
  if (y < Scalar(0)) throw std::domain_error("exp_cubic_bound: y < 0");
  return Scalar(1) + y + y * y / Scalar(2) + y * y * y / decimal<Scalar>("3.47");
}

}  // namespace zfr
