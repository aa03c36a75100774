#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>

#include "support.hpp"
#include "zfr/polyfile.hpp"
#include "zfr/smoothing.hpp"

using namespace zfr;
using zfr::test::R;

namespace {

Real bisection_oracle(const Real& b0, const Real& b1) {
  Real lo("1e-6"), hi = pi<Real>() / 2 - Real("1e-6");
  auto f = [&](const Real& t) { return b0 * sin(t) * sin(t) - b1 * (1 - t * cos(t) / sin(t)); };
  for (int i = 0; i < 200; ++i) {
    Real mid = (lo + hi) / 2;
    if (f(mid) > 0) lo = mid;
    else hi = mid;
  }
  return (lo + hi) / 2;
}

// g(u) = (cos(u tan t) - cos t) sec^2 t on |u| <= t cot t.
double g_weight(double u, double t) {
  if (std::abs(u) > t / std::tan(t)) return 0.0;
  return (std::cos(u * std::tan(t)) - std::cos(t)) / (std::cos(t) * std::cos(t));
}

double w_by_quadrature(double u, double t) {
  using boost::math::quadrature::gauss_kronrod;
  const double x = t / std::tan(t);
  const double lo = std::max(-x, u - x), hi = std::min(x, u + x);
  if (lo >= hi) return 0.0;
  return gauss_kronrod<double, 61>::integrate([&](double s) { return g_weight(s, t) * g_weight(u - s, t); }, lo, hi, 15,
                                              1e-13);
}

// Second transcription of H(R) with the brace expanded term by term.
Real H_transcribed(const Real& R, const Real& t) {
  const Real s = sin(t), c = cos(t), tn = s / c;
  const Real pref = 1 / (s * pow(c, 3));
  const Real first = pow(tn, 3) * pow(s, 2) * pow(R + 1, 2) / pow(R, 3) * (exp(2 * t * c / s) + 1);
  const Real second = (t - s * c) * pow(tn, 4) / pow(R, 2);
  const Real third = (t - s * c) * pow(tn, 2);
  return pref * (first + second + third) / pow(1 - pow(tn / R, 2), 2);
}

Real theta40() {
  return solve_theta(Real(1), to_trig_poly<Real>(bundled_p40()).b1());
}

}  // namespace

TEST_CASE("theta for the published polynomials") {
  ScopedPrecision prec(50);
  const Real t40 = solve_theta(Real(1), R("1.74600190914994"));
  const Real t46 = solve_theta(Real(1), R("1.74708744081848"));
  CHECK(abs(t40 - R("1.13331020636698")) < R("1e-13"));
  CHECK(abs(t46 - R("1.13269369969232")) < R("1e-13"));
  for (const Real* t : {&t40, &t46}) {
    CHECK(*t > 0);
    CHECK(*t < pi<Real>() / 2);
  }
  CHECK(abs(sin(t40) * sin(t40) - R("1.74600190914994") * (1 - t40 / tan(t40))) < R("1e-30"));
}

TEST_CASE("theta against a pure bisection") {
  ScopedPrecision prec(50);
  for (const char* b1s : {"2", "1.0001", "1.5", "2.9"}) {
    const Real b1(b1s);
    const Real t = solve_theta(Real(1), b1);
    CHECK(abs(t - bisection_oracle(Real(1), b1)) < R("1e-25"));
    CHECK(abs(sin(t) * sin(t) - b1 * (1 - t / tan(t))) < R("1e-30"));
  }
  CHECK(abs(solve_theta(Real(2), Real(4)) - solve_theta(Real(1), Real(2))) < R("1e-40"));
}

TEST_CASE("theta with a warm start") {
  ScopedPrecision prec(50);
  const Real cold = solve_theta(Real(1), R("1.746"));
  for (const char* h : {"0.2", "1.13", "1.5"})
    CHECK(abs(solve_theta(Real(1), R("1.746"), std::optional<Real>(R(h))) - cold) < R("1e-40"));
  CHECK(solve_theta(1.0, 1.746, std::optional<double>(1.1)) == doctest::Approx(1.1340).epsilon(1e-3));
}

TEST_CASE("theta domain") {
  CHECK_THROWS_AS(solve_theta(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(solve_theta(1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(solve_theta(0.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(solve_theta(1.0, 3.5), std::domain_error);
}

TEST_CASE("w(0)") {
  ScopedPrecision prec(50);
  CHECK(abs(w_at_zero(pi<Real>() / 4) - (2 * pi<Real>() - 6)) < R("1e-45"));
  const Real t = theta40();
  CHECK(abs(w_at_zero(t) - R("5.6453024243140395")) < R("1e-15"));
  for (double th : {0.4, 0.9, static_cast<double>(t), 1.4})
    CHECK(static_cast<double>(w_at_zero(Real(th))) == doctest::Approx(w_by_quadrature(0.0, th)).epsilon(1e-10));
  for (int i = 1; i < 100; ++i) CHECK(w_at_zero(Real(i) * pi<Real>() / 200) > 0);
}

TEST_CASE("W'(0)") {
  ScopedPrecision prec(50);
  const Real t = theta40();
  const Real wp = W_prime_at_zero(t);
  CHECK(abs(wp - R("-0.661719420273347")) < R("1e-14"));
  CHECK(abs(wp) <= R("0.6617195"));
  const Real coef = -wp * R("1.74600190914994") / w_at_zero(t);
  CHECK(to_fixed(coef, 5, Rounding::Up) == "0.20466");

  // W(z) = w(0)/z + W_0(z) is entire; differentiate it numerically at 0.
  for (const char* ts : {"0.7", "1.13331020636698", "1.4"}) {
    const Real th(ts);
    const Real w0 = w_at_zero(th);
    auto W = [&](const Real& x) {
      return w0 / x + W0_eval(std::complex<Real>(x, Real(0)), th).real();
    };
    auto D = [&](const Real& h) { return (W(h) - W(Real(-h))) / (2 * h); };
    const Real h("1e-4");
    const Real rich = (4 * D(h / 2) - D(h)) / 3;
    CHECK(abs(rich - W_prime_at_zero(th)) < R("1e-8"));
  }
  for (int i = 0; i <= 100; ++i) CHECK(W_prime_at_zero(R("0.5") + Real(i) / 100) < 0);
}

TEST_CASE("W_0 closed form") {
  ScopedPrecision prec(50);
  const Real t = theta40();
  const double td = static_cast<double>(t);
  SUBCASE("W_0(1) against quadrature of the Laplace transform") {
    using boost::math::quadrature::gauss_kronrod;
    const double support = 2 * td / std::tan(td);
    const double W1 = gauss_kronrod<double, 31>::integrate(
        [&](double u) { return std::exp(-u) * w_by_quadrature(u, td); }, 0.0, support, 10, 1e-12);
    const double closed = static_cast<double>(W0_eval(std::complex<Real>(1, 0), t).real());
    CHECK(closed == doctest::Approx(W1 - static_cast<double>(w_at_zero(t))).epsilon(1e-8));
  }
  SUBCASE("conjugate symmetry") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
      const std::complex<Real> z(test::uniform_real(rng, -1, 5), test::uniform_real(rng, -5, 5));
      const auto a = W0_eval(std::conj(z), t);
      const auto b = std::conj(W0_eval(z, t));
      CHECK(modulus(std::complex<Real>(a - b)) < R("1e-40"));
    }
  }
  SUBCASE("tail bound on |z| = R") {
    std::mt19937_64 rng(6);
    for (int Rv : {3, 10, 416}) {
      const Real Rr(Rv);
      const Real H = H_of_R(Rr, t);
      for (int i = 0; i < 100; ++i) {
        // Angles with Re z = R cos(phi) >= -1.
        const Real lim = acos(Real(-1) / Rr);
        const Real phi = test::uniform_real(rng, -1, 1) * lim;
        const std::complex<Real> z(Rr * cos(phi), Rr * sin(phi));
        CHECK(modulus(W0_eval(z, t)) <= H / (Rr * Rr * Rr));
      }
    }
  }
  SUBCASE("poles") {
    CHECK_THROWS_AS(W0_eval(std::complex<Real>(0, 0), t), std::domain_error);
    CHECK_THROWS_AS(W0_eval(std::complex<double>(0, std::tan(1.0)), 1.0), std::domain_error);
  }
}

TEST_CASE("H(R) and C5(R)") {
  ScopedPrecision prec(50);
  const Real t = theta40();
  CHECK(H_of_R(Real(3), t) > H_of_R(Real(1000000), t));
  CHECK(H_of_R(Real(855), t) <= R("134.87"));
  CHECK(abs(H_of_R(Real(855), t) - R("50.2747238954510")) < R("1e-12"));
  CHECK(C5_of_R(Real(855), t) <= R("1.0146"));
  CHECK(abs(C5_of_R(Real(416), t) - R("1.0241565337890739")) < R("1e-15"));
  CHECK(abs(H_of_R(Real(416), t) - H_transcribed(Real(416), t)) < R("1e-40"));
  Real prevH = H_of_R(Real(3), t), prevC = C5_of_R(Real(3), t);
  for (int Rv = 4; Rv < 3000; Rv += 7) {
    const Real h = H_of_R(Real(Rv), t), c = C5_of_R(Real(Rv), t);
    CHECK(h < prevH);
    CHECK(c < prevC);
    CHECK(c > 1);
    prevH = h;
    prevC = c;
  }
  CHECK(C5_of_R(Real(1e12), t) - 1 < R("1e-9"));
  CHECK_THROWS_AS(H_of_R(2.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(C5_of_R(3.0, 1.3), std::domain_error);  // tan^2(1.3) > 9
}

TEST_CASE("h1 and its relation to w(0)") {
  ScopedPrecision prec(50);
  const Real t("1.13489");
  CHECK(abs(h1(Real(0), Real(1), t) - w_at_zero(t)) < R("1e-40"));
  CHECK(abs(g1(t) - w_at_zero(t)) < R("1e-40"));
  const Real end = h1_support_end(Real(1), t);
  CHECK(abs(end - d1(t)) < R("1e-45"));
  // h1 falls to zero at the end of its support.
  CHECK(abs(h1(Real(end - R("1e-20")), Real(1), t)) < R("1e-30"));
  CHECK(h1(Real(end + R("1e-3")), Real(1), t) == 0);
  Real lowest = 1;
  for (int i = 0; i <= 10000; ++i) lowest = std::min<Real>(lowest, h1(end * i / 10000, Real(1), t));
  CHECK(lowest >= R("-1e-40"));
}

TEST_CASE("h4") {
  ScopedPrecision prec(50);
  const Real t("1.848");
  const Real v0 = h4(Real(0), Real(1), t);
  CHECK(isfinite(v0));
  CHECK(v0 > 0);
  std::mt19937_64 rng(4);
  const Real end = h4_support_end(Real(1), t);
  for (int i = 0; i < 100; ++i) {
    const Real u = test::uniform_real(rng, 0.01, static_cast<double>(end) - 0.01);
    const Real eps("1e-25");
    CHECK(abs(h4(Real(u + eps), Real(1), t) - h4(u, Real(1), t)) < R("1e-20"));
  }
  CHECK(abs(h4(end, Real(1), t)) < R("1e-30"));
  // Regression pins, lambda enters non-homogeneously.
  CHECK(abs(v0 - R("147.841120261156746540")) < R("1e-12"));
  CHECK(abs(h4(R("0.5"), R("1"), t) - R("51.1337927913018235")) < R("1e-12"));
  CHECK(abs(h4(R("0.5"), R("2"), t) - R("0.0955176473090932172")) < R("1e-12"));
  CHECK_THROWS_AS(h4(0.0, 1.0, 1.2), std::domain_error);
}

TEST_CASE("d1 and the cubic exponential bound") {
  ScopedPrecision prec(50);
  CHECK(d1(R("1.13544")) <= R("1.89355"));
  CHECK(d1(R("1.13540")) > d1(R("1.13544")));
  CHECK(exp_cubic_bound(Real(0)) == 1);
  const Real top("1.89355");
  Real margin = 1;
  for (int i = 0; i <= 10000; ++i) {
    const Real y = top * i / 10000;
    margin = std::min<Real>(margin, exp_cubic_bound(y) - exp(y));
  }
  CHECK(margin >= 0);
  CHECK_THROWS_AS(exp_cubic_bound(Real("1.8936")), std::domain_error);
  CHECK_THROWS_AS(exp_cubic_bound(Real(-1)), std::domain_error);
}
