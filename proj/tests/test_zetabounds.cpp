#include <doctest.h>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include "support.hpp"
#include "zfr/zetabounds.hpp"

using namespace zfr;
using zfr::test::R;

namespace {

// Euler-Maclaurin for real s > 1 with N = 30 and Bernoulli terms until the
// next term drops below 1e-45; that next term bounds the remainder.
Real zeta_oracle(const Real& s) {
  const int N = 30;
  Real sum = 0;
  for (int n = 1; n < N; ++n) sum += pow(Real(n), -s);
  const Real Nr(N);
  sum += pow(Nr, 1 - s) / (s - 1) + pow(Nr, -s) / 2;
  Real rising = s;  // s (s+1) ... (s+2k-2)
  for (int k = 1; k < 40; ++k) {
    const Real term = boost::math::bernoulli_b2n<Real>(k) / boost::math::factorial<Real>(2 * k) * rising *
                      pow(Nr, -s - 2 * k + 1);
    sum += term;
    if (abs(term) < Real("1e-45")) break;
    rising *= (s + 2 * k - 1) * (s + 2 * k);
  }
  return sum;
}

// Second transcriptions of the bounds.
Real N_bound_transcribed(const Real& lt, const Real& eta, const Real& A, const Real& B) {
  return Real("1.3478") * pow(eta, Real("1.5")) * B * lt + Real("0.479") +
         (log(A / eta) + 2 * log(lt) / 3) / Real("1.879");
}

Real sum_bound_transcribed(const Real& lt, const Real& eta, const Real& N, const Real& A, const Real& B) {
  return (Real("5.409") + Real("5.392") * B * (pow(eta, Real("-0.5")) - 2)) * lt + Real("206.7") +
         pow(eta, -2) * ((log(A / eta) + 2 * log(lt) / 3) / Real("1.879") + Real("0.213") - N);
}

}  // namespace

TEST_CASE("zeta oracle sanity") {
  ScopedPrecision prec(50);
  CHECK(abs(zeta_oracle(Real(2)) - pi<Real>() * pi<Real>() / 6) < R("1e-40"));
  CHECK(abs(zeta_oracle(Real(4)) - pow(pi<Real>(), 4) / 90) < R("1e-40"));
}

TEST_CASE("log zeta(1 + eta) bound") {
  ScopedPrecision prec(50);
  CHECK(abs(ramare_log_zeta(Real(1)) - euler_gamma<Real>()) < R("1e-50"));
  CHECK(log(pi<Real>() * pi<Real>() / 6) <= ramare_log_zeta(Real(1)));
  CHECK(log(zeta_oracle(R("1.25"))) <= ramare_log_zeta(R("0.25")));
  for (int i = 1; i <= 200; ++i) {
    const Real eta = Real(i) / 200;
    CHECK(log(zeta_oracle(1 + eta)) <= ramare_log_zeta(eta));
  }
  Real prev = ramare_log_zeta(Real("0.5"));
  for (int k = 1; k < 40; ++k) {
    const Real cur = ramare_log_zeta(pow(Real(2), -k) / 2);
    CHECK(cur > prev);
    prev = cur;
  }
  CHECK(ramare_log_zeta(Real("1e-30")) > 60);
  CHECK_THROWS_AS(ramare_log_zeta(Real(0)), std::domain_error);
  CHECK_THROWS_AS(ramare_log_zeta(-1.0), std::domain_error);
}

TEST_CASE("sub-Weyl J") {
  ScopedPrecision prec(50);
  const Real l3 = log(Real(3));
  CHECK(abs(subweyl_J(l3) - (Real(27) / 164 * l3 + log(R("307.098")))) < R("1e-45"));
  for (int i = 1; i < 100; ++i) CHECK(subweyl_J(Real(i + 1)) > subweyl_J(Real(i)));
  // J(Kt + 1) - J(t) for K = 40 is largest at the start of the range.
  for (int lt : {1000, 5000, 52238}) {
    const auto s = log_scales(Real(lt), 40);
    CHECK(subweyl_J(s.L1) - subweyl_J(Real(lt)) <= R("0.60732"));
  }
}

TEST_CASE("N(T) error term") {
  ScopedPrecision prec(50);
  CHECK(abs(NT_error(Real(1)) - (R("0.1038") + R("9.3675"))) < R("1e-45"));
  const Real lt = 10 * log(Real(10));
  CHECK(abs(NT_error(lt) - (R("0.1038") * lt + R("0.2573") * log(lt) + R("9.3675"))) < R("1e-45"));
  CHECK(abs(NT_error(lt) - R("12.5646350191174861")) < R("1e-15"));
  CHECK_THROWS_AS(NT_error(Real("0.99")), std::domain_error);
}

TEST_CASE("zero counting near 1 + it") {
  ScopedPrecision prec(50);
  CHECK(zero_count_constant_exact<Real>() <= R("0.479"));
  CHECK(zero_sum_drop_exact<Real>() <= R("0.213"));
  const RichertParams<Real> rp;
  const Real l100 = log(Real(100));
  CHECK(abs(N_t_eta_bound(l100, Real("0.25"), rp) - N_bound_transcribed(l100, R("0.25"), rp.A, rp.B)) < R("1e-45"));
  CHECK(abs(N_t_eta_bound(l100, Real("0.25"), rp) - R("7.51738994403894969")) < R("1e-15"));
  for (int i = 5; i < 60; ++i) CHECK(N_t_eta_bound(Real(i + 1), R("0.1"), rp) > N_t_eta_bound(Real(i), R("0.1"), rp));
  const Real l4 = log(Real(10000));
  CHECK(abs(zero_sum_bound(l4, R("0.1"), Real(0), rp) - sum_bound_transcribed(l4, R("0.1"), Real(0), rp.A, rp.B)) <
        R("1e-40"));
  CHECK(zero_sum_bound(l4, R("0.1"), Real(1), rp) < zero_sum_bound(l4, R("0.1"), Real(0), rp));
  CHECK_THROWS_AS(N_t_eta_bound(l100, R("0.3"), rp), std::domain_error);
  CHECK_THROWS_AS(N_t_eta_bound(Real(4), R("0.1"), rp), std::domain_error);
  CHECK_THROWS_AS(zero_sum_bound(Real(9), R("0.1"), Real(0), rp), std::domain_error);
  CHECK_THROWS_AS(zero_sum_bound(l4, Real(0), Real(0), rp), std::domain_error);
}

TEST_CASE("bounds match second transcriptions at random inputs") {
  ScopedPrecision prec(50);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const Real lt = test::uniform_real(rng, 9.3, 60000);
    const Real eta = test::uniform_real(rng, 1e-4, 0.25);
    const Real N = test::uniform_real(rng, 0, 50);
    RichertParams<Real> rp{test::uniform_real(rng, 1, 200), test::uniform_real(rng, 1, 10)};
    const Real nb = N_t_eta_bound(lt, eta, rp);
    const Real zb = zero_sum_bound(lt, eta, N, rp);
    CHECK(abs(nb - N_bound_transcribed(lt, eta, rp.A, rp.B)) <= R("1e-25") * abs(nb));
    CHECK(abs(zb - sum_bound_transcribed(lt, eta, N, rp.A, rp.B)) <= R("1e-25") * abs(zb));
    CHECK(nb > 0);
    CHECK(isfinite(zb));
    CHECK(NT_error(lt) > 0);
    CHECK(ramare_log_zeta(eta) > 0);
  }
}

TEST_CASE("log scales") {
  ScopedPrecision prec(50);
  const auto s = log_scales(Real(52238), 40);
  CHECK(abs(s.L1 - (52238 + log(Real(40)))) < R("1e-40"));
  CHECK(abs(s.L2 - log(s.L1)) < R("1e-45"));
  CHECK(s.L1 >= 52238 + log(Real(40)));
  const auto small = log_scales(log(Real(3)), 1);
  CHECK(abs(small.L1 - log(Real(4))) < R("1e-45"));
  CHECK_THROWS_AS(log_scales(Real(1), 40), std::domain_error);
  CHECK_THROWS_AS(log_scales(Real(5), 0), std::domain_error);
}
