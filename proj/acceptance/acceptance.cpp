// One PASS/FAIL line per acceptance criterion, then a summary.
// Exit status is 0 once every criterion has been evaluated; with --strict it
// is 1 when any criterion failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>

#include "zfr/annealer.hpp"
#include "zfr/polyfile.hpp"
#include "zfr/regions.hpp"

using namespace zfr;

namespace {

int passed = 0;
int failed = 0;

void line(const std::string& id, bool ok, const std::string& detail, double seconds) {
  (ok ? passed : failed)++;
  std::printf("[%s] %-4s %s (%.3f s)\n", ok ? "PASS" : "FAIL", id.c_str(), detail.c_str(), seconds);
}

void info(const std::string& id, const std::string& detail) { std::printf("[INFO] %-4s %s\n", id.c_str(), detail.c_str()); }

template <class F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string sci(const Real& x) { return to_significant(x, 3); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

TrigPoly<Real> product(std::vector<LinearCosFactor<Real>> f, bool one_plus_cos) {
  return expand_product_form<Real>(f, one_plus_cos);
}

double q_of(double R2) { return std::pow(4.45, 2.0 / 3.0) / R2; }

void theta_reproduction() {
  const std::pair<const char*, const char*> cases[] = {{"1.74600190914994", "1.13331020636698"},
                                                       {"1.74708744081848", "1.13269369969232"}};
  for (int i = 0; i < 2; ++i) {
    Real got;
    const double s = timed([&] { got = solve_theta(Real(1), Real(cases[i].first)); });
    const Real err = abs(got - Real(cases[i].second));
    line(fmt("1%c", 'a' + i), err <= Real("1e-13") && s < 1.0,
         fmt("theta(1, %s) = %s, |err| %s <= 1e-13", cases[i].first, to_fixed(got, 16).c_str(), sci(err).c_str()), s);
  }
}

void asymptotic_constant() {
  AsymptoticQuantity<Real> a;
  double s = timed([&] { a = asymptotic_quantity(to_trig_poly<Real>(bundled_p46())); });
  Real err = abs(a.R2 - Real("48.1587921551117"));
  line("2a", err <= Real("1e-9") && s < 1.0,
       fmt("degree-46 R2 = %s, |err| %s <= 1e-9", to_fixed(a.R2, 13).c_str(), sci(err).c_str()), s);

  s = timed([&] { a = asymptotic_quantity(product({{Real("0.225"), 2}, {Real("0.9"), 2}}, false)); });
  err = abs(a.q - Real("0.05507"));
  line("2b", err <= Real("5e-6") && s < 1.0,
       fmt("Ford degree-4 q = %s, |q - 0.05507| %s <= 5e-6", to_fixed(a.q, 9).c_str(), sci(err).c_str()), s);
  info("2b", fmt("q truncated to 5 decimals: %s", to_fixed(a.q, 5, Rounding::Down).c_str()));

  s = timed([&] { a = asymptotic_quantity(product({{Real("0.1974476"), 2}, {Real("0.8652559"), 2}}, true)); });
  err = abs(a.q - Real("0.055127"));
  line("2c", err <= Real("5e-7") && s < 1.0,
       fmt("Nielsen degree-5 q = %s, |q - 0.055127| %s <= 5e-7", to_fixed(a.q, 9).c_str(), sci(err).c_str()), s);
}

void theorem1() {
  VerificationReport rep;
  const double s = timed([&] { rep = verify_theorem1(RegionParams<Real>::defaults()); });
  line("3a", rep.pass && s < 5.0,
       fmt("chain closes, first failure: %s", rep.first_failure ? rep.first_failure->c_str() : "none"), s);

  const Real y = rep.find("Y_T0")->value;
  line("3b", y < Real("0.4110503"), fmt("Y(T0) = %s < 0.4110503", to_fixed(y, 9).c_str()), 0);
  const Real m = rep.find("M_bound")->value;
  line("3c", m >= Real("0.04897601") && m > Real("0.048976"),
       fmt("M bound = %s >= 0.04897601 > 0.048976", to_fixed(m, 10).c_str()), 0);
  line("3d", Real(rep.format(*rep.find("R1"))) <= Real("55.241"), "R1 = " + rep.format(*rep.find("R1")) + " <= 55.241",
       0);

  const std::pair<const char*, const char*> shown[] = {{"cos2_theta", "0.17949"}, {"slope", "0.20466"},
                                                       {"const", "3.25351"},      {"Y_a", "4.940431"},
                                                       {"Y_c", "0.136899"},       {"Y_d", "1.031863"},
                                                       {"Y_f", "0.177104"},       {"Y_g", "0.0179076"}};
  std::string mismatch;
  for (const auto& [key, want] : shown) {
    const auto got = rep.format(*rep.find(key));
    if (got != want) mismatch += fmt(" %s=%s(want %s)", key, got.c_str(), want);
  }
  line("3e", mismatch.empty(), "displayed constants match" + (mismatch.empty() ? std::string() : ":" + mismatch), 0);
}

void theorem4() {
  VerificationReport rep;
  const double s = timed([&] { rep = verify_theorem4(to_trig_poly<Real>(bundled_p40())); });
  line("4a", rep.pass && s < 5.0,
       fmt("every link passes, first failure: %s", rep.first_failure ? rep.first_failure->c_str() : "none"), s);
  char id = 'b';
  for (const char* name : {"H_bound", "w0_bound", "C5_bound", "W_prime0_bound", "J_gap", "final_M_bound"}) {
    const auto* l = rep.find_link(name);
    line(fmt("4%c", id++), l->pass,
         fmt("%s: %s %s %s", name, to_significant(l->lhs, 10).c_str(), l->relation.c_str(),
             to_significant(l->rhs, 10).c_str()),
         0);
  }
  const Real slope_err = abs(rep.find("h_slope")->value - Real(27) / Real(164));
  const auto c = rep.format(*rep.find("h_constant"));
  line(fmt("4%c", id), slope_err < Real("1e-40") && c == "7.096", "h(t) = (27/164) log t + " + c, 0);
}

void crossovers() {
  struct Case {
    const char* id;
    RegionBound a, b;
    double lo, hi, want, tol;
  };
  const Case cases[] = {{"5a", classical_bound(), ford_medium_bound(), 40, 200, 64.1, 0.05},
                        {"5b", classical_bound(), korobov_vinogradov_bound(), 1000, 20000, 8928, 1},
                        {"5c", intermediate_bound(), korobov_vinogradov_bound(), 20000, 100000, 52238, 1}};
  for (const auto& c : cases) {
    double x = 0;
    const double s = timed([&] { x = crossover(c.a, c.b, c.lo, c.hi); });
    line(c.id, std::abs(x - c.want) <= c.tol && s < 1.0,
         fmt("%s vs %s at log t = %.4f, want %g +- %g", c.a.name.c_str(), c.b.name.c_str(), x, c.want, c.tol), s);
  }
}

void pnt() {
  Real d1, d2;
  const double s = timed([&] {
    d1 = pnt_exponent(Real("48.1588"));
    d2 = pnt_exponent(Real("49.08"));
  });
  line("6a", d1 >= Real("0.2123") && s < 1.0, fmt("d(48.1588) = %s >= 0.2123", to_fixed(d1, 7).c_str()), s);
  const auto shown = to_fixed(d2, 4);
  line("6b", shown == "0.2098", fmt("d(49.08) = %s rounds to %s, want 0.2098", to_fixed(d2, 7).c_str(), shown.c_str()),
       0);
}

void properties() {
  const auto start = std::chrono::steady_clock::now();

  Real lowest(1);
  double s = timed([&] {
    ScopedPrecision prec(50);
    std::mt19937_64 rng(7001);
    std::uniform_real_distribution<double> u(-1.0, 1.0), x01(0.0, 1.0);
    auto wide = [&](double lo, double hi, std::uniform_real_distribution<double>& d) {
      return Real(lo + (hi - lo) * (d(rng) + 1.0) / 2.0) + Real(d(rng)) * Real("1e-17");
    };
    const Real two_pi = 2 * pi<Real>();
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = 2 + int(rng() % 20);
      Vector<Real> c(n);
      for (Eigen::Index k = 0; k < n; ++k) c(k) = wide(-150, 150, u);
      // Odd trials multiply by z^2 - 2 cos(phi) z + 1, so P(phi) = 0 exactly.
      const Real phi = Real(x01(rng)) * pi<Real>();
      if (trial % 2) {
        Vector<Real> r = Vector<Real>::Zero(n + 2);
        for (Eigen::Index k = 0; k < n; ++k) {
          r(k) += c(k);
          r(k + 1) -= 2 * cos(phi) * c(k);
          r(k + 2) += c(k);
        }
        c = r;
      }
      const auto p = TrigPoly<Real>::from_generators(c);
      for (int i = 0; i < 1000; ++i) {
        const Real x = trial % 2 && i == 0 ? phi : Real(x01(rng)) * two_pi;
        lowest = std::min<Real>(lowest, evaluate(p, x));
      }
    }
  });
  line("7a", lowest >= Real("-1e-25"), "min P over 1e3 polynomials x 1e3 points (half with a root) = " + sci(lowest) + " >= -1e-25", s);

  AnnealConfig det;
  det.degree = 8;
  det.seed = 2024;
  det.chains = 2;
  bool same = false;
  s = timed([&] {
    const auto a = anneal(det);
    const auto b = anneal(det);
    same = a.best_generators == b.best_generators && a.best_objective == b.best_objective &&
           a.verified_objective == b.verified_objective;
  });
  line("7b", same, "two runs with seed 2024 are bit-identical", s);

  int intent = 0, literal = 0, free_last = 0;
  double best_frozen = 0;
  s = timed([&] {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      AnnealConfig cfg;
      cfg.degree = 4;
      cfg.seed = seed;
      const double q = q_of(anneal(cfg).best_objective);
      best_frozen = std::max(best_frozen, q);
      intent += q >= 0.0550;
      literal += q <= 0.0552;
      cfg.perturb_last = true;
      free_last += q_of(anneal(cfg).best_objective) >= 0.0550;
    }
  });
  line("7c", intent >= 8,
       fmt("degree 4, default config: %d/10 seeds reach q >= 0.0550 (best q %.7f), need 8", intent, best_frozen), s);
  info("7c", fmt("literal reading q <= 0.0552: %d/10 seeds", literal));
  info("7c", fmt("with perturb_last: %d/10 seeds reach q >= 0.0550", free_last));

  double worst = 0;
  s = timed([&] {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int degree : {4, 20, 40}) {
      AnnealConfig cfg;
      cfg.degree = degree;
      ChainRng rng(99, 0);
      AnnealState st(random_init(cfg, rng), Objective::R2, 4.45);
      for (int i = 0; i < 10000; ++i)
        st.step(1 + int(u01(gen) * degree) % degree, (u01(gen) - 0.5) * 20.0, 1.0, u01(gen));
      const auto full = TrigPoly<double>::from_generators(st.generators()).cosine_coeffs();
      worst = std::max(worst, (st.cosine_coeffs() - full).cwiseAbs().maxCoeff());
    }
  });
  line("7d", worst <= 1e-10, fmt("incremental vs full b after 1e4 steps: max |diff| %.2e <= 1e-10", worst), s);

  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  line("7", total < 600.0, "property suite runtime < 600 s", total);
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::string_view(argv[1]) == "--strict";
  ScopedPrecision prec(kDefaultDigits);
  theta_reproduction();
  asymptotic_constant();
  theorem1();
  theorem4();
  crossovers();
  pnt();
  properties();
  info("8", "not targets: re-finding the published degree-40/46 polynomials, the degree <= 55 sweep with 1e6 "
            "iterations per level, and the internals of the classical-region iteration table");
  std::printf("summary: %d passed, %d failed\n", passed, failed);
  return strict && failed > 0 ? 1 : 0;
}
