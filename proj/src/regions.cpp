#include "zfr/regions.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace zfr {

namespace {

std::string link_number(const Real& x, int digits) { return to_significant(x, digits > 0 ? digits : 15); }

std::string kappa2_name(Kappa2Convention c) {
  return c == Kappa2Convention::Consistent ? "consistent" : "published";
}

void add(VerificationReport& r, std::string key, const Real& v, int decimals, Rounding mode) {
  r.values.push_back({std::move(key), v, decimals, mode});
}

void add_links(VerificationReport& r, const std::vector<ChainLink<Real>>& links) {
  for (const auto& l : links) r.links.push_back({l.name, l.lhs, l.relation, l.rhs, l.pass});
}

void finish(VerificationReport& r) {
  r.pass = true;
  r.first_failure.reset();
  for (const auto& l : r.links) {
    if (!l.pass) {
      r.pass = false;
      r.first_failure = l.name;
      break;
    }
  }
}

}  // namespace

const ReportValue* VerificationReport::find(std::string_view key) const {
  for (const auto& v : values)
    if (v.key == key) return &v;
  return nullptr;
}

const ReportLink* VerificationReport::find_link(std::string_view name) const {
  for (const auto& l : links)
    if (l.name == name) return &l;
  return nullptr;
}

std::string VerificationReport::format(const ReportValue& v, int digits) const {
  return digits > 0 ? to_significant(v.value, digits) : to_fixed(v.value, v.decimals, v.rounding);
}

std::string to_text(const VerificationReport& r, int digits) {
  std::ostringstream out;
  out << "report: " << r.title << '\n' << "precision: " << r.precision << '\n';
  for (const auto& [k, v] : r.inputs) out << "input." << k << ": " << v << '\n';
  for (const auto& v : r.values) out << "value." << v.key << ": " << r.format(v, digits) << '\n';
  for (const auto& l : r.links)
    out << "link." << l.name << ": " << (l.pass ? "pass" : "FAIL") << "  " << link_number(l.lhs, digits) << ' '
        << l.relation << ' ' << link_number(l.rhs, digits) << '\n';
  for (const auto& n : r.notes) out << "note: " << n << '\n';
  out << "result: " << (r.pass ? "pass" : "fail") << '\n';
  out << "first_failure: " << r.first_failure.value_or("none") << '\n';
  return out.str();
}

std::string to_json(const VerificationReport& r, int digits) {
  nlohmann::ordered_json j;
  j["report"] = r.title;
  j["precision"] = r.precision;
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.inputs) j["inputs"][k] = v;
  j["values"] = nlohmann::ordered_json::object();
  for (const auto& v : r.values) j["values"][v.key] = r.format(v, digits);
  j["links"] = nlohmann::ordered_json::array();
  for (const auto& l : r.links)
    j["links"].push_back({{"name", l.name},
                          {"pass", l.pass},
                          {"lhs", link_number(l.lhs, digits)},
                          {"relation", l.relation},
                          {"rhs", link_number(l.rhs, digits)}});
  j["notes"] = r.notes;
  j["pass"] = r.pass;
  j["first_failure"] = r.first_failure ? nlohmann::ordered_json(*r.first_failure) : nlohmann::ordered_json(nullptr);
  return j.dump(2) + "\n";
}

VerificationReport verify_theorem1(const RegionParams<Real>& p, const Theorem1Options& opt) {
  VerificationReport r;
  r.title = "theorem1";
  r.precision = Real::default_precision();
  r.inputs = {{"A", to_significant(p.richert.A, 20)},
              {"B", to_significant(p.richert.B, 20)},
              {"E", to_significant(p.E, 20)},
              {"M1", to_significant(p.M1, 20)},
              {"R", p.R ? to_significant(*p.R, 20) : std::string("auto")},
              {"log_T0", to_significant(p.log_T0, 20)},
              {"K", std::to_string(p.K)},
              {"degree", std::to_string(p.poly.degree())},
              {"kappa2", kappa2_name(opt.kappa2)}};

  const auto ch = theorem1_chain(p, opt.kappa2);
  const auto cert = certify_Y_bound(ch);
  add(r, "R", ch.R, 0, Rounding::Nearest);
  add(r, "theta", ch.theta, 14, Rounding::Nearest);
  add(r, "cos2_theta", ch.cos2, 5, Rounding::Down);
  add(r, "w0", ch.w0, 10, Rounding::Nearest);
  add(r, "W_prime0", ch.Wprime0, 10, Rounding::Nearest);
  add(r, "slope", ch.slope, 5, Rounding::Up);
  add(r, "C5", ch.C5, 10, Rounding::Up);
  add(r, "b_ratio", ch.ratio_b, 14, Rounding::Nearest);
  add(r, "L1_T0", ch.L1, 6, Rounding::Nearest);
  add(r, "L2_T0", ch.L2, 10, Rounding::Nearest);
  add(r, "eta_T0", ch.eta, 10, Rounding::Up);
  add(r, "lambda_ratio", ch.lambda_ratio, 2, Rounding::Down);
  add(r, "kappa1", ch.kappa1, 12, Rounding::Up);
  add(r, "kappa2", ch.kappa2, 15, Rounding::Up);
  add(r, "kappa3", ch.kappa3, 10, Rounding::Up);
  add(r, "kappa4", ch.kappa4, 10, Rounding::Up);
  add(r, "slope_kappa4", ch.slope_kappa4, 3, Rounding::Up);
  add(r, "const", ch.leading, 5, Rounding::Up);
  add(r, "Y_a", ch.a, 6, Rounding::Up);
  add(r, "Y_c", ch.c, 6, Rounding::Up);
  add(r, "Y_d", ch.d, 6, Rounding::Down);
  add(r, "Y_f", ch.f, 6, Rounding::Down);
  add(r, "Y_g", ch.g, 7, Rounding::Down);
  add(r, "Y_T0", ch.Y_T0, 7, Rounding::Up);
  if (cert.certified) add(r, "Y_certificate_L2_end", cert.L2_end, 4, Rounding::Up);
  add(r, "numerator", ch.numerator, 8, Rounding::Down);
  add(r, "M_bound", ch.M_bound, 8, Rounding::Down);
  // Same bound rebuilt from the rounded constants as they are displayed.
  const Real shown_M = (Real(to_fixed(ch.cos2, 5, Rounding::Down)) -
                        Real(to_fixed(ch.slope_kappa4, 3, Rounding::Up)) / p.log_T0) /
                       (Real(to_fixed(ch.leading, 5, Rounding::Up)) + Real(to_fixed(ch.Y_T0, 7, Rounding::Up)));
  add(r, "M_bound_from_displayed", shown_M, 8, Rounding::Down);
  add(r, "R1", ch.R1, 3, Rounding::Up);
  if (opt.find_best_m1) {
    if (const auto best = best_closing_m1(p, opt.kappa2)) add(r, "best_M1", *best, 6, Rounding::Down);
    else r.notes.push_back("no M1 >= 1e-4 closes the chain");
  }

  add_links(r, theorem1_links(p, ch));
  if (!(shown_M > p.M1))
    r.notes.push_back("M bound rebuilt from the displayed constants does not exceed M1; the link uses full precision");
  if (!cert.certified) r.notes.push_back("Y bound not certified: " + cert.reason);
  if (opt.kappa2 == Kappa2Convention::Published)
    r.notes.push_back("published kappa2 is smaller than gamma*eta(T0)*B^(2/3)/E by a factor B^(2/3); "
                      "the log zeta(1+eta) bound it feeds is not valid");
  finish(r);
  return r;
}

VerificationReport verify_theorem4(const TrigPoly<Real>& p, const Real& log_t0) {
  using boost::multiprecision::cos;
  using boost::multiprecision::log;
  using boost::multiprecision::sin;
  auto d = [](const char* s) { return Real(s); };
  VerificationReport r;
  r.title = "theorem4";
  r.precision = Real::default_precision();
  r.inputs = {{"log_t0", to_significant(log_t0, 20)},
              {"degree", std::to_string(p.degree())},
              {"b_sum", to_significant(p.b_sum(), 20)}};

  const Real K(int(p.degree()));
  const Real pi_ = pi<Real>();
  const auto k = smoothing_constants(solve_theta(p.b0(), p.b1()));
  const Real cos2 = cos(k.theta) * cos(k.theta);
  const Real slope = -k.Wprime0 * p.b1() / (k.w0 * p.b0());
  const Real inv_ratio = p.b0() / p.b_sum();  // b0 / b
  const Real R855(855);
  const Real H855 = H_of_R(R855, k.theta);
  const Real C855 = C5_of_R(R855, k.theta);
  const Real J0 = subweyl_J(log_t0);
  const Real ct0 = Real(1) / (J0 + d("1.3686"));
  const Real delta_max = d("0.05035") * ct0;
  const Real half_gap = Real(1) / Real(2) - delta_max;
  const Real drop = Real(4) + pi_ * delta_max * H855 / (k.w0 * half_gap * half_gap) - Real(4) * d("1.0146");
  const Real x = pi_ / Real(1712);
  const Real cot_term = (cos(x) / sin(x) - Real(1) / x) / x;
  const Real jgap = Real(27) / Real(164) * log(K + exp(-log_t0));
  const Real log40 = log(K);
  const Real const_term = d("1.612") + d("1.0146") * (d("3.5691") * log40 + d("18.439") + d("5.316") * log40 / log_t0);
  const Real lin = d("34.384") + d("3.6227") * log_t0 + d("5.3958") * log(log_t0);
  const Real final_M = d("0.23875") + d("22.4399") * d("0.05035");

  add(r, "theta", k.theta, 14, Rounding::Nearest);
  add(r, "H_855", H855, 2, Rounding::Up);
  add(r, "w0", k.w0, 5, Rounding::Down);
  add(r, "C5_855", C855, 4, Rounding::Up);
  add(r, "W_prime0_abs", -k.Wprime0, 7, Rounding::Up);
  add(r, "cos2_theta", cos2, 5, Rounding::Down);
  add(r, "slope", slope, 5, Rounding::Up);
  add(r, "J_gap", jgap, 5, Rounding::Up);
  add(r, "delta_max", delta_max, 8, Rounding::Up);
  add(r, "zero_sum_bracket", drop, 6, Rounding::Up);
  add(r, "one_minus_beta_coefficient", d("5.746") * inv_ratio, 3, Rounding::Up);
  add(r, "sigma_three_halves_term", d("0.851") * inv_ratio, 5, Rounding::Up);
  add(r, "linear_constant", const_term, 3, Rounding::Up);
  add(r, "final_M", final_M, 4, Rounding::Up);
  add(r, "h_slope", Real(27) / Real(164), 10, Rounding::Nearest);
  add(r, "h_constant", log(d(kSubWeylConstant.data())) + d("1.3686"), 3, Rounding::Up);
  add(r, "width_numerator", d("0.05035"), 5, Rounding::Nearest);
  add(r, "width_quadratic", d("0.0349"), 4, Rounding::Nearest);

  std::vector<ChainLink<Real>> L;
  L.push_back(make_link<Real>("polynomial_admissible", Real(p.admissible() ? 1 : 0), ">=", Real(1)));
  L.push_back(make_link<Real>("delta_max_below_1_over_1712", delta_max, "<=", Real(1) / Real(1712)));
  L.push_back(make_link<Real>("H_bound", H855, "<=", d("134.87")));
  L.push_back(make_link<Real>("w0_bound", k.w0, ">=", d("5.64531")));
  L.push_back(make_link<Real>("C5_bound", C855, "<=", d("1.0146")));
  L.push_back(make_link<Real>("W_prime0_bound", k.Wprime0, ">=", d("-0.6617195")));
  L.push_back(make_link<Real>("cos2_bound", cos2, ">=", d("0.17949")));
  L.push_back(make_link<Real>("slope_bound", slope, "<=", d("0.20466")));
  L.push_back(make_link<Real>("first_term_coefficient", d("0.3334") * pi_ * pi_ * p.b1() / p.b0(), "<=", d("5.746")));
  L.push_back(make_link<Real>("cot_expansion", cot_term, ">=", d("-0.3334")));
  L.push_back(make_link<Real>("zero_sum_drop", drop, "<=", Real(0)));
  L.push_back(make_link<Real>("near_zero_coefficient", Real(1) / Real(3) + d("3.2357"), "<=", d("3.5691")));
  L.push_back(make_link<Real>("constant_coefficient", d("1.8") + d("16.134") + d("1.8") * inv_ratio, "<=", d("18.439")));
  L.push_back(make_link<Real>("one_minus_beta_coefficient", d("5.746") * inv_ratio, "<=", d("1.612")));
  L.push_back(make_link<Real>("sigma_three_halves_term", d("0.851") * inv_ratio, "<=", d("0.23875")));
  L.push_back(make_link<Real>("leading_numerator", d("0.05035"), "<=", d("0.17949") * inv_ratio));
  L.push_back(make_link<Real>("J_gap", jgap, "<=", d("0.60732")));
  L.push_back(
      make_link<Real>("quadratic_numerator", d("0.20466") * d("0.60732") * inv_ratio, "<=", d("0.0349")));
  L.push_back(make_link<Real>("linear_constant", const_term, "<=", d("34.384")));
  L.push_back(make_link<Real>("log_coefficient", d("1.0146") * d("3.5691"), "<=", d("3.6227")));
  L.push_back(make_link<Real>("loglog_coefficient", d("1.0146") * d("5.316"), "<=", d("5.3958")));
  L.push_back(make_link<Real>("linear_form_at_t0", lin, "<=", d("3.69436") * log_t0));
  L.push_back(make_link<Real>("linear_form_slope", d("3.6227") + d("5.3958") / log_t0, "<=", d("3.69436")));
  L.push_back(make_link<Real>("J_scaling", d("22.4399") * Real(27) / Real(164), ">=", d("3.69436")));
  L.push_back(make_link<Real>("final_M_bound", final_M, "<=", d("1.3686")));
  L.push_back(make_link<Real>("h_constant", log(d(kSubWeylConstant.data())) + d("1.3686"), "<=", d("7.096")));
  add_links(r, L);
  r.notes.push_back("h(t) = (27/164) log t + 7.096; no zeros with sigma > 1 - 0.05035/h(t) + 0.0349/h(t)^2");
  r.notes.push_back("zero_sum_drop uses the computed H(855) at 1 - beta = delta_max");
  finish(r);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

RegionBound rh_verified_bound() {
  return {"rh-verified", [](double) { return 0.5; }, std::log(3.0), std::log(3e12),
          "Riemann hypothesis verified for |t| <= 3e12 (Platt and Trudgian 2021)"};
}

RegionBound classical_bound() {
  return {"classical", [](double L) { return 1.0 / (5.558691 * L); }, std::log(2.0), kInf,
          "sigma > 1 - 1/(5.558691 log t), t >= 2"};
}

RegionBound ford_medium_bound() {
  return {"ford-medium",
          [](double L) {
            const double J = L / 6.0 + std::log(L) + std::log(3.0);
            return (0.04962 - 0.0196 / (J + 1.15)) / (J + 0.685 + 0.155 * std::log(L));
          },
          std::log(1.88e14), kInf, "Ford (2002), medium-height region, t >= 1.88e14"};
}

RegionBound intermediate_bound() {
  return {"intermediate",
          [](double L) {
            const double h = 27.0 / 164.0 * L + 7.096;
            return 0.05035 / h - 0.0349 / (h * h);
          },
          1000.0, kInf, "sub-Weyl region 0.05035/h - 0.0349/h^2, h = (27/164) log t + 7.096, log t >= 1000"};
}

RegionBound korobov_vinogradov_bound() {
  return {"korobov-vinogradov",
          [](double L) { return 1.0 / (55.241 * std::pow(L, 2.0 / 3.0) * std::cbrt(std::log(L))); }, std::log(3.0),
          kInf, "sigma > 1 - 1/(55.241 (log t)^(2/3) (log log t)^(1/3)), t >= 3"};
}

const std::vector<RegionBound>& standard_bounds() {
  static const std::vector<RegionBound> all{rh_verified_bound(), classical_bound(), ford_medium_bound(),
                                            intermediate_bound(), korobov_vinogradov_bound()};
  return all;
}

EnvelopeResult envelope(double log_t) {
  if (!(log_t >= std::log(3.0))) throw std::domain_error("envelope: need t >= 3");
  EnvelopeResult best{nullptr, -kInf};
  for (const auto& b : standard_bounds()) {
    if (!b.valid_at(log_t)) continue;
    const double w = b.width(log_t);
    if (w > best.width) best = {&b, w};
  }
  return best;
}

double crossover(const RegionBound& a, const RegionBound& b, double lo, double hi) {
  auto diff = [&](double L) { return a.width(L) - b.width(L); };
  double flo = diff(lo);
  const double fhi = diff(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0)) throw std::domain_error("crossover: no sign change on the interval");
  while (hi - lo > 1e-6 * std::max(1.0, std::abs(lo))) {
    const double mid = 0.5 * (lo + hi);
    const double fm = diff(mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace zfr
