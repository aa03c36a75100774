#pragma once

// Non-negative cosine polynomials P(x) = sum_k b_k cos(kx).
//
// A polynomial built from generators c_0..c_K is |sum c_k e^{ikx}|^2 / sum c_k^2,
// so b_0 = 1, b_k = 2 sum_j c_j c_{j+k} / sum c_j^2, and P >= 0 holds by
// construction. Polynomials ingested as cosine tables carry no such guarantee
// and have to go through certify_nonnegative().

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "zfr/numeric.hpp"

namespace zfr {

enum class PolySource { Generators, CosineTable, ProductForm };

template <class Scalar>
class TrigPoly {
 public:
  using Coeffs = Vector<Scalar>;

  /// Throws std::domain_error on empty input or sum c_j^2 == 0.
  static TrigPoly from_generators(Coeffs c);

  /// Normalizes so b_0 = 1. Throws std::domain_error when b_0 <= 0.
  static TrigPoly from_cosine_coeffs(Coeffs b);

  /// Used by expand_product_form; `certified` records whether every factor
  /// is a square or non-negative on its own.
  static TrigPoly from_product_expansion(Coeffs b, bool certified);

  Eigen::Index degree() const { return b_.size() - 1; }
  const Coeffs& cosine_coeffs() const { return b_; }
  const std::optional<Coeffs>& generators() const { return c_; }
  PolySource source() const { return source_; }

  const Scalar& b0() const { return b_(0); }
  Scalar b1() const { return degree() >= 1 ? b_(1) : Scalar(0); }
  /// b = b_1 + ... + b_K.
  const Scalar& b_sum() const { return b_sum_; }

  /// All b_k >= 0 and b_1 > b_0 (strict: b_1 == b_0 is not admissible).
  bool admissible() const { return admissible_; }

  /// True when P >= 0 follows from how the polynomial was built.
  bool nonnegative_by_construction() const { return nonnegative_; }

  template <class Other>
  TrigPoly<Other> cast() const;

 private:
  TrigPoly() = default;
  void finish();

  template <class>
  friend class TrigPoly;

  Coeffs b_;
  std::optional<Coeffs> c_;
  Scalar b_sum_{0};
  PolySource source_ = PolySource::CosineTable;
  bool admissible_ = false;
  bool nonnegative_ = false;
};

/// Scaled autocorrelation of a generator vector: b_0 = 1, b_k for k >= 1.
template <class Scalar>
Vector<Scalar> autocorrelation(const Vector<Scalar>& c) {
  const Eigen::Index n = c.size();
  const Scalar norm2 = c.squaredNorm();
  Vector<Scalar> b(n);
  b(0) = Scalar(1);
  for (Eigen::Index k = 1; k < n; ++k)
    b(k) = Scalar(2) * c.head(n - k).dot(c.tail(n - k)) / norm2;
  return b;
}

template <class Scalar>
TrigPoly<Scalar> TrigPoly<Scalar>::from_generators(Coeffs c) {
  if (c.size() == 0) throw std::domain_error("from_generators: empty generator list");
  if (c.squaredNorm() == Scalar(0))
    throw std::domain_error("from_generators: generators are all zero");
  TrigPoly p;
  p.b_ = autocorrelation<Scalar>(c);
  p.c_ = std::move(c);
  p.source_ = PolySource::Generators;
  p.nonnegative_ = true;
  p.finish();
  return p;
}

template <class Scalar>
TrigPoly<Scalar> TrigPoly<Scalar>::from_cosine_coeffs(Coeffs b) {
  if (b.size() == 0 || !(b(0) > Scalar(0)))
    throw std::domain_error("from_cosine_coeffs: b_0 must be positive");
  TrigPoly p;
  const Scalar b0 = b(0);
  p.b_ = b / b0;
  p.b_(0) = Scalar(1);
  p.source_ = PolySource::CosineTable;
  p.nonnegative_ = false;
  p.finish();
  return p;
}

template <class Scalar>
TrigPoly<Scalar> TrigPoly<Scalar>::from_product_expansion(Coeffs b, bool certified) {
  TrigPoly p = from_cosine_coeffs(std::move(b));
  p.source_ = PolySource::ProductForm;
  p.nonnegative_ = certified;
  return p;
}

template <class Scalar>
void TrigPoly<Scalar>::finish() {
  b_sum_ = degree() >= 1 ? Scalar(b_.tail(degree()).sum()) : Scalar(0);
  bool signs = true;
  for (Eigen::Index k = 0; k <= degree(); ++k) signs = signs && b_(k) >= Scalar(0);
  admissible_ = signs && degree() >= 1 && b_(1) > b_(0);
}

template <class Scalar>
template <class Other>
TrigPoly<Other> TrigPoly<Scalar>::cast() const {
  TrigPoly<Other> p;
  p.b_ = b_.template cast<Other>();
  if (c_) p.c_ = c_->template cast<Other>();
  p.source_ = source_;
  p.nonnegative_ = nonnegative_;
  p.finish();
  return p;
}

/// P(x) by Clenshaw's recurrence in cos x.
template <class Scalar>
Scalar evaluate(const TrigPoly<Scalar>& p, const Scalar& x) {
  using std::cos;
  const auto& b = p.cosine_coeffs();
  const Scalar two_cos = Scalar(2) * cos(x);
  Scalar next(0), next2(0);
  for (Eigen::Index k = p.degree(); k >= 1; --k) {
    Scalar cur = b(k) + two_cos * next - next2;
    next2 = std::move(next);
    next = std::move(cur);
  }
  return b(0) + two_cos / Scalar(2) * next - next2;
}

/// P'(x) = -sum k b_k sin(kx).
template <class Scalar>
Scalar evaluate_derivative(const TrigPoly<Scalar>& p, const Scalar& x) {
  using std::sin;
  const auto& b = p.cosine_coeffs();
  Scalar acc(0);
  for (Eigen::Index k = 1; k <= p.degree(); ++k) acc -= Scalar(int(k)) * b(k) * sin(Scalar(int(k)) * x);
  return acc;
}

template <class Scalar>
struct NonnegativityCertificate {
  Scalar grid_min;
  Scalar grid_argmin;
  Scalar spacing;
  Scalar derivative_bound;  // sum k |b_k|
  Scalar certified_lower_bound;
  bool certified;
};

/// Grid of 2^grid_log2 intervals on [0, pi] (P is even and 2pi-periodic).
/// Every x lies within spacing/2 of a node and |P'| <= sum k|b_k|, so
/// min P >= grid_min - spacing * bound / 2. Certified when that is > 0.
template <class Scalar>
NonnegativityCertificate<Scalar> certify_nonnegative(const TrigPoly<Scalar>& p, int grid_log2 = 14) {
  using std::abs;
  const long n = 1L << grid_log2;
  const Scalar h = pi<Scalar>() / Scalar(n);
  Scalar bound(0);
  for (Eigen::Index k = 1; k <= p.degree(); ++k) bound += Scalar(int(k)) * abs(p.cosine_coeffs()(k));
  Scalar best = evaluate(p, Scalar(0));
  Scalar arg(0);
  for (long i = 1; i <= n; ++i) {
    const Scalar x = h * Scalar(i);
    Scalar v = evaluate(p, x);
    if (v < best) {
      best = std::move(v);
      arg = x;
    }
  }
  Scalar lower = best - h * bound / Scalar(2);
  const bool ok = lower > Scalar(0);
  return {best, arg, h, bound, lower, ok};
}

template <class Scalar>
struct LinearCosFactor {
  Scalar shift;      // a in (a + cos x)
  int multiplicity;  // m >= 1
};

/// Expands prod (a_i + cos x)^{m_i} * (1 + cos x)^{0|1} by multiplying
/// symmetric Laurent series in z = e^{ix}. Non-negativity is certified when
/// every multiplicity is even.
template <class Scalar>
TrigPoly<Scalar> expand_product_form(std::span<const LinearCosFactor<Scalar>> factors,
                                     bool include_one_plus_cos) {
  // half[k] is the coefficient of z^k and of z^-k.
  std::vector<Scalar> half{Scalar(1)};
  auto at = [&half](long k) { return k < static_cast<long>(half.size()) ? half[std::size_t(k)] : Scalar(0); };
  auto multiply = [&](const Scalar& a) {
    const long n = static_cast<long>(half.size()) - 1;
    std::vector<Scalar> out(std::size_t(n + 2));
    for (long k = 0; k <= n + 1; ++k)
      out[std::size_t(k)] = a * at(k) + (at(k == 0 ? 1 : k - 1) + at(k + 1)) / Scalar(2);
    half = std::move(out);
  };
  bool certified = true;
  for (const auto& f : factors) {
    if (f.multiplicity < 1) throw std::domain_error("expand_product_form: multiplicity must be >= 1");
    certified = certified && f.multiplicity % 2 == 0;
    for (int i = 0; i < f.multiplicity; ++i) multiply(f.shift);
  }
  if (include_one_plus_cos) multiply(Scalar(1));
  Vector<Scalar> b(static_cast<Eigen::Index>(half.size()));
  b(0) = half[0];
  for (std::size_t k = 1; k < half.size(); ++k) b(static_cast<Eigen::Index>(k)) = Scalar(2) * half[k];
  return TrigPoly<Scalar>::from_product_expansion(std::move(b), certified);
}

extern template class TrigPoly<double>;
extern template class TrigPoly<Real>;

}  // namespace zfr
