#pragma once

// Scalar types, working precision, literals and decimal formatting shared by
// every module. Algorithms are templated on the scalar: `double` for hot loops
// and `Real` (MPFR, runtime precision) for verification.

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace zfr {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline constexpr unsigned kDefaultDigits = 50;

/// Sets the default precision (decimal digits) of newly created `Real`
/// values for the lifetime of the guard. Values created earlier keep theirs.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits10) : saved_(Real::default_precision()) {
    Real::default_precision(digits10);
  }
  ~ScopedPrecision() { Real::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

template <class Scalar>
inline constexpr bool is_real_v = std::is_same_v<Scalar, Real>;

/// Decimal literal at the current working precision. Constants quoted to
/// a fixed number of digits go through here so the multiprecision paths never
/// see a binary double approximation.
template <class Scalar>
Scalar decimal(std::string_view text);

template <>
inline double decimal<double>(std::string_view text) {
  return std::stod(std::string(text));
}

template <>
inline Real decimal<Real>(std::string_view text) {
  return Real(std::string(text));
}

template <class Scalar>
Scalar pi() {
  if constexpr (is_real_v<Scalar>) {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
  } else {
    return Scalar(3.141592653589793238462643383279502884L);
  }
}

inline constexpr std::string_view kEulerGamma =
    "0.577215664901532860606512090082402431042159335939923598805767";

template <class Scalar>
Scalar euler_gamma() {
  return decimal<Scalar>(kEulerGamma);
}

template <class Scalar>
Real to_real(const Scalar& x) {
  return Real(x);
}

template <class Scalar>
double to_double(const Scalar& x) {
  return static_cast<double>(x);
}

enum class Rounding { Nearest, Down, Up };

/// Fixed-point decimal string with `decimals` digits after the point.
/// Down/Up round toward -inf/+inf, so a displayed upper bound never
/// understates the value it bounds.
std::string to_fixed(const Real& x, int decimals, Rounding mode = Rounding::Nearest);

/// General-format string with `significant` significant digits.
std::string to_significant(const Real& x, int significant);

}  // namespace zfr
