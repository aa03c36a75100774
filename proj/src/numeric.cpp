#include "zfr/numeric.hpp"

#include <ios>

namespace zfr {

std::string to_fixed(const Real& x, int decimals, Rounding mode) {
  const Real scale = boost::multiprecision::pow(Real(10), decimals);
  Real scaled = x * scale;
  switch (mode) {
    case Rounding::Down: scaled = floor(scaled); break;
    case Rounding::Up: scaled = ceil(scaled); break;
    case Rounding::Nearest: scaled = round(scaled); break;
  }
  const bool negative = scaled < 0;
  std::string digits = abs(scaled).str(0, std::ios_base::fixed);
  if (const auto dot = digits.find('.'); dot != std::string::npos) digits.erase(dot);
  if (decimals > 0) {
    if (digits.size() <= static_cast<std::size_t>(decimals))
      digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
  }
  if (negative && digits.find_first_not_of("0.") != std::string::npos) digits.insert(0, "-");
  return digits;
}

std::string to_significant(const Real& x, int significant) {
  return x.str(significant);
}

}  // namespace zfr
