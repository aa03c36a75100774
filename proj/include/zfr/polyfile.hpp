#pragma once

// Text format for polynomials, one record per line:
//
//   # free-form provenance comment
//   format: cosine            (optional; default is generators)
//   0 1
//   1 338.377844758599
//
// Values are kept as the exact decimal strings read, so a file written back
// out reproduces its records byte for byte.

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zfr/trigpoly.hpp"

namespace zfr {

enum class CoeffKind { Generators, Cosine };

struct PolyFile {
  CoeffKind kind = CoeffKind::Generators;
  std::vector<std::string> comments;  // without the leading "# "
  std::vector<std::string> values;    // values[k] is the record for index k
};

class PolyFileError : public std::runtime_error {
 public:
  PolyFileError(std::string source, int line, const std::string& what);
  const std::string& source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

PolyFile parse_poly_file(std::istream& in, const std::string& source = "<input>");
PolyFile read_poly_file(const std::filesystem::path& path);
std::string format_poly_file(const PolyFile& file);
void write_poly_file(const std::filesystem::path& path, const PolyFile& file);

template <class Scalar>
TrigPoly<Scalar> to_trig_poly(const PolyFile& file) {
  Vector<Scalar> v(static_cast<Eigen::Index>(file.values.size()));
  for (std::size_t k = 0; k < file.values.size(); ++k)
    v(static_cast<Eigen::Index>(k)) = decimal<Scalar>(file.values[k]);
  return file.kind == CoeffKind::Generators ? TrigPoly<Scalar>::from_generators(std::move(v))
                                            : TrigPoly<Scalar>::from_cosine_coeffs(std::move(v));
}

/// Serializes the cosine coefficients of `p` with `digits` significant digits.
PolyFile cosine_file_from(const TrigPoly<Real>& p, int digits, std::vector<std::string> comments = {});

/// The degree-40 and degree-46 polynomials shipped with the library, as
/// generator tables.
const PolyFile& bundled_p40();
const PolyFile& bundled_p46();

}  // namespace zfr
