#include "zfr/polyfile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace zfr {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool is_decimal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  bool digits = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, digits = true;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, digits = true;
  }
  if (!digits) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    bool exp_digits = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, exp_digits = true;
    if (!exp_digits) return false;
  }
  return i == s.size();
}

}  // namespace

PolyFileError::PolyFileError(std::string source, int line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
      source_(std::move(source)),
      line_(line) {}

PolyFile parse_poly_file(std::istream& in, const std::string& source) {
  PolyFile file;
  std::string raw;
  int line_no = 0;
  bool seen_record = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      file.comments.push_back(trim(line.substr(1)));
      continue;
    }
    if (line.rfind("format:", 0) == 0) {
      if (seen_record) throw PolyFileError(source, line_no, "format header after first record");
      const std::string kind = trim(line.substr(7));
      if (kind == "cosine") file.kind = CoeffKind::Cosine;
      else if (kind == "generators") file.kind = CoeffKind::Generators;
      else throw PolyFileError(source, line_no, "unknown format '" + kind + "'");
      continue;
    }
    std::istringstream fields(line);
    std::string index_text, value, extra;
    fields >> index_text >> value;
    if (value.empty() || (fields >> extra))
      throw PolyFileError(source, line_no, "expected '<k> <value>', got '" + line + "'");
    long k = -1;
    const auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), k);
    if (ec != std::errc{} || ptr != index_text.data() + index_text.size() || k < 0)
      throw PolyFileError(source, line_no, "bad index '" + index_text + "'");
    if (static_cast<std::size_t>(k) != file.values.size())
      throw PolyFileError(source, line_no,
                          "index " + index_text + " out of sequence, expected " + std::to_string(file.values.size()));
    if (!is_decimal(value)) throw PolyFileError(source, line_no, "malformed number '" + value + "'");
    file.values.push_back(value);
    seen_record = true;
  }
  if (file.values.empty()) throw PolyFileError(source, line_no, "no coefficient records");
  return file;
}

PolyFile read_poly_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PolyFileError(path.string(), 0, "cannot open file");
  return parse_poly_file(in, path.string());
}

std::string format_poly_file(const PolyFile& file) {
  std::ostringstream out;
  for (const auto& c : file.comments) out << "# " << c << '\n';
  if (file.kind == CoeffKind::Cosine) out << "format: cosine\n";
  for (std::size_t k = 0; k < file.values.size(); ++k) out << k << ' ' << file.values[k] << '\n';
  return out.str();
}

void write_poly_file(const std::filesystem::path& path, const PolyFile& file) {
  std::ofstream out(path);
  if (!out) throw PolyFileError(path.string(), 0, "cannot open file for writing");
  out << format_poly_file(file);
}

PolyFile cosine_file_from(const TrigPoly<Real>& p, int digits, std::vector<std::string> comments) {
  PolyFile f;
  f.kind = CoeffKind::Cosine;
  f.comments = std::move(comments);
  for (Eigen::Index k = 0; k <= p.degree(); ++k)
    f.values.push_back(p.cosine_coeffs()(k).str(digits, std::ios_base::scientific));
  return f;
}

}  // namespace zfr
