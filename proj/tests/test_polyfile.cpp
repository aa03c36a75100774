#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"
#include "zfr/polyfile.hpp"

using namespace zfr;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PolyFile parse(const std::string& text) {
  std::istringstream in(text);
  return parse_poly_file(in, "mem");
}

int failing_line(const std::string& text) {
  try {
    parse(text);
  } catch (const PolyFileError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("data files round-trip byte for byte") {
  for (const char* name : {"p40.txt", "p46.txt", "p40_cosine.txt", "p46_cosine.txt"}) {
    const auto path = test::data_dir() / name;
    CHECK(format_poly_file(read_poly_file(path)) == slurp(path));
  }
}

TEST_CASE("bundled tables equal the shipped data files") {
  CHECK(format_poly_file(bundled_p40()) == slurp(test::data_dir() / "p40.txt"));
  CHECK(format_poly_file(bundled_p46()) == slurp(test::data_dir() / "p46.txt"));
  CHECK(bundled_p40().values.at(1) == "8.70590487645377");
}

TEST_CASE("header and comments") {
  const auto f = parse("# hello\nformat: cosine\n0 2\n1 4\n");
  CHECK(f.kind == CoeffKind::Cosine);
  REQUIRE(f.comments.size() == 1);
  CHECK(f.comments[0] == "hello");
  const auto p = to_trig_poly<double>(f);
  CHECK(p.cosine_coeffs()(1) == 2.0);
}

TEST_CASE("errors name the offending line") {
  CHECK(failing_line("0 1\n1 abc\n") == 2);
  CHECK(failing_line("0 1\n2 3\n") == 2);
  CHECK(failing_line("0 1\n\n# c\n1 2 3\n") == 4);
  CHECK(failing_line("0 1\nformat: cosine\n") == 2);
  CHECK(failing_line("format: sines\n") == 1);
  CHECK(failing_line("# only comments\n") == 1);
  CHECK(failing_line("-1 1\n") == 1);
  CHECK(failing_line("0 1e\n") == 1);
  try {
    parse("0 1\n1 x\n");
  } catch (const PolyFileError& e) {
    CHECK(std::string(e.what()).find("mem:2") != std::string::npos);
  }
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(read_poly_file("/nonexistent/poly.txt"), PolyFileError);
}

TEST_CASE("cosine export re-reads to the same polynomial") {
  ScopedPrecision prec(50);
  const auto p = to_trig_poly<Real>(bundled_p40());
  const auto f = cosine_file_from(p, 40, {"exported"});
  const auto q = to_trig_poly<Real>(parse(format_poly_file(f)));
  CHECK((p.cosine_coeffs() - q.cosine_coeffs()).cwiseAbs().maxCoeff() < Real("1e-38"));
}
