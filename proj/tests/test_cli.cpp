#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run zfr_run(std::vector<std::string> args) {
  args.insert(args.begin(), "zfr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = zfr::cli::run(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string value_line(const std::string& text, const std::string& key) {
  const auto pos = text.find("value." + key + ": ");
  if (pos == std::string::npos) return {};
  const auto start = pos + key.size() + 8;
  return text.substr(start, text.find('\n', start) - start);
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("zfr_cli_test_" + name); }

std::string data(const char* name) { return (zfr::test::data_dir() / name).string(); }

}  // namespace

TEST_CASE("verify-thm1") {
  const auto r = zfr_run({"verify-thm1"});
  CHECK(r.code == 0);
  CHECK(value_line(r.out, "M_bound") == "0.04897600");
  CHECK(value_line(r.out, "R1") == "55.241");
  CHECK(value_line(r.out, "cos2_theta") == "0.17949");
  CHECK(r.out.find("result: pass") != std::string::npos);

  const auto pub = zfr_run({"verify-thm1", "--kappa2", "published"});
  CHECK(pub.code == 1);
  CHECK(value_line(pub.out, "Y_a") == "4.940431");
  CHECK(pub.out.find("first_failure: log_zeta_term_bounded_by_kappa2") != std::string::npos);

  const auto params = temp_file("params.json");
  std::ofstream(params) << R"({"M1": "0.049", "R": "auto"})";
  const auto big = zfr_run({"verify-thm1", "--params", params.string()});
  CHECK(big.code == 1);
  CHECK(big.out.find("input.M1: 0.049") != std::string::npos);
  std::ofstream(params) << R"({"M2": 1})";
  CHECK(zfr_run({"verify-thm1", "--params", params.string()}).code == 2);
  fs::remove(params);

  CHECK(zfr_run({"verify-thm1", "--kappa2", "other"}).code == 2);
}

TEST_CASE("verify-thm4") {
  const auto r = zfr_run({"verify-thm4"});
  CHECK(r.code == 1);
  CHECK(r.out.find("first_failure: w0_bound") != std::string::npos);
  CHECK(value_line(r.out, "h_constant") == "7.096");
}

TEST_CASE("asymptotic, text and JSON agree") {
  const auto r = zfr_run({"asymptotic", "--poly", data("p46.txt")});
  CHECK(r.code == 0);
  CHECK(value_line(r.out, "R2") == "48.1587921551117");
  for (const std::vector<std::string>& extra : {std::vector<std::string>{}, {"--digits", "30"}}) {
    std::vector<std::string> a = extra, b = extra;
    a.insert(a.end(), {"asymptotic", "--poly", data("p46_cosine.txt")});
    b.insert(b.begin(), "--json");
    b.insert(b.end(), {"asymptotic", "--poly", data("p46_cosine.txt")});
    const auto text = zfr_run(a);
    const auto j = nlohmann::json::parse(zfr_run(b).out);
    for (const auto& key : {"theta", "q", "R2"}) CHECK(j["values"][key] == value_line(text.out, key));
  }
}

TEST_CASE("expand round trip") {
  const auto file = temp_file("p46_cos.txt");
  const auto e = zfr_run({"--out", file.string(), "expand", "--poly", data("p46.txt"), "--file-digits", "45"});
  REQUIRE(e.code == 0);
  const auto direct = zfr_run({"--digits", "35", "asymptotic", "--poly", data("p46.txt")});
  const auto reread = zfr_run({"--digits", "35", "asymptotic", "--poly", file.string()});
  CHECK(value_line(direct.out, "R2") == value_line(reread.out, "R2"));
  fs::remove(file);

  const auto ford = zfr_run({"expand", "--factor", "0.225:2", "--factor", "0.9:2"});
  CHECK(ford.code == 0);
  CHECK(ford.out.find("format: cosine") != std::string::npos);
  CHECK(zfr_run({"expand", "--factor", "x:2"}).code == 2);
  CHECK(zfr_run({"expand"}).code == 2);
}

TEST_CASE("pnt-exponent, envelope, crossover") {
  CHECK(value_line(zfr_run({"pnt-exponent", "--c", "48.1588"}).out, "d") == "0.2123");
  CHECK(zfr_run({"pnt-exponent", "--c", "-1"}).code == 2);

  const auto csv = zfr_run({"envelope", "--from-log", "2", "--to-log", "70000", "--steps", "10"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("log_t,width,source\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 12);
  CHECK(csv.out.find(",korobov-vinogradov\n") != std::string::npos);
  const auto one = zfr_run({"envelope", "--log-t", "100"});
  CHECK(one.out.find("input.bound: ford-medium") != std::string::npos);
  CHECK(zfr_run({"envelope"}).code == 2);

  const auto x = zfr_run({"crossover", "--a", "classical", "--b", "ford-medium", "--lo", "40", "--hi", "200"});
  CHECK(value_line(x.out, "log_t") == "64.11");
  CHECK(zfr_run({"crossover", "--a", "nope", "--b", "classical", "--lo", "1", "--hi", "2"}).code == 2);
  CHECK(zfr_run({"crossover", "--a", "classical", "--b", "korobov-vinogradov", "--lo", "10", "--hi", "100"}).code ==
        2);
}

TEST_CASE("input errors exit 2 and name the line") {
  const auto bad = temp_file("bad.txt");
  std::ofstream(bad) << "# comment\n0 1\n1 abc\n";
  const auto r = zfr_run({"asymptotic", "--poly", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("bad.txt:3:") != std::string::npos);
  fs::remove(bad);
  CHECK(zfr_run({"asymptotic", "--poly", "/nonexistent/p.txt"}).code == 2);
  CHECK(zfr_run({"asymptotic", "--frobnicate"}).code == 2);
  CHECK(zfr_run({}).code == 2);
  CHECK(zfr_run({"--help"}).code == 0);
  CHECK(zfr_run({"--precision", "5", "asymptotic"}).code == 2);
  CHECK(zfr_run({"--precision", "80", "asymptotic"}).out.find("precision: 80") != std::string::npos);
}

TEST_CASE("anneal") {
  const auto log = temp_file("run.log");
  const auto poly = temp_file("best.txt");
  fs::remove(log);
  const std::vector<std::string> args{"anneal", "--degree", "5", "--seed", "3", "--iters", "100", "--chains", "2",
                                      "--log", log.string(), "--poly-out", poly.string()};
  const auto a = zfr_run(args);
  const auto b = zfr_run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::ifstream in(log);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["seed"] == 3);
    ++lines;
  }
  CHECK(lines == 2);
  const auto re = zfr_run({"--digits", "12", "asymptotic", "--poly", poly.string()});
  CHECK(re.code == 0);
  CHECK(std::stod(value_line(re.out, "R2")) == doctest::Approx(std::stod(value_line(a.out, "objective"))).epsilon(1e-9));

  const auto cfg = temp_file("cfg.json");
  std::ofstream(cfg) << R"({"degree": 3, "iters_per_level": 20, "step_schedule": [5, 1]})";
  CHECK(zfr_run({"anneal", "--config", cfg.string()}).code == 0);
  std::ofstream(cfg) << R"({"degree": 1})";
  CHECK(zfr_run({"anneal", "--config", cfg.string()}).code == 2);
  CHECK(zfr_run({"anneal", "--objective", "R9"}).code == 2);
  for (const auto& f : {log, poly, cfg}) fs::remove(f);
}
