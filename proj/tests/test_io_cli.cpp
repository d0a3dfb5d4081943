#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "glasner/io.hpp"

using namespace glasner;

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

const char* cli_path() {
  const char* p = std::getenv("GLASNER_CLI");
  REQUIRE_MESSAGE(p != nullptr, "GLASNER_CLI must point at the built binary");
  return p;
}

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(cli_path()) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) res.output.append(buf.data(), n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

fs::path temp_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "glasner_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path p = temp_dir() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

std::string strip_wall_time(std::string text) {
  return std::regex_replace(text, std::regex("\"wall_seconds\":[^,}\\n]*"), "\"wall_seconds\":0");
}

}  // namespace

TEST_CASE("point set json round trips exactly") {
  std::vector<ExactTorusPoint> pts = {
      reduce_to_torus(std::vector<Rational>{Rational(0), Rational(1, 3)}),
      reduce_to_torus(std::vector<Rational>{Rational(1, 2), Rational(7, 9)})};
  const ExactPointSet s(pts);
  const auto back = point_set_from_json(point_set_to_json(s));
  REQUIRE(std::holds_alternative<ExactPointSet>(back));
  CHECK(std::get<ExactPointSet>(back).points() == s.points());

  std::vector<FloatTorusPoint> fpts = {reduce_to_torus(std::vector<double>{0.125, 0.7071067811865476})};
  const FloatPointSet fs_(fpts);
  const auto fback = point_set_from_json(point_set_to_json(fs_));
  REQUIRE(std::holds_alternative<FloatPointSet>(fback));
  CHECK(std::get<FloatPointSet>(fback).points() == fs_.points());

  CHECK_THROWS_AS(point_set_from_json(Json{{"dim", 1}, {"exact", true}, {"points", Json::array()}}),
                  std::invalid_argument);
}

TEST_CASE("family json round trips") {
  MatrixFamily fam;
  fam.rows = 1;
  fam.cols = 2;
  fam.mode = PrimeMode::SinglePrime;
  fam.entries = {RationalPolynomial::parse("x"),
                 RationalPolynomial({Rational(0), Rational(1, 2), Rational(1, 2)})};
  const MatrixFamily back = family_from_json(family_to_json(fam));
  CHECK(back.rows == fam.rows);
  CHECK(back.cols == fam.cols);
  CHECK(back.mode == fam.mode);
  CHECK(back.entries == fam.entries);
  CHECK_THROWS_AS(family_from_json(Json{{"n", 1}, {"m", 2}, {"mode", "both"}, {"entries", Json::array()}}),
                  std::invalid_argument);
}

TEST_CASE("cli density: verdict exit codes and witness") {
  const auto points = write_file(
      "half.json", point_set_to_json(ExactPointSet(
                       {reduce_to_torus(std::vector<Rational>{Rational(0)}),
                        reduce_to_torus(std::vector<Rational>{Rational(1, 2)})})).dump());

  const auto dense = run_cli("density --points " + points.string() + " --eps 0.3");
  CHECK(dense.exit_code == 0);
  CHECK(dense.output.find("\"verdict\": \"dense\"") != std::string::npos);

  const auto notdense = run_cli("density --points " + points.string() + " --eps 0.2");
  CHECK(notdense.exit_code == 1);
  CHECK(notdense.output.find("\"verdict\": \"not_dense\"") != std::string::npos);
  CHECK(notdense.output.find("0.25") != std::string::npos);  // witness 1/4

  const auto empty = write_file("empty.json", "");
  CHECK(run_cli("density --points " + empty.string() + " --eps 0.3").exit_code == 64);

  const auto malformed = write_file("broken.json", "{\"dim\": 1, \"points\": [[");
  const auto bad = run_cli("density --points " + malformed.string() + " --eps 0.3");
  CHECK(bad.exit_code == 64);
  CHECK(bad.output.find("error") != std::string::npos);

  CHECK(run_cli("density --eps 0.3").exit_code == 64);             // missing required flag
  CHECK(run_cli("density --points x --no-such-flag").exit_code == 64);  // unknown flag is fatal
}

TEST_CASE("cli search: found and not-found exits") {
  Json fam;
  fam["n"] = 1;
  fam["m"] = 1;
  fam["mode"] = "independent";
  fam["entries"] = Json::array({Json::array({"0/1", "1/1"})});
  const auto fam_path = write_file("fam_x.json", fam.dump());

  std::vector<ExactTorusPoint> grid;
  for (int i = 0; i < 97; ++i)
    grid.push_back(reduce_to_torus(std::vector<Rational>{Rational(i, 97)}));
  const auto grid_path = write_file("grid97.json", point_set_to_json(ExactPointSet(grid)).dump());
  const auto found = run_cli("search --family " + fam_path.string() + " --points " +
                             grid_path.string() + " --eps 0.02 --budget 50");
  CHECK(found.exit_code == 0);
  CHECK(found.output.find("\"found\": true") != std::string::npos);

  const auto half_path = write_file(
      "half1.json", point_set_to_json(ExactPointSet(
                        {reduce_to_torus(std::vector<Rational>{Rational(0)}),
                         reduce_to_torus(std::vector<Rational>{Rational(1, 2)})})).dump());
  const auto miss = run_cli("search --family " + fam_path.string() + " --points " +
                            half_path.string() + " --eps 0.2 --budget 60");
  CHECK(miss.exit_code == 1);

  CHECK(run_cli("search --family " + fam_path.string() + " --points " + half_path.string() +
                " --eps 0.2 --budget 0")
            .exit_code == 64);

  // invalid family hypotheses are named
  Json bad = fam;
  bad["entries"] = Json::array({Json::array({"1/2", "1/2"})});  // (1+x)/2 is not integer-valued
  const auto bad_path = write_file("fam_bad.json", bad.dump());
  const auto invalid = run_cli("search --family " + bad_path.string() + " --points " +
                               half_path.string() + " --eps 0.2");
  CHECK(invalid.exit_code == 64);
  CHECK(invalid.output.find("integer-valued") != std::string::npos);
}

TEST_CASE("cli reproducibility: byte-identical reports modulo wall time") {
  Json fam;
  fam["n"] = 1;
  fam["m"] = 1;
  fam["mode"] = "independent";
  fam["entries"] = Json::array({Json::array({"0/1", "1/1"})});
  const auto fam_path = write_file("fam_x2.json", fam.dump());
  const auto pts = run_cli("gen --kind random --k 25 --dim 1 --D 400 --seed 5 --out " +
                           (temp_dir() / "pts25.json").string());
  CHECK(pts.exit_code == 0);

  const std::string cmd = "search --family " + fam_path.string() + " --points " +
                          (temp_dir() / "pts25.json").string() +
                          " --eps 0.05 --budget 100 --strategy random --seed 99";
  const auto a = run_cli(cmd);
  const auto b = run_cli(cmd);
  CHECK(a.exit_code == b.exit_code);
  CHECK(strip_wall_time(a.output) == strip_wall_time(b.output));
}

TEST_CASE("cli gen + verify + scan") {
  const auto half2 = run_cli("gen --kind halfgrid --dim 2");
  CHECK(half2.exit_code == 0);
  CHECK(half2.output.find("1/2") != std::string::npos);

  const auto vm = run_cli("verify multcomp --trials 300 --seed 3");
  CHECK(vm.exit_code == 0);
  CHECK(vm.output.find("check,value,bound,pass") != std::string::npos);

  Json fam;
  fam["n"] = 1;
  fam["m"] = 1;
  fam["mode"] = "independent";
  fam["entries"] = Json::array({Json::array({"0/1", "1/1"})});
  const auto fam_path = write_file("fam_x3.json", fam.dump());
  const auto scan = run_cli("scan --family " + fam_path.string() +
                            " --eps-schedule 0.4 --k-cap 32 --reps 3 --budget 30 --seed 7");
  CHECK(scan.exit_code == 0);
  CHECK(scan.output.find("# warning: fit underdetermined") != std::string::npos);
  CHECK(scan.output.find("eps,k_min,k_fail,budget,primes_tested") != std::string::npos);
  CHECK(scan.output.find("fitted_exponent,nan") != std::string::npos);

  // --help enumerates flags
  const auto help = run_cli("search --help");
  CHECK(help.exit_code == 0);
  for (const char* flag : {"--family", "--points", "--eps", "--budget", "--strategy", "--seed",
                           "--threads", "--metric", "--resolution", "--format", "--out"})
    CHECK(help.output.find(flag) != std::string::npos);
}
