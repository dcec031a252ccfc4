#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ellrs/cli.hpp"

using ellrs::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ellrs");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("poly at g = 1 is the Schur polynomial") {
  const auto r = run({"poly", "--n", "2", "--mu", "2,0", "--g", "1", "--alpha", "2.399827"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "poly");
  REQUIRE(j["terms"].size() == 2);
  for (const auto& t : j["terms"]) {
    const auto key = t["key"].get<std::vector<int>>();
    const double c = t["coeff"].get<double>();
    if (key == std::vector<int>{2, 0}) CHECK(c == doctest::Approx(1.0));
    if (key == std::vector<int>{1, 1}) CHECK(c == doctest::Approx(-1.0));
  }
}

TEST_CASE("su(2) level 1 fusion") {
  const auto r = run({"fusion", "--n", "2", "--m", "1", "--g", "1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& e : j["verlinde"]["entries"]) {
    if (e["lam"] == std::vector<int>{1, 0} && e["mu"] == std::vector<int>{1, 0}) {
      CHECK(e["kappa"] == std::vector<int>{0, 0});
      CHECK(e["value"].get<double>() == doctest::Approx(1.0));
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("both routes report their difference") {
  const auto r = run({"fusion", "--n", "2", "--m", "2", "--g", "0.7", "--p", "0.3", "--route", "both"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("verlinde"));
  CHECK(j.contains("lr"));
  CHECK(j.contains("diff"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"poly", "--n", "2", "--mu", "2,0"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"fusion", "--n", "x"}).code == 2);
  CHECK(run({"fusion", "--format", "xml"}).code == 2);
}

TEST_CASE("computational errors exit with 1") {
  const auto r = run({"poly", "--n", "2", "--mu", "2,0", "--g", "1", "--alpha", "2.0943951023931953"});
  CHECK(r.code == 1);
  CHECK(r.err.find("GenericityViolation") != std::string::npos);
}

TEST_CASE("help exits with 0") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"fusion", "--help"}).code == 0);
}

TEST_CASE("csv output") {
  const auto r = run({"fusion", "--n", "2", "--m", "1", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("lam,mu,kappa,value", 0) == 0);
}

TEST_CASE("repeated runs write identical files") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "ellrs_cli_a.json";
  const auto b = dir / "ellrs_cli_b.json";
  REQUIRE(run({"spectrum", "--n", "3", "--m", "2", "--g", "0.7", "--p", "0.4", "--out", a.string()}).code == 0);
  REQUIRE(run({"spectrum", "--n", "3", "--m", "2", "--g", "0.7", "--p", "0.4", "--out", b.string()}).code == 0);
  const auto sa = slurp(a);
  CHECK_FALSE(sa.empty());
  CHECK(sa == slurp(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("verify suite") {
  const auto r = run({"verify", "--suite", "limits", "--n", "2", "--m", "1"});
  CHECK(r.code == 0);
  CHECK(run({"verify", "--suite", "bogus"}).code != 0);
}
