#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "weber/modpoly.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = weber::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("weber_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("cli: modpoly output parses back to the printed polynomial") {
  fs::path dir = scratch("modpoly");
  fs::path file = dir / "phi5.txt";
  Run r = run({"modpoly", "--line", "x24", "--ell", "5", "--out", file.string(), "--cache-dir", (dir / "c").string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  auto parsed = weber::parse_poly_file(slurp(file));
  CHECK(parsed.line == "x24");
  CHECK(parsed.ell == 5);
  CHECK(parsed.poly == weber::builtin("phi5"));
  // Only the target and the cache directory exist; no temporaries left over.
  std::size_t entries = 0;
  for (auto& e : fs::directory_iterator(dir)) {
    (void)e;
    ++entries;
  }
  CHECK(entries == 2);
}

TEST_CASE("cli: cache hits, corruption and --no-cache give identical bytes") {
  fs::path dir = scratch("cache");
  std::vector<std::string> base = {"modpoly", "--line", "x24", "--ell", "13", "--cache-dir", dir.string()};
  Run first = run(base);
  REQUIRE(first.code == 0);
  fs::path entry = dir / "phi_x24_13.txt";
  REQUIRE(fs::exists(entry));
  Run second = run(base);
  CHECK(second.out == first.out);
  CHECK(second.err.empty());

  std::ofstream(entry) << "garbage\n";
  Run repaired = run(base);
  CHECK(repaired.out == first.out);
  CHECK(repaired.err.find("warning") != std::string::npos);
  CHECK(slurp(entry) == first.out);

  auto no_cache = base;
  no_cache.push_back("--no-cache");
  CHECK(run(no_cache).out == first.out);
}

TEST_CASE("cli: ss graph on x1") {
  Run r = run({"ss", "--p", "13", "--line", "x1", "--ell", "5", "--format", "json", "--no-cache"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["nodes"].size() == 3);
  std::vector<long> sums(3, 0);
  for (const auto& e : j["edges"]) sums[e[0].get<std::size_t>()] += e[2].get<long>();
  for (long s : sums) CHECK(s == 6);
  Run dot = run({"ss", "--p", "13", "--line", "x1", "--ell", "5", "--format", "dot", "--no-cache"});
  CHECK(dot.out.rfind("digraph", 0) == 0);
}

TEST_CASE("cli: group-check") {
  Run r = run({"group-check"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["orderG"] == 1152);
  CHECK(j["orderD"] == 192);
  CHECK(j["ok"] == true);
}

TEST_CASE("cli: seeded commands are reproducible") {
  std::vector<std::string> args = {"chain", "--p", "41", "--variant", "twisted", "--trials", "3"};
  Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Json j = Json::parse(a.out);
  std::uint64_t seed = j["seed"];
  auto explicit_seed = args;
  explicit_seed.insert(explicit_seed.end(), {"--seed", std::to_string(seed)});
  CHECK(run(explicit_seed).out == a.out);
  auto other = args;
  other.insert(other.end(), {"--seed", "12345"});
  CHECK(run(other).out != a.out);
  CHECK(run({"walk", "--p", "61", "--line", "x3", "--ell", "5", "--no-cache"}).out ==
        run({"walk", "--p", "61", "--line", "x3", "--ell", "5", "--no-cache"}).out);
}

TEST_CASE("cli: errors are structured and mapped to exit codes") {
  Run missing = run({"ss", "--line", "x1"});
  CHECK(missing.code == 2);
  CHECK(Json::parse(missing.err)["error"] == "UsageError");
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  Run notprime = run({"ss", "--p", "15", "--line", "x1", "--ell", "5", "--no-cache"});
  CHECK(notprime.code == 2);
  CHECK(Json::parse(notprime.err)["error"] == "DomainError");
  CHECK(run({"models-check", "--p", "41"}).code == 2);
  CHECK(run({"hecke", "--p", "37", "--ells", "5,x"}).code == 2);
  CHECK(run({"chain", "--p", "41", "--variant", "sideways"}).code == 2);
  Run unwritable = run({"group-check", "--out", "/nonexistent/dir/report.json"});
  CHECK(unwritable.code == 1);
  CHECK(Json::parse(unwritable.err)["error"] == "IOError");
}
