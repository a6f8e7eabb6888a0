#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "mackey/exalg.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const char* bin = std::getenv("MACKEY_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string("'") + bin + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

mackey::IntMatrix to_matrix(const nlohmann::json& j) {
  mackey::IntMatrix m;
  for (const auto& row : j) m.push_back(row.get<std::vector<long long>>());
  return m;
}

}  // namespace

TEST_CASE("info") {
  auto c2 = run("info --group C2");
  CHECK(c2.code == 0);
  CHECK(contains(c2.out, "dim over GF(2): 6"));
  CHECK(contains(c2.out, "dim over Q: 6"));
  auto c3 = nlohmann::json::parse(run("info --group C3 --json").out);
  CHECK(c3["dim_q"] == 7);
  CHECK(c3["dim_gf"] == 7);
  auto s3 = run("info --group S3 --p 2 --p-local");
  CHECK(s3.code == 0);
  CHECK(contains(s3.out, "dim over GF(2): 81"));
  CHECK(contains(s3.out, "dim over Q: 81"));
}

TEST_CASE("blocks") {
  auto s3 = nlohmann::json::parse(run("blocks --group S3 --p 2 --json").out);
  REQUIRE(s3["blocks"].size() == 2);
  std::vector<int> dims{s3["blocks"][0]["dim"], s3["blocks"][1]["dim"]};
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{25, 56});
  auto c2 = run("blocks --group C2 --p 2");
  CHECK(c2.code == 0);
  CHECK(contains(c2.out, "1 block pairs"));
  auto sl = nlohmann::json::parse(run("blocks --group 'SL(2,3)' --p 3 --json").out);
  REQUIRE(sl["blocks"].size() == 3);
  int flagged = 0;
  for (const auto& b : sl["blocks"])
    if (b["group_simple_dims"] == std::vector<int>{2}) {
      ++flagged;
      CHECK(b["mu_simples"] == 2);
    }
  CHECK(flagged == 1);
}

TEST_CASE("cartan and decomp") {
  auto c3 = nlohmann::json::parse(run("cartan --group C3 --p 3 --json").out);
  REQUIRE(c3["blocks"].size() == 1);
  CHECK(mackey::match_up_to_permutation(to_matrix(c3["blocks"][0]["cartan"]), {{2, 1}, {1, 3}}).has_value());
  auto s3 = nlohmann::json::parse(run("cartan --group S3 --p 2 --block principal --json").out);
  REQUIRE(s3["blocks"].size() == 1);
  CHECK(mackey::match_up_to_permutation(to_matrix(s3["blocks"][0]["cartan"]), {{2, 1}, {1, 2}}).has_value());
  auto d = nlohmann::json::parse(run("decomp --group C2 --p 2 --json").out);
  CHECK(to_matrix(d["decomposition_matrix"]["entries"]) == mackey::IntMatrix{{1, 1, 0}, {1, 0, 1}});
  CHECK(d["decomposition_matrix"]["columns"].size() == 3);
  auto text = run("decomp --group C2 --p 2");
  CHECK(text.code == 0);
  CHECK(contains(text.out, "| 1 1 0"));
}

TEST_CASE("output is byte-stable") {
  auto a = run("decomp --group S3 --p 3 --json");
  auto b = run("decomp --group S3 --p 3 --json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("cartan --group A4 --p 2").out == run("cartan --group A4 --p 2").out);
}

TEST_CASE("cache directory is transparent") {
  auto dir = std::filesystem::temp_directory_path() / "mackey-cli-cache-test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  auto plain = run("cartan --group S3 --p 2 --json");
  auto cold = run("cartan --group S3 --p 2 --json --cache-dir '" + dir.string() + "'");
  CHECK(!std::filesystem::is_empty(dir));
  auto warm = run("cartan --group S3 --p 2 --json --cache-dir '" + dir.string() + "'");
  CHECK(plain.out == cold.out);
  CHECK(cold.out == warm.out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("exit codes") {
  CHECK(run("info --group X9").code == 2);
  CHECK(run("blocks --group S3").code == 2);
  CHECK(run("blocks --group S3 --p 4").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("cartan --group S3 --p 2 --block 9").code == 2);
  CHECK(run("verify-paper --only no-such-check").code == 2);
}

TEST_CASE("verify-paper") {
  auto r = run("verify-paper --only dim-56");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "PASS dim-56"));
  CHECK(!contains(r.out, "dim-6 "));
  auto j = nlohmann::json::parse(run("verify-paper --only dim-6,phi-automorphism --json").out);
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["name"] == "dim-6");
  CHECK(j["checks"][1]["status"] == "pass");
  CHECK(j["passed"] == true);
}
