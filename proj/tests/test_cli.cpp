#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  std::string cmd = std::string(HECKE_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  CommandResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.output.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("lemmas-verify on a builtin datum") {
  auto res = run_cli("lemmas-verify --datum builtin:A2 --bound 6");
  CHECK(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.output);
  CHECK(j["pass"] == true);
  CHECK(j["schema"] == 1);
  bool saw_square = false, saw_cone = false, saw_bruhat = false;
  for (const auto& rep : j["reports"]) {
    if (rep["lemma"] == "dominance-square") saw_square = true;
    if (rep["lemma"] == "orthogonal-cone") {
      saw_cone = true;
      CHECK(rep["reading"] == "coroot");
    }
    if (rep["lemma"] == "coset-bruhat") saw_bruhat = true;
    CHECK(rep["pass"] == true);
  }
  CHECK(saw_square);
  CHECK(saw_cone);
  CHECK(saw_bruhat);

  // Byte-identical on a second run.
  auto res2 = run_cli("lemmas-verify --datum builtin:A2 --bound 6");
  CHECK(res.output == res2.output);
}

TEST_CASE("ps-analyze trivial character") {
  auto res = run_cli("ps-analyze --datum builtin:GL2 --char trivial --q 3");
  CHECK(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.output);
  CHECK(j["C"] == 1);
  CHECK(j["length"] == 2);
  CHECK(j["factors"].size() == 2);
}

TEST_CASE("hecke-verify-cw") {
  auto res = run_cli("hecke-verify-cw --p 3 --m 0");
  CHECK(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.output);
  CHECK(j["pass"] == true);
  CHECK(j["transform"]["terms"].size() == 2);
}

TEST_CASE("classify-enumerate with the shipped fixture") {
  auto res = run_cli(std::string("classify-enumerate --datum builtin:GL3 --data ") +
                     HECKE_DATA_DIR + "/fixtures/gl3_supersingular_six.json");
  CHECK(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.output);
  CHECK(j["count"] == 11);
  CHECK(j["expected"] == 11);
  CHECK(j["injective"] == true);
}

TEST_CASE("rootdata-check reports violations with exit 1") {
  std::string bad = std::string(HECKE_DATA_DIR) + "/../build/bad_datum.json";
  {
    FILE* f = fopen(bad.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs(R"({"rank": 1, "simple_roots": [[1]], "simple_coroots": [[3]]})", f);
    fclose(f);
  }
  auto res = run_cli("rootdata-check --datum " + bad);
  CHECK(res.exit_code == 1);
  auto j = nlohmann::json::parse(res.output);
  CHECK(j["valid"] == false);
  std::remove(bad.c_str());

  auto good = run_cli("rootdata-check --datum builtin:GL2");
  CHECK(good.exit_code == 0);
  auto gj = nlohmann::json::parse(good.output);
  CHECK(gj["valid"] == true);
  CHECK(gj["derived_simply_connected"] == true);
  CHECK(gj["weyl_order"] == 2);
}

TEST_CASE("schema and usage errors exit with 2") {
  CHECK(run_cli("no-such-verb").exit_code == 2);
  CHECK(run_cli("lemmas-verify --datum /nonexistent.json").exit_code == 2);
  CHECK(run_cli("lemmas-verify").exit_code == 2);  // missing required option
}
