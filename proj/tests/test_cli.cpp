#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "curv/json_io.hpp"

using curv::Json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

// Runs the CLI with the given arguments; `stdin_text`, when nonempty, is
// piped in through a temp file.
RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
  static int counter = 0;
  std::string out_path =
      "/tmp/curv_cli_out_" + std::to_string(counter) + ".json";
  std::string in_path = "/tmp/curv_cli_in_" + std::to_string(counter) + ".json";
  ++counter;

  std::string cmd = std::string(CURV_CLI_PATH) + " " + args;
  if (!stdin_text.empty()) {
    std::ofstream f(in_path);
    f << stdin_text;
    f.close();
    cmd += " < " + in_path;
  }
  cmd += " > " + out_path + " 2>/dev/null";

  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream out(out_path);
  std::stringstream ss;
  ss << out.rdbuf();
  r.stdout_text = ss.str();
  std::remove(out_path.c_str());
  std::remove(in_path.c_str());
  return r;
}

const char* kA2Input =
    R"({"ambient_dim": 2, "vectors": [[1,0],[0,1],[1,1]]})";

}  // namespace

TEST_CASE("hilbert all engines on A2 input document") {
  auto r = run_cli("hilbert", kA2Input);
  REQUIRE(r.exit_code == 0);
  Json docs = Json::parse(r.stdout_text);
  REQUIRE(docs.is_array());
  REQUIRE(docs.size() == 3);
  for (const auto& doc : docs) {
    CHECK(doc["total"] == 7);
    CHECK(doc["graded"] == Json::array({1, 2, 3, 1}));
    CHECK(doc["metadata"]["tool_version"] == "0.1.0");
    CHECK(doc["metadata"]["input_hash"].is_string());
  }
  CHECK(docs[0]["engine"] == "combinatorial");
  CHECK(docs[1]["engine"] == "algebraic");
  CHECK(docs[2]["engine"] == "presentation");
}

TEST_CASE("hilbert via --type flag") {
  auto r = run_cli("hilbert --type B2 --engine combinatorial");
  REQUIRE(r.exit_code == 0);
  Json doc = Json::parse(r.stdout_text);
  CHECK(doc["total"] == 11);
  CHECK(doc["graded"] == Json::array({1, 2, 3, 4, 1}));

  auto split = run_cli("hilbert --type B --rank 2 --engine combinatorial");
  REQUIRE(split.exit_code == 0);
  CHECK(Json::parse(split.stdout_text)["graded"] == doc["graded"]);
}

TEST_CASE("circuits / robust / essential listings on A2") {
  auto circuits = run_cli("circuits", kA2Input);
  REQUIRE(circuits.exit_code == 0);
  Json c = Json::parse(circuits.stdout_text);
  REQUIRE(c["circuits"].size() == 1);
  CHECK(c["circuits"][0]["support"] == Json::array({1, 2, 3}));
  CHECK(c["circuits"][0]["dependence"] == Json::array({1, 1, -1}));

  auto robust = run_cli("robust", kA2Input);
  REQUIRE(robust.exit_code == 0);
  CHECK(Json::parse(robust.stdout_text)["subsets"].size() == 7);

  auto essential = run_cli("essential", kA2Input);
  REQUIRE(essential.exit_code == 0);
  Json e = Json::parse(essential.stdout_text);
  REQUIRE(e["hyperplanes"].size() == 3);
  for (const auto& h : e["hyperplanes"]) CHECK(h["d"] == 2);
}

TEST_CASE("rootsystem emit kinds") {
  auto config = run_cli("rootsystem --type A2 --emit config");
  REQUIRE(config.exit_code == 0);
  Json cfg = Json::parse(config.stdout_text);
  CHECK(cfg["ambient_dim"] == 2);
  CHECK(cfg["vectors"] == Json::array({{1, 0}, {0, 1}, {1, 1}}));

  auto coroots = run_cli("rootsystem --type G2 --emit coroots");
  REQUIRE(coroots.exit_code == 0);
  Json g2 = Json::parse(coroots.stdout_text);
  CHECK(g2["coroots"].size() == 6);
  CHECK(g2["positive_roots"].size() == 6);

  auto weights = run_cli("rootsystem --type B2 --emit weights");
  REQUIRE(weights.exit_code == 0);
  Json w = Json::parse(weights.stdout_text);
  CHECK(w["cartan"] == Json::array({{2, -1}, {-2, 2}}));
}

TEST_CASE("pipe composition: rootsystem config into hilbert") {
  auto config = run_cli("rootsystem --type A3 --emit config");
  REQUIRE(config.exit_code == 0);
  auto direct = run_cli("hilbert --type A3 --engine combinatorial");
  auto piped =
      run_cli("hilbert --engine combinatorial", config.stdout_text);
  REQUIRE(direct.exit_code == 0);
  REQUIRE(piped.exit_code == 0);
  CHECK(Json::parse(direct.stdout_text)["graded"] ==
        Json::parse(piped.stdout_text)["graded"]);
}

TEST_CASE("curvature coefficients") {
  auto r = run_cli("curvature --type A2 --weight 1,1");
  REQUIRE(r.exit_code == 0);
  Json doc = Json::parse(r.stdout_text);
  CHECK(doc["coefficients"] == Json::array({1, 1, 2}));

  auto frac = run_cli("curvature --type A2 --weight 1/2,0");
  REQUIRE(frac.exit_code == 0);
  Json fd = Json::parse(frac.stdout_text);
  CHECK(fd["coefficients"] == Json::array({"1/2", 0, "1/2"}));
}

TEST_CASE("verify suites") {
  auto theorems = run_cli("verify --type A2 --suite theorems");
  REQUIRE(theorems.exit_code == 0);
  Json t = Json::parse(theorems.stdout_text);
  CHECK(t["pass"] == true);

  auto recursions = run_cli("verify --type B2 --suite recursions");
  CHECK(recursions.exit_code == 0);

  auto forests = run_cli("verify --type A3 --suite forests");
  REQUIRE(forests.exit_code == 0);
  CHECK(Json::parse(forests.stdout_text)["pass"] == true);
}

TEST_CASE("exit codes") {
  // parse error: invalid JSON
  CHECK(run_cli("hilbert", "{not json").exit_code == 2);
  // parse error: unknown flag
  CHECK(run_cli("hilbert --no-such-flag", kA2Input).exit_code == 2);
  // precondition: unknown root system label
  CHECK(run_cli("hilbert --type Z9").exit_code == 3);
  // precondition: forests suite on a non-A input
  CHECK(run_cli("verify --type B2 --suite forests").exit_code == 3);
  // precondition: non-spanning configuration for the essential module
  CHECK(run_cli("essential",
                R"({"ambient_dim": 2, "vectors": [[1,0],[2,0]]})")
            .exit_code == 3);
  // resource guard: tiny row limit
  CHECK(run_cli("hilbert --type B2 --engine algebraic --max-rows 2")
            .exit_code == 5);
  // help exits 0
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("determinism and --output") {
  auto a = run_cli("hilbert --type A3 --engine combinatorial");
  auto b = run_cli("hilbert --type A3 --engine combinatorial");
  Json da = Json::parse(a.stdout_text);
  Json db = Json::parse(b.stdout_text);
  CHECK(da["graded"] == db["graded"]);
  CHECK(da["total"] == db["total"]);
  CHECK(da["metadata"]["input_hash"] == db["metadata"]["input_hash"]);

  std::string path = "/tmp/curv_cli_outfile.json";
  auto r = run_cli("hilbert --type A2 --engine combinatorial --output " + path);
  REQUIRE(r.exit_code == 0);
  std::ifstream f(path);
  Json doc = Json::parse(f);
  CHECK(doc["graded"] == Json::array({1, 2, 3, 1}));
  std::remove(path.c_str());
}

TEST_CASE("rational round trip through config documents") {
  const char* frac_input =
      R"({"ambient_dim": 2, "vectors": [["1/2",0],[0,1],["1/2",1]]})";
  auto r = run_cli("hilbert --engine combinatorial", frac_input);
  REQUIRE(r.exit_code == 0);
  CHECK(Json::parse(r.stdout_text)["graded"] == Json::array({1, 2, 3, 1}));
}
