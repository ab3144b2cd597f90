#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& prefix = "") {
  std::string cmd = prefix + CUTLAB_CLI_PATH " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

}  // namespace

TEST_CASE("cli analyze") {
  auto r = run_cli("analyze C5");
  CHECK(r.exit_code == 0);
  auto j = parse(r.out);
  CHECK(j["regularity"] == 3);
  CHECK(j["min_interior_degree"] == 3);
  CHECK(j["agreement"] == true);
  CHECK(j["normality"]["status"] == "verified_up_to_bound");
  CHECK(j["predicates"]["ring_graph"] == true);
  CHECK(j["gorenstein"]["gorenstein"] == false);
  CHECK(j["canonical_generators"]["generators"].size() == 16);

  auto k5 = run_cli("analyze K5");
  CHECK(k5.exit_code == 1);
  auto ej = parse(k5.out);
  CHECK(ej.contains("error"));
  CHECK(ej["branch_sets"].size() == 5);

  CHECK(run_cli("analyze 'C3 #0 P1'").exit_code == 0);
  CHECK(run_cli("analyze 'C9x'").exit_code == 2);
  CHECK(run_cli("analyze C4 --deg-bound 0").exit_code == 2);

  // The degree bound is also read from the environment.
  auto env = run_cli("analyze C4", "CUTLAB_DEG_BOUND=2 ");
  CHECK(env.exit_code == 0);
  CHECK(parse(env.out)["canonical_generators"]["degree_bound"] == 2);
}

TEST_CASE("cli facets") {
  auto r = run_cli("facets C4");
  CHECK(r.exit_code == 0);
  auto j = parse(r.out);
  CHECK(j["box"].size() == 8);
  CHECK(j["cycles"].size() == 8);
  CHECK(run_cli("facets K5").exit_code == 1);
}

TEST_CASE("cli member") {
  auto r = run_cli("member C3 --point 1,1,0,1");
  CHECK(r.exit_code == 0);
  auto j = parse(r.out);
  CHECK(j["in_group"] == true);
  CHECK(j["in_cone"] == true);

  auto miss = run_cli("member C3 --point 1,0,0,1");
  CHECK(miss.exit_code == 1);
  CHECK(parse(miss.out)["in_group"] == false);

  auto dec = run_cli("member K4 --point 2,2,2,2,2,2,4 --decompose");
  CHECK(dec.exit_code == 0);
  CHECK(parse(dec.out)["decomposition"].size() == 4);

  // On K5 the cone check is unavailable; group and decomposition still run.
  auto k5 = run_cli("member K5 --point 2,2,2,2,2,2,2,2,2,2,4 --decompose");
  CHECK(k5.exit_code == 1);
  auto kj = parse(k5.out);
  CHECK(kj["in_group"] == true);
  CHECK(kj["in_cone"].is_null());
  CHECK(kj["decomposition"].is_null());

  CHECK(run_cli("member C3 --point 1,1,0").exit_code == 2);   // wrong length
  CHECK(run_cli("member C3 --point 1,1,x,1").exit_code == 2);
}

TEST_CASE("cli witness round trip") {
  auto w = run_cli("witness k5");
  REQUIRE(w.exit_code == 0);
  {
    std::ofstream out("/tmp/cutlab_test_witness.json");
    out << w.out;
  }
  auto ok = run_cli("verify-witness /tmp/cutlab_test_witness.json");
  CHECK(ok.exit_code == 0);
  auto oj = parse(ok.out);
  CHECK(oj["ok"] == true);
  CHECK(oj["failing_leg"].is_null());

  auto j = parse(w.out);
  j["interior_certificate"][0] = "-1";
  {
    std::ofstream out("/tmp/cutlab_test_witness_bad.json");
    out << j.dump();
  }
  auto bad = run_cli("verify-witness /tmp/cutlab_test_witness_bad.json");
  CHECK(bad.exit_code == 1);
  CHECK(parse(bad.out)["failing_leg"] == "b");

  CHECK(run_cli("witness k6").exit_code == 2);
  CHECK(run_cli("verify-witness /nonexistent.json").exit_code == 2);
}

TEST_CASE("cli classify") {
  auto r = run_cli("classify --max-edges 3");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    auto j = parse(line);
    CHECK(j.contains("regularity"));
    CHECK(j.contains("canonical_edges"));
    ++rows;
  }
  CHECK(rows == 5);
  CHECK(run_cli("classify --max-edges 9").exit_code == 2);
}

TEST_CASE("cli normality and usage") {
  auto r = run_cli("normality C4 --bound 4");
  CHECK(r.exit_code == 0);
  CHECK(parse(r.out)["status"] == "verified_up_to_bound");
  CHECK(run_cli("normality K5").exit_code == 1);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("bogus").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
