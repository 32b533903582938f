// End-to-end tests against the installed CLI binary (path injected by CMake).

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"

namespace {

using json = nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(ABSORDER_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("ranks subcommand") {
  RunResult r = run_cli("ranks a2");
  CHECK(r.exit_code == 0);
  json report = json::parse(r.out);
  CHECK(report["group"] == "a2");
  CHECK(report["rank_sequence"] == json::array({1, 3, 2}));
  CHECK(report["expected_rank_sequence"] == json::array({1, 3, 2}));
  CHECK(report["match"] == true);

  CHECK(json::parse(run_cli("ranks a1").out)["rank_sequence"] == json::array({1, 1}));
  CHECK(json::parse(run_cli("ranks b4").out)["rank_sequence"] ==
        json::array({1, 16, 86, 176, 105}));
}

TEST_CASE("verify subcommand") {
  RunResult r = run_cli("verify a3 --all-k");
  CHECK(r.exit_code == 0);
  json report = json::parse(r.out);
  CHECK(report["strong_sperner"] == true);
  CHECK(report["factorization_verified"] == true);
  CHECK(report["embedding_verified"] == true);
  CHECK(report["reflections_count"] == 6);
  REQUIRE(report["sperner"].size() == 4);  // k = 1 .. top rank + 1
  CHECK(report["sperner"][0]["max_family_size"] == 11);
  CHECK(report["sperner"][1]["max_family_size"] == 17);

  RunResult single = run_cli("verify a1 --k 1");
  CHECK(single.exit_code == 0);
  json sr = json::parse(single.out);
  REQUIRE(sr["sperner"].size() == 1);
  CHECK(sr["sperner"][0]["k"] == 1);
  CHECK(sr["sperner"][0]["max_family_size"] == 1);
  CHECK(sr["sperner"][0]["k_largest_ranks_sum"] == 1);
  CHECK(sr["sperner"][0]["is_k_sperner"] == true);
  CHECK_FALSE(sr.contains("strong_sperner"));

  RunResult b3 = run_cli("verify b3 --all-k");
  json b3r = json::parse(b3.out);
  std::vector<long long> sizes;
  for (const auto& entry : b3r["sperner"]) sizes.push_back(entry["max_family_size"]);
  CHECK(sizes == std::vector<long long>{23, 38, 47, 48});

  SUBCASE("reports are byte-stable modulo timings") {
    json a = json::parse(run_cli("verify b2 --all-k").out);
    json b = json::parse(run_cli("verify b2 --all-k").out);
    a.erase("timings_ms");
    b.erase("timings_ms");
    CHECK(a.dump() == b.dump());
  }

  SUBCASE("certificates flag embeds validated chains") {
    json report2 = json::parse(run_cli("verify a2 --k 1 --certificates").out);
    CHECK(report2["sperner"][0]["certificate_valid"] == true);
    CHECK(report2["sperner"][0]["family"].size() == 3);
    std::size_t covered = 0;
    for (const auto& chain : report2["sperner"][0]["dual_chains"]) covered += chain.size();
    CHECK(covered == 6);
  }
}

TEST_CASE("factorize subcommand") {
  RunResult r = run_cli("factorize a2 '(1 3 2)'");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "(2 3)(1 2)\nlength 2\n");

  CHECK(run_cli("factorize a2 e").out == "ee\nlength 0\n");
  CHECK(run_cli("factorize b2 '[2]'").out == "[2]e\nlength 1\n");
  CHECK(run_cli("factorize i2:7 r3").out == "s4s0\nlength 2\n");
}

TEST_CASE("dot subcommand") {
  using absorder::testutil::count_edges;
  using absorder::testutil::count_nodes;

  RunResult abs = run_cli("dot a2 --absolute");
  CHECK(abs.exit_code == 0);
  CHECK(count_nodes(abs.out) == 6);
  CHECK(count_edges(abs.out) == 9);

  RunResult claw = run_cli("dot a2 --claw-product");
  CHECK(claw.exit_code == 0);
  CHECK(count_nodes(claw.out) == 6);
  CHECK(count_edges(claw.out) == 7);

  RunResult tiny = run_cli("dot a1 --absolute");
  CHECK(count_nodes(tiny.out) == 2);
  CHECK(count_edges(tiny.out) == 1);

  CHECK(run_cli("dot a2 --absolute").out == abs.out);  // deterministic
}

TEST_CASE("exit codes") {
  CHECK(run_cli("ranks q9").exit_code == 2);             // unparseable group
  CHECK(run_cli("factorize a2 '(1 4)'").exit_code == 2); // element parse error
  CHECK(run_cli("verify a2").exit_code == 2);            // neither --k nor --all-k
  CHECK(run_cli("verify a2 --k 1 --all-k").exit_code == 2);
  CHECK(run_cli("dot a2").exit_code == 2);
  CHECK(run_cli("dot a2 --absolute --claw-product").exit_code == 2);
  CHECK(run_cli("bogus-subcommand").exit_code == 2);

  CHECK(run_cli("verify a8 --all-k").exit_code == 3);    // guard
  CHECK(run_cli("ranks a2", "ABSORDER_MAX_GROUP=5").exit_code == 3);
  CHECK(run_cli("ranks a2", "ABSORDER_MAX_GROUP=10").exit_code == 0);

  // 4 is reserved for failed verification; prove the path is live
  CHECK(run_cli("verify a2 --all-k --inject-certificate-fault").exit_code == 4);

  CHECK(run_cli("--help").exit_code == 0);
}
