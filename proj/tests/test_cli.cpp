#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(LATGENUS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) { return std::string(LATGENUS_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("cli count, ehrhart and hstar") {
  Run r = run_cli("count --input " + fixture("unit_square.json"));
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["polytopes"][0]["count"] == 4);
  CHECK(j["polytopes"][0]["interior_count"] == 0);

  r = run_cli("ehrhart --input " + fixture("unit_square.json"));
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["polytopes"][0]["ehrhart"] == json({"1/1", "2/1", "1/1"}));

  r = run_cli("hstar --input " + fixture("unit_square.json"));
  CHECK(json::parse(r.out)["polytopes"][0]["hstar"] == json({1, 1, 0}));

  r = run_cli("ehrhart --input " + fixture("point.json"));
  CHECK(json::parse(r.out)["polytopes"][0]["ehrhart"] == json({"1/1"}));
  r = run_cli("hstar --input " + fixture("point.json"));
  CHECK(json::parse(r.out)["polytopes"][0]["hstar"] == json({1}));

  r = run_cli("count --input " + fixture("triangle3.json"));
  CHECK(json::parse(r.out)["polytopes"][0]["count"] == 10);
  r = run_cli("hstar --input " + fixture("triangle3.json"));
  CHECK(json::parse(r.out)["polytopes"][0]["hstar"] == json({1, 7, 1}));
}

TEST_CASE("cli genus quantities") {
  Run r = run_cli("genus --input " + fixture("unit_square.json"));
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["dmv"] == 3);
  CHECK(j["mixed_ehrhart"] == json({"0/1", "2/1", "1/1"}));
  CHECK(j["khovanskii_me"] == -1);

  r = run_cli("dmv --input " + fixture("two_simplices.json"));
  CHECK(json::parse(r.out)["dmv"] == 1);

  r = run_cli("genus --input " + fixture("triangle_segment.json"));
  j = json::parse(r.out);
  CHECK(j["dmv"] == 6);
  CHECK(j["mixed_ehrhart"] == json({"0/1", "0/1", "6/1"}));
  CHECK(j["khovanskii_me"] == 6);
  CHECK(j["signed_khovanskii_me"] == -6);
  CHECK(j["kgenus_interior_sum"] == 6);

  r = run_cli("mixed-volume --input " + fixture("two_simplices.json"));
  CHECK(json::parse(r.out)["normalized_mixed_volume"] == 1);
}

TEST_CASE("cli chiy") {
  Run r = run_cli("chiy --all --pipeline both --input " + fixture("triangle3.json"));
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["agree"] == true);
  REQUIRE(j["rows"].size() == 3);
  for (int p = 0; p < 3; ++p) {
    const int want = p == 0 ? -9 : 0;
    CHECK(j["rows"][p]["closed"] == want);
    CHECK(j["rows"][p]["cayley"] == want);
  }
  r = run_cli("chiy --p 0 --input " + fixture("unit_square.json"));
  CHECK(json::parse(r.out)["rows"][0]["closed"] == -3);
  r = run_cli("chiy --p 0 --pipeline cayley --input " + fixture("triangle_segment.json"));
  CHECK(json::parse(r.out)["rows"][0]["cayley"] == -6);
}

TEST_CASE("cli cayley") {
  Run r = run_cli("cayley --subset 1,2 --input " + fixture("two_simplices.json"));
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["dim"] == 3);
  CHECK(j["ambient_dim"] == 4);
  CHECK(j["ehrhart_counts"][0] == 1);
  CHECK(j["ehrhart_counts"][1] == 6);
  CHECK(run_cli("cayley --subset 3 --input " + fixture("two_simplices.json")).code == 2);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("count --input " + fixture("malformed.json")).code == 2);
  CHECK(run_cli("count --input /nonexistent/file.json").code == 2);
  CHECK(run_cli("count --input " + fixture("big_square.json") + " --max-enum 1000").code == 3);
  CHECK(run_cli("count --input " + fixture("big_square.json")).code == 0);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("chiy --pipeline sideways --input " + fixture("unit_square.json")).code == 2);
  CHECK(run_cli("mixed-volume --input " + fixture("unit_square.json")).code == 2);
  CHECK(run_cli("verify --checks nope").code == 2);
  CHECK(run_cli("count < " + fixture("unit_square.json")).code == 0);
}

TEST_CASE("cli verify is deterministic") {
  const Run a = run_cli("verify --seed 7 --cases 30 --max-dim 3 --max-k 3");
  const Run b = run_cli("verify --seed 7 --cases 30 --max-dim 3 --max-k 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["all_passed"] == true);
  const Run c = run_cli("verify --seed 8 --cases 30 --max-dim 3 --max-k 3");
  CHECK(c.out != a.out);
}
