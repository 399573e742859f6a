// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>
#include <json.hpp>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "tilt/tilt.h"

namespace {

using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = tiltcli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return std::string(TILT_DATA_DIR) + "/" + rel; }

std::vector<std::string> files(const std::string& dir) {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(data(dir))) out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

// numbers must never appear as JSON numbers and objects must serialize with sorted keys
void check_canonical(const json& j) {
  CHECK_FALSE(j.is_number());
  if (j.is_object() || j.is_array())
    for (const auto& v : j) check_canonical(v);
}

json body(const Outcome& o) {
  REQUIRE(!o.out.empty());
  const auto j = json::parse(o.out);
  check_canonical(j);
  CHECK(j.dump() + "\n" == o.out);
  return j;
}

std::vector<std::vector<std::string>> corpus() {
  std::vector<std::vector<std::string>> c = {
      {"partitions", "--d", "2", "--n", "5"},
      {"partitions", "--d", "3", "--n", "6", "--order", "size_order"},
      {"lr", "--lambda", "2,1", "--mu", "2,1", "--n", "3"},
      {"schur-dim", "--weight", "2,1", "--n", "3"},
      {"bott", "--space", "grass:2,4", "--sub-dual", "0,-1"},
      {"bott", "--space", "pn:3", "--sub-dual=-5"},
      {"bott", "--space", "flag:1,2;3", "--blocks", "2,1,0"},
      {"euler", "--lambda", "2,1", "--mu", "1", "--d", "2", "--n", "5"},
      {"verify", "kapranov", "--d", "2", "--n", "4"},
      {"verify", "kapranov", "--d", "3", "--n", "6", "--multiplicities", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20"},
      {"verify", "flag", "--steps", "1,2", "--n", "3"},
      {"verify", "beilinson", "--n", "3", "--twist", "-2"},
      {"verify", "wedge", "--d", "2", "--n", "4"},
      {"descent", "bs", "--degree", "2", "--period", "2"},
      {"descent", "bs", "--degree", "4", "--period", "4", "--index-table", "1,4,2,4"},
      {"descent", "gbs", "--degree", "4", "--period", "2", "--d", "2"},
      {"selftest", "--criteria", "3,4"},
      {"selftest"},
  };
  for (const auto& f : files("towers")) c.push_back({"descent", "tower", "--file", f});
  for (const auto& f : files("plans")) {
    c.push_back({"fibration", "plan", "--plan", f});
    c.push_back({"fibration", "search", "--plan", f});
  }
  return c;
}

}  // namespace

TEST_CASE("cli: documented examples") {
  auto k = cli({"verify", "kapranov", "--d", "2", "--n", "4"});
  CHECK(k.code == 0);
  auto j = body(k);
  CHECK(j["verdict"] == "pass");
  CHECK(j["result"]["k0_rank"] == "6");

  auto bs = cli({"descent", "bs", "--degree", "2", "--period", "2"});
  CHECK(bs.code == 0);
  j = body(bs);
  CHECK(j["result"]["total_rank"] == "3");
  CHECK(j["result"]["end_dim"] == "9");

  auto b = cli({"bott", "--space", "grass:2,4", "--sub-dual", "0,-1"});
  CHECK(b.code == 0);
  CHECK(body(b)["result"] == "ZERO");
}

TEST_CASE("cli: Kronecker Hom matrix") {
  auto r = cli({"verify", "beilinson", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(body(r)["result"]["hom_matrix"] == json::parse(R"([["1","2"],["0","1"]])"));
}

TEST_CASE("cli: report envelope") {
  const auto j = body(cli({"schur-dim", "--weight", "2,1", "--n", "3"}));
  CHECK(j["command"] == "schur-dim");
  CHECK(j["result"]["dimension"] == "8");
  CHECK(j["verdict"] == "n/a");
  CHECK(j["engine_version"] == tilt_version());
  CHECK(j["inputs"]["weight"] == json::parse(R"(["2","1"])"));
  const auto bott = body(cli({"bott", "--space", "pn:2", "--sub-dual", "1"}));
  CHECK(bott["result"]["degree"] == "0");
  CHECK(bott["result"]["dimension"] == "3");
}

TEST_CASE("cli: exit code contract on the corpus") {
  for (const auto& args : corpus()) {
    CAPTURE(args);
    const auto r = cli(args);
    CHECK(r.code == 0);
    CHECK(body(r)["verdict"] != "fail");
  }
  const auto fwd = cli({"verify", "kapranov-forward", "--d", "2", "--n", "4"});
  CHECK(fwd.code == 1);
  const auto j = body(fwd);
  CHECK(j["verdict"] == "fail");
  CHECK(j["result"]["witness"]["kind"] == "backward_hom");

  const auto hirz = cli({"fibration", "search", "--plan", data("plans/hirzebruch.json"), "--cap", "0"});
  CHECK(hirz.code == 1);
  const auto h = body(hirz);
  CHECK(h["result"]["witness"]["degree"] == "1");
  CHECK(h["result"]["witness"]["dimension"] == "1");
}

TEST_CASE("cli: determinism") {
  for (const auto& args : corpus()) {
    CAPTURE(args);
    CHECK(cli(args).out == cli(args).out);
  }
  auto with_jobs = [](const char* jobs) {
    std::vector<std::string> args = {"--jobs", jobs, "verify", "kapranov", "--d", "3", "--n", "7"};
    return cli(args).out;
  };
  CHECK(with_jobs("1") == with_jobs("4"));
  setenv("TILTCHECK_JOBS", "3", 1);
  const auto env = cli({"verify", "kapranov", "--d", "3", "--n", "7"}).out;
  unsetenv("TILTCHECK_JOBS");
  CHECK(env == with_jobs("1"));
}

TEST_CASE("cli: pretty renders the same payload") {
  const auto compact = cli({"verify", "flag", "--steps", "1,2", "--n", "3"});
  const auto pretty = cli({"--pretty", "verify", "flag", "--steps", "1,2", "--n", "3"});
  CHECK(pretty.code == compact.code);
  CHECK(pretty.out != compact.out);
  CHECK(json::parse(pretty.out) == json::parse(compact.out));
}

TEST_CASE("cli: invalid input exits 2 with a diagnostic") {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"bogus"},
      {"verify"},
      {"verify", "nonsense", "--n", "3"},
      {"verify", "kapranov", "--d", "4", "--n", "4"},
      {"verify", "kapranov", "--d", "2", "--n", "4", "--multiplicities", "1,2"},
      {"verify", "kapranov", "--d", "2", "--n", "4", "--multiplicities", "1,x,1,1,1,1"},
      {"partitions", "--d", "2"},
      {"lr", "--lambda", "1,2", "--mu", "1", "--n", "3"},
      {"lr", "--lambda", "a", "--mu", "1", "--n", "3"},
      {"bott", "--space", "grass:2,4"},
      {"bott", "--space", "grass:2,4", "--sub", "1,0", "--quot", "1,0"},
      {"bott", "--space", "grass:5,4", "--sub", "1,0"},
      {"bott", "--space", "sphere:3", "--blocks", "1"},
      {"bott", "--space", "flag:1,2;3", "--blocks", "1,0"},
      {"euler", "--lambda", "3", "--mu", "1", "--d", "2", "--n", "4"},
      {"descent", "bs", "--degree", "3", "--period", "2"},
      {"descent", "gbs", "--degree", "4", "--period", "2", "--d", "4"},
      {"descent", "tower", "--file", "/nonexistent/tower.json"},
      {"descent", "tower"},
      {"fibration", "plan", "--plan", "/nonexistent/plan.json"},
      {"fibration", "walk", "--plan", "x"},
      {"selftest", "--criteria", "9"},
      {"--jobs", "-1", "selftest"},
  };
  for (const auto& args : bad) {
    CAPTURE(args);
    const auto r = cli(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(!r.err.empty());
  }
  setenv("TILTCHECK_JOBS", "many", 1);
  CHECK(cli({"schur-dim", "--weight", "1", "--n", "2"}).code == 2);
  unsetenv("TILTCHECK_JOBS");
}

TEST_CASE("cli: help and version exit 0") {
  const auto h = cli({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("verify") != std::string::npos);
  const auto v = cli({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find(tilt_version()) != std::string::npos);
}

TEST_CASE("capi: handles, statuses and errors") {
  tilt_report* r = nullptr;
  CHECK(tilt_partitions(2, 4, "containment_order", nullptr) == TILT_INVALID_INPUT);
  CHECK(std::string(tilt_last_error()).size() > 0);

  CHECK(tilt_partitions(2, 4, "containment_order", &r) == TILT_OK);
  REQUIRE(r != nullptr);
  CHECK(std::string(tilt_last_error()).empty());
  CHECK(std::string(tilt_report_command(r)) == "partitions");
  CHECK(tilt_report_verdict(r) == TILT_VERDICT_NA);
  const auto j = json::parse(tilt_report_json(r, 0));
  CHECK(j["result"]["count"] == "6");
  CHECK(json::parse(tilt_report_json(r, 1)) == j);
  tilt_report_free(r);

  r = reinterpret_cast<tilt_report*>(0x1);
  CHECK(tilt_partitions(2, 4, nullptr, &r) == TILT_INVALID_INPUT);
  CHECK(r == nullptr);
  CHECK(tilt_partitions(2, 4, "lexicographic", &r) == TILT_INVALID_INPUT);
  CHECK(r == nullptr);

  const int lam[] = {1};
  CHECK(tilt_lr(nullptr, 1, lam, 1, 3, &r) == TILT_INVALID_INPUT);

  tilt_verify_request fwd{"kapranov-forward", 2, 4, nullptr, 0, nullptr, 0, 0};
  CHECK(tilt_verify(&fwd, &r) == TILT_VERIFICATION_FAILED);
  REQUIRE(r != nullptr);
  CHECK(tilt_report_verdict(r) == TILT_VERDICT_FAIL);
  tilt_report_free(r);

  const char* mults[] = {"3", "1", "4"};
  tilt_verify_request beil{"beilinson", 0, 2, nullptr, 0, mults, 3, 1};
  CHECK(tilt_verify(&beil, &r) == TILT_OK);
  CHECK(tilt_report_verdict(r) == TILT_VERDICT_PASS);
  tilt_report_free(r);

  const int table[] = {1, 4, 2, 4};
  const tilt_algebra a{4, 4, table, 4};
  CHECK(tilt_descent_bs(&a, 0, &r) == TILT_OK);
  CHECK(json::parse(tilt_report_json(r, 0))["result"]["ranks"] == json::parse(R"(["1","4","2","4"])"));
  tilt_report_free(r);
  CHECK(tilt_descent_bs(nullptr, 0, &r) == TILT_INVALID_INPUT);

  CHECK(tilt_descent_tower_json(R"({"stages":[{"kind":"bs","algebra":{"degree":2,"period":2}}]})", &r) == TILT_OK);
  tilt_report_free(r);
  CHECK(tilt_descent_tower_json("{", &r) == TILT_INVALID_INPUT);

  const int w[] = {1, 0, 0, 0};
  CHECK(tilt_bott("grass:2,4", TILT_BUNDLE_BLOCKS, w, 4, &r) == TILT_OK);
  CHECK(json::parse(tilt_report_json(r, 0))["result"]["dimension"] == "4");
  tilt_report_free(r);
  CHECK(tilt_bott("flag:1,2;3", TILT_BUNDLE_SUB, w, 1, &r) == TILT_INVALID_INPUT);

  CHECK(tilt_fibration(data("plans/hirzebruch.json").c_str(), 1, 0, &r) == TILT_VERIFICATION_FAILED);
  tilt_report_free(r);
  CHECK(tilt_fibration(data("plans/hirzebruch.json").c_str(), 1, -1, &r) == TILT_OK);
  tilt_report_free(r);
  CHECK(tilt_fibration("/nonexistent.json", 1, -1, &r) == TILT_INVALID_INPUT);
  const int crit[] = {4};
  CHECK(tilt_selftest(crit, 1, &r) == TILT_OK);
  tilt_report_free(r);
  tilt_report_free(nullptr);
  CHECK(std::string(tilt_report_json(nullptr, 0)).empty());
}
