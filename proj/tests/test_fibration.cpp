// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "tilt/fibration.hpp"

using namespace tilt;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<long, BigInt> degrees(std::initializer_list<std::pair<long, int>> t) {
  std::map<long, BigInt> m;
  for (auto [k, v] : t) m[k] = v;
  return m;
}

bool no_higher(const ExtTable& t) {
  for (const auto& [key, dim] : t.dims)
    if (std::get<2>(key) > 0) return false;
  return true;
}

const std::vector<std::string> kPlans = {"hirzebruch",   "trivial_p1_bundle", "sp4_split",    "flag_1_2_3",
                                         "grass_2_4",    "flag_over_p1",      "quadric_over_p1", "trivial_fiber",
                                         "root_only"};

}  // namespace

TEST_CASE("root models") {
  CHECK_NOTHROW(BaseModel::projective(1, std::vector<int>{0, 1}));
  CHECK_NOTHROW(BaseModel::projective(2, std::vector<int>{-1, 0, 1}));
  CHECK_THROWS(BaseModel::projective(1, std::vector<int>{0, 2}));
  CHECK_THROWS(BaseModel::projective(2, std::vector<int>{0, 1}));
  CHECK_THROWS(BaseModel::projective(0));
  CHECK(BaseModel::projective(3).tilting_degrees == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("relative pushforward") {
  FiberCollectionModel hirz = GrassFiber{1, {0, 1}};
  // objects O(-1) = S(1)[R] then O
  CHECK(relative_pushforward(hirz, 1, 0) == degrees({{0, 1}, {-1, 1}}));
  CHECK(relative_pushforward(hirz, 0, 0) == degrees({{0, 1}}));
  CHECK(relative_pushforward(hirz, 0, 1).empty());
  for (const auto& f : {FiberCollectionModel(GrassFiber{2, {0, 1, 3, -1}}), FiberCollectionModel(GrassFiber{1, {2, 0, 0}}),
                        FiberCollectionModel(load_table(TILT_DATA_DIR "/fibers/quadric_surface.json"))}) {
    const std::size_t n = fiber_object_count(f, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto p = relative_pushforward(f, j, i);
        if (i == j) CHECK(p == degrees({{0, 1}}));
        if (j < i) CHECK(p.empty());
      }
  }
  CHECK_THROWS(relative_pushforward(TautologicalFiber{1}, 0, 0));
}

TEST_CASE("Hirzebruch-type model needs twist 1") {
  auto base = TiltedSpace::from_root(BaseModel::projective(1, std::vector<int>{0, 1}));
  FiberCollectionModel fiber = GrassFiber{1, {0, 1}};
  auto at0 = evaluate_twist(base, fiber, 0);
  CHECK_FALSE(at0.verified);
  REQUIRE(at0.witness.has_value());
  CHECK(at0.witness->degree == 1);
  CHECK(at0.witness->dimension == 1);
  // the witness sits over base degree -2
  CHECK(oracle::pn_h(1, -2, 1) == 1);
  auto plan = twist_search(base, fiber, 8);
  CHECK(plan.verified);
  CHECK(plan.twist == 1);
  CHECK(plan.labels.size() == 4);
  CHECK(plan.attempts.size() == 2);
  // diagonal blocks reproduce End of the base tilting bundle
  for (std::size_t p = 0; p < 4; ++p) CHECK(plan.ext_table.dim(p, p, 0) == 1);
  CHECK(plan.ext_table.dim(0, 1, 0) == 2);
}

TEST_CASE("trivial fibers need no twist") {
  auto base = TiltedSpace::from_root(BaseModel::projective(2));
  auto plan = twist_search(base, load_table(TILT_DATA_DIR "/fibers/trivial.json"), 4);
  CHECK(plan.verified);
  CHECK(plan.twist == 0);
  CHECK(plan.labels.size() == 3);
  auto p1 = twist_search(TiltedSpace::from_root(BaseModel::projective(1)), GrassFiber{1, {0, 0}}, 4);
  CHECK(p1.verified);
  CHECK(p1.twist == 0);
}

TEST_CASE("candidate Ext over the root agrees with the tower engine") {
  for (const auto& [m, degs] : std::vector<std::pair<int, std::vector<int>>>{{1, {0, 1}}, {3, {-1, 1}}, {2, {0, 1, 2}}}) {
    auto base = TiltedSpace::from_root(BaseModel::projective(m));
    for (int l = 1; l < static_cast<int>(degs.size()); ++l)
      for (int tw = 0; tw <= 2; ++tw) {
        FiberCollectionModel fiber = GrassFiber{l, degs};
        auto cand = candidate(base, fiber, tw);
        auto table = candidate_ext_table(base, fiber, tw);
        for (std::size_t p = 0; p < cand.summands.size(); ++p)
          for (std::size_t q = 0; q < cand.summands.size(); ++q) {
            auto h = tower_hom(cand.tower, cand.summands[p], cand.summands[q]);
            for (int s = 0; s <= cand.dimension(); ++s) CHECK(table.dim(p, q, s) == (h.count(s) ? h[s] : BigInt(0)));
          }
      }
  }
}

TEST_CASE("tower over a point reproduces flag collections") {
  auto flag = tower_compose({GrassFiber{2, {0, 0, 0}}, TautologicalFiber{1}}, BaseModel::point(), 4);
  CHECK(flag.verified);
  CHECK(flag.summand_count == 6);
  CHECK(flag.ext_table.dims == ext_table(flag_collection(FlagSpace(3, {1, 2}))).dims);
  auto grass = tower_compose({GrassFiber{2, {0, 0, 0, 0}}}, BaseModel::point(), 4);
  CHECK(grass.verified);
  CHECK(grass.ext_table.dims == ext_table(kapranov_collection(2, 4)).dims);
  auto full = tower_compose({GrassFiber{3, {0, 0, 0, 0}}, TautologicalFiber{2}, TautologicalFiber{1}},
                            BaseModel::point(), 2);
  CHECK(full.verified);
  CHECK(full.summand_count == 24);
  CHECK(full.ext_table.dims == ext_table(flag_collection(FlagSpace(4, {1, 2, 3}))).dims);
}

TEST_CASE("Sp(4)/B-shaped split tower") {
  auto plan = tower_compose({GrassFiber{1, {-1, 1}}}, BaseModel::projective(3), 8);
  CHECK(plan.verified);
  CHECK(plan.summand_count == 8);
  CHECK(plan.twists == std::vector<int>{1});
}

TEST_CASE("empty tower is the root bundle") {
  auto plan = tower_compose({}, BaseModel::projective(2), 3);
  CHECK(plan.verified);
  CHECK(plan.summand_count == 3);
  CHECK(plan.ext_table.hom_matrix()[0][2] == 6);
}

TEST_CASE("fixed twists and failures") {
  auto fail = tower_compose({GrassFiber{1, {0, 1}}}, BaseModel::projective(1), 8, std::vector<int>{0});
  CHECK_FALSE(fail.verified);
  CHECK(fail.failed_stage == 0);
  REQUIRE(fail.witness.has_value());
  auto capped = tower_compose({GrassFiber{1, {0, 3}}}, BaseModel::projective(1), 1);
  CHECK_FALSE(capped.verified);
  CHECK(tower_compose({GrassFiber{1, {0, 3}}}, BaseModel::projective(1), 8).verified);
  CHECK_THROWS(tower_compose({TautologicalFiber{1}}, BaseModel::projective(1), 2));
  CHECK_THROWS(tower_compose({GrassFiber{1, {0, 1}}, GrassFiber{1, {0, 1}}}, BaseModel::projective(1), 2));
  CHECK_THROWS(tower_compose({GrassFiber{1, {0, 1}}}, BaseModel::point(), 2));
  CHECK_THROWS(tower_compose({GrassFiber{1, {0, 1}}}, BaseModel::projective(1), 2, std::vector<int>{}));
}

TEST_CASE("twist monotonicity on shipped plans") {
  for (const auto& name : kPlans) {
    auto plan = load_plan(std::string(TILT_DATA_DIR "/plans/") + name + ".json");
    if (plan.stages.size() != 1) continue;
    auto base = TiltedSpace::from_root(plan.root);
    bool seen = false;
    for (int m = 0; m <= plan.cap; ++m) {
      const bool ok = evaluate_twist(base, plan.stages[0], m).verified;
      if (seen) CHECK_MESSAGE(ok, name);
      seen = seen || ok;
    }
    CHECK_MESSAGE(seen, name);
  }
}

TEST_CASE("summand count is multiplicative") {
  for (const auto& name : kPlans) {
    auto plan = load_plan(std::string(TILT_DATA_DIR "/plans/") + name + ".json");
    auto result = tower_compose(plan.stages, plan.root, plan.cap, plan.twists);
    CHECK_MESSAGE(result.verified, name);
    BigInt expected = plan.root.tilting_degrees.size();
    int ambient = 0;
    for (const auto& st : plan.stages) {
      if (auto g = std::get_if<GrassFiber>(&st)) {
        expected *= fiber_object_count(st, 0);
        ambient = g->l;
      } else if (auto t = std::get_if<TautologicalFiber>(&st)) {
        expected *= fiber_object_count(st, ambient);
        ambient = t->l;
      } else {
        expected *= fiber_object_count(st, 0);
      }
    }
    CHECK_MESSAGE(result.summand_count == expected, name);
    CHECK(no_higher(result.ext_table));
  }
}

TEST_CASE("fiber tables") {
  const std::string path = TILT_DATA_DIR "/fibers/quadric_surface.json";
  const auto text = slurp(path);
  auto t = TableFiber::parse(text);
  CHECK(t.serialize() == text);
  CHECK(TableFiber::parse(slurp(TILT_DATA_DIR "/fibers/trivial.json")).serialize() ==
        slurp(TILT_DATA_DIR "/fibers/trivial.json"));
  auto bad = t;
  bad.records.push_back({0, 1, 0, 0, 1});
  CHECK_THROWS(bad.validate());
  bad = t;
  bad.records.push_back({2, 1, 1, 0, 1});
  CHECK_THROWS(bad.validate());
  bad = t;
  bad.records.erase(bad.records.begin());
  CHECK_THROWS(bad.validate());
  bad = t;
  bad.records[0].base_degree = 1;
  CHECK_THROWS(bad.validate());
  CHECK_THROWS(TableFiber::parse("{}"));
  CHECK_THROWS(TableFiber::parse("[1,2"));
  // tables over a P^1 root: product family, no twist needed
  auto plan = twist_search(TiltedSpace::from_root(BaseModel::projective(1)), t, 3);
  CHECK(plan.verified);
  CHECK(plan.twist == 0);
  CHECK(plan.labels.size() == 8);
}

TEST_CASE("plan parsing errors") {
  CHECK_THROWS(parse_plan("{}", "."));
  CHECK_THROWS(parse_plan(R"({"root":{"kind":"torus"}})", "."));
  CHECK_THROWS(parse_plan(R"({"root":{"kind":"point"},"stages":[{"kind":"blob"}]})", "."));
  CHECK_THROWS(parse_plan(R"({"root":{"kind":"projective","dim":1},"cap":-1})", "."));
  CHECK_THROWS(parse_plan(R"({"root":{"kind":"point"},"stages":[{"kind":"table","path":"missing.json"}]})", "."));
  auto p = parse_plan(R"({"root":{"kind":"projective","dim":2},"stages":[{"kind":"grass","l":1,"rank":3}],"twists":[0]})", ".");
  CHECK(p.twists == std::vector<int>{0});
  CHECK(std::get<GrassFiber>(p.stages[0]).split_degrees == std::vector<int>{0, 0, 0});
}
