// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include "tilt/fibration.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "tilt/parallel.hpp"

namespace tilt {

using nlohmann::json;

// ---- root ----

BaseModel BaseModel::point() { return {0, {0}}; }

BaseModel BaseModel::projective(int m, std::optional<std::vector<int>> degrees) {
  if (m < 1) throw std::invalid_argument("projective root needs dimension >= 1");
  BaseModel b{m, {}};
  if (degrees) {
    b.tilting_degrees = *degrees;
  } else {
    for (int k = 0; k <= m; ++k) b.tilting_degrees.push_back(k);
  }
  b.check_tilting();
  return b;
}

namespace {

CohomologyTable root_cohomology(const BaseModel& root, long degree) {
  if (root.dim == 0) {
    if (degree != 0) throw std::invalid_argument("a point carries no line bundles of nonzero degree");
    return {{0, BigInt(1)}};
  }
  auto r = pn_line_cohomology(degree, root.dim);
  if (r.zero) return {};
  return {{r.degree, r.dimension}};
}

}  // namespace

void BaseModel::check_tilting() const {
  if (dim < 0) throw std::invalid_argument("root dimension must be non-negative");
  if (dim == 0) {
    if (tilting_degrees != std::vector<int>{0}) throw std::invalid_argument("a point root has tilting bundle O");
    return;
  }
  std::set<int> distinct(tilting_degrees.begin(), tilting_degrees.end());
  if (distinct.size() != tilting_degrees.size()) throw std::invalid_argument("root tilting degrees must be distinct");
  if (static_cast<int>(tilting_degrees.size()) != dim + 1)
    throw std::invalid_argument("P^" + std::to_string(dim) + " needs " + std::to_string(dim + 1) +
                                " tilting summands");
  for (int a : tilting_degrees)
    for (int b : tilting_degrees)
      for (const auto& [s, d] : root_cohomology(*this, b - a))
        if (s > 0)
          throw std::invalid_argument("root bundle is not tilting: Ext^" + std::to_string(s) + "(O(" +
                                      std::to_string(a) + "), O(" + std::to_string(b) + ")) != 0");
}

std::string BaseModel::to_string() const {
  if (dim == 0) return "point";
  std::string s = "P^" + std::to_string(dim) + " with O(";
  for (std::size_t i = 0; i < tilting_degrees.size(); ++i) s += (i ? "," : "") + std::to_string(tilting_degrees[i]);
  return s + ")";
}

// ---- fiber tables ----

void TableFiber::validate() const {
  if (objects.empty()) throw std::invalid_argument("fiber table has no objects");
  const int n = static_cast<int>(objects.size());
  std::set<std::tuple<int, int, int, long>> seen;
  std::vector<int> diagonal(n, 0);
  for (const auto& r : records) {
    if (r.i < 0 || r.j < 0 || r.i >= n || r.j >= n) throw std::invalid_argument("fiber table index out of range");
    if (r.s < 0) throw std::invalid_argument("fiber table degree must be non-negative");
    if (r.multiplicity < 1) throw std::invalid_argument("fiber table multiplicities must be positive");
    if (!seen.insert({r.j, r.i, r.s, r.base_degree}).second)
      throw std::invalid_argument("fiber table has a duplicate record");
    if (r.s > 0) throw std::invalid_argument("fiber table has a higher direct image (s > 0)");
    if (r.j < r.i) throw std::invalid_argument("fiber table has a pushforward with j < i");
    if (r.j == r.i) {
      if (r.base_degree != 0 || r.multiplicity != 1)
        throw std::invalid_argument("fiber table diagonal must be the structure sheaf");
      ++diagonal[r.i];
    }
  }
  for (int i = 0; i < n; ++i)
    if (diagonal[i] != 1) throw std::invalid_argument("fiber table diagonal entry " + std::to_string(i) + " missing");
}

namespace {

BigInt big_from_json(const json& v) {
  if (v.is_number_integer()) return BigInt(v.get<long long>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
      throw std::invalid_argument("not an integer: " + s);
    return BigInt(s);
  }
  throw std::invalid_argument("expected an integer");
}

json big_to_json(const BigInt& b) {
  if (b >= std::numeric_limits<long long>::min() && b <= std::numeric_limits<long long>::max())
    return static_cast<long long>(b);
  return b.str();
}

template <class T>
T required(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw std::invalid_argument(std::string("field '") + key + "' has the wrong type");
  }
}

constexpr const char* kTableFormat = "tiltcheck-fiber-table/1";

}  // namespace

TableFiber TableFiber::parse(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("fiber table is not valid JSON: ") + e.what());
  }
  if (required<std::string>(doc, "format") != kTableFormat)
    throw std::invalid_argument("unsupported fiber table format");
  TableFiber t;
  t.objects = required<std::vector<std::string>>(doc, "objects");
  t.source = required<std::string>(doc, "source");
  if (!doc.contains("records") || !doc["records"].is_array()) throw std::invalid_argument("missing field 'records'");
  for (const auto& r : doc["records"]) {
    if (!r.contains("multiplicity")) throw std::invalid_argument("missing field 'multiplicity'");
    t.records.push_back({required<int>(r, "j"), required<int>(r, "i"), required<int>(r, "s"),
                         required<long>(r, "base_degree"), big_from_json(r["multiplicity"])});
  }
  t.validate();
  return t;
}

std::string TableFiber::serialize() const {
  json doc;
  doc["format"] = kTableFormat;
  doc["objects"] = objects;
  doc["source"] = source;
  doc["records"] = json::array();
  for (const auto& r : records)
    doc["records"].push_back(
        {{"j", r.j}, {"i", r.i}, {"s", r.s}, {"base_degree", r.base_degree}, {"multiplicity", big_to_json(r.multiplicity)}});
  return doc.dump(2) + "\n";
}

std::string describe(const FiberCollectionModel& f) {
  if (auto g = std::get_if<GrassFiber>(&f)) {
    std::string s = "grass(l=" + std::to_string(g->l) + ", E=O(";
    for (std::size_t i = 0; i < g->split_degrees.size(); ++i) s += (i ? "," : "") + std::to_string(g->split_degrees[i]);
    return s + "))";
  }
  if (auto t = std::get_if<TautologicalFiber>(&f)) return "tautological(l=" + std::to_string(t->l) + ")";
  const auto& tab = std::get<TableFiber>(f);
  return "table(" + std::to_string(tab.objects.size()) + " objects, source: " + tab.source + ")";
}

// ---- pushforwards ----

namespace {

std::vector<Partition> fiber_partitions(int l, int ambient) {
  auto members = enumerate_box_partitions(l, ambient - l, OrderTag::containment_order).members;
  std::reverse(members.begin(), members.end());
  return members;
}

}  // namespace

std::size_t fiber_object_count(const FiberCollectionModel& fiber, int ambient_rank) {
  if (auto t = std::get_if<TableFiber>(&fiber)) return t->objects.size();
  const int l = std::holds_alternative<GrassFiber>(fiber) ? std::get<GrassFiber>(fiber).l
                                                          : std::get<TautologicalFiber>(fiber).l;
  if (auto g = std::get_if<GrassFiber>(&fiber)) ambient_rank = static_cast<int>(g->split_degrees.size());
  if (l < 1 || l >= ambient_rank) throw std::invalid_argument("Grassmann fiber needs 1 <= l < rank");
  return fiber_partitions(l, ambient_rank).size();
}

std::map<long, BigInt> relative_pushforward(const FiberCollectionModel& fiber, std::size_t j, std::size_t i) {
  std::map<long, BigInt> out;
  if (auto t = std::get_if<TableFiber>(&fiber)) {
    if (i >= t->objects.size() || j >= t->objects.size()) throw std::invalid_argument("fiber index out of range");
    for (const auto& r : t->records)
      if (static_cast<std::size_t>(r.j) == j && static_cast<std::size_t>(r.i) == i && r.s == 0)
        out[r.base_degree] += r.multiplicity;
    return out;
  }
  const auto* g = std::get_if<GrassFiber>(&fiber);
  if (!g) throw std::invalid_argument("tautological fibers have no pushforward to the root");
  const int n = static_cast<int>(g->split_degrees.size());
  if (g->l < 1 || g->l >= n) throw std::invalid_argument("Grassmann fiber needs 1 <= l < rank");
  const auto parts = fiber_partitions(g->l, n);
  if (i >= parts.size() || j >= parts.size()) throw std::invalid_argument("fiber index out of range");
  std::vector<int> dual_degrees;
  for (int a : g->split_degrees) dual_degrees.push_back(-a);
  // E_j ⊗ E_i^∨ = Hom(Σ^{λ_i} R, Σ^{λ_j} R) = ⊕ Σ^γ(R^∨)
  for (const auto& [gamma, mult] : hom_expand(parts[j], parts[i], g->l)) {
    auto push = grass_pushforward(gamma, g->l, n);
    if (!push) continue;
    for (const auto& [deg, m] : split_bundle_expand(*push, dual_degrees)) out[deg] += mult * m;
  }
  return out;
}

// ---- candidates ----

TiltedSpace TiltedSpace::from_root(const BaseModel& root) {
  root.check_tilting();
  TiltedSpace t;
  t.root = root;
  t.tower = TowerSpace{root.dim, {0}, {}};
  for (std::size_t a = 0; a < root.tilting_degrees.size(); ++a) {
    t.summands.push_back({root.tilting_degrees[a], {}});
    t.labels.push_back("O(" + std::to_string(root.tilting_degrees[a]) + ")");
    t.origin.emplace_back(a, 0);
  }
  t.ample = {root.dim > 0 ? 1 : 0, {}};
  return t;
}

int TiltedSpace::dimension() const { return tower.dimension(); }

namespace {

TowerObject twist_by(const TowerObject& obj, const TowerObject& ample, long power) {
  TowerObject out = obj;
  out.base_degree += power * ample.base_degree;
  for (std::size_t k = 0; k < out.weights.size(); ++k)
    out.weights[k] = out.weights[k].shifted(static_cast<int>(power * ample.weights[k][0]));
  return out;
}

// t with det(R^∨) ⊗ O(t) globally generated plus one, for R inside ⊕ O(a_k)
int ample_base_step(const TiltedSpace& s) {
  if (s.root.dim == 0) return 0;
  return *std::max_element(s.tower.root_degrees.begin(), s.tower.root_degrees.end()) + 1;
}

}  // namespace

TiltedSpace candidate(const TiltedSpace& base, const FiberCollectionModel& fiber, int m) {
  if (m < 0) throw std::invalid_argument("twist exponent must be non-negative");
  if (base.table) throw std::invalid_argument("nothing can be stacked on a table stage");
  TiltedSpace out;
  out.root = base.root;
  out.stages = base.stages + 1;

  if (auto tab = std::get_if<TableFiber>(&fiber)) {
    if (base.stages != 0) throw std::invalid_argument("table fibers are only supported directly over the root");
    tab->validate();
    out.tower = base.tower;
    out.table = *tab;
    out.ample = base.ample;
    for (std::size_t i = 0; i < tab->objects.size(); ++i)
      for (std::size_t a = 0; a < base.summands.size(); ++a) {
        out.summands.push_back(twist_by(base.summands[a], base.ample, static_cast<long>(i) * m));
        std::string twist = (i * m != 0) ? "*M^" + std::to_string(i * m) : "";
        out.labels.push_back(base.labels[a] + twist + "*" + tab->objects[i]);
        out.origin.emplace_back(a, i);
      }
    return out;
  }

  int l = 0;
  int ambient = 0;
  if (auto g = std::get_if<GrassFiber>(&fiber)) {
    if (base.stages != 0)
      throw std::invalid_argument("split Grassmann fibers are only expressible directly over the root");
    l = g->l;
    ambient = static_cast<int>(g->split_degrees.size());
    out.tower = TowerSpace{base.root.dim, g->split_degrees, {l}};
  } else {
    if (base.stages == 0) throw std::invalid_argument("a tautological fiber needs a previous Grassmann stage");
    l = std::get<TautologicalFiber>(fiber).l;
    ambient = base.tower.ranks.back();
    out.tower = base.tower;
    out.tower.ranks.push_back(l);
  }
  out.tower.validate();
  const auto parts = fiber_partitions(l, ambient);
  const std::string bundle = "[R" + std::to_string(out.tower.ranks.size()) + "]";
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t a = 0; a < base.summands.size(); ++a) {
      TowerObject obj = twist_by(base.summands[a], base.ample, static_cast<long>(i) * m);
      obj.weights.push_back(GLWeight::from_partition(parts[i], l));
      out.summands.push_back(std::move(obj));
      std::string twist = (i * m != 0) ? "*M^" + std::to_string(i * m) : "";
      out.labels.push_back(base.labels[a] + twist + "*S" + parts[i].to_string() + bundle);
      out.origin.emplace_back(a, i);
    }
  // M = ⊗_k det(R^(k)∨) ⊗ O(t Σ_k l_k)
  out.ample.weights.clear();
  long rank_sum = 0;
  for (int r : out.tower.ranks) {
    out.ample.weights.push_back(GLWeight::zero(r).shifted(-1));
    rank_sum += r;
  }
  out.ample.base_degree = static_cast<long>(ample_base_step(out)) * rank_sum;
  return out;
}

namespace {

ExtTable ext_of(const TiltedSpace& cand, const FiberCollectionModel& fiber) {
  const std::size_t n = cand.summands.size();
  std::vector<CohomologyTable> cells(n * n);
  const bool over_root = !std::holds_alternative<TautologicalFiber>(fiber);
  parallel_for(n * n, [&](std::size_t k) {
    const std::size_t p = k / n, q = k % n;
    if (over_root) {
      // Σ_w mult(w) h^s(root, O(deg_q - deg_p + w)) with w from π_*(E_j ⊗ E_i^∨)
      const std::size_t i = cand.origin[p].second;
      const std::size_t j = cand.origin[q].second;
      CohomologyTable out;
      for (const auto& [w, mult] : relative_pushforward(fiber, j, i))
        for (const auto& [s, d] :
             root_cohomology(cand.root, cand.summands[q].base_degree - cand.summands[p].base_degree + w))
          out[s] += mult * d;
      cells[k] = std::move(out);
    } else {
      cells[k] = tower_hom(cand.tower, cand.summands[p], cand.summands[q]);
    }
  });
  ExtTable t;
  t.size = n;
  t.max_degree = cand.table ? cand.root.dim : cand.dimension();
  for (std::size_t k = 0; k < n * n; ++k)
    for (const auto& [deg, dim] : cells[k])
      if (dim != 0) t.dims[{k / n, k % n, deg}] = dim;
  return t;
}

std::optional<Witness> first_higher(const ExtTable& t) {
  for (const auto& [key, dim] : t.dims) {
    const auto& [i, j, s] = key;
    if (s > 0) return Witness{"higher_ext", i, j, s, dim};
  }
  return std::nullopt;
}

}  // namespace

ExtTable candidate_ext_table(const TiltedSpace& base, const FiberCollectionModel& fiber, int m) {
  return ext_of(candidate(base, fiber, m), fiber);
}

FibrationPlan evaluate_twist(const TiltedSpace& base, const FiberCollectionModel& fiber, int m) {
  FibrationPlan plan;
  plan.result = candidate(base, fiber, m);
  plan.base = base.stages == 0 ? base.root.to_string() : base.tower.to_string();
  plan.fiber = describe(fiber);
  plan.twist = m;
  plan.labels = plan.result.labels;
  plan.ext_table = ext_of(plan.result, fiber);
  plan.witness = first_higher(plan.ext_table);
  plan.verified = !plan.witness;
  plan.attempts.emplace_back(m, plan.verified);
  return plan;
}

FibrationPlan twist_search(const TiltedSpace& base, const FiberCollectionModel& fiber, int cap) {
  if (cap < 0) throw std::invalid_argument("twist cap must be non-negative");
  std::vector<std::pair<int, bool>> attempts;
  for (int m = 0;; ++m) {
    auto plan = evaluate_twist(base, fiber, m);
    attempts.emplace_back(m, plan.verified);
    if (plan.verified || m == cap) {
      plan.attempts = std::move(attempts);
      return plan;
    }
  }
}

TowerPlan tower_compose(const std::vector<FiberCollectionModel>& stages, const BaseModel& root, int cap,
                        const std::optional<std::vector<int>>& fixed_twists) {
  if (fixed_twists && fixed_twists->size() != stages.size())
    throw std::invalid_argument("need one twist per stage");
  TowerPlan out;
  TiltedSpace cur = TiltedSpace::from_root(root);
  for (std::size_t k = 0; k < stages.size(); ++k) {
    auto plan = fixed_twists ? evaluate_twist(cur, stages[k], (*fixed_twists)[k]) : twist_search(cur, stages[k], cap);
    out.twists.push_back(plan.twist);
    out.stage_plans.push_back(plan);
    if (!plan.verified) {
      out.verified = false;
      out.failed_stage = k;
      out.labels = plan.labels;
      out.ext_table = plan.ext_table;
      out.witness = plan.witness;
      out.summand_count = plan.labels.size();
      return out;
    }
    cur = plan.result;
  }
  out.verified = true;
  out.labels = cur.labels;
  out.summand_count = cur.labels.size();
  if (stages.empty()) {
    const std::size_t n = cur.summands.size();
    out.ext_table.size = n;
    out.ext_table.max_degree = root.dim;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (const auto& [s, d] : root_cohomology(root, cur.summands[q].base_degree - cur.summands[p].base_degree))
          if (d != 0) out.ext_table.dims[{p, q, s}] = d;
  } else {
    out.ext_table = out.stage_plans.back().ext_table;
  }
  return out;
}

// ---- plan files ----

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TableFiber load_table(const std::string& path) { return TableFiber::parse(read_file(path)); }

PlanFile parse_plan(const std::string& text, const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("plan is not valid JSON: ") + e.what());
  }
  PlanFile plan;
  if (!doc.contains("root")) throw std::invalid_argument("missing field 'root'");
  const auto& root = doc["root"];
  const auto kind = required<std::string>(root, "kind");
  if (kind == "point") {
    plan.root = BaseModel::point();
  } else if (kind == "projective") {
    std::optional<std::vector<int>> degrees;
    if (root.contains("tilting_degrees")) degrees = required<std::vector<int>>(root, "tilting_degrees");
    plan.root = BaseModel::projective(required<int>(root, "dim"), degrees);
  } else {
    throw std::invalid_argument("unknown root kind '" + kind + "'");
  }
  if (doc.contains("stages")) {
    if (!doc["stages"].is_array()) throw std::invalid_argument("'stages' must be a list");
    for (const auto& st : doc["stages"]) {
      const auto sk = required<std::string>(st, "kind");
      if (sk == "grass") {
        GrassFiber g{required<int>(st, "l"), {}};
        if (st.contains("split_degrees")) {
          g.split_degrees = required<std::vector<int>>(st, "split_degrees");
        } else {
          g.split_degrees.assign(required<int>(st, "rank"), 0);
        }
        plan.stages.emplace_back(g);
      } else if (sk == "tautological") {
        plan.stages.emplace_back(TautologicalFiber{required<int>(st, "l")});
      } else if (sk == "table") {
        std::filesystem::path p = required<std::string>(st, "path");
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        plan.stages.emplace_back(load_table(p.string()));
      } else {
        throw std::invalid_argument("unknown stage kind '" + sk + "'");
      }
    }
  }
  if (doc.contains("cap")) plan.cap = required<int>(doc, "cap");
  if (plan.cap < 0) throw std::invalid_argument("cap must be non-negative");
  if (doc.contains("twists")) plan.twists = required<std::vector<int>>(doc, "twists");
  return plan;
}

PlanFile load_plan(const std::string& path) {
  return parse_plan(read_file(path), std::filesystem::path(path).parent_path().string());
}

}  // namespace tilt
