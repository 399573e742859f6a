// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include "tilt/report.hpp"

#include <json.hpp>
#include <stdexcept>

#include "tilt/acceptance.hpp"

namespace tilt {
namespace {

using nlohmann::json;

json num(const BigInt& v) { return v.str(); }
json num(long v) { return std::to_string(v); }

template <class Seq>
json nums(const Seq& seq) {
  json out = json::array();
  for (const auto& v : seq) out.push_back(num(v));
  return out;
}

json weight(const GLWeight& w) { return nums(w.entries()); }
json partition(const Partition& p) { return nums(p.parts()); }

json matrix(const std::vector<std::vector<BigInt>>& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(nums(row));
  return out;
}

json expansion(const WeightExpansion& e) {
  json out = json::array();
  for (const auto& [w, mult] : e) out.push_back({{"weight", weight(w)}, {"multiplicity", num(mult)}});
  return out;
}

json witness(const std::optional<Witness>& w, const std::vector<std::string>& labels) {
  if (!w) return nullptr;
  json out = {{"kind", w->kind}, {"from_index", num(static_cast<long>(w->from))},
              {"to_index", num(static_cast<long>(w->to))}, {"degree", num(w->degree)},
              {"dimension", num(w->dimension)}};
  if (w->from < labels.size()) out["from"] = labels[w->from];
  if (w->to < labels.size()) out["to"] = labels[w->to];
  return out;
}

json higher_ext(const ExtTable& t) {
  json out = json::array();
  for (const auto& [key, dim] : t.dims) {
    const auto& [i, j, s] = key;
    if (s > 0 && dim != 0)
      out.push_back({{"from_index", num(static_cast<long>(i))}, {"to_index", num(static_cast<long>(j))},
                     {"degree", num(s)}, {"dimension", num(dim)}});
  }
  return out;
}

Report make(const std::string& command, json inputs, json result, Verdict verdict) {
  json doc = {{"command", command},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)},
              {"engine_version", engine_version()},
              {"verdict", to_string(verdict)}};
  return Report{command, verdict, doc.dump()};
}

Verdict from_bool(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

json algebra(const CSAClass& a) {
  json out = {{"degree", num(a.degree)}, {"period", num(a.period)}};
  if (a.index_table) {
    json table = json::array();
    for (const auto& [k, v] : *a.index_table) table.push_back(num(v));
    out["index_table"] = table;
  }
  return out;
}

Report descent(const std::string& command, json inputs, const DescentSummary& s) {
  json summands = json::array();
  for (std::size_t k = 0; k < s.summand_labels.size(); ++k)
    summands.push_back({{"label", s.summand_labels[k]},
                        {"multiplicity", num(s.multiplicities[k])},
                        {"base_rank", num(s.base_ranks[k])},
                        {"rank", num(s.ranks[k])}});
  json result = {{"kind", s.kind},
                 {"summands", summands},
                 {"ranks", nums(s.ranks)},
                 {"total_rank", num(s.total_rank)},
                 {"split_summand_count", num(s.split_summand_count)},
                 {"end_dim", num(s.end_dim)},
                 {"notes", s.notes}};
  Verdict verdict = Verdict::not_applicable;
  if (s.split_collection_verified) {
    result["split_collection_verified"] = *s.split_collection_verified;
    verdict = from_bool(*s.split_collection_verified);
  } else {
    result["split_collection_verified"] = nullptr;
  }
  return make(command, std::move(inputs), std::move(result), verdict);
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::not_applicable:
      return "n/a";
  }
  return "n/a";
}

std::string Report::render(bool pretty) const {
  if (!pretty) return canonical + "\n";
  return json::parse(canonical).dump(2) + "\n";
}

std::string engine_version() { return std::string("tiltcheck ") + TILT_VERSION; }

Report partitions_report(int d, int n, OrderTag order) {
  if (d < 0 || n < d) throw std::invalid_argument("partitions need 0 <= d <= n");
  const auto set = enumerate_box_partitions(d, n - d, order);
  json members = json::array();
  for (const auto& p : set.members) members.push_back(partition(p));
  json inputs = {{"d", num(d)}, {"n", num(n)}, {"order", to_string(order)}};
  json result = {{"rows", num(d)}, {"cols", num(n - d)}, {"count", num(static_cast<long>(set.members.size()))},
                 {"members", members}};
  return make("partitions", inputs, result, Verdict::not_applicable);
}

Report lr_report(const Partition& a, const Partition& b, int n) {
  const auto e = lr_expand(a, b, n);
  BigInt total = 0;
  for (const auto& [w, mult] : e) total += mult * schur_dimension(w, n);
  json inputs = {{"lambda", partition(a)}, {"mu", partition(b)}, {"n", num(n)}};
  json result = {{"terms", expansion(e)},
                 {"dimension", num(total)},
                 {"dimension_product", num(schur_dimension(a, n) * schur_dimension(b, n))}};
  return make("lr", inputs, result, Verdict::not_applicable);
}

Report schur_dim_report(const GLWeight& w, int n) {
  if (static_cast<int>(w.length()) > n) throw std::invalid_argument("weight longer than n");
  std::vector<int> entries = w.entries();
  entries.resize(n, 0);
  if (!w.is_nonnegative() && static_cast<int>(w.length()) != n)
    throw std::invalid_argument("a weight with negative entries must have length n");
  json inputs = {{"weight", weight(w)}, {"n", num(n)}};
  json result = {{"dimension", num(schur_dimension(GLWeight(entries), n))}};
  return make("schur-dim", inputs, result, Verdict::not_applicable);
}

Report bott_report(const HomogeneousBundle& bundle) {
  json blocks = json::array();
  for (const auto& b : bundle.blocks) blocks.push_back(weight(b));
  json inputs = {{"space", bundle.space.to_string()}, {"blocks", blocks}};
  const auto r = flag_cohomology(bundle);
  json result;
  if (r.zero) {
    result = "ZERO";
  } else {
    result = {{"degree", num(r.degree)}, {"weight", weight(r.dominant_weight)}, {"dimension", num(r.dimension)}};
  }
  inputs["concatenated"] = nums(bundle.concatenated());
  return make("bott", inputs, result, Verdict::not_applicable);
}

Report euler_report(const Partition& a, const Partition& b, int d, int n) {
  const auto g = FlagSpace::grassmannian(d, n);
  if (!a.fits_box(d, n - d) || !b.fits_box(d, n - d)) throw std::invalid_argument("partitions must fit the box");
  BigInt bwb = 0;
  for (const auto& [gamma, mult] : hom_expand(b, a, d)) {
    const auto r = flag_cohomology(HomogeneousBundle::of_sub_dual(g, gamma));
    if (!r.zero) bwb += (r.degree % 2 ? -1 : 1) * mult * r.dimension;
  }
  const auto local = localization_euler(a, b, d, n);
  json inputs = {{"lambda", partition(a)}, {"mu", partition(b)}, {"d", num(d)}, {"n", num(n)}};
  json result = {{"bwb", num(bwb)}, {"localization", num(local)}, {"agree", bwb == local}};
  return make("euler", inputs, result, from_bool(bwb == local));
}

CollectionSpec build_collection(const VerifyRequest& r) {
  CollectionSpec c = [&] {
    if (r.family == "kapranov") return kapranov_collection(r.d, r.n);
    if (r.family == "kapranov-forward") return kapranov_collection_forward(r.d, r.n);
    if (r.family == "flag") return flag_collection(FlagSpace(r.n, r.steps));
    if (r.family == "beilinson") return beilinson_collection(r.n);
    if (r.family == "wedge") return wedge_collection(r.d, r.n);
    throw std::invalid_argument("unknown collection family: " + r.family);
  }();
  if (!r.multiplicities.empty()) c = c.with_multiplicities(r.multiplicities);
  if (r.twist != 0) c = c.twisted(r.twist);
  return c;
}

Report verify_report(const VerifyRequest& request) {
  const auto c = build_collection(request);
  const auto r = verify_tilting(c);
  std::vector<std::string> labels;
  for (const auto& o : c.objects) labels.push_back(o.label);
  json inputs = {{"family", request.family}, {"twist", num(request.twist)}};
  if (request.family == "flag") {
    inputs["steps"] = nums(request.steps);
    inputs["n"] = num(request.n);
  } else if (request.family == "beilinson") {
    inputs["n"] = num(request.n);
  } else {
    inputs["d"] = num(request.d);
    inputs["n"] = num(request.n);
  }
  inputs["multiplicities"] = nums(request.multiplicities);
  json result = {{"collection", c.name},
                 {"space", c.space.to_string()},
                 {"objects", labels},
                 {"multiplicities", nums(c.multiplicities)},
                 {"order_convention", r.order_convention},
                 {"claim", to_string(r.claim)},
                 {"is_strong_exceptional", r.is_strong_exceptional},
                 {"is_exceptional_each", r.is_exceptional_each},
                 {"is_tilting", r.is_tilting},
                 {"k0_rank", num(static_cast<long>(r.k0_rank))},
                 {"expected_k0", num(r.expected_k0)},
                 {"k0_matches", r.k0_matches},
                 {"end_algebra_dim", num(r.end_algebra_dim)},
                 {"max_degree", num(r.table.max_degree)},
                 {"hom_matrix", matrix(r.table.hom_matrix())},
                 {"higher_ext", higher_ext(r.table)},
                 {"witness", witness(r.witness, labels)},
                 {"generation", "not recomputed"}};
  return make("verify", inputs, result, from_bool(r.passed));
}

Report descent_bs_report(const CSAClass& a, std::optional<int> summand_count) {
  json inputs = {{"algebra", algebra(a)}};
  if (summand_count) inputs["summands"] = num(*summand_count);
  return descent("descent bs", inputs, bs_tilting_summary(a, summand_count));
}

Report descent_gbs_report(const CSAClass& a, int d) {
  json inputs = {{"algebra", algebra(a)}, {"d", num(d)}};
  return descent("descent gbs", inputs, generalized_bs_summary(a, d));
}

Report descent_tower_report(const std::vector<DescentStage>& stages, const std::string& source) {
  json list = json::array();
  for (const auto& s : stages) {
    json st = {{"kind", s.kind == StageKind::bs ? "bs" : "gbs"}, {"algebra", algebra(s.algebra)}};
    if (s.kind == StageKind::gbs) st["d"] = num(s.d);
    list.push_back(st);
  }
  json inputs = {{"source", source}, {"stages", list}};
  return descent("descent tower", inputs, twisted_tower_summary(stages));
}

Report fibration_report(const PlanFile& plan, FibrationMode mode, const std::string& source) {
  const auto twists = mode == FibrationMode::plan ? plan.twists : std::nullopt;
  const auto t = tower_compose(plan.stages, plan.root, plan.cap, twists);
  json stages = json::array();
  for (const auto& fiber : plan.stages) stages.push_back(describe(fiber));
  json inputs = {{"source", source},
                 {"mode", mode == FibrationMode::plan ? "plan" : "search"},
                 {"root", plan.root.to_string()},
                 {"stages", stages},
                 {"cap", num(plan.cap)}};
  if (twists) inputs["twists"] = nums(*twists);
  json stage_plans = json::array();
  for (const auto& p : t.stage_plans) {
    json attempts = json::array();
    for (const auto& [m, ok] : p.attempts) attempts.push_back({{"twist", num(m)}, {"verified", ok}});
    stage_plans.push_back({{"base", p.base},
                           {"fiber", p.fiber},
                           {"twist", num(p.twist)},
                           {"verified", p.verified},
                           {"summands", num(static_cast<long>(p.labels.size()))},
                           {"attempts", attempts},
                           {"witness", witness(p.witness, p.labels)}});
  }
  json result = {{"verified", t.verified},
                 {"twists", nums(t.twists)},
                 {"summand_count", num(t.summand_count)},
                 {"labels", t.labels},
                 {"stage_plans", stage_plans},
                 {"witness", witness(t.witness, t.labels)},
                 {"failed_stage", t.verified ? json(nullptr) : num(static_cast<long>(t.failed_stage))}};
  if (t.verified) {
    result["hom_matrix"] = matrix(t.ext_table.hom_matrix());
    result["max_degree"] = num(t.ext_table.max_degree);
  }
  return make("fibration", inputs, result, from_bool(t.verified));
}

Report selftest_report(const std::set<int>& only) {
  for (int id : only)
    if (id < 1 || id > kAcceptanceCriteria) throw std::invalid_argument("unknown criterion " + std::to_string(id));
  json criteria = json::array();
  bool all = true;
  for (const auto& r : run_acceptance(only)) {
    criteria.push_back({{"id", num(r.id)}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    all = all && r.passed;
  }
  json inputs = {{"criteria", nums(only)}};
  json result = {{"criteria", criteria}, {"all_passed", all}};
  return make("selftest", inputs, result, from_bool(all));
}

}  // namespace tilt
