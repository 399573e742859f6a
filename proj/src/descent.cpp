// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include "tilt/descent.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tilt/collections.hpp"
#include "tilt/partitions.hpp"

namespace tilt {

void CSAClass::validate() const {
  if (degree < 1 || period < 1) throw std::invalid_argument("degree and period must be positive");
  if (degree % period != 0) throw std::invalid_argument("period must divide the degree");
  if (!index_table) return;
  for (const auto& [i, ind] : *index_table) {
    if (i < 0 || i >= period) throw std::invalid_argument("index table keys must lie in [0, period)");
    if (ind < 1 || degree % ind != 0) throw std::invalid_argument("every index must divide the degree");
  }
  if (auto it = index_table->find(0); it != index_table->end() && it->second != 1)
    throw std::invalid_argument("ind(A^0) must be 1");
}

int index_of_power(const CSAClass& a, long i) {
  a.validate();
  const int r = static_cast<int>(((i % a.period) + a.period) % a.period);
  if (r == 0) return 1;
  if (!a.index_table) return a.period / std::gcd(a.period, r);
  auto it = a.index_table->find(r);
  if (it == a.index_table->end()) throw std::invalid_argument("index table has no entry for " + std::to_string(r));
  return it->second;
}

DescentSummary bs_tilting_summary(const CSAClass& a, std::optional<int> summand_count) {
  a.validate();
  const int n = a.degree;
  if (n < 2) throw std::invalid_argument("a Brauer–Severi variety needs degree >= 2");
  const int count = summand_count.value_or(n);
  if (count < 1) throw std::invalid_argument("summand count must be positive");
  DescentSummary s;
  s.kind = "bs";
  for (int i = 0; i < count; ++i) {
    const BigInt ind = index_of_power(a, i);
    s.summand_labels.push_back("W_" + std::to_string(i));
    s.multiplicities.push_back(ind);
    s.base_ranks.push_back(1);
    s.ranks.push_back(ind);
    s.total_rank += ind;
    s.split_summand_count += ind;
  }
  // Hom(O(i), O(j)) on P^{n-1} has dimension binomial(n-1+j-i, n-1) for i <= j
  for (int i = 0; i < count; ++i)
    for (int j = i; j < count; ++j) s.end_dim += s.ranks[i] * s.ranks[j] * binomial(n - 1 + j - i, n - 1);
  if (count == n) {
    // the split-field collection O(0..n-1)^{ind} on P^{n-1}
    const auto report = verify_tilting(beilinson_collection(n - 1).with_multiplicities(s.ranks));
    if (report.end_algebra_dim != s.end_dim) throw std::logic_error("End dimension disagrees with the collection");
    s.split_collection_verified = report.passed;
  }
  s.notes.push_back("summands W_0..W_" + std::to_string(count - 1) + " on the Brauer-Severi variety of dimension " +
                    std::to_string(n - 1));
  if (count != n)
    s.notes.push_back("range length " + std::to_string(count) + " differs from dimension + 1 = " + std::to_string(n));
  if (!a.index_table) s.notes.push_back("index model: ind(A^i) = period / gcd(period, i)");
  return s;
}

DescentSummary generalized_bs_summary(const CSAClass& a, int d) {
  a.validate();
  const int n = a.degree;
  if (d < 1 || d >= n) throw std::invalid_argument("generalized Brauer-Severi needs 1 <= d < degree");
  const auto wedge = wedge_collection(d, n);
  const auto members = enumerate_box_partitions(d, n - d, OrderTag::size_order).members;
  DescentSummary s;
  s.kind = "gbs";
  const auto tower = wedge.tower();
  for (std::size_t k = 0; k < members.size(); ++k) {
    const auto conj = conjugate(members[k]);
    BigInt mult = 1;
    for (int part : conj.parts()) mult *= BigInt(n) * part;
    const BigInt base = wedge.objects[k].rank(tower);
    s.summand_labels.push_back("N" + conj.to_string());
    s.multiplicities.push_back(mult);
    s.base_ranks.push_back(base);
    s.ranks.push_back(mult * base);
    s.total_rank += mult * base;
    s.split_summand_count += mult;
  }
  const auto report = verify_tilting(wedge.with_multiplicities(s.multiplicities));
  s.end_dim = report.end_algebra_dim;
  s.split_collection_verified = report.passed;
  s.notes.push_back("multiplicities n * lambda'_i per factor are sufficient for descent, not claimed minimal");
  s.notes.push_back("End dimension computed over a splitting field from the wedge collection");
  return s;
}

DescentSummary twisted_tower_summary(const std::vector<DescentStage>& stages) {
  if (stages.empty()) throw std::invalid_argument("tower needs at least one stage");
  DescentSummary acc;
  for (std::size_t k = 0; k < stages.size(); ++k) {
    const auto& st = stages[k];
    DescentSummary s = st.kind == StageKind::bs ? bs_tilting_summary(st.algebra)
                                                : generalized_bs_summary(st.algebra, st.d);
    if (k == 0) {
      acc = std::move(s);
      acc.kind = "tower";
      continue;
    }
    DescentSummary next;
    next.kind = "tower";
    for (std::size_t i = 0; i < acc.summand_labels.size(); ++i)
      for (std::size_t j = 0; j < s.summand_labels.size(); ++j) {
        next.summand_labels.push_back(acc.summand_labels[i] + "*" + s.summand_labels[j]);
        next.multiplicities.push_back(acc.multiplicities[i] * s.multiplicities[j]);
        next.base_ranks.push_back(acc.base_ranks[i] * s.base_ranks[j]);
        next.ranks.push_back(acc.ranks[i] * s.ranks[j]);
      }
    next.total_rank = acc.total_rank * s.total_rank;
    next.split_summand_count = acc.split_summand_count * s.split_summand_count;
    next.end_dim = acc.end_dim * s.end_dim;
    if (acc.split_collection_verified || s.split_collection_verified)
      next.split_collection_verified =
          acc.split_collection_verified.value_or(true) && s.split_collection_verified.value_or(true);
    next.notes = acc.notes;
    next.notes.insert(next.notes.end(), s.notes.begin(), s.notes.end());
    acc = std::move(next);
  }
  if (stages.size() > 1)
    acc.notes.push_back("tower counts, ranks and End dimension composed multiplicatively stage by stage");
  return acc;
}

namespace {

using nlohmann::json;

int int_field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key) || !obj[key].is_number_integer())
    throw std::invalid_argument(std::string("missing or non-integer field '") + key + "'");
  return obj[key].get<int>();
}

}  // namespace

std::vector<DescentStage> parse_descent_tower(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("tower file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("stages") || !doc["stages"].is_array() || doc["stages"].empty())
    throw std::invalid_argument("tower file needs a non-empty 'stages' list");
  std::vector<DescentStage> out;
  for (const auto& st : doc["stages"]) {
    if (!st.is_object() || !st.contains("kind") || !st["kind"].is_string())
      throw std::invalid_argument("stage needs a 'kind'");
    if (!st.contains("algebra")) throw std::invalid_argument("stage needs an 'algebra'");
    const auto& alg = st["algebra"];
    DescentStage stage;
    stage.algebra.degree = int_field(alg, "degree");
    stage.algebra.period = int_field(alg, "period");
    if (alg.contains("index_table")) {
      if (!alg["index_table"].is_array()) throw std::invalid_argument("'index_table' must be a list");
      std::map<int, int> table;
      int i = 0;
      for (const auto& v : alg["index_table"]) {
        if (!v.is_number_integer()) throw std::invalid_argument("index table entries must be integers");
        table[i++] = v.get<int>();
      }
      stage.algebra.index_table = table;
    }
    stage.algebra.validate();
    const auto kind = st["kind"].get<std::string>();
    if (kind == "bs") {
      stage.kind = StageKind::bs;
    } else if (kind == "gbs") {
      stage.kind = StageKind::gbs;
      if (!st.contains("params")) throw std::invalid_argument("gbs stage needs params.d");
      stage.d = int_field(st["params"], "d");
    } else {
      throw std::invalid_argument("unknown stage kind '" + kind + "'");
    }
    out.push_back(stage);
  }
  return out;
}

std::vector<DescentStage> load_descent_tower(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_descent_tower(ss.str());
}

}  // namespace tilt
