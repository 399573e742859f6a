// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tilt/bigint.hpp"

namespace tilt {

/// Degree/period model of a central simple algebra A. Without an explicit
/// table, ind(A^{⊗i}) = p / gcd(p, i) (cyclic classes).
struct CSAClass {
  int degree = 1;
  int period = 1;
  std::optional<std::map<int, int>> index_table;  // i mod period -> ind(A^{⊗i})

  void validate() const;
  bool is_split() const { return period == 1; }
};

int index_of_power(const CSAClass& a, long i);

struct DescentSummary {
  std::string kind;
  std::vector<std::string> summand_labels;
  /// Copies of the split-field object inside the descended summand.
  std::vector<BigInt> multiplicities;
  /// Rank of the split-field object (before taking copies).
  std::vector<BigInt> base_ranks;
  /// Rank of the descended summand: multiplicity * base rank.
  std::vector<BigInt> ranks;
  BigInt total_rank = 0;
  /// Σ multiplicities: summands after base change to a splitting field.
  BigInt split_summand_count = 0;
  BigInt end_dim = 0;
  /// Verdict of the split-field collection when one was verified.
  std::optional<bool> split_collection_verified;
  std::vector<std::string> notes;
};

/// W_0, ..., W_{count-1} on the Brauer–Severi variety of A; count defaults to
/// degree(A) = dimension + 1.
DescentSummary bs_tilting_summary(const CSAClass& a, std::optional<int> summand_count = std::nullopt);

/// N_{λ'} for λ in P(d, n-d) on BS(d, A); verifies the split-field wedge collection.
DescentSummary generalized_bs_summary(const CSAClass& a, int d);

enum class StageKind { bs, gbs };

struct DescentStage {
  CSAClass algebra;
  StageKind kind = StageKind::bs;
  int d = 1;  // gbs only
};

/// Product composition of per-stage summaries along a tower.
DescentSummary twisted_tower_summary(const std::vector<DescentStage>& stages);

/// Tower file: {"stages": [{"kind": "bs"|"gbs", "algebra": {"degree", "period",
/// "index_table"?}, "params": {"d"}?}, ...]}; index_table lists ind(A^i) for i = 0..p-1.
std::vector<DescentStage> parse_descent_tower(const std::string& json_text);
std::vector<DescentStage> load_descent_tower(const std::string& path);

}  // namespace tilt
