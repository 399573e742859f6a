// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tilt/bigint.hpp"
#include "tilt/collections.hpp"
#include "tilt/tower.hpp"

namespace tilt {

/// Root of a fibration: a point, or P^m with the line-bundle tilting bundle
/// ⊕ O(tilting_degrees[a]) (Beilinson range 0..m by default).
struct BaseModel {
  int dim = 0;
  std::vector<int> tilting_degrees{0};

  static BaseModel point();
  static BaseModel projective(int m, std::optional<std::vector<int>> degrees = std::nullopt);
  /// Ext vanishing and K_0 rank of the root tilting bundle; throws when it fails.
  void check_tilting() const;
  std::string to_string() const;
};

/// Grass(l, E) for E = ⊕ O(split_degrees[k]) over the root. Only valid as the
/// first stage.
struct GrassFiber {
  int l = 1;
  std::vector<int> split_degrees;
};

/// Grass(l, R) for the tautological bundle R of the previous stage.
struct TautologicalFiber {
  int l = 1;
};

struct TableRecord {
  int j = 0;
  int i = 0;
  int s = 0;
  long base_degree = 0;
  BigInt multiplicity = 0;
};

/// Relative pushforwards R^s π_*(E_j ⊗ E_i^∨) = ⊕ O(base_degree)^multiplicity,
/// supplied as data. Only valid as the single stage over the root.
struct TableFiber {
  std::vector<std::string> objects;
  std::vector<TableRecord> records;
  std::string source;

  /// Rejects tables that are not supported in degree 0, upper triangular, with
  /// trivial diagonal.
  void validate() const;
  static TableFiber parse(const std::string& json_text);
  /// Canonical JSON; parse then serialize reproduces a canonical file byte for byte.
  std::string serialize() const;
};

using FiberCollectionModel = std::variant<GrassFiber, TautologicalFiber, TableFiber>;
std::string describe(const FiberCollectionModel& f);

/// Base line-bundle degree -> multiplicity of π_*(E_j ⊗ E_i^∨) for a fiber
/// sitting directly over a projective or point root.
std::map<long, BigInt> relative_pushforward(const FiberCollectionModel& fiber, std::size_t j, std::size_t i);
std::size_t fiber_object_count(const FiberCollectionModel& fiber, int ambient_rank);

/// A verified stage of a tower: the space so far and its tilting summands.
struct TiltedSpace {
  BaseModel root;
  TowerSpace tower;
  std::vector<TowerObject> summands;
  std::vector<std::string> labels;
  /// Ample generator M as a tower object (line bundle).
  TowerObject ample;
  /// Set once a table stage has been added; nothing can be stacked on top.
  std::optional<TableFiber> table;
  /// (base summand index, fiber object index) of every summand of the last stage.
  std::vector<std::pair<std::size_t, std::size_t>> origin;
  int stages = 0;

  static TiltedSpace from_root(const BaseModel& root);
  int dimension() const;
};

struct FibrationPlan {
  std::string base;
  std::string fiber;
  int twist = 0;
  bool verified = false;
  std::vector<std::string> labels;
  ExtTable ext_table;
  std::optional<Witness> witness;
  /// Twists tried in order, each with its verdict.
  std::vector<std::pair<int, bool>> attempts;
  TiltedSpace result;
};

/// Candidate R = ⊕ π*(T_a ⊗ M^{i·m}) ⊗ E_i, ordered fiber index major.
TiltedSpace candidate(const TiltedSpace& base, const FiberCollectionModel& fiber, int m);
ExtTable candidate_ext_table(const TiltedSpace& base, const FiberCollectionModel& fiber, int m);

/// Smallest m in [0, cap] whose candidate has no higher Ext.
FibrationPlan twist_search(const TiltedSpace& base, const FiberCollectionModel& fiber, int cap);
FibrationPlan evaluate_twist(const TiltedSpace& base, const FiberCollectionModel& fiber, int m);

struct TowerPlan {
  std::vector<int> twists;
  bool verified = false;
  std::size_t failed_stage = 0;  // meaningful when !verified
  std::vector<std::string> labels;
  ExtTable ext_table;
  std::optional<Witness> witness;
  std::vector<FibrationPlan> stage_plans;
  BigInt summand_count = 0;
};

/// Folds twist_search over the stages. With fixed_twists, each stage uses the
/// given exponent instead of searching.
TowerPlan tower_compose(const std::vector<FiberCollectionModel>& stages, const BaseModel& root, int cap,
                        const std::optional<std::vector<int>>& fixed_twists = std::nullopt);

/// Plan file: root, stages (table stages refer to files relative to base_dir), cap, optional twists.
struct PlanFile {
  BaseModel root;
  std::vector<FiberCollectionModel> stages;
  int cap = 8;
  std::optional<std::vector<int>> twists;
};
PlanFile parse_plan(const std::string& json_text, const std::string& base_dir);
PlanFile load_plan(const std::string& path);
TableFiber load_table(const std::string& path);

}  // namespace tilt
