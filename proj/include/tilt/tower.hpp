// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "tilt/bigint.hpp"
#include "tilt/bwb.hpp"
#include "tilt/schur.hpp"

namespace tilt {

/// Iterated Grassmann bundle X_K -> ... -> X_1 -> X_0. The root X_0 is a point
/// or P^m carrying a split bundle E = ⊕ O(root_degrees[i]); stage 1 is
/// Grass(ranks[0], E) with tautological R^(1), and stage k > 1 is
/// Grass(ranks[k-1], R^(k-1)).
struct TowerSpace {
  int root_dim = 0;  // 0 for a point
  std::vector<int> root_degrees;
  std::vector<int> ranks;

  static TowerSpace over_point(int n, std::vector<int> ranks);
  static TowerSpace over_projective(int m, std::vector<int> degrees, std::vector<int> ranks);
  /// Flag(l_1 < ... < l_m; n) as the tower with ranks (l_m, ..., l_1).
  static TowerSpace from_flag(const FlagSpace& flag);

  int ambient_rank() const { return static_cast<int>(root_degrees.size()); }
  /// Rank of the bundle whose Grassmannian is stage k (0-based).
  int stage_ambient(std::size_t k) const { return k == 0 ? ambient_rank() : ranks[k - 1]; }
  int dimension() const;
  std::string to_string() const;
  void validate() const;
};

/// O(base_degree) ⊗ ⊗_k Σ^{weights[k]}(R^(k)); weights[k] has length ranks[k].
struct TowerObject {
  long base_degree = 0;
  std::vector<GLWeight> weights;

  std::string to_string() const;
  friend auto operator<=>(const TowerObject&, const TowerObject&) = default;
};

/// Cohomological degree -> dimension; absent degrees vanish.
using CohomologyTable = std::map<int, BigInt>;

/// H^*(X_K, O(base_degree) ⊗ ⊗_k Σ^{dual_weights[k]}(R^(k)∨)) by pushing down
/// one stage at a time with relative Borel–Weil–Bott.
CohomologyTable tower_cohomology(const TowerSpace& space, long base_degree, const std::vector<GLWeight>& dual_weights);

/// Ext^*(from, to) on the tower.
CohomologyTable tower_hom(const TowerSpace& space, const TowerObject& from, const TowerObject& to);

}  // namespace tilt
