// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tilt/bigint.hpp"
#include "tilt/partitions.hpp"

namespace tilt {

/// Highest weight of an irreducible GL_r representation: a non-increasing
/// integer sequence kept at its full declared length r. Negative entries are
/// allowed; Σ^w(F) means Σ^{w+m}(F) ⊗ det(F)^{-m} for any m making w+m >= 0.
class GLWeight {
 public:
  GLWeight() = default;
  GLWeight(std::initializer_list<int> entries);
  explicit GLWeight(std::vector<int> entries);
  /// The partition padded with zeros to `length` entries.
  static GLWeight from_partition(const Partition& p, std::size_t length);
  static GLWeight zero(std::size_t length) { return GLWeight(std::vector<int>(length, 0)); }

  const std::vector<int>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int first() const { return entries_.empty() ? 0 : entries_.front(); }
  int last() const { return entries_.empty() ? 0 : entries_.back(); }
  long degree() const;  // sum of entries
  bool is_nonnegative() const { return entries_.empty() || last() >= 0; }

  /// Weight of the dual representation: (-w_r, ..., -w_1).
  GLWeight dual() const;
  /// Adds `c` to every entry (tensoring with det^c).
  GLWeight shifted(int c) const;
  /// The minimal normalizing shift max(0, -min entry).
  int normalizing_shift() const { return last() < 0 ? -last() : 0; }
  /// Requires is_nonnegative().
  Partition to_partition() const;

  std::string to_string() const;

  friend auto operator<=>(const GLWeight&, const GLWeight&) = default;

 private:
  std::vector<int> entries_;
};

/// Formal sum of irreducibles; all keys share one length, multiplicities >= 1.
using WeightExpansion = std::map<GLWeight, BigInt>;

/// Σ^a ⊗ Σ^b on a rank-`rank` space, via LR skew-tableau enumeration.
/// Constituents with more than `rank` rows are dropped.
WeightExpansion lr_expand(const Partition& a, const Partition& b, int rank);

/// Σ^{-a} ⊗ Σ^b on a rank-`rank` space, i.e. the decomposition of
/// Hom(Σ^a F, Σ^b F) into Σ^γ F.
WeightExpansion hom_expand(const Partition& a, const Partition& b, int rank);

/// Σ^u ⊗ Σ^v for weights of equal length (determinant-normalized LR).
WeightExpansion weight_tensor(const GLWeight& u, const GLWeight& v);

/// Hom(Σ^u F, Σ^v F) = Σ^{u*} ⊗ Σ^v for weights of equal length.
WeightExpansion weight_hom(const GLWeight& u, const GLWeight& v);

/// Dimension of the irreducible GL_n module of highest weight w (hook-content
/// formula). Non-negative weights shorter than n are padded with zeros;
/// weights with negative entries must have length exactly n.
BigInt schur_dimension(const GLWeight& w, int n);
BigInt schur_dimension(const Partition& p, int n);

/// Line-bundle degrees of Σ^w(O(d_1) ⊕ ... ⊕ O(d_N)), as degree -> multiplicity.
/// Weights with negative entries must have length N and are handled through
/// the determinant twist.
std::map<long, BigInt> split_bundle_expand(const GLWeight& w, const std::vector<int>& degrees);

/// Σ^w(F ⊗ L^p) = Σ^w(F) ⊗ L^{p|w|}; returns (w, p|w|). Requires w >= 0.
std::pair<GLWeight, long> twist_weight(const GLWeight& w, long line_power);

}  // namespace tilt
