// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tilt/bigint.hpp"
#include "tilt/bwb.hpp"
#include "tilt/partitions.hpp"
#include "tilt/tower.hpp"

namespace tilt {

/// What a collection is expected to satisfy.
enum class Claim { strong_exceptional, tilting };
const char* to_string(Claim c);

/// A formal direct sum of irreducible bundles Σ^{w}(R^(k)) products on the
/// tautological tower of the space.
struct CollectionObject {
  std::string label;
  std::vector<std::pair<TowerObject, BigInt>> terms;

  static CollectionObject irreducible(std::string label, TowerObject obj);
  BigInt rank(const TowerSpace& space) const;
};

struct CollectionSpec {
  std::string name;
  FlagSpace space;
  std::vector<CollectionObject> objects;
  std::vector<BigInt> multiplicities;  // all 1 unless rescaled
  OrderTag order_tag = OrderTag::containment_order;
  /// True when objects are listed in the reverse of order_tag.
  bool reversed = false;
  Claim claim = Claim::strong_exceptional;
  /// Rank of K_0 of the space; the object count must match it.
  BigInt expected_k0 = 0;

  TowerSpace tower() const { return TowerSpace::from_flag(space); }
  std::string order_convention() const;
  CollectionSpec with_multiplicities(std::vector<BigInt> mults) const;
  /// Every object tensored with det(R^(1)∨)^c, i.e. O(c) on a Grassmannian.
  CollectionSpec twisted(int c) const;
  void validate() const;
};

/// Σ^λ(R), λ ∈ P(d, n-d), larger diagrams first.
CollectionSpec kapranov_collection(int d, int n);
/// Same objects listed in containment_order (smaller diagrams first).
CollectionSpec kapranov_collection_forward(int d, int n);
/// O, O(1), ..., O(n) on P^n.
CollectionSpec beilinson_collection(int n);
/// ⊗_k Σ^{λ^(k)}(R^(k)) over the tautological tower of the flag variety.
CollectionSpec flag_collection(const FlagSpace& space);
/// ∧^{λ'}(R) = ⊗_i ∧^{λ'_i}(R), λ ∈ P(d, n-d), in size_order; tilting, not exceptional.
CollectionSpec wedge_collection(int d, int n);

struct ExtTable {
  std::size_t size = 0;
  int max_degree = 0;
  std::map<std::tuple<std::size_t, std::size_t, int>, BigInt> dims;

  BigInt dim(std::size_t i, std::size_t j, int s) const;
  std::vector<std::vector<BigInt>> hom_matrix() const;
};

/// Ext^s(object i, object j) for all pairs, up to the dimension of the space.
ExtTable ext_table(const CollectionSpec& c);

struct Witness {
  std::string kind;  // higher_ext | backward_hom | endomorphism | k0_rank
  std::size_t from = 0;
  std::size_t to = 0;
  int degree = 0;
  BigInt dimension = 0;
};

struct VerificationReport {
  Claim claim = Claim::strong_exceptional;
  bool passed = false;
  bool is_strong_exceptional = false;
  bool is_exceptional_each = false;
  bool is_tilting = false;
  bool k0_matches = false;
  std::optional<Witness> witness;
  std::size_t k0_rank = 0;
  BigInt expected_k0 = 0;
  BigInt end_algebra_dim = 0;
  std::string order_convention;
  ExtTable table;
};

VerificationReport verify_tilting(const CollectionSpec& c);
VerificationReport verify_tilting(const CollectionSpec& c, const ExtTable& table);

/// Hom-dimension matrix of a collection that passes verification.
std::vector<std::vector<BigInt>> end_quiver_dims(const CollectionSpec& c);

}  // namespace tilt
