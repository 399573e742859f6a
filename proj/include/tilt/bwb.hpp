// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilt/bigint.hpp"
#include "tilt/partitions.hpp"
#include "tilt/schur.hpp"

namespace tilt {

/// Partial flag variety Flag(l_1 < ... < l_m; n) of a vector space V of
/// dimension n. A single step is Grass(l, n); steps 1..n-1 give the full flag.
class FlagSpace {
 public:
  FlagSpace(int n, std::vector<int> steps);
  static FlagSpace grassmannian(int d, int n) { return FlagSpace(n, {d}); }
  static FlagSpace projective(int m) { return FlagSpace(m + 1, {1}); }
  /// Parses "grass:d,n", "pn:m" or "flag:l_1,...,l_m;n".
  static FlagSpace parse(const std::string& text);

  int n() const { return n_; }
  const std::vector<int>& steps() const { return steps_; }
  bool is_grassmannian() const { return steps_.size() == 1; }
  /// Ranks of the successive quotients R_1, R_2/R_1, ..., V/R_m.
  std::vector<int> block_lengths() const;
  int dimension() const;
  std::string to_string() const;

  friend bool operator==(const FlagSpace&, const FlagSpace&) = default;

 private:
  int n_;
  std::vector<int> steps_;
};

/// Irreducible homogeneous bundle on a flag variety. blocks[k] is the weight
/// applied to the dual of the k-th successive quotient of the tautological
/// filtration, so the bundle is ⊗_k Σ^{blocks[k]}((R_k/R_{k-1})^∨) and
/// H^0 of a dominant concatenation w is Σ^w(V^∨).
struct HomogeneousBundle {
  FlagSpace space;
  std::vector<GLWeight> blocks;

  HomogeneousBundle(FlagSpace space, std::vector<GLWeight> blocks);

  /// Σ^λ(R) on Grass(d, n).
  static HomogeneousBundle of_sub(const FlagSpace& grass, const GLWeight& lambda);
  /// Σ^λ(R^∨) on Grass(d, n).
  static HomogeneousBundle of_sub_dual(const FlagSpace& grass, const GLWeight& lambda);
  /// Σ^λ(Q) on Grass(d, n), Q = V/R.
  static HomogeneousBundle of_quot(const FlagSpace& grass, const GLWeight& lambda);
  /// O(k) on P^m = Grass(1, m+1).
  static HomogeneousBundle line_bundle(int m, int k);

  /// Concatenated length-n weight (not necessarily dominant).
  std::vector<int> concatenated() const;
  /// Tensor with det(R_1^∨)^c (O(c) on a Grassmannian).
  HomogeneousBundle twisted(int c) const;
  /// E^∨ ⊗ ω for a Grassmannian; H^s(E) and H^{dim-s} of this have equal dimensions.
  HomogeneousBundle serre_dual() const;

  friend bool operator==(const HomogeneousBundle&, const HomogeneousBundle&) = default;
};

/// Cohomology of an irreducible homogeneous bundle: zero, or a single degree
/// carrying Σ^{weight}(V^∨).
struct CohomologyResult {
  bool zero = true;
  int degree = 0;
  GLWeight dominant_weight;
  BigInt dimension = 0;

  static CohomologyResult vanishing() { return {}; }
  static CohomologyResult in_degree(int degree, GLWeight weight, BigInt dim) {
    return {false, degree, std::move(weight), std::move(dim)};
  }
};

/// Borel–Weil–Bott: add ρ = (n-1, ..., 0), detect repeats, sort, count inversions.
CohomologyResult flag_cohomology(const HomogeneousBundle& b);

/// Same computation on a bare length-n weight (shared by the relative engine).
CohomologyResult bott(const std::vector<int>& w);

/// Line-bundle cohomology of O(m) on P^n by counting monomials. Only degree
/// and dimension are filled in; dominant_weight is left empty.
CohomologyResult pn_line_cohomology(long m, int n);

/// χ(Σ^a(R)^∨ ⊗ Σ^b(R)) on Grass(d, n) by torus fixed-point summation.
/// Independent of flag_cohomology and of the LR engine.
BigInt localization_euler(const Partition& a, const Partition& b, int d, int n);

/// Direct image of Σ^γ(R^∨) under Grass(l, E) -> X with rank E = ambient_rank:
/// Σ^γ(E^∨) in degree 0 when γ >= 0, nothing otherwise. Throws when
/// γ_l < -(ambient_rank - l).
std::optional<GLWeight> grass_pushforward(const GLWeight& gamma, int l, int ambient_rank);

}  // namespace tilt
