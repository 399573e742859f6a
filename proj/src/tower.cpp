// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include "tilt/tower.hpp"

#include <stdexcept>

namespace tilt {

TowerSpace TowerSpace::over_point(int n, std::vector<int> ranks) {
  TowerSpace t{0, std::vector<int>(n, 0), std::move(ranks)};
  t.validate();
  return t;
}

TowerSpace TowerSpace::over_projective(int m, std::vector<int> degrees, std::vector<int> ranks) {
  TowerSpace t{m, std::move(degrees), std::move(ranks)};
  t.validate();
  return t;
}

TowerSpace TowerSpace::from_flag(const FlagSpace& flag) {
  std::vector<int> ranks(flag.steps().rbegin(), flag.steps().rend());
  return over_point(flag.n(), std::move(ranks));
}

void TowerSpace::validate() const {
  if (root_dim < 0) throw std::invalid_argument("root dimension must be non-negative");
  if (root_degrees.empty()) throw std::invalid_argument("tower needs an ambient bundle of positive rank");
  if (root_dim == 0)
    for (int a : root_degrees)
      if (a != 0) throw std::invalid_argument("bundle over a point must have all degrees 0");
  for (std::size_t k = 0; k < ranks.size(); ++k)
    if (ranks[k] < 1 || ranks[k] >= stage_ambient(k))
      throw std::invalid_argument("stage " + std::to_string(k + 1) + " rank must lie in [1, " +
                                  std::to_string(stage_ambient(k) - 1) + "]");
}

int TowerSpace::dimension() const {
  int dim = root_dim;
  for (std::size_t k = 0; k < ranks.size(); ++k) dim += ranks[k] * (stage_ambient(k) - ranks[k]);
  return dim;
}

std::string TowerSpace::to_string() const {
  std::string s = root_dim == 0 ? "point" : "P^" + std::to_string(root_dim);
  s += "[";
  for (std::size_t i = 0; i < root_degrees.size(); ++i) s += (i ? "," : "") + std::to_string(root_degrees[i]);
  s += "]";
  for (int r : ranks) s += "<-G" + std::to_string(r);
  return s;
}

std::string TowerObject::to_string() const {
  std::string s = "O(" + std::to_string(base_degree) + ")";
  for (const auto& w : weights) s += "*S" + w.to_string();
  return s;
}

namespace {

void add_into(CohomologyTable& out, int degree, const BigInt& dim) {
  if (dim != 0) out[degree] += dim;
}

}  // namespace

CohomologyTable tower_cohomology(const TowerSpace& space, long base_degree, const std::vector<GLWeight>& dual_weights) {
  const std::size_t stages = space.ranks.size();
  if (dual_weights.size() != stages) throw std::invalid_argument("tower bundle needs one weight per stage");
  for (std::size_t k = 0; k < stages; ++k)
    if (static_cast<int>(dual_weights[k].length()) != space.ranks[k])
      throw std::invalid_argument("stage " + std::to_string(k + 1) + " weight must have length " +
                                  std::to_string(space.ranks[k]));
  if (space.root_dim == 0 && base_degree != 0)
    throw std::invalid_argument("a point carries no line bundles of nonzero degree");

  // state: (degree, weight on the dual of the current top bundle) -> multiplicity
  std::map<std::pair<int, GLWeight>, BigInt> state;
  if (stages == 0) {
    state[{0, GLWeight::zero(space.ambient_rank())}] = 1;
  } else {
    state[{0, dual_weights[stages - 1]}] = 1;
    for (std::size_t k = stages; k-- > 0;) {
      const int ambient = space.stage_ambient(k);
      std::map<std::pair<int, GLWeight>, BigInt> next;
      for (const auto& [key, mult] : state) {
        std::vector<int> w = key.second.entries();
        w.resize(ambient, 0);
        const auto r = bott(w);
        if (r.zero) continue;
        const int degree = key.first + r.degree;
        if (k == 0) {
          next[{degree, r.dominant_weight}] += mult;
        } else {
          for (const auto& [g, m] : weight_tensor(r.dominant_weight, dual_weights[k - 1])) next[{degree, g}] += mult * m;
        }
      }
      state = std::move(next);
    }
  }

  CohomologyTable out;
  std::vector<int> dual_degrees;
  for (int a : space.root_degrees) dual_degrees.push_back(-a);
  for (const auto& [key, mult] : state) {
    const auto& [degree, v] = key;
    if (space.root_dim == 0) {
      add_into(out, degree, mult * schur_dimension(v, space.ambient_rank()));
      continue;
    }
    for (const auto& [line, m] : split_bundle_expand(v, dual_degrees)) {
      const auto r = pn_line_cohomology(line + base_degree, space.root_dim);
      if (!r.zero) add_into(out, degree + r.degree, mult * m * r.dimension);
    }
  }
  return out;
}

CohomologyTable tower_hom(const TowerSpace& space, const TowerObject& from, const TowerObject& to) {
  const std::size_t stages = space.ranks.size();
  if (from.weights.size() != stages || to.weights.size() != stages)
    throw std::invalid_argument("tower objects need one weight per stage");
  // Hom(Σ^u R, Σ^v R) = Σ^{v*} ⊗ Σ^u of R^∨
  std::vector<std::vector<std::pair<GLWeight, BigInt>>> factors(stages);
  for (std::size_t k = 0; k < stages; ++k)
    for (const auto& [g, m] : weight_hom(to.weights[k], from.weights[k])) factors[k].emplace_back(g, m);

  CohomologyTable out;
  std::vector<GLWeight> pick(stages);
  auto recurse = [&](auto&& self, std::size_t k, const BigInt& mult) -> void {
    if (k == stages) {
      for (const auto& [deg, dim] : tower_cohomology(space, to.base_degree - from.base_degree, pick))
        add_into(out, deg, mult * dim);
      return;
    }
    for (const auto& [g, m] : factors[k]) {
      pick[k] = g;
      self(self, k + 1, mult * m);
    }
  };
  recurse(recurse, 0, BigInt(1));
  return out;
}

}  // namespace tilt
