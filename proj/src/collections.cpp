// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include "tilt/collections.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tilt/parallel.hpp"

namespace tilt {

const char* to_string(Claim c) { return c == Claim::tilting ? "tilting" : "strong_exceptional"; }

CollectionObject CollectionObject::irreducible(std::string label, TowerObject obj) {
  return {std::move(label), {{std::move(obj), BigInt(1)}}};
}

BigInt CollectionObject::rank(const TowerSpace& space) const {
  BigInt total = 0;
  for (const auto& [obj, mult] : terms) {
    BigInt r = mult;
    for (std::size_t k = 0; k < obj.weights.size(); ++k) r *= schur_dimension(obj.weights[k], space.ranks[k]);
    total += r;
  }
  return total;
}

std::string CollectionSpec::order_convention() const {
  std::string s = reversed ? "reverse " : "";
  s += to_string(order_tag);
  return s + "; Hom(E_i, E_j[s]) = 0 for i > j";
}

CollectionSpec CollectionSpec::with_multiplicities(std::vector<BigInt> mults) const {
  CollectionSpec c = *this;
  c.multiplicities = std::move(mults);
  c.validate();
  return c;
}

CollectionSpec CollectionSpec::twisted(int c) const {
  CollectionSpec out = *this;
  for (auto& obj : out.objects)
    for (auto& [term, mult] : obj.terms) term.weights[0] = term.weights[0].shifted(-c);
  if (c != 0) out.name += " twisted by " + std::to_string(c);
  return out;
}

void CollectionSpec::validate() const {
  if (objects.empty()) throw std::invalid_argument("collection has no objects");
  if (multiplicities.size() != objects.size())
    throw std::invalid_argument("collection needs one multiplicity per object");
  for (const auto& m : multiplicities)
    if (m < 1) throw std::invalid_argument("multiplicities must be positive");
  const auto t = tower();
  std::set<std::string> labels;
  for (const auto& obj : objects) {
    if (!labels.insert(obj.label).second) throw std::invalid_argument("duplicate object " + obj.label);
    if (obj.terms.empty()) throw std::invalid_argument("object " + obj.label + " is empty");
    for (const auto& [term, mult] : obj.terms) {
      if (mult < 1) throw std::invalid_argument("object " + obj.label + " has a non-positive term multiplicity");
      if (term.base_degree != 0) throw std::invalid_argument("objects on a flag variety carry no base degree");
      if (term.weights.size() != t.ranks.size())
        throw std::invalid_argument("object " + obj.label + " needs one weight per tower stage");
      for (std::size_t k = 0; k < t.ranks.size(); ++k)
        if (static_cast<int>(term.weights[k].length()) != t.ranks[k])
          throw std::invalid_argument("object " + obj.label + " has a weight of the wrong length");
    }
  }
}

namespace {

std::string schur_label(const Partition& p, const std::string& bundle) { return "S" + p.to_string() + bundle; }

CollectionSpec make_spec(std::string name, FlagSpace space, std::vector<CollectionObject> objects, OrderTag tag,
                         bool reversed, Claim claim, BigInt k0) {
  CollectionSpec c{std::move(name), std::move(space), std::move(objects), {}, tag, reversed, claim, std::move(k0)};
  c.multiplicities.assign(c.objects.size(), BigInt(1));
  c.validate();
  return c;
}

std::vector<Partition> box(int rows, int cols, bool larger_first) {
  auto members = enumerate_box_partitions(rows, cols, OrderTag::containment_order).members;
  if (larger_first) std::reverse(members.begin(), members.end());
  return members;
}

CollectionSpec kapranov(int d, int n, bool larger_first) {
  if (d < 1 || d >= n) throw std::invalid_argument("Kapranov collection needs 1 <= d < n");
  std::vector<CollectionObject> objects;
  for (const auto& p : box(d, n - d, larger_first))
    objects.push_back(CollectionObject::irreducible(schur_label(p, "[R]"), {0, {GLWeight::from_partition(p, d)}}));
  return make_spec("kapranov(" + std::to_string(d) + "," + std::to_string(n) + ")", FlagSpace::grassmannian(d, n),
                   std::move(objects), OrderTag::containment_order, larger_first, Claim::strong_exceptional,
                   binomial(n, d));
}

}  // namespace

CollectionSpec kapranov_collection(int d, int n) { return kapranov(d, n, true); }
CollectionSpec kapranov_collection_forward(int d, int n) { return kapranov(d, n, false); }

CollectionSpec beilinson_collection(int n) {
  if (n < 1) throw std::invalid_argument("Beilinson collection needs n >= 1");
  std::vector<CollectionObject> objects;
  // O(k) = det(R^∨)^k = Σ^{(-k)}(R) on P^n
  for (int k = 0; k <= n; ++k)
    objects.push_back(CollectionObject::irreducible("O(" + std::to_string(k) + ")", {0, {GLWeight{-k}}}));
  return make_spec("beilinson(" + std::to_string(n) + ")", FlagSpace::projective(n), std::move(objects),
                   OrderTag::containment_order, true, Claim::strong_exceptional, BigInt(n + 1));
}

CollectionSpec flag_collection(const FlagSpace& space) {
  const auto tower = TowerSpace::from_flag(space);
  const std::size_t stages = tower.ranks.size();
  std::vector<std::vector<Partition>> boxes(stages);
  BigInt k0 = 1;
  for (std::size_t k = 0; k < stages; ++k) {
    boxes[k] = box(tower.ranks[k], tower.stage_ambient(k) - tower.ranks[k], true);
    k0 *= boxes[k].size();
  }
  std::vector<CollectionObject> objects;
  std::vector<std::size_t> idx(stages, 0);
  // the last stage varies slowest
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == stages) {
      TowerObject obj;
      std::string label;
      obj.weights.resize(stages);
      for (std::size_t k = 0; k < stages; ++k) {
        const auto& p = boxes[k][idx[k]];
        obj.weights[k] = GLWeight::from_partition(p, tower.ranks[k]);
        label += (k ? "*" : "") + schur_label(p, "[R" + std::to_string(k + 1) + "]");
      }
      objects.push_back(CollectionObject::irreducible(label, std::move(obj)));
      return;
    }
    const std::size_t k = stages - 1 - depth;
    for (idx[k] = 0; idx[k] < boxes[k].size(); ++idx[k]) self(self, depth + 1);
  };
  recurse(recurse, 0);
  return make_spec("flag(" + space.to_string() + ")", space, std::move(objects), OrderTag::containment_order, true,
                   Claim::strong_exceptional, k0);
}

CollectionSpec wedge_collection(int d, int n) {
  if (d < 1 || d >= n) throw std::invalid_argument("wedge collection needs 1 <= d < n");
  std::vector<CollectionObject> objects;
  for (const auto& lambda : enumerate_box_partitions(d, n - d, OrderTag::size_order).members) {
    const auto conj = conjugate(lambda);
    WeightExpansion acc{{GLWeight::zero(d), BigInt(1)}};
    for (int part : conj.parts()) {
      WeightExpansion next;
      const Partition column(std::vector<int>(part, 1));
      for (const auto& [w, m] : acc)
        for (const auto& [g, c] : lr_expand(w.to_partition(), column, d)) next[g] += m * c;
      acc = std::move(next);
    }
    CollectionObject obj{"wedge" + conj.to_string() + "[R]", {}};
    for (const auto& [w, m] : acc) obj.terms.emplace_back(TowerObject{0, {w}}, m);
    objects.push_back(std::move(obj));
  }
  return make_spec("wedge(" + std::to_string(d) + "," + std::to_string(n) + ")", FlagSpace::grassmannian(d, n),
                   std::move(objects), OrderTag::size_order, false, Claim::tilting, binomial(n, d));
}

BigInt ExtTable::dim(std::size_t i, std::size_t j, int s) const {
  auto it = dims.find({i, j, s});
  return it == dims.end() ? BigInt(0) : it->second;
}

std::vector<std::vector<BigInt>> ExtTable::hom_matrix() const {
  std::vector<std::vector<BigInt>> m(size, std::vector<BigInt>(size, 0));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m[i][j] = dim(i, j, 0);
  return m;
}

namespace {

CohomologyTable object_ext(const CollectionSpec& c, const TowerSpace& tower, const CollectionObject& a,
                           const CollectionObject& b) {
  CohomologyTable out;
  for (const auto& [ta, ma] : a.terms)
    for (const auto& [tb, mb] : b.terms) {
      const BigInt mult = ma * mb;
      if (c.space.is_grassmannian()) {
        // Hom(Σ^u R, Σ^v R) = Σ^{v*} ⊗ Σ^u of R^∨
        for (const auto& [g, m] : weight_hom(tb.weights[0], ta.weights[0])) {
          auto r = flag_cohomology(HomogeneousBundle::of_sub_dual(c.space, g));
          if (!r.zero) out[r.degree] += mult * m * r.dimension;
        }
      } else {
        for (const auto& [deg, dim] : tower_hom(tower, ta, tb)) out[deg] += mult * dim;
      }
    }
  return out;
}

}  // namespace

ExtTable ext_table(const CollectionSpec& c) {
  c.validate();
  const auto tower = c.tower();
  const std::size_t n = c.objects.size();
  std::vector<CohomologyTable> cells(n * n);
  parallel_for(n * n, [&](std::size_t k) { cells[k] = object_ext(c, tower, c.objects[k / n], c.objects[k % n]); });
  ExtTable t;
  t.size = n;
  t.max_degree = c.space.dimension();
  for (std::size_t k = 0; k < n * n; ++k)
    for (const auto& [deg, dim] : cells[k]) {
      if (deg > t.max_degree) throw std::logic_error("cohomology above the dimension of the space");
      if (dim != 0) t.dims[{k / n, k % n, deg}] = dim;
    }
  return t;
}

VerificationReport verify_tilting(const CollectionSpec& c) { return verify_tilting(c, ext_table(c)); }

VerificationReport verify_tilting(const CollectionSpec& c, const ExtTable& table) {
  VerificationReport r;
  r.claim = c.claim;
  r.table = table;
  r.k0_rank = c.objects.size();
  r.expected_k0 = c.expected_k0;
  r.k0_matches = BigInt(r.k0_rank) == c.expected_k0;
  r.order_convention = c.order_convention();

  std::optional<Witness> higher, backward, endo;
  for (const auto& [key, dim] : table.dims) {
    const auto& [i, j, s] = key;
    if (s > 0 && !higher) higher = Witness{"higher_ext", i, j, s, dim};
    if (s == 0 && i > j && !backward) backward = Witness{"backward_hom", i, j, s, dim};
  }
  for (std::size_t i = 0; i < table.size && !endo; ++i)
    if (table.dim(i, i, 0) != 1) endo = Witness{"endomorphism", i, i, 0, table.dim(i, i, 0)};

  r.is_tilting = !higher.has_value();
  r.is_exceptional_each = !endo.has_value();
  for (std::size_t i = 0; i < table.size; ++i)
    for (int s = 1; s <= table.max_degree; ++s)
      if (table.dim(i, i, s) != 0) r.is_exceptional_each = false;
  r.is_strong_exceptional = r.is_tilting && r.is_exceptional_each && !backward;

  for (std::size_t i = 0; i < table.size; ++i)
    for (std::size_t j = 0; j < table.size; ++j)
      r.end_algebra_dim += table.dim(i, j, 0) * c.multiplicities[i] * c.multiplicities[j];

  if (c.claim == Claim::strong_exceptional) {
    r.passed = r.is_strong_exceptional && r.k0_matches;
    if (higher) r.witness = higher;
    else if (backward) r.witness = backward;
    else if (endo) r.witness = endo;
  } else {
    r.passed = r.is_tilting && r.k0_matches;
    r.witness = higher;
  }
  if (!r.witness && !r.k0_matches) r.witness = Witness{"k0_rank", 0, 0, 0, BigInt(r.k0_rank)};
  return r;
}

std::vector<std::vector<BigInt>> end_quiver_dims(const CollectionSpec& c) {
  auto r = verify_tilting(c);
  if (!r.passed) throw std::invalid_argument("collection " + c.name + " does not pass verification");
  return r.table.hom_matrix();
}

}  // namespace tilt
