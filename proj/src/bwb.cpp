// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include "tilt/bwb.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tilt {

FlagSpace::FlagSpace(int n, std::vector<int> steps) : n_(n), steps_(std::move(steps)) {
  if (steps_.empty()) throw std::invalid_argument("flag space needs at least one step");
  if (steps_.front() < 1 || steps_.back() >= n_)
    throw std::invalid_argument("flag steps must satisfy 1 <= l_1 and l_m < n");
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i)
    if (steps_[i] >= steps_[i + 1]) throw std::invalid_argument("flag steps must be strictly increasing");
}

std::vector<int> FlagSpace::block_lengths() const {
  std::vector<int> out;
  int prev = 0;
  for (int l : steps_) {
    out.push_back(l - prev);
    prev = l;
  }
  out.push_back(n_ - prev);
  return out;
}

int FlagSpace::dimension() const {
  // dim = (n^2 - Σ b_k^2) / 2
  int sq = 0;
  for (int b : block_lengths()) sq += b * b;
  return (n_ * n_ - sq) / 2;
}

namespace {

std::vector<int> parse_ints(const std::string& text, const std::string& context) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find(',', pos), text.size());
    const auto item = text.substr(pos, end - pos);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw std::invalid_argument("malformed integer list in " + context);
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

}  // namespace

FlagSpace FlagSpace::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("space descriptor needs a kind prefix: " + text);
  const auto kind = text.substr(0, colon);
  const auto body = text.substr(colon + 1);
  if (kind == "grass") {
    const auto v = parse_ints(body, text);
    if (v.size() != 2) throw std::invalid_argument("grass descriptor is grass:d,n");
    return grassmannian(v[0], v[1]);
  }
  if (kind == "pn") {
    const auto v = parse_ints(body, text);
    if (v.size() != 1) throw std::invalid_argument("pn descriptor is pn:m");
    return projective(v[0]);
  }
  if (kind == "flag") {
    const auto semi = body.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("flag descriptor is flag:l_1,...,l_m;n");
    const auto n = parse_ints(body.substr(semi + 1), text);
    if (n.size() != 1) throw std::invalid_argument("flag descriptor is flag:l_1,...,l_m;n");
    return FlagSpace(n[0], parse_ints(body.substr(0, semi), text));
  }
  throw std::invalid_argument("unknown space kind: " + kind);
}

std::string FlagSpace::to_string() const {
  if (is_grassmannian()) return "grass:" + std::to_string(steps_[0]) + "," + std::to_string(n_);
  std::string s = "flag:";
  for (std::size_t i = 0; i < steps_.size(); ++i) s += (i ? "," : "") + std::to_string(steps_[i]);
  return s + ";" + std::to_string(n_);
}

HomogeneousBundle::HomogeneousBundle(FlagSpace sp, std::vector<GLWeight> bl)
    : space(std::move(sp)), blocks(std::move(bl)) {
  const auto lengths = space.block_lengths();
  if (blocks.size() != lengths.size())
    throw std::invalid_argument("bundle on " + space.to_string() + " needs " + std::to_string(lengths.size()) +
                                " blocks, got " + std::to_string(blocks.size()));
  for (std::size_t k = 0; k < lengths.size(); ++k)
    if (static_cast<int>(blocks[k].length()) != lengths[k])
      throw std::invalid_argument("block " + std::to_string(k) + " on " + space.to_string() + " must have length " +
                                  std::to_string(lengths[k]));
}

namespace {

void require_grassmannian(const FlagSpace& s) {
  if (!s.is_grassmannian()) throw std::invalid_argument(s.to_string() + " is not a Grassmannian");
}

}  // namespace

HomogeneousBundle HomogeneousBundle::of_sub_dual(const FlagSpace& g, const GLWeight& lambda) {
  require_grassmannian(g);
  const int d = g.steps()[0];
  return HomogeneousBundle(g, {lambda, GLWeight::zero(g.n() - d)});
}

HomogeneousBundle HomogeneousBundle::of_sub(const FlagSpace& g, const GLWeight& lambda) {
  return of_sub_dual(g, lambda.dual());
}

HomogeneousBundle HomogeneousBundle::of_quot(const FlagSpace& g, const GLWeight& lambda) {
  require_grassmannian(g);
  const int d = g.steps()[0];
  return HomogeneousBundle(g, {GLWeight::zero(d), lambda.dual()});
}

HomogeneousBundle HomogeneousBundle::line_bundle(int m, int k) {
  // R = O(-1) on P^m, so O(k) = (R^∨)^k
  return of_sub_dual(FlagSpace::projective(m), GLWeight{k});
}

std::vector<int> HomogeneousBundle::concatenated() const {
  std::vector<int> w;
  for (const auto& b : blocks) w.insert(w.end(), b.entries().begin(), b.entries().end());
  return w;
}

HomogeneousBundle HomogeneousBundle::twisted(int c) const {
  auto bl = blocks;
  bl[0] = bl[0].shifted(c);
  return HomogeneousBundle(space, std::move(bl));
}

HomogeneousBundle HomogeneousBundle::serre_dual() const {
  require_grassmannian(space);
  // ω = O(-n) = det(R^∨)^{-n}
  auto bl = blocks;
  bl[0] = bl[0].dual().shifted(-space.n());
  bl[1] = bl[1].dual();
  return HomogeneousBundle(space, std::move(bl));
}

CohomologyResult bott(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<long> shifted(n);
  for (int i = 0; i < n; ++i) shifted[i] = static_cast<long>(w[i]) + (n - 1 - i);
  int inversions = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (shifted[i] == shifted[j]) return CohomologyResult::vanishing();
      if (shifted[i] < shifted[j]) ++inversions;
    }
  std::sort(shifted.begin(), shifted.end(), std::greater<>());
  std::vector<int> dom(n);
  for (int i = 0; i < n; ++i) dom[i] = static_cast<int>(shifted[i] - (n - 1 - i));
  GLWeight weight(std::move(dom));
  BigInt dim = schur_dimension(weight, n);
  return CohomologyResult::in_degree(inversions, std::move(weight), std::move(dim));
}

CohomologyResult flag_cohomology(const HomogeneousBundle& b) { return bott(b.concatenated()); }

namespace {

// Number of ways to write `total` as an ordered sum of `parts` non-negative integers.
BigInt count_compositions(long total, int parts) {
  if (total < 0) return 0;
  // ways[t] starts as the count for zero parts, then absorbs one part per pass
  std::vector<BigInt> ways(static_cast<std::size_t>(total) + 1, 0);
  ways[0] = 1;
  for (int p = 0; p < parts; ++p)
    for (long t = 1; t <= total; ++t) ways[t] += ways[t - 1];
  return ways[total];
}

constexpr long kMaxMonomialDegree = 1000000;

}  // namespace

CohomologyResult pn_line_cohomology(long m, int n) {
  if (n < 1) throw std::invalid_argument("projective space dimension must be positive");
  if (m > kMaxMonomialDegree || m < -kMaxMonomialDegree)
    throw std::invalid_argument("line bundle degree out of supported range");
  // H^0: monomials of degree m in x_0..x_n.
  if (m >= 0) return CohomologyResult::in_degree(0, GLWeight{}, count_compositions(m, n + 1));
  // H^n: Laurent monomials with every exponent <= -1 and total degree m.
  if (m <= -n - 1) return CohomologyResult::in_degree(n, GLWeight{}, count_compositions(-m - (n + 1), n + 1));
  return CohomologyResult::vanishing();
}

std::optional<GLWeight> grass_pushforward(const GLWeight& gamma, int l, int ambient_rank) {
  if (l < 1 || l >= ambient_rank)
    throw std::invalid_argument("Grassmann bundle needs 1 <= l < rank");
  if (static_cast<int>(gamma.length()) != l)
    throw std::invalid_argument("weight " + gamma.to_string() + " must have length " + std::to_string(l));
  if (gamma.last() < -(ambient_rank - l))
    throw std::invalid_argument("weight " + gamma.to_string() + " below the pushforward bound -" +
                                std::to_string(ambient_rank - l));
  if (!gamma.is_nonnegative()) return std::nullopt;
  return gamma;
}

}  // namespace tilt
