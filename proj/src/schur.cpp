// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include "tilt/schur.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace tilt {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

GLWeight::GLWeight(std::initializer_list<int> entries) : GLWeight(std::vector<int>(entries)) {}

GLWeight::GLWeight(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
    if (entries_[i] < entries_[i + 1])
      throw std::invalid_argument("weight entries must be non-increasing: " + to_string());
}

GLWeight GLWeight::from_partition(const Partition& p, std::size_t length) {
  return GLWeight(p.padded(length));
}

long GLWeight::degree() const { return std::accumulate(entries_.begin(), entries_.end(), 0L); }

GLWeight GLWeight::dual() const {
  std::vector<int> out(entries_.rbegin(), entries_.rend());
  for (int& e : out) e = -e;
  return GLWeight(std::move(out));
}

GLWeight GLWeight::shifted(int c) const {
  std::vector<int> out(entries_);
  for (int& e : out) e += c;
  return GLWeight(std::move(out));
}

Partition GLWeight::to_partition() const {
  if (!is_nonnegative()) throw std::invalid_argument("weight " + to_string() + " is not a partition");
  return Partition(entries_);
}

std::string GLWeight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

namespace {

// Adds the rows of `b` one label at a time as horizontal strips, keeping the
// reverse reading word a lattice word.
class LrEnumerator {
 public:
  LrEnumerator(const Partition& b, int rank) : b_(b.parts()), rank_(rank) {}

  std::map<Partition, BigInt> run(const Partition& a) {
    std::vector<int> shape = a.padded(rank_);
    std::vector<int> prev(rank_, 0);
    place_label(0, shape, prev);
    return std::move(out_);
  }

 private:
  void place_label(std::size_t k, const std::vector<int>& shape, const std::vector<int>& prev) {
    if (k == b_.size()) {
      out_[Partition(shape)] += 1;
      return;
    }
    std::vector<int> counts(rank_, 0);
    distribute(k, 0, b_[k], 0, 0, shape, prev, counts);
  }

  // cum_new: label-k boxes in rows < r; cum_prev: label-(k-1) boxes in rows < r.
  void distribute(std::size_t k, int r, int remaining, int cum_new, int cum_prev,
                  const std::vector<int>& shape, const std::vector<int>& prev,
                  std::vector<int>& counts) {
    if (remaining == 0) {
      std::vector<int> next(shape);
      for (int i = 0; i < rank_; ++i) next[i] += counts[i];
      place_label(k + 1, next, counts);
      return;
    }
    if (r == rank_) return;
    int cap = remaining;
    if (r > 0) cap = std::min(cap, shape[r - 1] - shape[r]);
    if (k > 0) cap = std::min(cap, cum_prev - cum_new);
    for (int c = cap; c >= 0; --c) {
      counts[r] = c;
      distribute(k, r + 1, remaining - c, cum_new + c, cum_prev + prev[r], shape, prev, counts);
    }
    counts[r] = 0;
  }

  std::vector<int> b_;
  int rank_;
  std::map<Partition, BigInt> out_;
};

struct LrKey {
  Partition a, b;
  int rank;
  friend auto operator<=>(const LrKey&, const LrKey&) = default;
};

std::mutex lr_cache_mutex;
std::map<LrKey, WeightExpansion> lr_cache;

}  // namespace

WeightExpansion lr_expand(const Partition& a, const Partition& b, int rank) {
  if (rank < 1) throw std::invalid_argument("lr_expand: rank must be positive");
  if (static_cast<int>(a.length()) > rank || static_cast<int>(b.length()) > rank) return {};
  LrKey key{a, b, rank};
  {
    std::lock_guard lock(lr_cache_mutex);
    if (auto it = lr_cache.find(key); it != lr_cache.end()) return it->second;
  }
  WeightExpansion out;
  for (auto& [nu, c] : LrEnumerator(b, rank).run(a))
    out.emplace(GLWeight::from_partition(nu, rank), c);
  std::lock_guard lock(lr_cache_mutex);
  lr_cache.emplace(std::move(key), out);
  return out;
}

WeightExpansion weight_tensor(const GLWeight& u, const GLWeight& v) {
  if (u.length() != v.length()) throw std::invalid_argument("weight_tensor: length mismatch");
  const int rank = static_cast<int>(u.length());
  if (rank == 0) return {{GLWeight{}, BigInt(1)}};
  const int su = u.normalizing_shift();
  const int sv = v.normalizing_shift();
  WeightExpansion out;
  for (auto& [w, c] : lr_expand(u.shifted(su).to_partition(), v.shifted(sv).to_partition(), rank))
    out.emplace(w.shifted(-su - sv), c);
  return out;
}

WeightExpansion weight_hom(const GLWeight& u, const GLWeight& v) { return weight_tensor(u.dual(), v); }

WeightExpansion hom_expand(const Partition& a, const Partition& b, int rank) {
  if (rank < 1) throw std::invalid_argument("hom_expand: rank must be positive");
  return weight_hom(GLWeight::from_partition(a, rank), GLWeight::from_partition(b, rank));
}

BigInt schur_dimension(const GLWeight& w, int n) {
  if (n < 1) throw std::invalid_argument("schur_dimension: n must be positive");
  if (static_cast<int>(w.length()) > n)
    throw std::invalid_argument("schur_dimension: weight " + w.to_string() + " is longer than n=" +
                                std::to_string(n));
  std::vector<int> e = w.entries();
  if (static_cast<int>(e.size()) < n) {
    if (!w.is_nonnegative())
      throw std::invalid_argument("schur_dimension: a weight with negative entries needs full length n");
    e.resize(n, 0);
  }
  const int shift = e.back() < 0 ? -e.back() : 0;
  for (int& x : e) x += shift;
  Partition p(e);
  Partition pc = conjugate(p);
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < p.length(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      num *= n + j - static_cast<int>(i);
      den *= (p[i] - j - 1) + (pc[j] - static_cast<int>(i) - 1) + 1;
    }
  }
  return num / den;
}

BigInt schur_dimension(const Partition& p, int n) {
  return schur_dimension(GLWeight(p.parts()), n);
}

namespace {

using DegreeMap = std::map<long, BigInt>;

// Character of Σ^λ on O(d_0) ⊕ ... ⊕ O(d_{k-1}) via the branching rule.
class SplitCharacter {
 public:
  explicit SplitCharacter(const std::vector<int>& degrees) : degrees_(degrees) {}

  DegreeMap eval(const std::vector<int>& lambda, std::size_t k) {
    // lambda is padded to length k
    if (k == 0) return {{0L, BigInt(1)}};
    auto key = std::make_pair(lambda, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    DegreeMap out;
    std::vector<int> mu(k - 1, 0);
    const long total = std::accumulate(lambda.begin(), lambda.end(), 0L);
    interlace(lambda, k, 0, mu, total, out);
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  // mu_i in [lambda_{i+1}, lambda_i]
  void interlace(const std::vector<int>& lambda, std::size_t k, std::size_t i, std::vector<int>& mu,
                 long total, DegreeMap& out) {
    if (i + 1 == k) {
      const long mu_size = std::accumulate(mu.begin(), mu.end(), 0L);
      const long last_deg = static_cast<long>(degrees_[k - 1]) * (total - mu_size);
      for (auto& [d, c] : eval(mu, k - 1)) out[d + last_deg] += c;
      return;
    }
    for (int v = lambda[i + 1]; v <= lambda[i]; ++v) {
      mu[i] = v;
      interlace(lambda, k, i + 1, mu, total, out);
    }
  }

  std::vector<int> degrees_;
  std::map<std::pair<std::vector<int>, std::size_t>, DegreeMap> memo_;
};

}  // namespace

std::map<long, BigInt> split_bundle_expand(const GLWeight& w, const std::vector<int>& degrees) {
  const std::size_t n = degrees.size();
  if (w.length() > n) {
    throw std::invalid_argument("split_bundle_expand: weight " + w.to_string() + " longer than bundle rank " +
                                std::to_string(n));
  }
  std::vector<int> e = w.entries();
  if (e.size() < n) {
    if (!w.is_nonnegative())
      throw std::invalid_argument("split_bundle_expand: a weight with negative entries needs full length");
    e.resize(n, 0);
  }
  if (n == 0) return {{0L, BigInt(1)}};
  const int shift = e.back() < 0 ? -e.back() : 0;
  for (int& x : e) x += shift;
  // Σ^w = Σ^{w+shift} ⊗ det^{-shift}
  const long det_degree = std::accumulate(degrees.begin(), degrees.end(), 0L);
  std::map<long, BigInt> out;
  for (auto& [d, c] : SplitCharacter(degrees).eval(e, n)) out[d - shift * det_degree] += c;
  return out;
}

std::pair<GLWeight, long> twist_weight(const GLWeight& w, long line_power) {
  if (!w.is_nonnegative())
    throw std::invalid_argument("twist_weight: weight " + w.to_string() +
                                " has negative entries; normalize by a determinant first");
  return {w, w.degree() * line_power};
}

}  // namespace tilt
