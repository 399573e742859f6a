// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

// Torus fixed-point formula for χ on Grass(d, n). The torus parameters are
// specialized to x_i = t^{c_i} with distinct integers c_i, every summand is
// brought over the common denominator Π_{i<j} (1 - t^{|c_i - c_j|}), and the
// numerator is divided out exactly before evaluating at t = 1.

#include <map>
#include <stdexcept>

#include "tilt/bwb.hpp"

namespace tilt {
namespace {

struct Laurent {
  long low = 0;                // exponent of coeffs[0]
  std::vector<BigInt> coeffs;  // empty means zero

  static Laurent constant(BigInt c) { return {0, {std::move(c)}}; }
  static Laurent monomial(long e, BigInt c = 1) { return {e, {std::move(c)}}; }

  void trim() {
    std::size_t lo = 0;
    while (lo < coeffs.size() && coeffs[lo] == 0) ++lo;
    if (lo == coeffs.size()) {
      coeffs.clear();
      low = 0;
      return;
    }
    while (coeffs.back() == 0) coeffs.pop_back();
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(lo));
    low += static_cast<long>(lo);
  }
  long high() const { return low + static_cast<long>(coeffs.size()) - 1; }
};

Laurent operator+(const Laurent& a, const Laurent& b) {
  if (a.coeffs.empty()) return b;
  if (b.coeffs.empty()) return a;
  Laurent r;
  r.low = std::min(a.low, b.low);
  r.coeffs.assign(static_cast<std::size_t>(std::max(a.high(), b.high()) - r.low + 1), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[a.low - r.low + i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[b.low - r.low + i] += b.coeffs[i];
  r.trim();
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  Laurent r;
  r.low = a.low + b.low;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  r.trim();
  return r;
}

Laurent negate(Laurent a) {
  for (auto& c : a.coeffs) c = -c;
  return a;
}

// 1 - t^f, f > 0
Laurent one_minus_power(long f) { return Laurent::constant(1) + Laurent::monomial(f, -1); }

// Exact quotient by (1 - t^f); throws on a nonzero remainder.
Laurent divide_one_minus_power(const Laurent& p, long f) {
  if (p.coeffs.empty()) return p;
  const long deg = static_cast<long>(p.coeffs.size()) - 1;
  std::vector<BigInt> q(p.coeffs.size(), 0);
  for (long k = 0; k <= deg; ++k) q[k] = p.coeffs[k] + (k >= f ? q[k - f] : BigInt(0));
  for (long k = std::max(0L, deg - f + 1); k <= deg; ++k)
    if (q[k] != 0) throw std::runtime_error("localization sum is not a Laurent polynomial");
  Laurent r{p.low, std::vector<BigInt>(q.begin(), q.begin() + std::max(0L, deg - f + 1))};
  r.trim();
  return r;
}

BigInt value_at_one(const Laurent& p) {
  BigInt s = 0;
  for (const auto& c : p.coeffs) s += c;
  return s;
}

// Complete homogeneous symmetric polynomials h_0..h_top in the variables t^{e}.
std::vector<Laurent> complete_homogeneous(const std::vector<long>& exps, int top) {
  std::vector<Laurent> h(static_cast<std::size_t>(top) + 1);
  h[0] = Laurent::constant(1);
  for (long e : exps) {
    // h_k <- h_k + t^e h_{k-1}, ascending so the new h_{k-1} is used
    for (int k = 1; k <= top; ++k) h[k] = h[k] + Laurent::monomial(e) * h[k - 1];
  }
  return h;
}

// Jacobi–Trudi: s_λ = det(h_{λ_i - i + j}).
Laurent schur_polynomial(const Partition& lambda, const std::vector<long>& exps) {
  const int l = static_cast<int>(lambda.length());
  if (l == 0) return Laurent::constant(1);
  if (l > static_cast<int>(exps.size())) return {};
  const auto h = complete_homogeneous(exps, lambda.first() + l);
  auto entry = [&](int i, int j) -> Laurent {
    const int k = lambda[i] - i + j;
    if (k < 0) return {};
    return h[k];
  };
  // Laplace expansion along rows, memoized on the set of used columns.
  std::map<unsigned, Laurent> memo;
  auto det = [&](auto&& self, int row, unsigned used) -> Laurent {
    if (row == l) return Laurent::constant(1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    Laurent acc;
    int sign_pos = 0;
    for (int col = 0; col < l; ++col) {
      if (used & (1u << col)) continue;
      Laurent term = entry(row, col);
      if (!term.coeffs.empty()) {
        term = term * self(self, row + 1, used | (1u << col));
        acc = acc + (sign_pos % 2 ? negate(term) : term);
      }
      ++sign_pos;
    }
    memo[used] = acc;
    return acc;
  };
  return det(det, 0, 0u);
}

const std::vector<long>& torus_parameters() {
  static const std::vector<long> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  return primes;
}

}  // namespace

BigInt localization_euler(const Partition& a, const Partition& b, int d, int n) {
  if (d < 1 || d >= n) throw std::invalid_argument("localization needs 1 <= d < n");
  if (!a.fits_box(d, n - d) || !b.fits_box(d, n - d))
    throw std::invalid_argument("partitions must fit the " + std::to_string(d) + "x" + std::to_string(n - d) + " box");
  const auto& primes = torus_parameters();
  if (n > static_cast<int>(primes.size())) throw std::invalid_argument("localization supports n <= 16");
  const std::vector<long> c(primes.begin(), primes.begin() + n);

  Laurent numerator;
  std::vector<int> subset(d);
  for (int i = 0; i < d; ++i) subset[i] = i;
  while (true) {
    std::vector<bool> in(n, false);
    for (int i : subset) in[i] = true;
    std::vector<long> xs, xs_inv;
    for (int i : subset) {
      xs.push_back(c[i]);
      xs_inv.push_back(-c[i]);
    }
    Laurent term = schur_polynomial(a, xs_inv) * schur_polynomial(b, xs);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (in[i] == in[j]) {
          term = term * one_minus_power(std::abs(c[i] - c[j]));
          continue;
        }
        // factor 1/(1 - t^e), e = c_p - c_q with p in I, q outside
        const long e = in[i] ? c[i] - c[j] : c[j] - c[i];
        if (e < 0) term = negate(term * Laurent::monomial(-e));
      }
    numerator = numerator + term;

    int k = d - 1;
    while (k >= 0 && subset[k] == n - d + k) --k;
    if (k < 0) break;
    ++subset[k];
    for (int i = k + 1; i < d; ++i) subset[i] = subset[i - 1] + 1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) numerator = divide_one_minus_power(numerator, std::abs(c[i] - c[j]));
  return value_at_one(numerator);
}

}  // namespace tilt
