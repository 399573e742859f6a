// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include "tilt/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace tilt {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be non-increasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(std::size_t n) const {
  if (parts_.size() > n) throw std::invalid_argument("partition " + to_string() + " has too many rows");
  std::vector<int> out(parts_);
  out.resize(n, 0);
  return out;
}

bool Partition::fits_box(int rows, int cols) const {
  return static_cast<int>(parts_.size()) <= rows && first() <= cols;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

const char* to_string(OrderTag tag) {
  return tag == OrderTag::size_order ? "size_order" : "containment_order";
}

OrderTag order_tag_from_string(const std::string& s) {
  if (s == "size" || s == "size_order") return OrderTag::size_order;
  if (s == "containment" || s == "containment_order") return OrderTag::containment_order;
  throw std::invalid_argument("unknown order tag '" + s + "'");
}

bool size_order_less(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // graded reverse lex: a < b iff the last nonzero entry of a - b is positive
  const std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = n; i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

bool containment_order_less(const Partition& a, const Partition& b) {
  const std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

OrderedPartitionSet enumerate_box_partitions(int rows, int cols, OrderTag order) {
  if (rows < 1) throw std::invalid_argument("box needs at least one row");
  if (cols < 0) throw std::invalid_argument("box column count must be non-negative");

  OrderedPartitionSet out;
  out.box_rows = rows;
  out.box_cols = cols;
  out.order_tag = order;

  std::vector<int> row(rows, 0);
  std::function<void(int, int)> fill = [&](int i, int cap) {
    if (i == rows) {
      out.members.emplace_back(row);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      row[i] = v;
      fill(i + 1, v);
    }
    row[i] = 0;
  };
  fill(0, cols);

  if (order == OrderTag::size_order)
    std::sort(out.members.begin(), out.members.end(), size_order_less);
  else
    std::sort(out.members.begin(), out.members.end(), containment_order_less);
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> t(p.first(), 0);
  for (int r : p.parts())
    for (int c = 0; c < r; ++c) ++t[c];
  return Partition(std::move(t));
}

bool contains(const Partition& p, const Partition& q) {
  if (q.length() > p.length()) return false;
  for (std::size_t i = 0; i < q.length(); ++i)
    if (q[i] > p[i]) return false;
  return true;
}

}  // namespace tilt
