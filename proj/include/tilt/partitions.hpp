// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace tilt {

/// A Young diagram stored as its non-increasing row lengths with trailing
/// zeros stripped. The empty partition labels the trivial Schur functor.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// Row length, zero past the last row.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const;  // |λ|, number of boxes
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Row lengths padded with zeros to `n` entries (requires length() <= n).
  std::vector<int> padded(std::size_t n) const;

  bool fits_box(int rows, int cols) const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

enum class OrderTag { size_order, containment_order };

const char* to_string(OrderTag tag);
OrderTag order_tag_from_string(const std::string& s);

struct OrderedPartitionSet {
  int box_rows = 1;
  int box_cols = 0;
  std::vector<Partition> members;
  OrderTag order_tag = OrderTag::size_order;
};

/// All partitions inside a rows x cols box, sorted by the requested order.
///
/// size_order sorts by |λ| with graded reverse-lexicographic ties;
/// containment_order is the lexicographic order on padded rows, which is a
/// linear extension of diagram containment.
OrderedPartitionSet enumerate_box_partitions(int rows, int cols, OrderTag order);

/// Transposed diagram.
Partition conjugate(const Partition& p);

/// True iff the diagram of q sits inside the diagram of p.
bool contains(const Partition& p, const Partition& q);

/// Strict-weak "less" for the two total orders.
bool size_order_less(const Partition& a, const Partition& b);
bool containment_order_less(const Partition& a, const Partition& b);

}  // namespace tilt
