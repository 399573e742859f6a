// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "tilt/partitions.hpp"
#include "tilt/schur.hpp"

using namespace tilt;

TEST_CASE("partition normalizes trailing zeros and rejects bad input") {
  CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));
  CHECK(Partition({0}).empty());
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, -1}), std::invalid_argument);
}

TEST_CASE("2x2 box in size order") {
  auto set = enumerate_box_partitions(2, 2, OrderTag::size_order);
  std::vector<Partition> expected = {{}, {1}, {1, 1}, {2}, {2, 1}, {2, 2}};
  CHECK(set.members == expected);
  CHECK(enumerate_box_partitions(1, 0, OrderTag::size_order).members == std::vector<Partition>{Partition{}});
  CHECK(enumerate_box_partitions(3, 2, OrderTag::size_order).members.size() == 10);
}

TEST_CASE("box enumeration agrees with lattice-point scan") {
  for (int rows = 1; rows <= 8; ++rows)
    for (int cols = 0; rows + cols <= 12; ++cols) {
      auto brute = oracle::box_partitions(rows, cols);
      for (auto tag : {OrderTag::size_order, OrderTag::containment_order}) {
        auto set = enumerate_box_partitions(rows, cols, tag);
        CHECK(set.members.size() == brute.size());
        CHECK(BigInt(set.members.size()) == binomial(rows + cols, rows));
        std::set<Partition> a(set.members.begin(), set.members.end()), b(brute.begin(), brute.end());
        CHECK(a == b);
      }
    }
}

TEST_CASE("orders are linear extensions of size and containment") {
  for (int rows = 1; rows <= 4; ++rows)
    for (int cols = 0; cols <= 4; ++cols) {
      auto by_size = enumerate_box_partitions(rows, cols, OrderTag::size_order).members;
      auto by_cont = enumerate_box_partitions(rows, cols, OrderTag::containment_order).members;
      for (std::size_t i = 0; i < by_size.size(); ++i)
        for (std::size_t j = 0; j < by_size.size(); ++j) {
          if (by_size[i].size() < by_size[j].size()) CHECK(i < j);
          if (i != j && contains(by_cont[j], by_cont[i])) CHECK(i < j);
        }
    }
}

TEST_CASE("conjugate") {
  CHECK(conjugate({3, 1}) == Partition({2, 1, 1}));
  CHECK(conjugate({}) == Partition{});
  CHECK(conjugate({2, 2}) == Partition({2, 2}));
  for (int rows = 1; rows <= 4; ++rows)
    for (int cols = 0; cols <= 4; ++cols)
      for (const auto& p : oracle::box_partitions(rows, cols)) {
        auto c = conjugate(p);
        CHECK(conjugate(c) == p);
        CHECK(c.size() == p.size());
        CHECK(c.fits_box(cols, rows));
      }
}

TEST_CASE("contains") {
  CHECK(contains({2, 1}, {1, 1}));
  CHECK_FALSE(contains({2}, {1, 1}));
  CHECK(contains({3, 2}, {}));
}

TEST_CASE("order tag names round trip") {
  for (auto tag : {OrderTag::size_order, OrderTag::containment_order})
    CHECK(order_tag_from_string(to_string(tag)) == tag);
  CHECK_THROWS(order_tag_from_string("bogus"));
}
