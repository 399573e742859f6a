// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <set>
#include <string>
#include <vector>

namespace tilt {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the acceptance criteria (all of them when `only` is empty).
std::vector<CriterionResult> run_acceptance(const std::set<int>& only = {});

constexpr int kAcceptanceCriteria = 8;
/// Seed of the randomized pair sample in criterion 2.
constexpr unsigned kAcceptanceSeed = 20261018u;

}  // namespace tilt
