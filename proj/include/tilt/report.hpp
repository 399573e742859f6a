// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tilt/bigint.hpp"
#include "tilt/bwb.hpp"
#include "tilt/collections.hpp"
#include "tilt/descent.hpp"
#include "tilt/fibration.hpp"

namespace tilt {

enum class Verdict { pass, fail, not_applicable };
const char* to_string(Verdict v);

/// Canonical JSON report: sorted keys, integers as decimal strings.
struct Report {
  std::string command;
  Verdict verdict = Verdict::not_applicable;
  std::string canonical;  // compact serialization

  /// Compact or indented rendering of the same payload, newline-terminated.
  std::string render(bool pretty) const;
  /// 0 for pass and n/a, 1 for fail.
  int exit_code() const { return verdict == Verdict::fail ? 1 : 0; }
};

std::string engine_version();

Report partitions_report(int d, int n, OrderTag order);
Report lr_report(const Partition& a, const Partition& b, int n);
Report schur_dim_report(const GLWeight& w, int n);
Report bott_report(const HomogeneousBundle& bundle);
Report euler_report(const Partition& a, const Partition& b, int d, int n);

struct VerifyRequest {
  std::string family;  // kapranov | kapranov-forward | flag | beilinson | wedge
  int d = 0;
  int n = 0;
  std::vector<int> steps;  // flag only
  std::vector<BigInt> multiplicities;
  int twist = 0;
};
CollectionSpec build_collection(const VerifyRequest& request);
Report verify_report(const VerifyRequest& request);

Report descent_bs_report(const CSAClass& a, std::optional<int> summand_count);
Report descent_gbs_report(const CSAClass& a, int d);
Report descent_tower_report(const std::vector<DescentStage>& stages, const std::string& source);

enum class FibrationMode { plan, search };
/// plan uses the file's twists when present; search always searches up to the cap.
Report fibration_report(const PlanFile& plan, FibrationMode mode, const std::string& source);

Report selftest_report(const std::set<int>& only);

}  // namespace tilt
