// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <memory>
#include <optional>
#include <stdexcept>

#include "tilt/tilt.h"

namespace tiltcli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto end = text.find(',', pos);
    out.push_back(text.substr(pos, end == std::string::npos ? std::string::npos : end - pos));
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

std::vector<int> ints(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  for (const auto& item : split(text)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw UsageError("--" + flag + " expects comma-separated integers");
    out.push_back(v);
  }
  return out;
}

std::optional<int> env_jobs() {
  const char* v = std::getenv("TILTCHECK_JOBS");
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 0) throw UsageError("TILTCHECK_JOBS must be a nonnegative integer");
  return static_cast<int>(n);
}

struct Options {
  bool pretty = false;
  int jobs = -1;
  // shared numeric parameters
  int d = 0;
  int n = 0;
  std::string order = "containment_order";
  std::string lambda, mu, weight, steps, multiplicities;
  int twist = 0;
  std::string space, sub, sub_dual, quot, blocks;
  std::string family, kind, mode;
  int degree = 0, period = 0, summands = 0;
  std::string index_table, file, plan;
  int cap = -1;
  std::string criteria;
};

using Handle = std::unique_ptr<tilt_report, decltype(&tilt_report_free)>;

int emit(tilt_status status, tilt_report* raw, const Options& o, std::ostream& out, std::ostream& err) {
  Handle report(raw, &tilt_report_free);
  if (status == TILT_INVALID_INPUT) {
    err << "tiltcheck: invalid input: " << tilt_last_error() << "\n";
    return 2;
  }
  if (status == TILT_INTERNAL) {
    err << "tiltcheck: " << tilt_last_error() << "\n";
    return 3;
  }
  out << tilt_report_json(report.get(), o.pretty ? 1 : 0);
  return status == TILT_VERIFICATION_FAILED ? 1 : 0;
}

tilt_algebra algebra(const Options& o, std::vector<int>& table_storage) {
  table_storage = ints(o.index_table, "index-table");
  return tilt_algebra{o.degree, o.period, table_storage.empty() ? nullptr : table_storage.data(),
                      table_storage.size()};
}

int dispatch(const CLI::App& app, const Options& o, std::ostream& out, std::ostream& err) {
  tilt_report* r = nullptr;
  tilt_status s = TILT_INTERNAL;
  const auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();

  if (name == "partitions") {
    s = tilt_partitions(o.d, o.n, o.order.c_str(), &r);
  } else if (name == "lr") {
    const auto a = ints(o.lambda, "lambda"), b = ints(o.mu, "mu");
    s = tilt_lr(a.data(), a.size(), b.data(), b.size(), o.n, &r);
  } else if (name == "schur-dim") {
    const auto w = ints(o.weight, "weight");
    s = tilt_schur_dim(w.data(), w.size(), o.n, &r);
  } else if (name == "bott") {
    const std::vector<std::pair<tilt_bundle_kind, const std::string*>> kinds = {
        {TILT_BUNDLE_SUB, &o.sub}, {TILT_BUNDLE_SUB_DUAL, &o.sub_dual}, {TILT_BUNDLE_QUOT, &o.quot},
        {TILT_BUNDLE_BLOCKS, &o.blocks}};
    int given = 0;
    tilt_bundle_kind kind = TILT_BUNDLE_BLOCKS;
    std::string text;
    const char* flags[] = {"sub", "sub-dual", "quot", "blocks"};
    std::string flag;
    for (std::size_t k = 0; k < kinds.size(); ++k)
      if (sub->count(std::string("--") + flags[k]) > 0) {
        ++given;
        kind = kinds[k].first;
        text = *kinds[k].second;
        flag = flags[k];
      }
    if (given != 1) throw UsageError("bott needs exactly one of --sub, --sub-dual, --quot, --blocks");
    const auto w = ints(text, flag);
    s = tilt_bott(o.space.c_str(), kind, w.data(), w.size(), &r);
  } else if (name == "euler") {
    const auto a = ints(o.lambda, "lambda"), b = ints(o.mu, "mu");
    s = tilt_euler(a.data(), a.size(), b.data(), b.size(), o.d, o.n, &r);
  } else if (name == "verify") {
    const auto steps = ints(o.steps, "steps");
    const auto mults = split(o.multiplicities);
    std::vector<const char*> mult_ptrs;
    for (const auto& m : mults) mult_ptrs.push_back(m.c_str());
    const tilt_verify_request req{o.family.c_str(), o.d,
                                  o.n,           steps.empty() ? nullptr : steps.data(),
                                  steps.size(),  mult_ptrs.empty() ? nullptr : mult_ptrs.data(),
                                  mult_ptrs.size(), o.twist};
    s = tilt_verify(&req, &r);
  } else if (name == "descent") {
    std::vector<int> table;
    if (o.kind == "bs") {
      const auto a = algebra(o, table);
      s = tilt_descent_bs(&a, o.summands, &r);
    } else if (o.kind == "gbs") {
      const auto a = algebra(o, table);
      s = tilt_descent_gbs(&a, o.d, &r);
    } else {
      if (o.file.empty()) throw UsageError("descent tower needs --file");
      s = tilt_descent_tower(o.file.c_str(), &r);
    }
  } else if (name == "fibration") {
    if (o.plan.empty()) throw UsageError("fibration needs --plan");
    s = tilt_fibration(o.plan.c_str(), o.mode == "search" ? 1 : 0, o.cap, &r);
  } else if (name == "selftest") {
    const auto ids = ints(o.criteria, "criteria");
    s = tilt_selftest(ids.data(), ids.size(), &r);
  }
  return emit(s, r, o, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact tilting-bundle checks on Grassmannians, flags, twisted forms and fibrations", "tiltcheck"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", tilt_version());
  app.add_flag("--pretty", o.pretty, "Indented JSON rendering of the same report");
  app.add_option("--jobs", o.jobs, "Worker threads (0 = all cores; default from TILTCHECK_JOBS)")
      ->check(CLI::NonNegativeNumber);

  const std::vector<std::string> orders = {"containment_order", "size_order"};

  auto* partitions = app.add_subcommand("partitions", "Partitions in the d x (n-d) box");
  partitions->add_option("--d", o.d, "Rows")->required();
  partitions->add_option("--n", o.n, "Ambient dimension")->required();
  partitions->add_option("--order", o.order, "containment_order | size_order")->check(CLI::IsMember(orders));

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson expansion of S^lambda x S^mu in GL_n");
  lr->add_option("--lambda", o.lambda, "Partition, e.g. 2,1")->required();
  lr->add_option("--mu", o.mu, "Partition")->required();
  lr->add_option("--n", o.n, "Rank")->required();

  auto* schur = app.add_subcommand("schur-dim", "Dimension of the GL_n Schur module");
  schur->add_option("--weight", o.weight, "Non-increasing weight, e.g. 2,1")->required();
  schur->add_option("--n", o.n, "Rank")->required();

  auto* bott = app.add_subcommand("bott", "Cohomology of an irreducible homogeneous bundle");
  bott->add_option("--space", o.space, "grass:d,n | pn:m | flag:l_1,...,l_m;n")->required();
  bott->add_option("--sub", o.sub, "Weight on R");
  bott->add_option("--sub-dual", o.sub_dual, "Weight on R dual");
  bott->add_option("--quot", o.quot, "Weight on Q");
  bott->add_option("--blocks", o.blocks, "Concatenated block weights");

  auto* euler = app.add_subcommand("euler", "chi(S^lambda R^v x S^mu R) by BWB and by localization");
  euler->add_option("--lambda", o.lambda, "Partition in the box")->required();
  euler->add_option("--mu", o.mu, "Partition in the box")->required();
  euler->add_option("--d", o.d, "Rank of R")->required();
  euler->add_option("--n", o.n, "Ambient dimension")->required();

  auto* verify = app.add_subcommand("verify", "Verify a collection's Ext vanishing");
  verify->add_option("family", o.family, "kapranov | kapranov-forward | flag | beilinson | wedge")
      ->required()
      ->check(CLI::IsMember({"kapranov", "kapranov-forward", "flag", "beilinson", "wedge"}));
  verify->add_option("--d", o.d, "Grassmannian rank");
  verify->add_option("--n", o.n, "Ambient dimension (projective dimension for beilinson)");
  verify->add_option("--steps", o.steps, "Flag steps, e.g. 1,2");
  verify->add_option("--multiplicities", o.multiplicities, "Per-object multiplicities");
  verify->add_option("--twist", o.twist, "Global twist by O(c)");

  auto* descent = app.add_subcommand("descent", "Tilting bookkeeping over a twisted form");
  descent->add_option("kind", o.kind, "bs | gbs | tower")->required()->check(CLI::IsMember({"bs", "gbs", "tower"}));
  descent->add_option("--degree", o.degree, "Degree of the algebra");
  descent->add_option("--period", o.period, "Period of the algebra");
  descent->add_option("--index-table", o.index_table, "ind(A^k) for k = 0..period-1");
  descent->add_option("--summands", o.summands, "Brauer-Severi summand count (default: degree)");
  descent->add_option("--d", o.d, "Generalized Brauer-Severi rank");
  descent->add_option("--file", o.file, "Tower file");

  auto* fibration = app.add_subcommand("fibration", "Tilting bundles on fibrations from a plan file");
  fibration->add_option("mode", o.mode, "plan | search")->required()->check(CLI::IsMember({"plan", "search"}));
  fibration->add_option("--plan", o.plan, "Plan file")->required();
  fibration->add_option("--cap", o.cap, "Twist search cap (default: plan's cap)")->check(CLI::NonNegativeNumber);

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--criteria", o.criteria, "Comma-separated criterion ids (default: all)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    app.exit(e, err, err);
    return 2;
  }

  try {
    if (o.jobs < 0) o.jobs = env_jobs().value_or(0);
    tilt_set_jobs(o.jobs);
    return dispatch(app, o, out, err);
  } catch (const UsageError& e) {
    err << "tiltcheck: " << e.what() << "\n" << app.get_subcommands().front()->help();
    return 2;
  }
}

}  // namespace tiltcli
