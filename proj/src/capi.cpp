// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include "tilt/tilt.h"

#include <json.hpp>
#include <new>
#include <stdexcept>
#include <string>

#include "tilt/parallel.hpp"
#include "tilt/report.hpp"

struct tilt_report {
  tilt::Report report;
  std::string compact;
  std::string pretty;
};

namespace {

thread_local std::string last_error;

std::vector<int> ints(const int* data, std::size_t len) {
  if (len > 0 && data == nullptr) throw std::invalid_argument("null array with nonzero length");
  return std::vector<int>(data, data + len);
}

std::string text(const char* s, const char* what) {
  if (s == nullptr) throw std::invalid_argument(std::string(what) + " must not be null");
  return s;
}

tilt::CSAClass algebra(const tilt_algebra* a) {
  if (a == nullptr) throw std::invalid_argument("algebra must not be null");
  tilt::CSAClass c{a->degree, a->period, std::nullopt};
  if (a->index_table != nullptr) {
    std::map<int, int> table;
    for (std::size_t k = 0; k < a->index_table_len; ++k) table[static_cast<int>(k)] = a->index_table[k];
    c.index_table = table;
  }
  return c;
}

template <class Build>
tilt_status wrap(tilt_report** out, Build&& build) {
  if (out == nullptr) {
    last_error = "output handle must not be null";
    return TILT_INVALID_INPUT;
  }
  *out = nullptr;
  try {
    auto* r = new tilt_report{build(), {}, {}};
    r->compact = r->report.render(false);
    *out = r;
    last_error.clear();
    return r->report.verdict == tilt::Verdict::fail ? TILT_VERIFICATION_FAILED : TILT_OK;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return TILT_INVALID_INPUT;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return TILT_INVALID_INPUT;
  } catch (const std::domain_error& e) {
    last_error = e.what();
    return TILT_INVALID_INPUT;
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return TILT_INVALID_INPUT;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return TILT_INTERNAL;
  } catch (...) {
    last_error = "internal error";
    return TILT_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* tilt_version(void) {
  static const std::string v = tilt::engine_version();
  return v.c_str();
}

const char* tilt_last_error(void) { return last_error.c_str(); }

void tilt_set_jobs(int jobs) { tilt::set_jobs(jobs < 0 ? 0 : jobs); }

tilt_status tilt_partitions(int d, int n, const char* order, tilt_report** out) {
  return wrap(out, [&] {
    return tilt::partitions_report(d, n, tilt::order_tag_from_string(text(order, "order")));
  });
}

tilt_status tilt_lr(const int* lambda, size_t lambda_len, const int* mu, size_t mu_len, int n, tilt_report** out) {
  return wrap(out, [&] {
    return tilt::lr_report(tilt::Partition(ints(lambda, lambda_len)), tilt::Partition(ints(mu, mu_len)), n);
  });
}

tilt_status tilt_schur_dim(const int* weight, size_t len, int n, tilt_report** out) {
  return wrap(out, [&] { return tilt::schur_dim_report(tilt::GLWeight(ints(weight, len)), n); });
}

tilt_status tilt_bott(const char* space, tilt_bundle_kind kind, const int* weight, size_t len, tilt_report** out) {
  return wrap(out, [&] {
    const auto sp = tilt::FlagSpace::parse(text(space, "space"));
    const auto w = ints(weight, len);
    switch (kind) {
      case TILT_BUNDLE_SUB:
      case TILT_BUNDLE_SUB_DUAL:
      case TILT_BUNDLE_QUOT: {
        if (!sp.is_grassmannian()) throw std::invalid_argument("sub, sub-dual and quot need a Grassmannian");
        const tilt::GLWeight g(w);
        if (kind == TILT_BUNDLE_SUB) return tilt::bott_report(tilt::HomogeneousBundle::of_sub(sp, g));
        if (kind == TILT_BUNDLE_SUB_DUAL) return tilt::bott_report(tilt::HomogeneousBundle::of_sub_dual(sp, g));
        return tilt::bott_report(tilt::HomogeneousBundle::of_quot(sp, g));
      }
      case TILT_BUNDLE_BLOCKS: {
        const auto lengths = sp.block_lengths();
        std::size_t total = 0;
        for (int l : lengths) total += static_cast<std::size_t>(l);
        if (w.size() != total)
          throw std::invalid_argument("blocks need " + std::to_string(total) + " entries on " + sp.to_string());
        std::vector<tilt::GLWeight> blocks;
        auto it = w.begin();
        for (int l : lengths) {
          blocks.emplace_back(std::vector<int>(it, it + l));
          it += l;
        }
        return tilt::bott_report(tilt::HomogeneousBundle(sp, blocks));
      }
    }
    throw std::invalid_argument("unknown bundle kind");
  });
}

tilt_status tilt_euler(const int* lambda, size_t lambda_len, const int* mu, size_t mu_len, int d, int n,
                       tilt_report** out) {
  return wrap(out, [&] {
    return tilt::euler_report(tilt::Partition(ints(lambda, lambda_len)), tilt::Partition(ints(mu, mu_len)), d, n);
  });
}

tilt_status tilt_verify(const tilt_verify_request* request, tilt_report** out) {
  return wrap(out, [&] {
    if (request == nullptr) throw std::invalid_argument("request must not be null");
    tilt::VerifyRequest r;
    r.family = text(request->family, "family");
    r.d = request->d;
    r.n = request->n;
    r.steps = ints(request->steps, request->steps_len);
    r.twist = request->twist;
    if (request->multiplicities != nullptr)
      for (std::size_t k = 0; k < request->multiplicities_len; ++k) {
        const std::string m = text(request->multiplicities[k], "multiplicity");
        if (m.empty() || m.find_first_not_of("0123456789") != std::string::npos)
          throw std::invalid_argument("multiplicity must be a decimal integer: " + m);
        r.multiplicities.emplace_back(m);
      }
    return tilt::verify_report(r);
  });
}

tilt_status tilt_descent_bs(const tilt_algebra* a, int summand_count, tilt_report** out) {
  return wrap(out, [&] {
    return tilt::descent_bs_report(algebra(a), summand_count == 0 ? std::nullopt : std::optional<int>(summand_count));
  });
}

tilt_status tilt_descent_gbs(const tilt_algebra* a, int d, tilt_report** out) {
  return wrap(out, [&] { return tilt::descent_gbs_report(algebra(a), d); });
}

tilt_status tilt_descent_tower(const char* path, tilt_report** out) {
  return wrap(out, [&] {
    const auto p = text(path, "path");
    return tilt::descent_tower_report(tilt::load_descent_tower(p), p);
  });
}

tilt_status tilt_descent_tower_json(const char* json_text, tilt_report** out) {
  return wrap(out, [&] {
    return tilt::descent_tower_report(tilt::parse_descent_tower(text(json_text, "json")), "<inline>");
  });
}

tilt_status tilt_fibration(const char* plan_path, int search, int cap, tilt_report** out) {
  return wrap(out, [&] {
    const auto p = text(plan_path, "plan path");
    auto plan = tilt::load_plan(p);
    if (cap >= 0) plan.cap = cap;
    return tilt::fibration_report(plan, search ? tilt::FibrationMode::search : tilt::FibrationMode::plan, p);
  });
}

tilt_status tilt_selftest(const int* criteria, size_t count, tilt_report** out) {
  return wrap(out, [&] {
    const auto ids = ints(criteria, count);
    return tilt::selftest_report(std::set<int>(ids.begin(), ids.end()));
  });
}

const char* tilt_report_json(const tilt_report* report, int pretty) {
  if (report == nullptr) return "";
  if (!pretty) return report->compact.c_str();
  auto* r = const_cast<tilt_report*>(report);
  if (r->pretty.empty()) r->pretty = r->report.render(true);
  return r->pretty.c_str();
}

const char* tilt_report_command(const tilt_report* report) {
  return report == nullptr ? "" : report->report.command.c_str();
}

tilt_verdict tilt_report_verdict(const tilt_report* report) {
  if (report == nullptr) return TILT_VERDICT_NA;
  switch (report->report.verdict) {
    case tilt::Verdict::pass:
      return TILT_VERDICT_PASS;
    case tilt::Verdict::fail:
      return TILT_VERDICT_FAIL;
    case tilt::Verdict::not_applicable:
      return TILT_VERDICT_NA;
  }
  return TILT_VERDICT_NA;
}

void tilt_report_free(tilt_report* report) { delete report; }

}  // extern "C"
