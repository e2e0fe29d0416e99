#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "repfilt/filtration.hpp"
#include "repfilt/parallel.hpp"
#include "repfilt/registry.hpp"

namespace repfilt {

/// One golden line: the printed value of a pi_0 stage, with a citation into
/// the worked examples it was transcribed from. All expected groups are free.
struct TableRow {
  std::string id;
  std::string system;
  std::string group;
  FiltrationKind kind;
  long long n;
  std::size_t expected_free_rank;
  std::string citation;
};

inline const std::vector<TableRow>& golden_rows() {
  static const std::vector<TableRow> rows = {
#include "repfilt/golden_rows.inc"
  };
  return rows;
}

struct RowOutcome {
  const TableRow* row = nullptr;
  bool passed = false;
  std::string observed;
  std::string expected;
  std::string error;
};

inline std::string free_text(std::size_t r) { return r == 0 ? "0" : r == 1 ? "Z" : "Z^" + std::to_string(r); }

using SystemProvider = std::function<CoefficientSystem(const std::string& system, const std::string& group)>;

/// Runs every row whose id contains `filter`. Systems are built once per
/// (system, group) pair through `provider`; rows run in parallel and are
/// reported in table order.
inline std::vector<RowOutcome> run_table(const std::vector<TableRow>& rows, const std::string& filter,
                                         const SystemProvider& provider = make_system) {
  std::vector<const TableRow*> selected;
  for (const auto& r : rows)
    if (filter.empty() || r.id.find(filter) != std::string::npos) selected.push_back(&r);
  std::map<std::pair<std::string, std::string>, std::shared_ptr<const CoefficientSystem>> systems;
  for (const auto* r : selected) {
    auto key = std::make_pair(r->system, r->group);
    if (systems.count(key)) continue;
    try {
      systems[key] = std::make_shared<const CoefficientSystem>(provider(r->system, r->group));
    } catch (const Error&) {
      systems[key] = nullptr;
    }
  }
  std::vector<RowOutcome> out(selected.size());
  parallel_for(selected.size(), [&](std::size_t i) {
    const TableRow& r = *selected[i];
    RowOutcome& o = out[i];
    o.row = &r;
    o.expected = free_text(r.expected_free_rank);
    auto sys = systems.at({r.system, r.group});
    if (!sys) {
      o.error = "system " + r.system + " could not be built for " + r.group;
      return;
    }
    try {
      auto st = compute_stage(*sys, r.kind, r.n);
      o.observed = st.presentation.describe();
      o.passed = st.presentation.invariant_factors().empty() && st.presentation.free_rank() == r.expected_free_rank;
    } catch (const Error& e) {
      o.error = e.what();
    }
  });
  return out;
}

}  // namespace repfilt
