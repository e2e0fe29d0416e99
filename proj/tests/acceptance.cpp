// Acceptance checks. Prints one PASS/FAIL line per criterion and exits 1 if
// any criterion fails.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "repfilt/golden_tables.hpp"
#include "repfilt/posets.hpp"
#include "repfilt/registry.hpp"
#include "snf_oracle.hpp"

using namespace repfilt;

namespace {

const std::vector<std::string> kBurnsideGroups = {"C2", "C3", "C4", "S3", "A4"};

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

Outcome golden_tables() {
  Outcome o;
  std::size_t ok = 0, total = 0;
  std::string first;
  for (const auto& r : run_table(golden_rows(), "")) {
    ++total;
    if (r.passed) {
      ++ok;
      continue;
    }
    if (first.empty())
      first = r.row->id + ": expected " + r.expected + ", observed " + (r.error.empty() ? r.observed : r.error);
  }
  o.detail = std::to_string(ok) + "/" + std::to_string(total) + " rows";
  if (ok != total) {
    o.passed = false;
    o.detail += "; first failure " + first;
  }
  return o;
}

Outcome barratt_priddy_quillen() {
  Outcome o;
  for (const auto& g : kBurnsideGroups) {
    auto sys = make_system("burnside", g);
    const std::size_t classes = static_cast<std::size_t>(sys.class_count());
    const long long order = static_cast<long long>(sys.lattice().order());
    for (long long n = 1; n <= order; ++n) {
      auto p = rank_pi0(sys, n).presentation;
      if (!p.is_free() || p.free_rank() != classes)
        o.fail(g + " n=" + std::to_string(n) + ": " + p.describe() + ", A(G) has rank " + std::to_string(classes));
    }
  }
  if (o.passed) o.detail = "C2 C3 C4 S3 A4, 1 <= n <= |G|";
  return o;
}

Outcome schwede_endpoint() {
  Outcome o;
  for (const auto& g : kBurnsideGroups) {
    auto sys = make_system("burnside", g);
    const long long order = static_cast<long long>(sys.lattice().order());
    for (long long n : {order, order + 1, 2 * order}) {
      auto p = complexity_pi0(sys, n).presentation;
      if (!p.is_free() || p.free_rank() != 1) o.fail(g + " n=" + std::to_string(n) + ": " + p.describe());
    }
  }
  if (o.passed) o.detail = "Z at n = |G|, |G|+1, 2|G|";
  return o;
}

Outcome cofiber_exactness() {
  Outcome o;
  for (const char* name : {"paper:S3/C", "complex_cyclic(2)", "complex_cyclic(3)", "complex_cyclic(5)"}) {
    auto sys = make_system(name, "");
    auto st = stabilization_stage(sys, FiltrationKind::Rank);
    if (!st.stage) {
      o.fail(std::string(name) + ": " + st.message);
      continue;
    }
    for (long long n = 1; n <= *st.stage; ++n) {
      auto cm = connecting_map(rank_pi0(sys, n - 1), rank_pi0(sys, n));
      auto basis = cofiber_pi0_basis(sys, n).size();
      if (!cm.cokernel.is_free() || cm.cokernel.free_rank() != basis)
        o.fail(std::string(name) + " n=" + std::to_string(n) + ": coker " + cm.cokernel.describe() +
               ", cofiber basis " + std::to_string(basis));
    }
  }
  if (o.passed) o.detail = "S3/C, C2, C3, C5 up to stabilization";
  return o;
}

Outcome system_axioms() {
  Outcome o;
  std::vector<std::pair<std::string, std::string>> systems;
  for (const auto& name : builtin_system_names())
    if (name.rfind("paper:", 0) == 0) systems.emplace_back(name, "");
  for (int p : {2, 3, 5, 7})
    for (const char* fn : {"complex_cyclic", "real_cyclic", "rational_cyclic", "fp_lattices_cyclic"})
      systems.emplace_back(std::string(fn) + "(" + std::to_string(p) + ")", "");
  for (int n : {4, 6, 8}) systems.emplace_back("complex_cyclic(" + std::to_string(n) + ")", "");
  for (const char* g : {"trivial", "C2", "C3", "C4", "V4", "S3", "D4", "A4", "D5", "S4", "A5"})
    systems.emplace_back("burnside", g);
  std::size_t checks = 0;
  for (const auto& [name, group] : systems) {
    auto report = make_system(name, group).validate();
    for (const auto& c : report.checks) {
      checks += c.verified;
      if (!c.passed) o.fail(name + (group.empty() ? "" : " " + group) + ": " + c.name + ": " + c.counterexample);
    }
  }
  if (o.passed) o.detail = std::to_string(systems.size()) + " systems, " + std::to_string(checks) + " identities";
  return o;
}

Outcome refinement_lemma() {
  Outcome o;
  for (auto [q, n] : {std::pair{3, 2}, {3, 3}, {5, 2}}) {
    auto r = check_refinement_lemma(q, n);
    if (!r.passed) o.fail("q=" + std::to_string(q) + " n=" + std::to_string(n) + ": " + r.counterexample);
  }
  auto forced = check_refinement_lemma(2, 2, true);
  if (forced.passed) o.fail("q=2 n=2 forced: no counterexample found");
  else if (forced.counterexample.find("fixes 3 decompositions") == std::string::npos)
    o.fail("q=2 n=2 forced: unexpected counterexample " + forced.counterexample);
  if (o.passed) o.detail = "(3,2) (3,3) (5,2) hold; F_2^2: " + forced.counterexample;
  return o;
}

Outcome snf_oracle() {
  Outcome o;
  std::mt19937 rng(20240);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  const int trials = 500;
  for (int t = 0; t < trials; ++t) {
    std::size_t m = dim(rng), n = dim(rng);
    oracle::Mat a(m, std::vector<long long>(n));
    IntMatrix A(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) A(i, j) = a[i][j] = entry(rng);
    if (smith_normal_form(A).diagonal != oracle::invariant_factors(a))
      o.fail("trial " + std::to_string(t) + " (" + std::to_string(m) + "x" + std::to_string(n) + ")");
  }
  if (o.passed) o.detail = std::to_string(trials) + " matrices";
  return o;
}

// Report covering the table, filtration stages and posets, built the way
// the CLI builds its JSON output.
std::string json_report() {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : run_table(golden_rows(), ""))
    rows.push_back({{"id", r.row->id}, {"passed", r.passed}, {"observed", r.observed}, {"error", r.error}});
  nlohmann::json stages = nlohmann::json::array();
  for (auto [name, group] : {std::pair<const char*, const char*>{"paper:S3/C", ""}, {"paper:S3/R", ""},
                             {"paper:A5/Q", ""}, {"burnside", "S4"}, {"fp_lattices_cyclic(5)", ""}}) {
    auto sys = make_system(name, group);
    for (long long n = 0; n <= 6; ++n) {
      stages.push_back(stage_json(sys, rank_pi0(sys, n)));
      stages.push_back(stage_json(sys, complexity_pi0(sys, n)));
    }
  }
  nlohmann::json posets = nlohmann::json::array();
  for (std::size_t n = 1; n <= 7; ++n) {
    auto s = summarize(partition_lattice(n)->poset);
    posets.push_back({{"n", n}, {"size", s.element_count}, {"euler", s.euler_characteristic}});
  }
  auto s = summarize(fq_decomposition_poset(3, 3)->poset);
  posets.push_back({{"q", 3}, {"n", 3}, {"size", s.element_count}, {"euler", s.euler_characteristic}});
  return pretty({{"tables", rows}, {"stages", stages}, {"posets", posets}});
}

Outcome determinism() {
  Outcome o;
  std::optional<std::string> old;
  if (const char* v = std::getenv("REPFILT_THREADS")) old = v;
  std::vector<std::string> reports;
  for (const char* t : {"1", "4", "1", "4"}) {
    setenv("REPFILT_THREADS", t, 1);
    reports.push_back(json_report());
  }
  if (old) setenv("REPFILT_THREADS", old->c_str(), 1);
  else unsetenv("REPFILT_THREADS");
  for (std::size_t i = 1; i < reports.size(); ++i)
    if (reports[i] != reports[0]) o.fail("report " + std::to_string(i) + " differs from report 0");
  if (o.passed) o.detail = "4 runs at 1 and 4 threads, " + std::to_string(reports[0].size()) + " bytes each";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 golden tables", golden_tables},
      {"2 Barratt-Priddy-Quillen at pi_0", barratt_priddy_quillen},
      {"3 symmetric product endpoint", schwede_endpoint},
      {"4 cofiber exactness", cofiber_exactness},
      {"5 coefficient system axioms", system_axioms},
      {"6 refinement lemma", refinement_lemma},
      {"7 Smith form oracle", snf_oracle},
      {"8 determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.passed) ++failures;
    std::cout << (o.passed ? "PASS  " : "FAIL  ") << name << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
