#include <gtest/gtest.h>

#include "repfilt/builtins.hpp"

using namespace repfilt;

namespace {

void expect_valid(const CoefficientSystem& sys) {
  auto report = sys.validate();
  for (const auto& c : report.checks)
    EXPECT_TRUE(c.passed) << sys.name() << ": " << c.name << ": " << c.counterexample;
}

// Fixed points |(H/S)^T| counted directly on cosets.
long long marks_direct(const SubgroupLattice& L, const ElementSet& H, const ElementSet& S,
                       const ElementSet& T) {
  long long count = 0;
  std::vector<ElementSet> seen;
  for (ElementId x : L.elements_of(H)) {
    ElementSet c;
    for (ElementId s : L.elements_of(S)) c.set(L.mul(x, s));
    if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
    seen.push_back(c);
    bool fixed = true;
    for (ElementId t : L.elements_of(T))
      if (!c.test(L.mul(t, x))) fixed = false;
    if (fixed) ++count;
  }
  return count;
}

}  // namespace

TEST(Builtins, CyclicSystemsValidate) {
  for (int n : {1, 2, 3, 4, 5, 6, 8}) expect_valid(complex_cyclic(cyclic_group(n), "C"));
  for (int p : {2, 3, 5, 7}) {
    expect_valid(real_cyclic(cyclic_group(p), "C"));
    expect_valid(rational_cyclic(cyclic_group(p), "C"));
    expect_valid(fp_lattices_cyclic(cyclic_group(p), "C"));
  }
  EXPECT_THROW(real_cyclic(cyclic_group(4), "C4"), InputError);
  EXPECT_THROW(complex_cyclic(symmetric_group(3), "S3"), InputError);
}

TEST(Builtins, BurnsideValidates) {
  for (const char* spec : {"trivial", "C2", "C4", "V4", "S3", "D4", "A4", "D5", "S4", "A5"})
    expect_valid(burnside(parse_group_spec(spec), spec));
}

TEST(Builtins, BurnsideTrivialGroup) {
  auto sys = burnside(parse_group_spec("trivial"), "trivial");
  ASSERT_EQ(sys.class_count(), 1);
  ASSERT_EQ(sys.size(0), 1u);
  EXPECT_EQ(sys.dim(0, 0), 1);
}

TEST(Builtins, BurnsideS3RestrictC3QuotientToC2) {
  auto sys = burnside(symmetric_group(3), "S3");
  int s3 = 3, c2 = 1;
  int x = sys.find_label(s3, "[S3/C3]");
  ASSERT_GE(x, 0);
  auto res = sys.restrict(sys.unit(s3, x), c2);
  EXPECT_EQ(sys.describe(res), "[C2/e]");
}

TEST(Builtins, BurnsideMarksMatchFixedPointCount) {
  for (const char* spec : {"S3", "A4", "D4", "S4"}) {
    auto sys = burnside(parse_group_spec(spec), spec);
    const auto& L = sys.lattice();
    int top = L.top_class();
    const auto& locals = L.local_classes(top);
    for (std::size_t i = 0; i < locals.size(); ++i) {
      for (int t = 0; t < L.class_count(); ++t) {
        // Marks from tables: number of T/T summands in Res_T(G/S).
        auto res = sys.restrict(sys.unit(top, i), t);
        long long from_tables = res.multiset[sys.trivial(t)];
        long long direct = marks_direct(L, L.representative(top), L.subgroup(locals[i].subgroup),
                                        L.representative(t));
        EXPECT_EQ(from_tables, direct) << spec << " " << sys.indecomposables(top)[i].label
                                       << " at " << L.subgroup_class(t).name;
      }
    }
  }
}

TEST(Builtins, ComplexCyclicRegular) {
  for (int n : {2, 3, 4, 6}) {
    auto sys = complex_cyclic(cyclic_group(n), "C");
    auto reg = sys.induce(sys.unit(0, 0), sys.class_count() - 1);
    EXPECT_EQ(sys.dim(reg), n);
    for (long long m : reg.multiset) EXPECT_EQ(m, 1);
  }
}

TEST(Builtins, FpLattices) {
  auto sys = fp_lattices_cyclic(cyclic_group(5), "C5");
  auto reg = sys.induce(sys.unit(0, 0), 1);
  EXPECT_EQ(sys.describe(reg), "[V5]");
  for (std::size_t i = 0; i < 5; ++i)
    EXPECT_EQ(sys.restrict(sys.unit(1, i), 0).multiset[0], static_cast<long long>(i + 1));
  EXPECT_FALSE(sys.flags().semisimple);
}

TEST(Builtins, CorruptedInductionFailsTransitivity) {
  auto sys = burnside(symmetric_group(3), "S3");
  sys.mutable_ind(0, 1)(0, 0) += 1;
  auto report = sys.validate();
  EXPECT_FALSE(report.ok());
  bool transitivity_failed = false;
  for (const auto& c : report.checks)
    if (c.name == "ind transitive" && !c.passed) transitivity_failed = true;
  EXPECT_TRUE(transitivity_failed);
}
