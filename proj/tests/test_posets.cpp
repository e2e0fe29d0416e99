#include <gtest/gtest.h>

#include <set>

#include "repfilt/posets.hpp"

using namespace repfilt;

namespace {

// Bell numbers via the Bell triangle.
long long bell(int n) {
  std::vector<long long> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<long long> next{row.back()};
    for (long long x : row) next.push_back(next.back() + x);
    row = next;
  }
  return row.front();
}

// Counts proper direct-sum decompositions of F_p^n by brute force over
// sets of nonzero vectors: a subspace is identified by its set of vectors.
std::size_t brute_decompositions(int p, int n) {
  int total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  auto vec = [&](int code) {
    std::vector<int> v(n);
    for (int i = n - 1; i >= 0; --i) {
      v[i] = code % p;
      code /= p;
    }
    return v;
  };
  auto code_of = [&](const std::vector<int>& v) {
    int c = 0;
    for (int x : v) c = c * p + ((x % p) + p) % p;
    return c;
  };
  // Subspaces as closed sets of vector codes, found by closing spans.
  std::set<std::set<int>> subs;
  std::function<void(std::set<int>)> grow = [&](std::set<int> s) {
    for (int c = 1; c < total; ++c) {
      if (s.count(c)) continue;
      std::set<int> t = s;
      t.insert(c);
      bool changed = true;
      while (changed) {
        changed = false;
        for (int a : std::set<int>(t))
          for (int b : std::set<int>(t))
            for (int k = 1; k < p; ++k) {
              auto va = vec(a), vb = vec(b);
              std::vector<int> w(n);
              for (int i = 0; i < n; ++i) w[i] = va[i] + k * vb[i];
              if (t.insert(code_of(w)).second) changed = true;
            }
      }
      if (static_cast<int>(t.size()) < total && subs.insert(t).second) grow(t);
    }
  };
  grow({0});
  std::vector<std::set<int>> list(subs.begin(), subs.end());
  // Decompositions: sets of subspaces with product of sizes = total whose
  // pairwise sums are direct, i.e. every vector has a unique expression.
  std::size_t count = 0;
  std::function<void(std::size_t, std::vector<std::size_t>&)> rec = [&](std::size_t start,
                                                                        std::vector<std::size_t>& chosen) {
    long long prod = 1;
    for (auto i : chosen) prod *= static_cast<long long>(list[i].size());
    if (prod == total && chosen.size() >= 2) {
      std::set<int> sums{0};
      for (auto i : chosen) {
        std::set<int> next;
        for (int a : sums)
          for (int b : list[i]) {
            auto va = vec(a), vb = vec(b);
            for (int j = 0; j < n; ++j) va[j] += vb[j];
            next.insert(code_of(va));
          }
        sums = next;
      }
      if (static_cast<int>(sums.size()) == total) ++count;
      return;
    }
    if (prod >= total) return;
    for (std::size_t i = start; i < list.size(); ++i) {
      chosen.push_back(i);
      rec(i + 1, chosen);
      chosen.pop_back();
    }
  };
  std::vector<std::size_t> chosen;
  rec(0, chosen);
  return count;
}

// Euler characteristic from explicit chain counts.
long long chain_euler(const Poset& P) {
  long long chi = 0;
  std::function<void(std::size_t, int)> rec = [&](std::size_t top, int len) {
    chi += (len % 2 == 1) ? 1 : -1;
    for (std::size_t y = 0; y < P.size; ++y)
      if (y != top && P.leq(top, y)) rec(y, len + 1);
  };
  for (std::size_t x = 0; x < P.size; ++x) rec(x, 1);
  return chi;
}

FpMatrix mat(int p, std::vector<int> a) {
  std::size_t n = 1;
  while (n * n < a.size()) ++n;
  return FpMatrix{p, n, std::move(a)};
}

}  // namespace

TEST(Partitions, CountsMatchBell) {
  for (int n = 1; n <= 8; ++n)
    EXPECT_EQ(static_cast<long long>(partition_lattice(n)->elements.size()), bell(n) - 1) << n;
  EXPECT_EQ(partition_lattice(2)->elements.size(), 1u);
  EXPECT_EQ(partition_lattice(3)->elements.size(), 4u);
  EXPECT_EQ(partition_lattice(4)->elements.size(), 14u);
}

TEST(Partitions, SizeBound) { EXPECT_THROW(partition_lattice(11), BoundError); }

TEST(Partitions, BelowMatchesRefinement) {
  auto L = partition_lattice(5);
  for (std::size_t x = 0; x < L->elements.size(); ++x) {
    std::set<std::size_t> below;
    L->poset.for_each_below(x, [&](std::size_t y) { below.insert(y); });
    for (std::size_t y = 0; y < L->elements.size(); ++y)
      EXPECT_EQ(below.count(y) == 1, y != x && L->poset.leq(y, x));
  }
}

TEST(Partitions, PartialOrderAndLeast) {
  for (int n = 2; n <= 5; ++n) {
    auto L = partition_lattice(n);
    EXPECT_TRUE(is_partial_order(L->poset));
    EXPECT_TRUE(has_least_element(L->poset));
  }
}

TEST(Partitions, EulerCharacteristic) {
  EXPECT_EQ(nerve_euler_characteristic(partition_lattice(3)->poset), 1);
  for (int n = 2; n <= 5; ++n) {
    auto L = partition_lattice(n);
    EXPECT_EQ(nerve_euler_characteristic(L->poset), chain_euler(L->poset));
  }
  EXPECT_EQ(nerve_euler_characteristic(partition_lattice(9)->poset), 1);
}

TEST(Partitions, FixedUnderCycle) {
  auto L = partition_lattice(4);
  auto G = cyclic_group(2);
  // Swap 0<->1 on four points.
  auto a = make_point_action(G, {Perm::parse("(0 1)", 4)}, 4);
  auto fixed = fixed_subposet(*L, a);
  for (auto i : fixed) {
    bool together = false;
    for (auto b : L->elements[i].blocks)
      if ((b & 3u) == 3u) together = true;
    EXPECT_TRUE(together) << L->elements[i].to_string();
  }
  // Partitions with 0,1 in one block: the merged 3-point lattice, minus the
  // one-block partition.
  EXPECT_EQ(fixed.size(), static_cast<std::size_t>(bell(3) - 1));
  for (const auto& c : weakly_fixed_classes(*L, a)) {
    if (c.type == WeakType::Type2) {
      EXPECT_EQ(c.stabilizer_order, 1u);
    }
  }
}

TEST(Partitions, ActionRelationsChecked) {
  auto G = cyclic_group(2);
  EXPECT_THROW(make_point_action(G, {Perm::parse("(0 1 2)", 3)}, 3), InputError);
}

TEST(Decompositions, CountsMatchBruteForce) {
  EXPECT_EQ(fq_decomposition_poset(2, 2)->elements.size(), 3u);
  EXPECT_EQ(fq_decomposition_poset(2, 1)->elements.size(), 0u);
  EXPECT_EQ(fq_decomposition_poset(3, 2)->elements.size(), brute_decompositions(3, 2));
  EXPECT_EQ(fq_decomposition_poset(3, 2)->elements.size(), 6u);
  EXPECT_EQ(fq_decomposition_poset(2, 3)->elements.size(), brute_decompositions(2, 3));
  EXPECT_EQ(fq_decomposition_poset(5, 2)->elements.size(), brute_decompositions(5, 2));
}

TEST(Decompositions, SubspaceCount) {
  // Gaussian binomials: F_3^3 has 13 lines and 13 planes.
  EXPECT_EQ(FqSpace({3, 3}).subspaces().size(), 26u);
  EXPECT_EQ(FqSpace({2, 4}).subspaces().size(), 15u + 35u + 15u);
}

TEST(Decompositions, Bounds) {
  EXPECT_THROW(fq_decomposition_poset(4, 2), InputError);
  EXPECT_THROW(fq_decomposition_poset(2, 13), BoundError);
}

TEST(Decompositions, PartialOrder) {
  for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {3, 3}})
    EXPECT_TRUE(is_partial_order(fq_decomposition_poset(q, n)->poset)) << q << " " << n;
}

TEST(Decompositions, EulerCharacteristic) {
  auto P = fq_decomposition_poset(2, 2);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      if (a != b) {
        EXPECT_FALSE(P->poset.leq(a, b));
      }
  EXPECT_EQ(nerve_euler_characteristic(P->poset), 3);
  EXPECT_FALSE(has_least_element(P->poset));
  auto Q = fq_decomposition_poset(2, 3);
  EXPECT_EQ(nerve_euler_characteristic(Q->poset), chain_euler(Q->poset));
}

TEST(Decompositions, TrivialActionFixesAll) {
  auto P = fq_decomposition_poset(3, 2);
  auto a = make_linear_action(cyclic_group(1), {}, 3, 2);
  EXPECT_EQ(fixed_subposet(*P, a).size(), P->elements.size());
  auto weak = weakly_fixed_classes(*P, a);
  EXPECT_EQ(weak.size(), P->elements.size());
  for (const auto& c : weak) {
    EXPECT_EQ(c.type, WeakType::Type1);
    EXPECT_EQ(c.two_part_coarsening.size(), 2u);
  }
}

TEST(Decompositions, F2TrivialCompleteSubgroupFixesAll) {
  auto P = fq_decomposition_poset(2, 2);
  FqDecomposition d{2, 2, {P->space.span({{1, 0}}), P->space.span({{0, 1}})}};
  std::sort(d.summands.begin(), d.summands.end());
  auto gens = complete_subgroup_generators(*P, d);
  auto a = generated_linear_action(gens, 2, 2);
  EXPECT_EQ(a.elements.size(), 1u);
  EXPECT_EQ(fixed_subposet(*P, a).size(), 3u);
}

TEST(Decompositions, DiagonalSignFixesOne) {
  auto P = fq_decomposition_poset(3, 2);
  auto a = make_linear_action(cyclic_group(2), {mat(3, {2, 0, 0, 1})}, 3, 2);
  auto fixed = fixed_subposet(*P, a);
  ASSERT_EQ(fixed.size(), 1u);
  EXPECT_EQ(P->elements[fixed[0]].to_string(), "<(0 1)>+<(1 0)>");
  // The swapped pair <(1 1)>,<(1 2)> is weakly fixed and transitive.
  auto weak = weakly_fixed_classes(*P, a);
  ASSERT_EQ(weak.size(), 2u);
  std::size_t type2 = 0;
  for (const auto& c : weak)
    if (c.type == WeakType::Type2) {
      ++type2;
      EXPECT_EQ(c.stabilizer_order, 1u);
    }
  EXPECT_EQ(type2, 1u);
}

TEST(Decompositions, SwapIsTypeTwo) {
  auto P = fq_decomposition_poset(2, 2);
  auto a = make_linear_action(cyclic_group(2), {mat(2, {0, 1, 1, 0})}, 2, 2);
  auto weak = weakly_fixed_classes(*P, a);
  bool found = false;
  for (const auto& c : weak)
    if (P->elements[c.element].to_string() == "<(0 1)>+<(1 0)>") {
      found = true;
      EXPECT_EQ(c.type, WeakType::Type2);
      EXPECT_EQ(c.stabilizer_order, 1u);
    }
  EXPECT_TRUE(found);
}

TEST(Decompositions, ActionRelationsChecked) {
  EXPECT_THROW(make_linear_action(cyclic_group(2), {mat(3, {1, 1, 0, 1})}, 3, 2), InputError);
}

TEST(RefinementLemma, OddFieldsPass) {
  for (auto [q, n] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {5, 2}}) {
    auto r = check_refinement_lemma(q, n);
    EXPECT_TRUE(r.passed) << q << " " << n << ": " << r.counterexample;
    EXPECT_EQ(r.decompositions_checked, fq_decomposition_poset(q, n)->elements.size());
  }
}

TEST(RefinementLemma, EvenRefusedUnlessForced) {
  EXPECT_THROW(check_refinement_lemma(2, 2), InputError);
  auto r = check_refinement_lemma(2, 2, true);
  EXPECT_FALSE(r.passed);
  EXPECT_NE(r.counterexample.find("fixes 3 decompositions, coarsenings: 1"), std::string::npos) << r.counterexample;
}

TEST(Bijection, OddFields) {
  for (auto [q, n] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {5, 2}}) {
    auto r = check_complete_subgroup_bijection(q, n);
    EXPECT_TRUE(r.injective) << r.counterexample;
    EXPECT_TRUE(r.inverse_recovers) << r.counterexample;
  }
}
