#include <gtest/gtest.h>

#include <random>

#include "repfilt/exactalg.hpp"
#include "snf_oracle.hpp"

using namespace repfilt;

namespace {

IntMatrix M(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
  return IntMatrix::from_rows(rows, cols);
}

void check_smith(const IntMatrix& A) {
  SmithForm f = smith_normal_form(A);
  EXPECT_EQ(f.U * A * f.V, f.S);
  EXPECT_EQ(abs(determinant(f.U)), 1);
  EXPECT_EQ(abs(determinant(f.V)), 1);
  for (std::size_t i = 0; i < f.S.rows(); ++i)
    for (std::size_t j = 0; j < f.S.cols(); ++j) {
      if (i != j) {
        EXPECT_EQ(f.S(i, j), 0);
      }
    }
  for (std::size_t i = 1; i < f.diagonal.size(); ++i)
    EXPECT_EQ(f.diagonal[i] % f.diagonal[i - 1], 0);
}

std::vector<BigInt> B(std::initializer_list<long long> xs) {
  return std::vector<BigInt>(xs.begin(), xs.end());
}

}  // namespace

TEST(Smith, Identity) {
  auto f = smith_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(f.S, IntMatrix::identity(3));
}

TEST(Smith, TwoByTwo) {
  auto A = M({{2, 4}, {6, 8}}, 2);
  auto f = smith_normal_form(A);
  EXPECT_EQ(f.diagonal, B({2, 4}));
  check_smith(A);
}

TEST(Smith, ZeroMatrix) {
  auto f = smith_normal_form(IntMatrix(2, 3));
  EXPECT_TRUE(f.S.is_zero());
  EXPECT_TRUE(f.diagonal.empty());
}

TEST(Smith, LargeEntriesDoNotOverflow) {
  IntMatrix A(2, 2);
  A(0, 0) = BigInt("123456789012345678901234567890");
  A(0, 1) = BigInt("987654321098765432109876543210");
  A(1, 0) = 7;
  A(1, 1) = 11;
  check_smith(A);
}

TEST(Smith, RandomMatchesMinorOracle) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t m = dim(rng), n = dim(rng);
    oracle::Mat a(m, std::vector<long long>(n));
    for (auto& r : a)
      for (auto& x : r) x = entry(rng);
    IntMatrix A = M(a, n);
    check_smith(A);
    EXPECT_EQ(smith_normal_form(A).diagonal, oracle::invariant_factors(a));
  }
}

TEST(Quotient, Examples) {
  auto g = quotient(2, M({{2, 0}}, 2));
  EXPECT_EQ(g.invariant_factors(), B({2}));
  EXPECT_EQ(g.free_rank(), 1u);
  EXPECT_EQ(g.describe(), "Z/2 + Z");
  auto h = quotient(3, M({{1, -1, 0}, {0, 1, -1}}, 3));
  EXPECT_TRUE(h.is_free());
  EXPECT_EQ(h.free_rank(), 1u);
  EXPECT_EQ(quotient(0, IntMatrix()).describe(), "0");
  EXPECT_THROW(quotient(3, M({{1, 2}}, 2)), InputError);
}

TEST(Quotient, InvariantUnderRowOperations) {
  auto A = M({{2, 4, 6}, {1, 3, 5}, {0, 2, 8}}, 3);
  auto B2 = M({{-1, -3, -5}, {2, 4, 6}, {2, 6, 14}, {2, 4, 6}}, 3);
  auto a = quotient(3, A), b = quotient(3, B2);
  EXPECT_TRUE(a.is_isomorphic(b));
  EXPECT_EQ(a.invariant_factors(), b.invariant_factors());
}

TEST(Quotient, CanonicalImage) {
  auto g = quotient(2, M({{2, 0}}, 2));
  EXPECT_EQ(g.canonical_image(std::vector<long long>{3, 1}), B({1, 1}));
  EXPECT_EQ(g.canonical_image(std::vector<long long>{0, 0}), B({0, 0}));
  EXPECT_EQ(g.canonical_image(std::vector<long long>{2, 0}), B({0, 0}));
  EXPECT_THROW(g.canonical_image(std::vector<long long>{1}), InputError);

  auto h = quotient(3, M({{4, 6, 2}, {2, 2, 8}}, 3));
  std::vector<long long> v{1, 2, 3};
  auto base = h.canonical_image(v);
  for (std::size_t r = 0; r < 2; ++r) {
    std::vector<BigInt> w(3);
    for (std::size_t j = 0; j < 3; ++j) w[j] = BigInt(v[j]) + 5 * h.relations()(r, j);
    EXPECT_EQ(h.canonical_image(w), base);
  }
  EXPECT_NE(h.canonical_image(std::vector<long long>{1, 0, 0}),
            h.canonical_image(std::vector<long long>{0, 0, 0}));
}

TEST(Quotient, Isomorphism) {
  auto z5a = quotient(5, IntMatrix());
  auto z5b = quotient(6, M({{1, 1, 0, 0, 0, 0}}, 6));
  EXPECT_TRUE(is_isomorphic(z5a, z5b));
  auto z2z = quotient(2, M({{2, 0}}, 2));
  auto z4 = quotient(1, M({{4}}, 1));
  auto z2z2 = quotient(2, M({{2, 0}, {0, 2}}, 2));
  EXPECT_FALSE(is_isomorphic(z2z, z4));
  EXPECT_FALSE(is_isomorphic(z2z2, z4));
}
