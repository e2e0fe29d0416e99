#pragma once

// Independent invariant-factor oracle: d_k = g_k / g_{k-1}, where g_k is the
// gcd of all k x k minors.

#include <algorithm>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Mat = std::vector<std::vector<long long>>;

inline Int det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  // Laplace expansion along the first row; sizes here are at most 6.
  if (n == 1) return m[0][0];
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Int>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(std::move(row));
    }
    Int term = m[0][c] * det(std::move(sub));
    total += (c % 2 == 0) ? term : Int(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

inline std::vector<Int> invariant_factors(const Mat& a) {
  const std::size_t m = a.size(), n = m ? a[0].size() : 0;
  std::vector<Int> out;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(m, k, rs);
    subsets(n, k, cs);
    Int g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[r[i]][c[j]];
        g = boost::multiprecision::gcd(g, abs(det(sub)));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

}  // namespace oracle
