#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "repfilt/error.hpp"

namespace repfilt {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows,
                             std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InputError("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<BigInt> row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }

  void append_row(const std::vector<BigInt>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw InputError("row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }

  IntMatrix operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw InputError("matrix dimension mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const BigInt& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
      }
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }
  void negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct SmithForm {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix S;  // rows x cols, diagonal
  IntMatrix V;  // cols x cols, unimodular
  std::vector<BigInt> diagonal;  // nonzero diagonal entries, d1 | d2 | ...
};

/// U * A * V = S with S diagonal, positive, divisibility chain.
inline SmithForm smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  IntMatrix S = A;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);
  std::vector<BigInt> diag;

  auto row_op_swap = [&](std::size_t a, std::size_t b) { S.swap_rows(a, b); U.swap_rows(a, b); };
  auto col_op_swap = [&](std::size_t a, std::size_t b) { S.swap_cols(a, b); V.swap_cols(a, b); };
  auto row_op_add = [&](std::size_t d, std::size_t s, const BigInt& k) { S.add_row(d, s, k); U.add_row(d, s, k); };
  auto col_op_add = [&](std::size_t d, std::size_t s, const BigInt& k) { S.add_col(d, s, k); V.add_col(d, s, k); };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Minimal nonzero |entry| in the trailing block, first by (row, col).
    bool found = false;
    std::size_t pr = 0, pc = 0;
    BigInt best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (S(i, j) == 0) continue;
        BigInt a = abs(S(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          pr = i;
          pc = j;
        }
      }
    if (!found) break;
    row_op_swap(t, pr);
    col_op_swap(t, pc);

    while (true) {
      bool dirty = false;
      // Clear column t below the pivot.
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        BigInt q = S(i, t) / S(t, t);
        row_op_add(i, t, -q);
        if (S(i, t) != 0) {
          dirty = true;
          if (abs(S(i, t)) < abs(S(t, t))) row_op_swap(t, i);
        }
      }
      // Clear row t right of the pivot.
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        BigInt q = S(t, j) / S(t, t);
        col_op_add(j, t, -q);
        if (S(t, j) != 0) {
          dirty = true;
          if (abs(S(t, j)) < abs(S(t, t))) col_op_swap(t, j);
        }
      }
      if (dirty) continue;
      // Divisibility: pull a non-multiple into row t and repeat.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            row_op_add(t, i, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      U.negate_row(t);
    }
    diag.push_back(S(t, t));
  }
  return SmithForm{std::move(U), std::move(S), std::move(V), std::move(diag)};
}

/// Z^n / rowspan(relations), canonicalized by Smith normal form.
class PresentedAbelianGroup {
 public:
  PresentedAbelianGroup() = default;

  PresentedAbelianGroup(std::vector<std::string> labels, IntMatrix relations)
      : labels_(std::move(labels)) {
    const std::size_t n = labels_.size();
    if (relations.rows() > 0 && relations.cols() != n)
      throw InputError("relation matrix has " + std::to_string(relations.cols()) +
                       " columns for " + std::to_string(n) + " generators");
    // Drop zero rows and duplicates (up to sign) before reduction.
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t i = 0; i < relations.rows(); ++i) {
      auto r = relations.row(i);
      auto lead = std::find_if(r.begin(), r.end(), [](const BigInt& x) { return x != 0; });
      if (lead == r.end()) continue;
      if (*lead < 0)
        for (auto& x : r) x = -x;
      rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    IntMatrix reduced(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) reduced(i, j) = rows[i][j];
    relation_count_ = relations.rows();
    relations_ = std::move(reduced);

    SmithForm snf = smith_normal_form(relations_);
    diagonal_ = snf.diagonal;
    V_ = std::move(snf.V);
    U_ = std::move(snf.U);
    free_rank_ = n - diagonal_.size();
  }

  std::size_t generator_count() const { return labels_.size(); }
  const std::vector<std::string>& generator_labels() const { return labels_; }
  const IntMatrix& relations() const { return relations_; }
  std::size_t relation_count() const { return relation_count_; }
  std::size_t free_rank() const { return free_rank_; }
  /// All diagonal entries including units.
  const std::vector<BigInt>& diagonal() const { return diagonal_; }
  const IntMatrix& row_transform() const { return U_; }
  const IntMatrix& column_transform() const { return V_; }

  /// Invariant factors greater than one.
  std::vector<BigInt> invariant_factors() const {
    std::vector<BigInt> out;
    for (const auto& d : diagonal_)
      if (d != 1) out.push_back(d);
    return out;
  }

  bool is_free() const { return invariant_factors().empty(); }
  bool is_trivial() const { return free_rank_ == 0 && is_free(); }

  /// Coordinates of v in the SNF basis: torsion parts reduced mod d_i (units
  /// dropped), followed by the free coordinates.
  std::vector<BigInt> canonical_image(const std::vector<BigInt>& v) const {
    const std::size_t n = labels_.size();
    if (v.size() != n)
      throw InputError("vector of length " + std::to_string(v.size()) +
                       " for group with " + std::to_string(n) + " generators");
    std::vector<BigInt> w(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (v[k] != 0) w[j] += v[k] * V_(k, j);
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < diagonal_.size(); ++i) {
      if (diagonal_[i] == 1) continue;
      BigInt r = w[i] % diagonal_[i];
      if (r < 0) r += diagonal_[i];
      out.push_back(r);
    }
    for (std::size_t j = diagonal_.size(); j < n; ++j) out.push_back(w[j]);
    return out;
  }

  std::vector<BigInt> canonical_image(const std::vector<long long>& v) const {
    return canonical_image(std::vector<BigInt>(v.begin(), v.end()));
  }

  /// Same invariant factors (> 1) and free rank.
  bool is_isomorphic(const PresentedAbelianGroup& o) const {
    return free_rank_ == o.free_rank_ && invariant_factors() == o.invariant_factors();
  }

  std::string describe() const {
    std::string out;
    for (const auto& d : invariant_factors()) {
      if (!out.empty()) out += " + ";
      out += "Z/" + d.str();
    }
    if (free_rank_ > 0 || out.empty()) {
      if (!out.empty()) out += " + ";
      if (free_rank_ == 0) out = "0";
      else if (free_rank_ == 1) out += "Z";
      else out += "Z^" + std::to_string(free_rank_);
    }
    return out;
  }

 private:
  // Coordinates x map to x * V; the relation lattice rowspan(A) becomes
  // rowspan(U A V) = rowspan(S).
  std::vector<std::string> labels_;
  IntMatrix relations_;
  std::size_t relation_count_ = 0;
  std::vector<BigInt> diagonal_;
  IntMatrix U_, V_;
  std::size_t free_rank_ = 0;
};

/// Convenience: Z^n_gens modulo the rows of `relations`.
inline PresentedAbelianGroup quotient(std::size_t n_gens, const IntMatrix& relations) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n_gens; ++i) labels.push_back("x" + std::to_string(i));
  return PresentedAbelianGroup(std::move(labels), relations);
}

inline bool is_isomorphic(const PresentedAbelianGroup& a, const PresentedAbelianGroup& b) {
  return a.is_isomorphic(b);
}

/// Determinant by fraction-free elimination (Bareiss).
inline BigInt determinant(IntMatrix M) {
  const std::size_t n = M.rows();
  if (n != M.cols()) throw InputError("determinant of non-square matrix");
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      M.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

/// Rank of the image of an integer matrix (rows = images of generators).
inline std::size_t matrix_rank(const IntMatrix& M) {
  return smith_normal_form(M).diagonal.size();
}

}  // namespace repfilt
