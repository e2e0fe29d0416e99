#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "repfilt/error.hpp"

namespace repfilt {

using Point = std::uint16_t;

/// A permutation of {0, ..., degree-1}. Composition is right-to-left:
/// (a * b)(x) = a(b(x)).
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  explicit Perm(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p])
        throw InputError("image list is not a permutation");
      seen[p] = true;
    }
  }

  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>>& cycles) {
    Perm result(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cycle : cycles) {
      for (Point p : cycle) {
        if (p >= degree)
          throw InputError("point " + std::to_string(p) +
                           " outside degree " + std::to_string(degree));
        if (used[p]) throw InputError("point repeated in cycle notation");
        used[p] = true;
      }
      for (std::size_t i = 0; i < cycle.size(); ++i)
        result.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    return result;
  }

  /// Parses cycle notation such as "(0 1 2)(3 4)", "(0,1)" or "()".
  static Perm parse(std::string_view text, std::size_t degree) {
    std::vector<std::vector<Point>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i == text.size()) throw InputError("empty permutation");
    while (i < text.size()) {
      skip_ws();
      if (i == text.size()) break;
      if (text[i] != '(')
        throw InputError("expected '(' in permutation '" + std::string(text) + "'");
      ++i;
      std::vector<Point> cycle;
      while (true) {
        skip_ws();
        if (i == text.size())
          throw InputError("unterminated cycle in '" + std::string(text) + "'");
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (text[i] == ',') {
          ++i;
          continue;
        }
        if (text[i] < '0' || text[i] > '9')
          throw InputError("unexpected character in permutation '" +
                           std::string(text) + "'");
        unsigned long value = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
          value = value * 10 + static_cast<unsigned long>(text[i] - '0');
          if (value > 65535) throw InputError("point out of range");
          ++i;
        }
        cycle.push_back(static_cast<Point>(value));
      }
      if (!cycle.empty()) cycles.push_back(std::move(cycle));
    }
    return from_cycles(degree, cycles);
  }

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const {
    Perm out;
    out.images_.resize(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x)
      out.images_[x] = images_[rhs.images_[x]];
    return out;
  }

  Perm inverse() const {
    Perm out;
    out.images_.resize(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x)
      out.images_[images_[x]] = static_cast<Point>(x);
    return out;
  }

  bool is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
      if (images_[x] != x) return false;
    return true;
  }

  /// Cycle lengths, sorted descending, fixed points included.
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t x = 0; x < images_.size(); ++x) {
      if (seen[x]) continue;
      std::size_t len = 0;
      for (std::size_t y = x; !seen[y]; y = images_[y]) {
        seen[y] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
  }

  std::size_t order() const {
    std::size_t result = 1;
    for (std::size_t len : cycle_type()) result = std::lcm(result, len);
    return result;
  }

  /// Cycle notation with 0-based points, "()" for the identity.
  std::string to_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t x = 0; x < images_.size(); ++x) {
      if (seen[x] || images_[x] == x) continue;
      out += '(';
      for (std::size_t y = x; !seen[y]; y = images_[y]) {
        seen[y] = true;
        if (out.back() != '(') out += ' ';
        out += std::to_string(y);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images()) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace repfilt
