#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "repfilt/error.hpp"
#include "repfilt/groups.hpp"

namespace repfilt {

inline constexpr std::size_t kMaxPartitionPoints = 10;
inline constexpr std::size_t kMaxFieldVectors = 4096;
inline constexpr std::size_t kMaxDecompositions = 20000;

/// Finite poset with the order given implicitly. `rank` is strictly
/// increasing along the order, so sorting by rank is a linear extension.
struct Poset {
  std::size_t size = 0;
  std::vector<int> rank;
  std::function<std::string(std::size_t)> label;
  /// Calls visit(y) for every y < x.
  std::function<void(std::size_t, const std::function<void(std::size_t)>&)> for_each_below;
  std::function<bool(std::size_t, std::size_t)> leq;
};

struct PosetSummary {
  std::size_t element_count = 0;
  long long euler_characteristic = 0;
  bool has_least_element = false;
};

/// One pass over all strict relations. With f(x) = 1 - sum_{y<x} f(y), the
/// signed count of chains with top x, the order complex has Euler
/// characteristic sum_x f(x). A finite poset has a least element iff it has
/// exactly one minimal element.
inline PosetSummary summarize(const Poset& P) {
  std::vector<std::size_t> order(P.size);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return P.rank[a] < P.rank[b]; });
  std::vector<long long> f(P.size, 0);
  PosetSummary out;
  out.element_count = P.size;
  std::size_t minimal = 0;
  for (std::size_t x : order) {
    long long s = 0;
    bool any = false;
    P.for_each_below(x, [&](std::size_t y) {
      s += f[y];
      any = true;
    });
    f[x] = 1 - s;
    out.euler_characteristic += f[x];
    if (!any) ++minimal;
  }
  out.has_least_element = minimal == 1;
  return out;
}

inline long long nerve_euler_characteristic(const Poset& P) { return summarize(P).euler_characteristic; }
inline bool has_least_element(const Poset& P) { return summarize(P).has_least_element; }

/// Exhaustive partial-order check on the explicit relation.
inline bool is_partial_order(const Poset& P) {
  for (std::size_t a = 0; a < P.size; ++a) {
    if (!P.leq(a, a)) return false;
    for (std::size_t b = 0; b < P.size; ++b) {
      if (a != b && P.leq(a, b) && P.leq(b, a)) return false;
      if (!P.leq(a, b)) continue;
      for (std::size_t c = 0; c < P.size; ++c)
        if (P.leq(b, c) && !P.leq(a, c)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- partitions

/// Set partition of {0..n-1}: blocks as bitmasks sorted by their minimum.
struct SetPartition {
  std::size_t n = 0;
  std::vector<std::uint32_t> blocks;

  bool proper() const { return blocks.size() > 1; }
  std::string to_string() const {
    std::string out;
    for (auto b : blocks) {
      out += "{";
      bool first = true;
      for (std::size_t i = 0; i < n; ++i)
        if (b >> i & 1) {
          if (!first) out += ",";
          out += std::to_string(i);
          first = false;
        }
      out += "}";
    }
    return out;
  }
  /// Restricted growth string packed into 4-bit digits.
  std::uint64_t code() const {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t b = 0; b < blocks.size(); ++b)
        if (blocks[b] >> i & 1) c |= static_cast<std::uint64_t>(b) << (4 * i);
    return c;
  }
  bool refines(const SetPartition& q) const {
    for (auto b : blocks) {
      bool inside = false;
      for (auto c : q.blocks)
        if ((b & ~c) == 0) inside = true;
      if (!inside) return false;
    }
    return true;
  }
};

namespace detail {

inline SetPartition partition_from_rgs(const std::vector<int>& rgs) {
  SetPartition p;
  p.n = rgs.size();
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    if (static_cast<std::size_t>(rgs[i]) >= p.blocks.size()) p.blocks.push_back(0);
    p.blocks[rgs[i]] |= 1u << i;
  }
  return p;
}

/// Visits the packed restricted growth string of every refinement of q
/// (including q): point i sits in 4-bit digit i.
template <class Visit>
void for_each_refinement_code(const SetPartition& q, Visit&& visit) {
  const std::size_t n = q.n;
  int owner[32] = {};  // q-block of each point
  for (std::size_t b = 0; b < q.blocks.size(); ++b)
    for (std::size_t i = 0; i < n; ++i)
      if (q.blocks[b] >> i & 1) owner[i] = static_cast<int>(b);
  int block_owner[32] = {};
  std::size_t blocks = 0;
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t code) -> void {
    if (i == n) {
      visit(code);
      return;
    }
    for (std::size_t b = 0; b < blocks; ++b)
      if (block_owner[b] == owner[i]) self(self, i + 1, code | static_cast<std::uint64_t>(b) << (4 * i));
    block_owner[blocks] = owner[i];
    ++blocks;
    self(self, i + 1, code | static_cast<std::uint64_t>(blocks - 1) << (4 * i));
    --blocks;
  };
  rec(rec, 0, 0);
}

inline SetPartition partition_from_code(std::uint64_t code, std::size_t n) {
  std::vector<int> rgs(n);
  for (std::size_t i = 0; i < n; ++i) rgs[i] = static_cast<int>(code >> (4 * i) & 15);
  return partition_from_rgs(rgs);
}

/// Visits every refinement of q (including q).
inline void for_each_refinement(const SetPartition& q, const std::function<void(const SetPartition&)>& visit) {
  for_each_refinement_code(q, [&](std::uint64_t c) { visit(partition_from_code(c, q.n)); });
}

}  // namespace detail

/// All set partitions of {0..n-1}, in restricted-growth-string order.
inline std::vector<SetPartition> set_partitions(std::size_t n) {
  std::vector<SetPartition> out;
  SetPartition one;
  one.n = n;
  one.blocks = {n == 32 ? 0xffffffffu : ((1u << n) - 1)};
  detail::for_each_refinement(one, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

/// Proper partitions of {0..n-1} ordered by refinement.
struct PartitionLattice {
  std::size_t n = 0;
  std::vector<SetPartition> elements;
  std::unordered_map<std::uint64_t, std::size_t> index;
  Poset poset;
};

inline std::shared_ptr<PartitionLattice> partition_lattice(std::size_t n) {
  if (n < 1 || n > kMaxPartitionPoints)
    throw BoundError("partition lattice needs 1 <= n <= " + std::to_string(kMaxPartitionPoints));
  auto L = std::make_shared<PartitionLattice>();
  L->n = n;
  for (auto& p : set_partitions(n))
    if (p.proper()) {
      L->index.emplace(p.code(), L->elements.size());
      L->elements.push_back(std::move(p));
    }
  PartitionLattice* raw = L.get();
  L->poset.size = L->elements.size();
  for (const auto& p : L->elements) L->poset.rank.push_back(static_cast<int>(n - p.blocks.size()));
  L->poset.label = [raw](std::size_t i) { return raw->elements[i].to_string(); };
  L->poset.leq = [raw](std::size_t a, std::size_t b) {
    return raw->elements[a].refines(raw->elements[b]);
  };
  L->poset.for_each_below = [raw](std::size_t x, const std::function<void(std::size_t)>& visit) {
    std::uint64_t self = raw->elements[x].code();
    detail::for_each_refinement_code(raw->elements[x], [&](std::uint64_t c) {
      if (c != self) visit(raw->index.at(c));
    });
  };
  return L;
}

// ------------------------------------------------------------ F_p^n spaces

/// Dense matrix over F_p acting on column vectors.
struct FpMatrix {
  int p = 2;
  std::size_t n = 0;
  std::vector<int> a;  // row-major

  static FpMatrix identity(int p, std::size_t n) {
    FpMatrix m{p, n, std::vector<int>(n * n, 0)};
    for (std::size_t i = 0; i < n; ++i) m.a[i * n + i] = 1;
    return m;
  }
  int& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
  int operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
  FpMatrix operator*(const FpMatrix& o) const {
    FpMatrix out{p, n, std::vector<int>(n * n, 0)};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
          out(i, j) = (out(i, j) + (*this)(i, k) * o(k, j)) % p;
    return out;
  }
  bool operator==(const FpMatrix& o) const { return p == o.p && n == o.n && a == o.a; }
  bool operator<(const FpMatrix& o) const { return a < o.a; }
  std::vector<int> apply(const std::vector<int>& v) const {
    std::vector<int> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      int s = 0;
      for (std::size_t j = 0; j < n; ++j) s += (*this)(i, j) * v[j];
      out[i] = s % p;
    }
    return out;
  }
};

namespace detail {

inline int mod_inverse(int x, int p) {
  for (int y = 1; y < p; ++y)
    if (x * y % p == 1) return y;
  throw InputError("element not invertible mod " + std::to_string(p));
}

/// Reduced row echelon form of the given rows (zero rows dropped).
inline std::vector<std::vector<int>> rref(std::vector<std::vector<int>> rows, int p) {
  if (rows.empty()) return rows;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    int inv = mod_inverse(((rows[r][c] % p) + p) % p, p);
    for (auto& x : rows[r]) x = ((x * inv) % p + p) % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] % p == 0) continue;
      int f = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = (((rows[i][j] - f * rows[r][j]) % p) + p) % p;
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

inline bool is_prime_int(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline int primitive_root(int p) {
  for (int g = 1; g < p; ++g) {
    int x = 1, ord = 0;
    do {
      x = x * g % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) return g;
  }
  return 1;
}

}  // namespace detail

/// Subspace of F_p^n in canonical reduced row echelon form.
struct Subspace {
  std::vector<std::vector<int>> basis;

  std::size_t dim() const { return basis.size(); }
  bool operator<(const Subspace& o) const {
    if (basis.size() != o.basis.size()) return basis.size() < o.basis.size();
    return basis < o.basis;
  }
  bool operator==(const Subspace& o) const { return basis == o.basis; }
  std::string to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i) out += ",";
      out += "(";
      for (std::size_t j = 0; j < basis[i].size(); ++j) out += (j ? " " : "") + std::to_string(basis[i][j]);
      out += ")";
    }
    return out + ">";
  }
};

/// Proper direct-sum decomposition: at least two nonzero summands.
struct FqDecomposition {
  int q = 2;
  std::size_t n = 0;
  std::vector<Subspace> summands;  // sorted

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < summands.size(); ++i) out += (i ? "+" : "") + summands[i].to_string();
    return out;
  }
  bool operator<(const FqDecomposition& o) const { return summands < o.summands; }
  bool operator==(const FqDecomposition& o) const { return summands == o.summands; }
};

/// Linear algebra over F_p^n with the standard basis.
struct FqSpace {
  int p = 2;
  std::size_t n = 0;

  Subspace span(std::vector<std::vector<int>> rows) const { return Subspace{detail::rref(std::move(rows), p)}; }
  std::size_t rank(const std::vector<std::vector<int>>& rows) const { return detail::rref(rows, p).size(); }
  bool contains(const Subspace& big, const Subspace& small) const {
    auto rows = big.basis;
    rows.insert(rows.end(), small.basis.begin(), small.basis.end());
    return rank(rows) == big.dim();
  }
  Subspace image(const FpMatrix& g, const Subspace& w) const {
    std::vector<std::vector<int>> rows;
    for (const auto& b : w.basis) rows.push_back(g.apply(b));
    return span(std::move(rows));
  }
  Subspace join(const Subspace& a, const Subspace& b) const {
    auto rows = a.basis;
    rows.insert(rows.end(), b.basis.begin(), b.basis.end());
    return span(std::move(rows));
  }
  /// All nonzero proper subspaces, sorted.
  std::vector<Subspace> subspaces() const {
    std::set<Subspace> seen;
    std::vector<std::vector<int>> vectors;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(p);
    for (std::size_t code = 1; code < total; ++code) {
      std::vector<int> v(n);
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i) {
        v[n - 1 - i] = static_cast<int>(c % p);
        c /= p;
      }
      vectors.push_back(std::move(v));
    }
    // Grow by one vector at a time from each known subspace.
    std::vector<Subspace> frontier{Subspace{}};
    while (!frontier.empty()) {
      std::vector<Subspace> next;
      for (const auto& s : frontier)
        for (const auto& v : vectors) {
          auto rows = s.basis;
          rows.push_back(v);
          Subspace t = span(rows);
          if (t.dim() == s.dim() + 1 && t.dim() < n && seen.insert(t).second) next.push_back(t);
        }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }
};

struct FqDecompositionPoset {
  FqSpace space;
  std::vector<FqDecomposition> elements;
  std::vector<std::vector<std::size_t>> below;  // strict down-sets
  Poset poset;

  bool refines(const FqDecomposition& a, const FqDecomposition& b) const {
    for (const auto& w : a.summands) {
      bool inside = false;
      for (const auto& v : b.summands)
        if (space.contains(v, w)) inside = true;
      if (!inside) return false;
    }
    return true;
  }
  std::optional<std::size_t> find(const FqDecomposition& d) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), d);
    if (it == elements.end() || !(*it == d)) return std::nullopt;
    return static_cast<std::size_t>(it - elements.begin());
  }
};

inline std::shared_ptr<FqDecompositionPoset> fq_decomposition_poset(int q, std::size_t n) {
  if (!detail::is_prime_int(q)) throw InputError("only prime q is supported, got " + std::to_string(q));
  if (n < 1) throw InputError("dimension must be positive");
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= static_cast<std::size_t>(q);
    if (total > kMaxFieldVectors)
      throw BoundError("q^n exceeds enumeration bound " + std::to_string(kMaxFieldVectors));
  }
  auto P = std::make_shared<FqDecompositionPoset>();
  P->space = FqSpace{q, n};
  auto subs = P->space.subspaces();
  // Sorted, pairwise independent summand lists spanning the whole space.
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::vector<std::vector<int>>&)> rec =
      [&](std::size_t start, std::vector<std::vector<int>>& rows) {
        if (rows.size() == n) {
          if (chosen.size() >= 2) {
            FqDecomposition d{q, n, {}};
            for (auto i : chosen) d.summands.push_back(subs[i]);
            P->elements.push_back(std::move(d));
            if (P->elements.size() > kMaxDecompositions)
              throw BoundError("more than " + std::to_string(kMaxDecompositions) + " decompositions");
          }
          return;
        }
        for (std::size_t i = start; i < subs.size(); ++i) {
          if (rows.size() + subs[i].dim() > n) continue;
          std::size_t before = rows.size();
          rows.insert(rows.end(), subs[i].basis.begin(), subs[i].basis.end());
          if (P->space.rank(rows) == rows.size()) {
            chosen.push_back(i);
            rec(i + 1, rows);
            chosen.pop_back();
          }
          rows.resize(before);
        }
      };
  std::vector<std::vector<int>> rows;
  rec(0, rows);
  std::sort(P->elements.begin(), P->elements.end());
  const std::size_t N = P->elements.size();
  P->below.assign(N, {});
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      if (a != b && P->elements[a].summands.size() > P->elements[b].summands.size() &&
          P->refines(P->elements[a], P->elements[b]))
        P->below[b].push_back(a);
  FqDecompositionPoset* raw = P.get();
  P->poset.size = N;
  for (const auto& d : P->elements) P->poset.rank.push_back(static_cast<int>(n - d.summands.size()));
  P->poset.label = [raw](std::size_t i) { return raw->elements[i].to_string(); };
  P->poset.leq = [raw](std::size_t a, std::size_t b) {
    return a == b || std::binary_search(raw->below[b].begin(), raw->below[b].end(), a);
  };
  P->poset.for_each_below = [raw](std::size_t x, const std::function<void(std::size_t)>& visit) {
    for (auto y : raw->below[x]) visit(y);
  };
  return P;
}

// ------------------------------------------------------------ group actions

namespace detail {

/// Verifies that generator images define a homomorphism from G by walking
/// the Cayley graph; returns the image of every element.
template <class Img, class Compose>
std::vector<Img> expand_action(const PermGroup& G, const std::vector<Img>& images, const Img& identity,
                               Compose compose) {
  if (images.size() != G.generators().size())
    throw InputError("action needs one image per generator of " + G.name());
  std::vector<std::optional<Img>> out(G.order());
  out[0] = identity;
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t x : frontier)
      for (std::size_t s = 0; s < images.size(); ++s) {
        std::size_t y = *G.index_of(G.elements()[x] * G.generators()[s]);
        Img img = compose(*out[x], images[s]);
        if (!out[y]) {
          out[y] = img;
          next.push_back(y);
        } else if (!(*out[y] == img)) {
          throw InputError("generator images do not satisfy the relations of " + G.name());
        }
      }
    frontier = std::move(next);
  }
  std::vector<Img> all;
  for (auto& o : out) all.push_back(*o);
  return all;
}

}  // namespace detail

/// Action of a permutation group on F_p^n through matrices.
struct LinearAction {
  std::vector<FpMatrix> generators;
  std::vector<FpMatrix> elements;  // image of every group element
};

inline LinearAction make_linear_action(const PermGroup& G, std::vector<FpMatrix> images, int p, std::size_t n) {
  for (const auto& m : images)
    if (m.p != p || m.n != n) throw InputError("matrix has wrong size or field");
  LinearAction a;
  a.elements = detail::expand_action(G, images, FpMatrix::identity(p, n),
                                     [](const FpMatrix& x, const FpMatrix& y) { return x * y; });
  a.generators = std::move(images);
  return a;
}

/// Matrix group generated by the given matrices (the action of itself).
inline LinearAction generated_linear_action(std::vector<FpMatrix> gens, int p, std::size_t n) {
  LinearAction a;
  a.generators = gens;
  std::set<FpMatrix> seen{FpMatrix::identity(p, n)};
  std::vector<FpMatrix> frontier{FpMatrix::identity(p, n)};
  while (!frontier.empty()) {
    std::vector<FpMatrix> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        FpMatrix y = x * g;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  a.elements.assign(seen.begin(), seen.end());
  return a;
}

/// Action on {0..n-1} through permutations.
struct PointAction {
  std::vector<Perm> generators;
  std::vector<Perm> elements;
};

inline PointAction make_point_action(const PermGroup& G, std::vector<Perm> images, std::size_t n) {
  for (const auto& m : images)
    if (m.degree() != n) throw InputError("permutation has wrong degree");
  PointAction a;
  a.elements = detail::expand_action(G, images, Perm(n), [](const Perm& x, const Perm& y) { return x * y; });
  a.generators = std::move(images);
  return a;
}

namespace detail {

inline std::uint32_t image_block(const Perm& g, std::uint32_t b, std::size_t n) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (b >> i & 1) out |= 1u << g(static_cast<Point>(i));
  return out;
}

/// Shared fixed-point logic: `parts(x)` lists summands of element x,
/// `image(g, part)` moves one summand, `same(a, b)` compares summands.
template <class Part, class G>
bool strongly_fixed(const std::vector<Part>& parts, const std::vector<G>& gens,
                    const std::function<Part(const G&, const Part&)>& image) {
  for (const auto& g : gens)
    for (const auto& w : parts)
      if (!(image(g, w) == w)) return false;
  return true;
}

template <class Part, class G>
bool weakly_fixed(const std::vector<Part>& parts, const std::vector<G>& gens,
                  const std::function<Part(const G&, const Part&)>& image) {
  for (const auto& g : gens)
    for (const auto& w : parts)
      if (std::find(parts.begin(), parts.end(), image(g, w)) == parts.end()) return false;
  return true;
}

/// Orbits of the generated group on summand indices.
template <class Part, class G>
std::vector<std::vector<std::size_t>> summand_orbits(const std::vector<Part>& parts, const std::vector<G>& gens,
                                                     const std::function<Part(const G&, const Part&)>& image) {
  std::vector<int> orbit(parts.size(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < parts.size(); ++s) {
    if (orbit[s] >= 0) continue;
    std::vector<std::size_t> o{s};
    orbit[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < o.size(); ++k)
      for (const auto& g : gens) {
        auto img = image(g, parts[o[k]]);
        std::size_t t = static_cast<std::size_t>(std::find(parts.begin(), parts.end(), img) - parts.begin());
        if (orbit[t] < 0) {
          orbit[t] = orbit[s];
          o.push_back(t);
        }
      }
    std::sort(o.begin(), o.end());
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace detail

enum class WeakType { Type1, Type2 };

/// Classification of one weakly fixed element.
struct WeaklyFixedClass {
  std::size_t element = 0;
  WeakType type = WeakType::Type1;
  /// Type2: the summand index whose stabilizer is reported and the
  /// stabilizer's order inside the acting group.
  std::size_t summand = 0;
  std::size_t stabilizer_order = 0;
  /// Type1: coarsening by orbit sums (strongly fixed) and a two-part
  /// coarsening of it; both as lists of summand-index groups.
  std::vector<std::vector<std::size_t>> orbit_coarsening;
  std::vector<std::vector<std::size_t>> two_part_coarsening;
};

/// Strongly fixed elements of the partition lattice.
inline std::vector<std::size_t> fixed_subposet(const PartitionLattice& L, const PointAction& a) {
  std::function<std::uint32_t(const Perm&, const std::uint32_t&)> img = [&](const Perm& g, const std::uint32_t& b) {
    return detail::image_block(g, b, L.n);
  };
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < L.elements.size(); ++i)
    if (detail::strongly_fixed(L.elements[i].blocks, a.generators, img)) out.push_back(i);
  return out;
}

inline std::vector<std::size_t> fixed_subposet(const FqDecompositionPoset& P, const LinearAction& a) {
  std::function<Subspace(const FpMatrix&, const Subspace&)> img = [&](const FpMatrix& g, const Subspace& w) {
    return P.space.image(g, w);
  };
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < P.elements.size(); ++i)
    if (detail::strongly_fixed(P.elements[i].summands, a.generators, img)) out.push_back(i);
  return out;
}

namespace detail {

template <class Part, class G>
std::vector<WeaklyFixedClass> classify_weak(std::size_t count,
                                            const std::function<const std::vector<Part>&(std::size_t)>& parts_of,
                                            const std::vector<G>& gens, const std::vector<G>& elements,
                                            const std::function<Part(const G&, const Part&)>& image) {
  std::vector<WeaklyFixedClass> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& parts = parts_of(i);
    if (!weakly_fixed(parts, gens, image)) continue;
    WeaklyFixedClass c;
    c.element = i;
    auto orbits = summand_orbits(parts, gens, image);
    if (orbits.size() == 1) {
      c.type = WeakType::Type2;
      c.summand = 0;
      for (const auto& g : elements)
        if (image(g, parts[0]) == parts[0]) ++c.stabilizer_order;
    } else {
      c.type = WeakType::Type1;
      c.orbit_coarsening = orbits;
      std::vector<std::size_t> rest;
      for (std::size_t o = 1; o < orbits.size(); ++o) rest.insert(rest.end(), orbits[o].begin(), orbits[o].end());
      std::sort(rest.begin(), rest.end());
      c.two_part_coarsening = {orbits[0], rest};
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace detail

inline std::vector<WeaklyFixedClass> weakly_fixed_classes(const PartitionLattice& L, const PointAction& a) {
  std::function<std::uint32_t(const Perm&, const std::uint32_t&)> img = [&](const Perm& g, const std::uint32_t& b) {
    return detail::image_block(g, b, L.n);
  };
  std::function<const std::vector<std::uint32_t>&(std::size_t)> parts = [&](std::size_t i) -> const std::vector<std::uint32_t>& {
    return L.elements[i].blocks;
  };
  auto out = detail::classify_weak(L.elements.size(), parts, a.generators, a.elements, img);
  // The orbit-sum coarsening must itself be strongly fixed.
  for (const auto& c : out) {
    if (c.type != WeakType::Type1) continue;
    std::vector<std::uint32_t> merged;
    for (const auto& o : c.orbit_coarsening) {
      std::uint32_t b = 0;
      for (auto s : o) b |= L.elements[c.element].blocks[s];
      merged.push_back(b);
    }
    if (!detail::strongly_fixed(merged, a.generators, img))
      throw Error("internal: orbit coarsening is not fixed");
  }
  return out;
}

inline std::vector<WeaklyFixedClass> weakly_fixed_classes(const FqDecompositionPoset& P, const LinearAction& a) {
  std::function<Subspace(const FpMatrix&, const Subspace&)> img = [&](const FpMatrix& g, const Subspace& w) {
    return P.space.image(g, w);
  };
  std::function<const std::vector<Subspace>&(std::size_t)> parts = [&](std::size_t i) -> const std::vector<Subspace>& {
    return P.elements[i].summands;
  };
  auto out = detail::classify_weak(P.elements.size(), parts, a.generators, a.elements, img);
  for (const auto& c : out) {
    if (c.type != WeakType::Type1) continue;
    std::vector<Subspace> merged;
    for (const auto& o : c.orbit_coarsening) {
      Subspace s;
      for (auto i : o) s = P.space.join(s, P.elements[c.element].summands[i]);
      merged.push_back(s);
    }
    if (!detail::strongly_fixed(merged, a.generators, img))
      throw Error("internal: orbit coarsening is not fixed");
  }
  return out;
}

// ------------------------------------------------------- refinement lemma

/// Generators of the complete subgroup prod GL(W_i) of a decomposition, as
/// matrices in the standard basis.
inline std::vector<FpMatrix> complete_subgroup_generators(const FqDecompositionPoset& P, const FqDecomposition& d) {
  const int p = P.space.p;
  const std::size_t n = P.space.n;
  // B has the concatenated summand bases as columns.
  FpMatrix B{p, n, std::vector<int>(n * n, 0)};
  std::size_t col = 0;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (const auto& w : d.summands) {
    blocks.push_back({col, w.dim()});
    for (const auto& v : w.basis) {
      for (std::size_t r = 0; r < n; ++r) B(r, col) = v[r];
      ++col;
    }
  }
  // Inverse of B by Gauss-Jordan on [B | I].
  std::vector<std::vector<int>> aug(n, std::vector<int>(2 * n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = B(r, c);
    aug[r][n + r] = 1;
  }
  auto red = detail::rref(aug, p);
  FpMatrix Binv{p, n, std::vector<int>(n * n, 0)};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) Binv(r, c) = red[r][n + c];

  const int omega = detail::primitive_root(p);
  std::vector<FpMatrix> gens;
  auto push = [&](const FpMatrix& local) { gens.push_back(B * local * Binv); };
  for (auto [start, dim] : blocks) {
    FpMatrix m = FpMatrix::identity(p, n);
    m(start, start) = omega;
    if (omega != 1) push(m);
    if (dim >= 2) {
      FpMatrix t = FpMatrix::identity(p, n);
      t(start, start + 1) = 1;
      push(t);
      FpMatrix c = FpMatrix::identity(p, n);
      for (std::size_t i = 0; i < dim; ++i) {
        c(start + i, start + i) = 0;
        c(start + (i + 1) % dim, start + i) = 1;
      }
      push(c);
    }
  }
  return gens;
}

struct RefinementLemmaReport {
  int q = 0;
  std::size_t n = 0;
  bool passed = true;
  bool forced = false;
  std::size_t decompositions_checked = 0;
  std::string counterexample;
};

/// For every decomposition D, the decompositions fixed by the complete
/// subgroup of D must be exactly the coarsenings of D. The statement needs
/// 2 != 0 in the field, so even q is refused unless `force` is set.
inline RefinementLemmaReport check_refinement_lemma(int q, std::size_t n, bool force = false) {
  if (q % 2 == 0 && !force)
    throw InputError("refinement criterion assumes an integral domain with 2 != 0; q = " +
                     std::to_string(q) + " is even (force the check to search for a counterexample)");
  auto P = fq_decomposition_poset(q, n);
  RefinementLemmaReport r;
  r.q = q;
  r.n = n;
  r.forced = q % 2 == 0;
  for (std::size_t i = 0; i < P->elements.size(); ++i) {
    const auto& d = P->elements[i];
    LinearAction a;
    a.generators = complete_subgroup_generators(*P, d);
    auto fixed = fixed_subposet(*P, a);
    std::vector<std::size_t> coarser;
    for (std::size_t j = 0; j < P->elements.size(); ++j)
      if (P->poset.leq(i, j)) coarser.push_back(j);
    ++r.decompositions_checked;
    if (fixed != coarser && r.passed) {
      r.passed = false;
      std::string msg = "complete subgroup of " + d.to_string() + " fixes " + std::to_string(fixed.size()) +
                        " decompositions, coarsenings: " + std::to_string(coarser.size()) + "; fixed:";
      for (auto f : fixed) msg += " " + P->elements[f].to_string();
      r.counterexample = msg;
    }
  }
  return r;
}

struct BijectionReport {
  bool injective = true;
  bool inverse_recovers = true;
  std::size_t decompositions_checked = 0;
  std::string counterexample;
};

/// Checks that D -> prod GL(W_i) is injective (compared as element sets)
/// and that D is recovered as the least element of the fixed subposet of
/// its complete subgroup.
inline BijectionReport check_complete_subgroup_bijection(int q, std::size_t n) {
  auto P = fq_decomposition_poset(q, n);
  BijectionReport r;
  std::map<std::vector<FpMatrix>, std::size_t> seen;
  for (std::size_t i = 0; i < P->elements.size(); ++i) {
    ++r.decompositions_checked;
    auto a = generated_linear_action(complete_subgroup_generators(*P, P->elements[i]), q, n);
    auto [it, fresh] = seen.emplace(a.elements, i);
    if (!fresh && r.injective) {
      r.injective = false;
      r.counterexample = P->elements[it->second].to_string() + " and " + P->elements[i].to_string() +
                         " have the same complete subgroup";
    }
    auto fixed = fixed_subposet(*P, a);
    std::optional<std::size_t> least;
    for (auto f : fixed) {
      bool below_all = true;
      for (auto g : fixed)
        if (!P->poset.leq(f, g)) below_all = false;
      if (below_all) least = f;
    }
    if (least != i && r.inverse_recovers) {
      r.inverse_recovers = false;
      if (r.counterexample.empty())
        r.counterexample = "fixed subposet of the complete subgroup of " + P->elements[i].to_string() +
                           " does not have it as least element";
    }
  }
  return r;
}

}  // namespace repfilt
