#pragma once

#include <algorithm>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <tuple>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "repfilt/error.hpp"
#include "repfilt/perm.hpp"

namespace repfilt {

/// Element enumeration bound for PermGroup.
inline constexpr std::size_t kMaxGroupOrder = 10000;
/// Order bound for subgroup enumeration (covers S5).
inline constexpr std::size_t kMaxLatticeOrder = 128;

/// A finite permutation group with its elements enumerated eagerly.
/// Elements are sorted lexicographically by image list, so index 0 is the
/// identity and index order is a label-dependent but stable total order.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> generators,
            std::string name = {})
      : degree_(degree), generators_(std::move(generators)),
        name_(std::move(name)) {
    if (degree_ == 0) throw InputError("group degree must be positive");
    for (const auto& g : generators_)
      if (g.degree() != degree_)
        throw InputError("generator " + g.to_string() + " has wrong degree");
    enumerate();
  }

  std::size_t degree() const { return degree_; }
  const std::string& name() const { return name_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  std::optional<std::size_t> index_of(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Perm& p) const { return index_.count(p) != 0; }

 private:
  void enumerate() {
    std::unordered_set<Perm, PermHash> seen;
    std::vector<Perm> frontier{Perm(degree_)};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const auto& x : frontier) {
        for (const auto& g : generators_) {
          Perm y = x * g;
          if (seen.insert(y).second) {
            if (seen.size() > kMaxGroupOrder)
              throw BoundError("group order exceeds enumeration bound " +
                               std::to_string(kMaxGroupOrder));
            next.push_back(std::move(y));
          }
        }
      }
      frontier = std::move(next);
    }
    elements_.assign(seen.begin(), seen.end());
    std::sort(elements_.begin(), elements_.end());
    for (std::size_t i = 0; i < elements_.size(); ++i)
      index_.emplace(elements_[i], i);
  }

  std::size_t degree_;
  std::vector<Perm> generators_;
  std::string name_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
};

inline PermGroup symmetric_group(std::size_t n) {
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(Perm::from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<Point> cycle(n);
    std::iota(cycle.begin(), cycle.end(), Point{0});
    gens.push_back(Perm::from_cycles(n, {cycle}));
  }
  return PermGroup(n, std::move(gens), "S" + std::to_string(n));
}

inline PermGroup alternating_group(std::size_t n) {
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < n; ++i)
    gens.push_back(Perm::from_cycles(n, {{0, 1, static_cast<Point>(i)}}));
  return PermGroup(n, std::move(gens), "A" + std::to_string(n));
}

inline PermGroup cyclic_group(std::size_t k) {
  if (k == 0) throw InputError("cyclic group order must be positive");
  std::vector<Perm> gens;
  if (k >= 2) {
    std::vector<Point> cycle(k);
    std::iota(cycle.begin(), cycle.end(), Point{0});
    gens.push_back(Perm::from_cycles(k, {cycle}));
  }
  return PermGroup(k, std::move(gens), "C" + std::to_string(k));
}

/// Dihedral group of order 2k acting on the k vertices of a polygon.
inline PermGroup dihedral_group(std::size_t k) {
  if (k < 3) throw InputError("dihedral group needs at least 3 vertices");
  std::vector<Point> rot(k), refl(k);
  for (std::size_t i = 0; i < k; ++i) {
    rot[i] = static_cast<Point>((i + 1) % k);
    refl[i] = static_cast<Point>((k - i) % k);
  }
  return PermGroup(k, {Perm(rot), Perm(refl)}, "D" + std::to_string(k));
}

namespace detail {

inline std::size_t parse_positive(std::string_view text, std::string_view what) {
  if (text.empty()) throw InputError("missing number in " + std::string(what));
  std::size_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw InputError("bad number '" + std::string(text) + "' in " +
                       std::string(what));
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value > 1000000) throw InputError("number too large in " + std::string(what));
  }
  if (value == 0) throw InputError("number must be positive in " + std::string(what));
  return value;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace detail

/// Parses a group spec string:
///   S<n>, A<n>, D<n>, C<n>, Cn:<k>, V4, trivial,
///   perm:deg=<m>;gens=<perm>,<perm>,...[;name=<label>]
/// where each <perm> is in cycle notation over points 0..m-1; generators are
/// separated by commas outside parentheses.
inline PermGroup parse_group_spec(std::string_view spec) {
  std::string s = detail::trim(spec);
  if (s.empty()) throw InputError("empty group spec");
  if (s.rfind("perm:", 0) == 0) {
    std::size_t degree = 0;
    std::string gens_text, name = "G";
    std::string_view rest(s);
    rest.remove_prefix(5);
    while (!rest.empty()) {
      std::size_t semi = rest.find(';');
      std::string_view field = rest.substr(0, semi);
      rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
      std::size_t eq = field.find('=');
      if (eq == std::string_view::npos)
        throw InputError("expected key=value in group spec field '" +
                         std::string(field) + "'");
      std::string key = detail::trim(field.substr(0, eq));
      std::string value = detail::trim(field.substr(eq + 1));
      if (key == "deg") degree = detail::parse_positive(value, "deg");
      else if (key == "gens") gens_text = value;
      else if (key == "name") name = value;
      else throw InputError("unknown group spec key '" + key + "'");
    }
    if (degree == 0) throw InputError("perm group spec needs deg=");
    if (degree > 65535) throw InputError("degree too large");
    std::vector<Perm> gens;
    int depth = 0;
    std::string current;
    for (char c : gens_text) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        if (!detail::trim(current).empty())
          gens.push_back(Perm::parse(current, degree));
        current.clear();
      } else {
        current += c;
      }
    }
    if (depth != 0) throw InputError("unbalanced parentheses in generators");
    if (!detail::trim(current).empty()) gens.push_back(Perm::parse(current, degree));
    return PermGroup(degree, std::move(gens), name);
  }
  if (s == "trivial" || s == "e") return PermGroup(1, {}, "e");
  if (s == "V4")
    return PermGroup(4,
                     {Perm::from_cycles(4, {{0, 1}, {2, 3}}),
                      Perm::from_cycles(4, {{0, 2}, {1, 3}})},
                     "V4");
  if (s.rfind("Cn:", 0) == 0)
    return cyclic_group(detail::parse_positive(s.substr(3), "Cn:k"));
  std::string_view body = std::string_view(s).substr(1);
  switch (s[0]) {
    case 'S': return symmetric_group(detail::parse_positive(body, s));
    case 'A': return alternating_group(detail::parse_positive(body, s));
    case 'D': return dihedral_group(detail::parse_positive(body, s));
    case 'C': return cyclic_group(detail::parse_positive(body, s));
    default: break;
  }
  throw InputError("unknown group spec '" + s + "'");
}

using ElementId = std::uint16_t;
using ElementSet = std::bitset<kMaxLatticeOrder>;

struct SubgroupClass {
  int id = 0;
  std::string name;
  std::size_t order = 0;
  int representative = 0;  // index into SubgroupLattice::subgroups()
  std::size_t class_size = 0;
  ElementSet normalizer;
  std::vector<int> members;
};

struct ConjugationWitness {
  int source_class = 0;
  int target_class = 0;
  ElementId conjugator = 0;  // g with g S g^-1 = T
};

struct DoubleCoset {
  ElementId representative = 0;
  ElementSet intersection;  // H ∩ gKg^-1 for the coset HgK
  std::size_t size = 0;
};

/// One conjugacy class (inside a fixed class representative H) of subgroups
/// of H. `subgroup` is the chosen member; `conjugator` carries the global
/// class representative onto it.
struct LocalClass {
  int global_class = 0;
  int subgroup = 0;
  ElementId conjugator = 0;
  std::vector<int> members;
};

/// Embedding of a subgroup class into a larger class representative; same
/// data as LocalClass, viewed from the pair (sub, super).
using Embedding = LocalClass;

/// Subgroup structure of a finite permutation group of order at most
/// kMaxLatticeOrder. Immutable after construction, so concurrent readers
/// are safe.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(PermGroup group) : group_(std::move(group)) {
    if (group_.order() > kMaxLatticeOrder)
      throw BoundError("group " + group_.name() + " of order " +
                       std::to_string(group_.order()) +
                       " exceeds subgroup enumeration bound " +
                       std::to_string(kMaxLatticeOrder));
    build_tables();
    enumerate_subgroups();
    build_classes();
    build_local_classes();
  }

  const PermGroup& group() const { return group_; }
  std::size_t order() const { return n_; }

  ElementId mul(ElementId a, ElementId b) const { return mul_[a * n_ + b]; }
  ElementId inv(ElementId a) const { return inv_[a]; }
  ElementId conj(ElementId g, ElementId x) const { return mul(mul(g, x), inv(g)); }
  const Perm& element(ElementId a) const { return group_.elements()[a]; }
  ElementId id_of(const Perm& p) const {
    auto idx = group_.index_of(p);
    if (!idx) throw InputError("permutation " + p.to_string() + " not in group " + group_.name());
    return static_cast<ElementId>(*idx);
  }

  ElementSet conjugate(ElementId g, const ElementSet& s) const {
    ElementSet out;
    for (std::size_t x = 0; x < n_; ++x)
      if (s.test(x)) out.set(conj(g, static_cast<ElementId>(x)));
    return out;
  }

  std::vector<ElementId> elements_of(const ElementSet& s) const {
    std::vector<ElementId> out;
    for (std::size_t x = 0; x < n_; ++x)
      if (s.test(x)) out.push_back(static_cast<ElementId>(x));
    return out;
  }

  /// Subgroup generated by the given elements.
  ElementSet closure(const std::vector<ElementId>& gens) const {
    ElementSet out;
    out.set(0);
    std::vector<ElementId> frontier{0};
    while (!frontier.empty()) {
      std::vector<ElementId> next;
      for (ElementId x : frontier)
        for (ElementId g : gens) {
          ElementId y = mul(x, g);
          if (!out.test(y)) {
            out.set(y);
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
    return out;
  }

  bool is_subgroup(const ElementSet& s) const {
    if (!s.test(0)) return false;
    auto elems = elements_of(s);
    for (ElementId a : elems)
      for (ElementId b : elems)
        if (!s.test(mul(a, b))) return false;
    return true;
  }

  const std::vector<ElementSet>& subgroups() const { return subgroups_; }
  const ElementSet& subgroup(int idx) const { return subgroups_[idx]; }
  int subgroup_index(const ElementSet& s) const {
    auto it = sub_index_.find(s);
    if (it == sub_index_.end()) throw InputError("element set is not a subgroup");
    return it->second;
  }
  std::size_t subgroup_order(int idx) const { return subgroups_[idx].count(); }
  const std::vector<ElementId>& subgroup_generators(int idx) const { return sub_gens_[idx]; }
  bool contains(const ElementSet& big, const ElementSet& small) const {
    return (small & ~big).none();
  }

  const std::vector<SubgroupClass>& classes() const { return classes_; }
  const SubgroupClass& subgroup_class(int cls) const { return classes_[cls]; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  int top_class() const { return class_count() - 1; }
  int class_of(int subgroup_idx) const { return class_of_[subgroup_idx]; }
  /// t with t * rep * t^-1 = subgroup, minimal by element index.
  ElementId transport(int subgroup_idx) const { return transport_[subgroup_idx]; }
  const ElementSet& representative(int cls) const {
    return subgroups_[classes_[cls].representative];
  }
  int class_by_name(std::string_view name) const {
    for (const auto& c : classes_)
      if (c.name == name) return c.id;
    return -1;
  }

  /// Index [H:K] for class ids, assuming |K| divides |H|.
  std::size_t index(int sub_cls, int super_cls) const {
    return classes_[super_cls].order / classes_[sub_cls].order;
  }

  std::optional<ConjugationWitness> is_conjugate(const ElementSet& s,
                                                 const ElementSet& t) const {
    int si = subgroup_index(s), ti = subgroup_index(t);
    if (class_of_[si] != class_of_[ti]) return std::nullopt;
    for (std::size_t g = 0; g < n_; ++g)
      if (conjugate(static_cast<ElementId>(g), s) == t)
        return ConjugationWitness{class_of_[si], class_of_[ti], static_cast<ElementId>(g)};
    return std::nullopt;
  }

  /// Double cosets H g K inside G, representatives minimal by element index.
  std::vector<DoubleCoset> double_cosets(const ElementSet& h,
                                         const ElementSet& k) const {
    ElementSet all;
    for (std::size_t g = 0; g < n_; ++g) all.set(g);
    return double_cosets(h, k, all);
  }

  /// Double cosets H g K inside a subgroup `ambient` containing H and K.
  std::vector<DoubleCoset> double_cosets(const ElementSet& h, const ElementSet& k,
                                         const ElementSet& ambient) const {
    std::vector<DoubleCoset> out;
    ElementSet covered;
    auto hs = elements_of(h), ks = elements_of(k);
    for (std::size_t g = 0; g < n_; ++g) {
      if (!ambient.test(g) || covered.test(g)) continue;
      ElementSet coset;
      for (ElementId a : hs)
        for (ElementId b : ks) coset.set(mul(mul(a, static_cast<ElementId>(g)), b));
      covered |= coset;
      DoubleCoset dc;
      dc.representative = static_cast<ElementId>(g);
      dc.intersection = h & conjugate(static_cast<ElementId>(g), k);
      dc.size = coset.count();
      out.push_back(dc);
    }
    return out;
  }

  /// N_G(H)/H acting on its own cosets (a faithful regular action).
  PermGroup weyl_group(int cls) const {
    const ElementSet& h = representative(cls);
    const ElementSet& norm = classes_[cls].normalizer;
    std::vector<ElementSet> cosets;
    std::vector<int> coset_of(n_, -1);
    for (ElementId x : elements_of(norm)) {
      if (coset_of[x] >= 0) continue;
      ElementSet c;
      for (ElementId y : elements_of(h)) c.set(mul(x, y));
      for (ElementId y : elements_of(c)) coset_of[y] = static_cast<int>(cosets.size());
      cosets.push_back(c);
    }
    std::vector<Perm> gens;
    for (ElementId w : weyl_generators(cls)) {
      std::vector<Point> images(cosets.size());
      for (std::size_t i = 0; i < cosets.size(); ++i) {
        ElementId x = static_cast<ElementId>(cosets[i]._Find_first());
        images[i] = static_cast<Point>(coset_of[mul(w, x)]);
      }
      gens.emplace_back(std::move(images));
    }
    return PermGroup(cosets.size(), std::move(gens), "W(" + classes_[cls].name + ")");
  }

  /// Greedy generating set of N_G(H) modulo H, minimal elements first.
  std::vector<ElementId> weyl_generators(int cls) const {
    std::vector<ElementId> chosen;
    std::vector<ElementId> gens = sub_gens_[classes_[cls].representative];
    ElementSet current = representative(cls);
    for (ElementId x : elements_of(classes_[cls].normalizer)) {
      if (current.test(x)) continue;
      chosen.push_back(x);
      gens.push_back(x);
      current = closure(gens);
    }
    return chosen;
  }

  /// Conjugacy classes of subgroups inside the representative of `cls`.
  const std::vector<LocalClass>& local_classes(int cls) const { return local_[cls]; }
  /// Position in local_classes(cls) of a subgroup of the representative, or -1.
  int local_class_of(int cls, int subgroup_idx) const {
    auto it = local_lookup_[cls].find(subgroup_idx);
    return it == local_lookup_[cls].end() ? -1 : it->second;
  }

  /// H-conjugacy classes of subgroups of rep(super) lying in class `sub`.
  std::vector<Embedding> embeddings(int sub_cls, int super_cls) const {
    std::vector<Embedding> out;
    for (const auto& lc : local_[super_cls])
      if (lc.global_class == sub_cls) out.push_back(lc);
    return out;
  }

  std::vector<int> subgroups_within(int subgroup_idx) const {
    std::vector<int> out;
    const ElementSet& s = subgroups_[subgroup_idx];
    for (std::size_t i = 0; i < subgroups_.size(); ++i)
      if ((subgroups_[i] & ~s).none()) out.push_back(static_cast<int>(i));
    return out;
  }

 private:
  void build_tables() {
    n_ = group_.order();
    mul_.resize(n_ * n_);
    inv_.resize(n_);
    const auto& el = group_.elements();
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b)
        mul_[a * n_ + b] = static_cast<ElementId>(*group_.index_of(el[a] * el[b]));
      inv_[a] = static_cast<ElementId>(*group_.index_of(el[a].inverse()));
    }
  }

  void add_subgroup(const ElementSet& s, std::vector<ElementId> gens) {
    if (sub_index_.count(s)) return;
    sub_index_.emplace(s, static_cast<int>(subgroups_.size()));
    subgroups_.push_back(s);
    sub_gens_.push_back(std::move(gens));
  }

  // Cyclic seeding followed by joins with cyclic subgroups; every subgroup
  // is a join of cyclic ones.
  void enumerate_subgroups() {
    std::vector<int> cyclic;
    for (std::size_t x = 0; x < n_; ++x) {
      ElementSet c = closure({static_cast<ElementId>(x)});
      if (!sub_index_.count(c)) {
        add_subgroup(c, x == 0 ? std::vector<ElementId>{} : std::vector<ElementId>{static_cast<ElementId>(x)});
        cyclic.push_back(static_cast<int>(subgroups_.size()) - 1);
      }
    }
    for (std::size_t i = 0; i < subgroups_.size(); ++i) {
      for (int c : cyclic) {
        const ElementSet& s = subgroups_[i];
        const ElementSet& cs = subgroups_[c];
        if ((cs & ~s).none()) continue;
        std::vector<ElementId> gens = sub_gens_[i];
        for (ElementId g : sub_gens_[c]) gens.push_back(g);
        ElementSet t = closure(gens);
        if (!sub_index_.count(t)) add_subgroup(t, std::move(gens));
      }
    }
  }

  void build_classes() {
    std::vector<int> bucket(subgroups_.size(), -1);
    std::vector<std::vector<int>> groups;
    for (std::size_t i = 0; i < subgroups_.size(); ++i) {
      if (bucket[i] >= 0) continue;
      std::vector<int> members;
      for (std::size_t g = 0; g < n_; ++g) {
        int j = sub_index_.at(conjugate(static_cast<ElementId>(g), subgroups_[i]));
        if (bucket[j] < 0) {
          bucket[j] = static_cast<int>(groups.size());
          members.push_back(j);
        }
      }
      groups.push_back(std::move(members));
    }

    struct Keyed {
      std::size_t order;
      std::vector<std::vector<std::size_t>> cycle_types;
      std::vector<ElementId> min_elements;
      int rep;
      std::vector<int> members;
    };
    std::vector<Keyed> keyed;
    for (auto& members : groups) {
      int rep = members.front();
      for (int m : members)
        if (elements_of(subgroups_[m]) < elements_of(subgroups_[rep])) rep = m;
      Keyed k;
      k.order = subgroups_[rep].count();
      for (ElementId x : elements_of(subgroups_[rep]))
        k.cycle_types.push_back(element(x).cycle_type());
      std::sort(k.cycle_types.begin(), k.cycle_types.end());
      k.min_elements = elements_of(subgroups_[rep]);
      k.rep = rep;
      std::sort(members.begin(), members.end(), [&](int a, int b) {
        return elements_of(subgroups_[a]) < elements_of(subgroups_[b]);
      });
      k.members = members;
      keyed.push_back(std::move(k));
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
      return std::tie(a.order, a.cycle_types, a.min_elements) <
             std::tie(b.order, b.cycle_types, b.min_elements);
    });

    class_of_.assign(subgroups_.size(), -1);
    transport_.assign(subgroups_.size(), 0);
    std::map<std::string, int> name_count;
    std::vector<std::string> base_names;
    for (std::size_t c = 0; c < keyed.size(); ++c) {
      SubgroupClass sc;
      sc.id = static_cast<int>(c);
      sc.order = keyed[c].order;
      sc.representative = keyed[c].rep;
      sc.members = keyed[c].members;
      sc.class_size = sc.members.size();
      const ElementSet& rep = subgroups_[sc.representative];
      for (std::size_t g = 0; g < n_; ++g) {
        ElementId gid = static_cast<ElementId>(g);
        ElementSet img = conjugate(gid, rep);
        int j = sub_index_.at(img);
        if (img == rep) sc.normalizer.set(g);
        if (class_of_[j] < 0) {
          class_of_[j] = sc.id;
          transport_[j] = gid;
        }
      }
      base_names.push_back(structural_name(rep));
      ++name_count[base_names.back()];
      classes_.push_back(std::move(sc));
    }
    std::map<std::string, int> seen;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      const std::string& base = base_names[c];
      if (name_count[base] == 1) {
        classes_[c].name = base;
      } else {
        int k = seen[base]++;
        classes_[c].name = base + static_cast<char>('a' + k);
      }
    }
  }

  void build_local_classes() {
    local_.resize(classes_.size());
    local_lookup_.resize(classes_.size());
    for (const auto& cls : classes_) {
      const ElementSet& h = subgroups_[cls.representative];
      auto hs = elements_of(h);
      std::vector<int> inside = subgroups_within(cls.representative);
      std::vector<LocalClass> locals;
      std::unordered_map<int, int> seen;
      for (int s : inside) {
        if (seen.count(s)) continue;
        LocalClass lc;
        lc.global_class = class_of_[s];
        for (ElementId x : hs) {
          int j = sub_index_.at(conjugate(x, subgroups_[s]));
          if (!seen.count(j)) {
            seen.emplace(j, -1);
            lc.members.push_back(j);
          }
        }
        std::sort(lc.members.begin(), lc.members.end(), [&](int a, int b) {
          return elements_of(subgroups_[a]) < elements_of(subgroups_[b]);
        });
        lc.subgroup = lc.members.front();
        lc.conjugator = transport_[lc.subgroup];
        locals.push_back(std::move(lc));
      }
      std::sort(locals.begin(), locals.end(), [&](const LocalClass& a, const LocalClass& b) {
        if (a.global_class != b.global_class) return a.global_class < b.global_class;
        return elements_of(subgroups_[a.subgroup]) < elements_of(subgroups_[b.subgroup]);
      });
      for (std::size_t i = 0; i < locals.size(); ++i)
        for (int m : locals[i].members) local_lookup_[cls.id][m] = static_cast<int>(i);
      local_[cls.id] = std::move(locals);
    }
  }

  std::string structural_name(const ElementSet& s) const {
    auto elems = elements_of(s);
    std::size_t order = elems.size();
    if (order == 1) return "e";
    std::map<std::size_t, std::size_t> by_order;
    std::size_t max_order = 1;
    for (ElementId x : elems) {
      std::size_t o = element(x).order();
      ++by_order[o];
      max_order = std::max(max_order, o);
    }
    auto count = [&](std::size_t o) { return by_order.count(o) ? by_order.at(o) : 0; };
    if (max_order == order) return "C" + std::to_string(order);
    bool abelian = true;
    for (ElementId a : elems)
      for (ElementId b : elems)
        if (mul(a, b) != mul(b, a)) abelian = false;
    if (abelian) {
      if (order == 4) return "V4";
      return "Ab" + std::to_string(order);
    }
    if (order == 6) return "S3";
    if (order == 8 && count(2) == 1) return "Q8";
    if (order % 2 == 0 && max_order == order / 2) {
      // Dihedral: everything outside the cyclic half is an involution.
      for (ElementId x : elems) {
        if (element(x).order() != max_order) continue;
        ElementSet rot = closure({x});
        bool dihedral = true;
        for (ElementId y : elems)
          if (!rot.test(y) && element(y).order() != 2) dihedral = false;
        if (dihedral) return "D" + std::to_string(order / 2);
        break;
      }
    }
    if (order == 12 && max_order == 3) return "A4";
    if (order == 24 && max_order == 4 && count(3) == 8) return "S4";
    if (order == 60 && max_order == 5 && count(2) == 15) return "A5";
    if (order == 120 && max_order == 6 && count(5) == 24) return "S5";
    return "H" + std::to_string(order);
  }

  PermGroup group_;
  std::size_t n_ = 0;
  std::vector<ElementId> mul_;
  std::vector<ElementId> inv_;
  std::vector<ElementSet> subgroups_;
  std::vector<std::vector<ElementId>> sub_gens_;
  std::unordered_map<ElementSet, int> sub_index_;
  std::vector<SubgroupClass> classes_;
  std::vector<int> class_of_;
  std::vector<ElementId> transport_;
  std::vector<std::vector<LocalClass>> local_;
  std::vector<std::unordered_map<int, int>> local_lookup_;
};

/// One class per conjugacy class of subgroups, sorted by (order, cycle-type
/// multiset, minimal element list).
inline std::vector<SubgroupClass> enumerate_subgroup_classes(const PermGroup& g) {
  return SubgroupLattice(g).classes();
}

}  // namespace repfilt
