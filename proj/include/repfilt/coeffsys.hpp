#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "repfilt/error.hpp"
#include "repfilt/exactalg.hpp"
#include "repfilt/groups.hpp"

namespace repfilt {

enum class Base { Complex, Real, Rational, FpLattices, FiniteSets };

inline std::string base_name(Base b) {
  switch (b) {
    case Base::Complex: return "Complex";
    case Base::Real: return "Real";
    case Base::Rational: return "Rational";
    case Base::FpLattices: return "FpLattices";
    case Base::FiniteSets: return "FiniteSets";
  }
  return "?";
}

inline Base parse_base(const std::string& s) {
  if (s == "Complex") return Base::Complex;
  if (s == "Real") return Base::Real;
  if (s == "Rational") return Base::Rational;
  if (s == "FpLattices") return Base::FpLattices;
  if (s == "FiniteSets") return Base::FiniteSets;
  throw InputError("unknown base '" + s + "'");
}

struct SystemFlags {
  bool semisimple = true;
  bool frobenius = false;
  bool mackey = false;
};

struct Indecomposable {
  std::string label;
  long long dim = 1;
};

/// Multiset of indecomposables at one subgroup class.
struct ObjectClass {
  int subgroup = 0;
  std::vector<long long> multiset;

  bool operator==(const ObjectClass&) const = default;
};

/// Weyl generator: an element of N_G(H) and the permutation it induces on
/// H's indecomposables. perm[i] is the index of the conjugate (c_x)_* X_i,
/// where (c_x)_* X (h) = X(x^-1 h x).
struct WeylGenerator {
  ElementId element = 0;
  std::vector<int> perm;
};

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::size_t verified = 0;
  std::string counterexample;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
};

/// Indecomposable objects per subgroup class with restriction, induction
/// and Weyl-conjugation tables.
///
/// Tables are indexed by embeddings: for classes K, H the lattice lists the
/// rep(H)-conjugacy classes of subgroups of rep(H) in class K, each with a
/// conjugator g such that g rep(K) g^-1 lies in rep(H). res(H, K, e) has a
/// row per H-indecomposable Y giving Res along that inclusion pulled back to
/// rep(K) by c_g; ind(K, H, e) has a row per K-indecomposable.
class CoefficientSystem {
 public:
  CoefficientSystem(std::string name, Base base, int characteristic, SystemFlags flags,
                    std::shared_ptr<const SubgroupLattice> lattice, std::string group_spec)
      : name_(std::move(name)), base_(base), characteristic_(characteristic), flags_(flags),
        lattice_(std::move(lattice)), group_spec_(std::move(group_spec)),
        data_(lattice_->class_count()) {}

  const std::string& name() const { return name_; }
  Base base() const { return base_; }
  int characteristic() const { return characteristic_; }
  const SystemFlags& flags() const { return flags_; }
  const SubgroupLattice& lattice() const { return *lattice_; }
  std::shared_ptr<const SubgroupLattice> lattice_ptr() const { return lattice_; }
  const std::string& group_spec() const { return group_spec_; }
  int class_count() const { return lattice_->class_count(); }
  const std::string& class_key(int cls) const { return lattice_->subgroup_class(cls).name; }

  // ---- construction ----

  void set_indecomposables(int cls, std::vector<Indecomposable> objs, int trivial) {
    check_class(cls);
    if (objs.empty()) throw InputError("class " + class_key(cls) + " has no indecomposables");
    for (const auto& o : objs)
      if (o.dim <= 0)
        throw InputError("indecomposable " + o.label + " at " + class_key(cls) +
                         " has non-positive dimension");
    if (trivial >= static_cast<int>(objs.size()))
      throw InputError("trivial index out of range at " + class_key(cls));
    if (trivial >= 0 && objs[trivial].dim != 1)
      throw InputError("trivial object at " + class_key(cls) + " must have dimension 1");
    data_[cls].objs = std::move(objs);
    data_[cls].trivial = trivial;
  }

  void set_weyl(int cls, std::vector<WeylGenerator> gens) {
    check_class(cls);
    weyl_ready_ = false;
    data_[cls].weyl_gens = std::move(gens);
    data_[cls].has_weyl = true;
  }

  void set_res(int h, int k, std::size_t e, IntMatrix m) { slot(data_[h].res, h, k, e) = std::move(m); }
  void set_ind(int k, int h, std::size_t e, IntMatrix m) { slot(data_[k].ind, k, h, e) = std::move(m); }

  /// Checks structural completeness, derives missing complex inductions as
  /// transposes and expands the Weyl actions. Throws InputError naming the
  /// offending key.
  void finalize() {
    const auto& L = *lattice_;
    for (int h = 0; h < class_count(); ++h) {
      if (data_[h].objs.empty())
        throw InputError("missing indecomposables for class " + class_key(h));
      if (!data_[h].has_weyl) throw InputError("missing weyl table for class " + class_key(h));
    }
    for (int h = 0; h < class_count(); ++h) {
      for (const auto& lc : L.local_classes(h)) {
        int k = lc.global_class;
        auto embs = L.embeddings(k, h);
        for (std::size_t e = 0; e < embs.size(); ++e) {
          if (k == h) {
            slot(data_[h].res, h, h, e) = IntMatrix::identity(size(h));
            slot(data_[h].ind, h, h, e) = IntMatrix::identity(size(h));
            continue;
          }
          auto& r = slot(data_[h].res, h, k, e);
          if (r.rows() == 0)
            throw InputError("missing res table " + class_key(h) + " -> " + class_key(k) +
                             embedding_suffix(k, h, e));
          check_shape(r, size(h), size(k), "res " + class_key(h) + " -> " + class_key(k));
          auto& i = slot(data_[k].ind, k, h, e);
          if (i.rows() == 0) {
            if (base_ == Base::Complex) i = r.transpose();
            else
              throw InputError("missing ind table " + class_key(k) + " -> " + class_key(h) +
                               embedding_suffix(k, h, e));
          }
          check_shape(i, size(k), size(h), "ind " + class_key(k) + " -> " + class_key(h));
          check_nonnegative(r, "res " + class_key(h) + " -> " + class_key(k));
          check_nonnegative(i, "ind " + class_key(k) + " -> " + class_key(h));
        }
      }
    }
    prepare_weyl();
    finalized_ = true;
  }

  /// Expands Weyl generators into actions of the full normalizers. Needs
  /// indecomposables and Weyl generators for every class.
  void prepare_weyl() {
    if (weyl_ready_) return;
    for (int h = 0; h < class_count(); ++h) {
      if (data_[h].objs.empty())
        throw InputError("missing indecomposables for class " + class_key(h));
      if (!data_[h].has_weyl) throw InputError("missing weyl table for class " + class_key(h));
      expand_weyl(h);
    }
    weyl_ready_ = true;
  }

  /// Embedding index and normalizer correction n for a conjugator g with
  /// g rep(k) g^-1 <= rep(h): g = x g_e n with x in rep(h).
  std::pair<std::size_t, ElementId> resolve_embedding(int k, int h, ElementId g) const {
    return resolve(k, h, g);
  }

  // ---- accessors ----

  const std::vector<Indecomposable>& indecomposables(int cls) const { return data_[cls].objs; }
  std::size_t size(int cls) const { return data_[cls].objs.size(); }
  long long dim(int cls, std::size_t i) const { return data_[cls].objs[i].dim; }
  int trivial(int cls) const { return data_[cls].trivial; }
  bool has_trivial_everywhere() const {
    return std::all_of(data_.begin(), data_.end(), [](const auto& d) { return d.trivial >= 0; });
  }
  const std::vector<WeylGenerator>& weyl_generators(int cls) const { return data_[cls].weyl_gens; }
  std::size_t embedding_count(int k, int h) const { return lattice_->embeddings(k, h).size(); }

  int find_label(int cls, std::string_view label) const {
    const auto& objs = data_[cls].objs;
    for (std::size_t i = 0; i < objs.size(); ++i)
      if (objs[i].label == label) return static_cast<int>(i);
    return -1;
  }

  const IntMatrix& res_table(int h, int k, std::size_t e = 0) const {
    return table(data_[h].res, h, k, e, "res");
  }
  const IntMatrix& ind_table(int k, int h, std::size_t e = 0) const {
    return table(data_[k].ind, k, h, e, "ind");
  }

  /// Permutation of H-indecomposables induced by x in N_G(rep H).
  const std::vector<int>& weyl_perm(int cls, ElementId x) const {
    auto it = data_[cls].weyl.find(x);
    if (it == data_[cls].weyl.end())
      throw InputError("element " + lattice_->element(x).to_string() +
                       " does not normalize rep of " + class_key(cls));
    return it->second;
  }

  /// Smallest index in the Weyl orbit of indecomposable i.
  int orbit_min(int cls, std::size_t i) const { return data_[cls].orbit_min[i]; }

  /// Lexicographically minimal multiset in the Weyl orbit.
  std::vector<long long> canonical_multiset(int cls, const std::vector<long long>& m) const {
    std::vector<long long> best = m;
    for (const auto& [x, perm] : data_[cls].weyl) {
      std::vector<long long> img(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) img[perm[i]] = m[i];
      if (img < best) best = img;
    }
    return best;
  }

  /// Restriction from rep(h) along c_g : rep(k) -> g rep(k) g^-1 <= rep(h).
  IntMatrix res_along(int h, int k, ElementId g) const {
    auto [e, n] = resolve(k, h, g);
    const IntMatrix& m = res_table(h, k, e);
    const auto& pi = weyl_perm(k, n);
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, pi[j]);
    return out;
  }

  /// Induction from rep(k), pushed forward along c_g, up to rep(h).
  IntMatrix ind_along(int k, int h, ElementId g) const {
    auto [e, n] = resolve(k, h, g);
    const IntMatrix& m = ind_table(k, h, e);
    const auto& pi = weyl_perm(k, n);
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(pi[i], j);
    return out;
  }

  // ---- objects ----

  ObjectClass object(int cls, std::vector<long long> multiset) const {
    if (multiset.size() != size(cls))
      throw InputError("multiset length mismatch at " + class_key(cls));
    for (long long m : multiset)
      if (m < 0) throw InputError("negative multiplicity");
    return ObjectClass{cls, std::move(multiset)};
  }
  ObjectClass unit(int cls, std::size_t i) const {
    std::vector<long long> m(size(cls), 0);
    m.at(i) = 1;
    return ObjectClass{cls, std::move(m)};
  }

  long long dim(const ObjectClass& x) const {
    long long d = 0;
    for (std::size_t i = 0; i < x.multiset.size(); ++i) d += x.multiset[i] * dim(x.subgroup, i);
    return d;
  }

  ObjectClass induce(const ObjectClass& x, int h, std::size_t e = 0) const {
    return apply(x, ind_table(x.subgroup, h, e), h);
  }
  ObjectClass restrict(const ObjectClass& x, int k, std::size_t e = 0) const {
    return apply(x, res_table(x.subgroup, k, e), k);
  }

  std::string describe(const ObjectClass& x) const {
    std::string out;
    for (std::size_t i = 0; i < x.multiset.size(); ++i) {
      long long m = x.multiset[i];
      if (m == 0) continue;
      if (!out.empty()) out += "+";
      if (m != 1) out += std::to_string(m);
      out += data_[x.subgroup].objs[i].label;
    }
    return out.empty() ? "0" : out;
  }

  // ---- validation ----

  ValidationReport validate() const;

  /// Mutable table access for building and fault-injection tests.
  IntMatrix& mutable_res(int h, int k, std::size_t e = 0) { return slot(data_[h].res, h, k, e); }
  IntMatrix& mutable_ind(int k, int h, std::size_t e = 0) { return slot(data_[k].ind, k, h, e); }

 private:
  struct ClassData {
    std::vector<Indecomposable> objs;
    int trivial = -1;
    bool has_weyl = false;
    std::vector<WeylGenerator> weyl_gens;
    std::map<ElementId, std::vector<int>> weyl;
    std::vector<int> orbit_min;
    std::map<int, std::vector<IntMatrix>> res;  // target class -> per embedding
    std::map<int, std::vector<IntMatrix>> ind;
  };

  void check_class(int cls) const {
    if (cls < 0 || cls >= class_count()) throw InputError("class index out of range");
  }

  std::string embedding_suffix(int k, int h, std::size_t e) const {
    if (embedding_count(k, h) <= 1) return "";
    return " (embedding " + std::to_string(e) + ")";
  }

  IntMatrix& slot(std::map<int, std::vector<IntMatrix>>& m, int a, int b, std::size_t e) {
    check_class(a);
    check_class(b);
    int sub = lattice_->subgroup_class(a).order <= lattice_->subgroup_class(b).order ? a : b;
    int sup = sub == a ? b : a;
    std::size_t count = embedding_count(sub, sup);
    if (e >= count)
      throw InputError("no embedding " + std::to_string(e) + " of " + class_key(sub) +
                       " into " + class_key(sup));
    auto& v = m[b];
    if (v.size() < count) v.resize(count);
    return v[e];
  }

  const IntMatrix& table(const std::map<int, std::vector<IntMatrix>>& m, int a, int b,
                         std::size_t e, const char* what) const {
    auto it = m.find(b);
    if (it == m.end() || e >= it->second.size() || it->second[e].rows() == 0)
      throw InputError(std::string("missing ") + what + " table " + class_key(a) + " -> " +
                       class_key(b));
    return it->second[e];
  }

  static void check_shape(const IntMatrix& m, std::size_t r, std::size_t c, const std::string& key) {
    if (m.rows() != r || m.cols() != c)
      throw InputError("table " + key + " has shape " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + ", expected " + std::to_string(r) + "x" +
                       std::to_string(c));
  }
  static void check_nonnegative(const IntMatrix& m, const std::string& key) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j) < 0) throw InputError("table " + key + " has a negative entry");
  }

  ObjectClass apply(const ObjectClass& x, const IntMatrix& t, int target) const {
    ObjectClass out{target, std::vector<long long>(size(target), 0)};
    for (std::size_t i = 0; i < x.multiset.size(); ++i) {
      if (x.multiset[i] == 0) continue;
      for (std::size_t j = 0; j < t.cols(); ++j)
        out.multiset[j] += x.multiset[i] * t(i, j).convert_to<long long>();
    }
    return out;
  }

  // Writes g = x * g_e * n with x in rep(h) and n in N(rep k); returns (e, n).
  std::pair<std::size_t, ElementId> resolve(int k, int h, ElementId g) const {
    const auto& L = *lattice_;
    ElementSet image = L.conjugate(g, L.representative(k));
    const ElementSet& H = L.representative(h);
    if (!L.contains(H, image))
      throw InputError("conjugator does not embed " + class_key(k) + " into " + class_key(h));
    int idx = L.subgroup_index(image);
    int local = L.local_class_of(h, idx);
    const auto& lc = L.local_classes(h)[local];
    auto embs = L.embeddings(k, h);
    std::size_t e = 0;
    while (embs[e].subgroup != lc.subgroup) ++e;
    const ElementSet& se = L.subgroup(lc.subgroup);
    for (ElementId x : L.elements_of(H)) {
      if (L.conjugate(x, se) != image) continue;
      ElementId n = L.mul(L.inv(L.mul(x, lc.conjugator)), g);
      return {e, n};
    }
    throw InputError("internal: embedding resolution failed");
  }

  void expand_weyl(int h) {
    const auto& L = *lattice_;
    auto& d = data_[h];
    const std::size_t n = d.objs.size();
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    std::vector<WeylGenerator> gens = d.weyl_gens;
    for (auto& wg : gens) {
      if (wg.perm.size() != n)
        throw InputError("weyl permutation for " + class_key(h) + " has wrong length");
      std::vector<bool> seen(n, false);
      for (int p : wg.perm) {
        if (p < 0 || p >= static_cast<int>(n) || seen[p])
          throw InputError("weyl table for " + class_key(h) + " is not a permutation");
        seen[p] = true;
      }
      if (!L.subgroup_class(h).normalizer.test(wg.element))
        throw InputError("weyl element " + L.element(wg.element).to_string() +
                         " does not normalize " + class_key(h));
    }
    for (ElementId s : L.subgroup_generators(L.subgroup_class(h).representative))
      gens.push_back({s, identity});
    d.weyl.clear();
    d.weyl[0] = identity;
    std::vector<ElementId> frontier{0};
    while (!frontier.empty()) {
      std::vector<ElementId> next;
      for (ElementId x : frontier) {
        for (const auto& wg : gens) {
          ElementId y = L.mul(x, wg.element);
          const auto& px = d.weyl.at(x);
          std::vector<int> py(n);
          for (std::size_t i = 0; i < n; ++i) py[i] = px[wg.perm[i]];
          auto it = d.weyl.find(y);
          if (it == d.weyl.end()) {
            d.weyl.emplace(y, std::move(py));
            next.push_back(y);
          } else if (it->second != py) {
            throw InputError("weyl table for " + class_key(h) +
                             " is not a group action (inconsistent at " +
                             L.element(y).to_string() + ")");
          }
        }
      }
      frontier = std::move(next);
    }
    if (d.weyl.size() != L.subgroup_class(h).normalizer.count())
      throw InputError("weyl generators for " + class_key(h) + " do not generate the normalizer");
    d.orbit_min.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      int best = static_cast<int>(i);
      for (const auto& [x, perm] : d.weyl) best = std::min(best, perm[i]);
      d.orbit_min[i] = best;
    }
  }

  std::string name_;
  Base base_;
  int characteristic_;
  SystemFlags flags_;
  std::shared_ptr<const SubgroupLattice> lattice_;
  std::string group_spec_;
  std::vector<ClassData> data_;
  bool finalized_ = false;
  bool weyl_ready_ = false;
};

namespace detail {

inline std::string matrix_text(const IntMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? "," : "") + m(i, j).str();
    out += "]";
  }
  return out + "]";
}

}  // namespace detail

inline ValidationReport CoefficientSystem::validate() const {
  const auto& L = *lattice_;
  ValidationReport report;
  auto check = [&](const std::string& name) -> ValidationCheck& {
    report.checks.push_back(ValidationCheck{name, true, 0, {}});
    return report.checks.back();
  };
  auto fail = [](ValidationCheck& c, std::string msg) {
    if (c.passed) c.counterexample = std::move(msg);
    c.passed = false;
  };
  auto el = [&](ElementId g) { return L.element(g).to_string(); };

  // Dimensions.
  {
    auto& c = check("res preserves dimension");
    auto& c2 = check("ind multiplies dimension by index");
    for (int h = 0; h < class_count(); ++h)
      for (const auto& lc : L.local_classes(h)) {
        int k = lc.global_class;
        long long idx = static_cast<long long>(L.index(k, h));
        std::size_t ne = embedding_count(k, h);
        for (std::size_t e = 0; e < ne; ++e) {
          const IntMatrix& r = res_table(h, k, e);
          for (std::size_t i = 0; i < size(h); ++i) {
            ObjectClass x = restrict(unit(h, i), k, e);
            ++c.verified;
            if (dim(x) != dim(h, i))
              fail(c, "dim Res_" + class_key(k) + "^" + class_key(h) + " " +
                          indecomposables(h)[i].label + " = " + std::to_string(dim(x)) +
                          " in " + detail::matrix_text(r));
          }
          for (std::size_t i = 0; i < size(k); ++i) {
            ObjectClass x = induce(unit(k, i), h, e);
            ++c2.verified;
            if (dim(x) != idx * dim(k, i))
              fail(c2, "dim Ind_" + class_key(k) + "^" + class_key(h) + " " +
                           indecomposables(k)[i].label + " = " + std::to_string(dim(x)));
          }
        }
      }
  }

  // Weyl actions.
  {
    auto& c = check("weyl action preserves dimension");
    for (int h = 0; h < class_count(); ++h)
      for (const auto& [x, perm] : data_[h].weyl)
        for (std::size_t i = 0; i < perm.size(); ++i) {
          ++c.verified;
          if (dim(h, perm[i]) != dim(h, i))
            fail(c, "element " + el(x) + " moves " + indecomposables(h)[i].label + " at " +
                        class_key(h) + " to a different dimension");
        }
    auto& c2 = check("weyl action compatible with tables");
    for (int h = 0; h < class_count(); ++h)
      for (const auto& wg : data_[h].weyl_gens) {
        const auto& pi = weyl_perm(h, wg.element);
        for (const auto& lc : L.local_classes(h)) {
          int k = lc.global_class;
          if (k == h) continue;
          ElementId g = L.mul(wg.element, lc.conjugator);
          IntMatrix base_r = res_along(h, k, lc.conjugator);
          IntMatrix moved_r = res_along(h, k, g);
          IntMatrix base_i = ind_along(k, h, lc.conjugator);
          IntMatrix moved_i = ind_along(k, h, g);
          // Res along x g of Y_{pi(i)} equals Res along g of Y_i.
          for (std::size_t i = 0; i < size(h); ++i)
            for (std::size_t j = 0; j < size(k); ++j) {
              ++c2.verified;
              if (moved_r(pi[i], j) != base_r(i, j))
                fail(c2, "res " + class_key(h) + " -> " + class_key(k) + " under " +
                             el(wg.element));
            }
          for (std::size_t i = 0; i < size(k); ++i)
            for (std::size_t j = 0; j < size(h); ++j) {
              ++c2.verified;
              if (moved_i(i, pi[j]) != base_i(i, j))
                fail(c2, "ind " + class_key(k) + " -> " + class_key(h) + " under " +
                             el(wg.element));
            }
        }
      }
  }

  // Transitivity along chains L' <= K <= H.
  {
    auto& cr = check("res transitive");
    auto& ci = check("ind transitive");
    for (int h = 0; h < class_count(); ++h)
      for (const auto& lk : L.local_classes(h)) {
        int k = lk.global_class;
        for (const auto& ll : L.local_classes(k)) {
          int l = ll.global_class;
          ElementId g = L.mul(lk.conjugator, ll.conjugator);
          IntMatrix lhs = res_along(h, k, lk.conjugator) * res_along(k, l, ll.conjugator);
          ++cr.verified;
          if (!(lhs == res_along(h, l, g)))
            fail(cr, "Res " + class_key(h) + " -> " + class_key(k) + " -> " + class_key(l) +
                         " = " + detail::matrix_text(lhs) + " but direct = " +
                         detail::matrix_text(res_along(h, l, g)));
          IntMatrix lhs_i = ind_along(l, k, ll.conjugator) * ind_along(k, h, lk.conjugator);
          ++ci.verified;
          if (!(lhs_i == ind_along(l, h, g)))
            fail(ci, "Ind " + class_key(l) + " -> " + class_key(k) + " -> " + class_key(h) +
                         " = " + detail::matrix_text(lhs_i) + " but direct = " +
                         detail::matrix_text(ind_along(l, h, g)));
        }
      }
  }

  if (flags_.frobenius) {
    auto& c = check("frobenius reciprocity");
    for (int h = 0; h < class_count(); ++h)
      for (const auto& lc : L.local_classes(h)) {
        int k = lc.global_class;
        for (std::size_t e = 0; e < embedding_count(k, h); ++e) {
          ++c.verified;
          if (!(ind_table(k, h, e) == res_table(h, k, e).transpose()))
            fail(c, "ind " + class_key(k) + " -> " + class_key(h) +
                        " is not the transpose of res");
        }
      }
  }

  if (flags_.mackey) {
    auto& c = check("mackey double coset formula");
    for (int a = 0; a < class_count(); ++a) {
      for (const auto& lh : L.local_classes(a)) {
        int h = lh.global_class;
        const ElementSet& SH = L.subgroup(lh.subgroup);
        for (const auto& lk : L.local_classes(a)) {
          int k = lk.global_class;
          const ElementSet& SK = L.subgroup(lk.subgroup);
          IntMatrix lhs = ind_along(h, a, lh.conjugator) * res_along(a, k, lk.conjugator);
          IntMatrix rhs(size(h), size(k));
          for (const auto& dc : L.double_cosets(SK, SH, L.representative(a))) {
            int iidx = L.subgroup_index(dc.intersection);
            int l = L.class_of(iidx);
            ElementId tI = L.transport(iidx);
            ElementId y = L.mul(L.mul(L.inv(lh.conjugator), L.inv(dc.representative)), tI);
            ElementId z = L.mul(L.inv(lk.conjugator), tI);
            IntMatrix term = res_along(h, l, y) * ind_along(l, k, z);
            for (std::size_t i = 0; i < rhs.rows(); ++i)
              for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) += term(i, j);
          }
          ++c.verified;
          if (!(lhs == rhs))
            fail(c, "Res_" + class_key(k) + " Ind_" + class_key(h) + "^" + class_key(a) +
                        " = " + detail::matrix_text(lhs) + " but double coset sum = " +
                        detail::matrix_text(rhs));
        }
      }
    }
  }
  return report;
}

}  // namespace repfilt
