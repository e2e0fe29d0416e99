#pragma once

#include <memory>
#include <string>
#include <vector>

#include "repfilt/coeffsys.hpp"

namespace repfilt {

namespace detail {

inline bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Minimal element of order |G|, or throws if G is not cyclic.
inline ElementId cyclic_generator(const SubgroupLattice& L) {
  for (std::size_t x = 0; x < L.order(); ++x)
    if (L.element(static_cast<ElementId>(x)).order() == L.order()) return static_cast<ElementId>(x);
  throw InputError("group " + L.group().name() + " is not cyclic");
}

inline std::vector<WeylGenerator> trivial_weyl(const SubgroupLattice& L, int cls, std::size_t n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<WeylGenerator> out;
  for (ElementId w : L.weyl_generators(cls)) out.push_back({w, id});
  return out;
}

inline std::string eta_label(std::size_t d, std::size_t i) {
  if (i == 0) return "[1]";
  if (d == 2) return "[-1]";
  if (i == 1) return "[eta" + std::to_string(d) + "]";
  return "[eta" + std::to_string(d) + "^" + std::to_string(i) + "]";
}

inline std::shared_ptr<const SubgroupLattice> prime_cyclic_lattice(const PermGroup& g,
                                                                   const char* kind) {
  auto L = std::make_shared<const SubgroupLattice>(g);
  cyclic_generator(*L);
  if (!is_prime(L->order()))
    throw InputError(std::string(kind) + " needs a cyclic group of prime order, got " + g.name());
  return L;
}

}  // namespace detail

/// Complex representations of a cyclic group: characters eta_d^i at C_d,
/// generated by gamma^(n/d) for a fixed generator gamma.
inline CoefficientSystem complex_cyclic(const PermGroup& g, std::string group_spec) {
  auto L = std::make_shared<const SubgroupLattice>(g);
  detail::cyclic_generator(*L);
  const std::size_t n = L->order();
  CoefficientSystem sys("complex_cyclic(" + std::to_string(n) + ")", Base::Complex, 0,
                        {true, true, true}, L, std::move(group_spec));
  for (int c = 0; c < L->class_count(); ++c) {
    std::size_t d = L->subgroup_class(c).order;
    std::vector<Indecomposable> objs;
    for (std::size_t i = 0; i < d; ++i) objs.push_back({detail::eta_label(d, i), 1});
    sys.set_indecomposables(c, std::move(objs), 0);
    sys.set_weyl(c, detail::trivial_weyl(*L, c, d));
  }
  for (int h = 0; h < L->class_count(); ++h) {
    std::size_t d = L->subgroup_class(h).order;
    for (const auto& lc : L->local_classes(h)) {
      int k = lc.global_class;
      if (k == h) continue;
      std::size_t m = L->subgroup_class(k).order;
      IntMatrix r(d, m);
      for (std::size_t i = 0; i < d; ++i) r(i, i % m) = 1;
      sys.set_res(h, k, 0, r);
      sys.set_ind(k, h, 0, r.transpose());
    }
  }
  sys.finalize();
  return sys;
}

/// Real representations of C_p: [1], [-1] for p = 2, else the 2-dimensional
/// realifications r_i of eta_p^i, i = 1..(p-1)/2.
inline CoefficientSystem real_cyclic(const PermGroup& g, std::string group_spec) {
  auto L = detail::prime_cyclic_lattice(g, "real_cyclic");
  const std::size_t p = L->order();
  CoefficientSystem sys("real_cyclic(" + std::to_string(p) + ")", Base::Real, 0,
                        {true, false, true}, L, std::move(group_spec));
  sys.set_indecomposables(0, {{"[1]", 1}}, 0);
  sys.set_weyl(0, detail::trivial_weyl(*L, 0, 1));
  std::vector<Indecomposable> objs{{"[1]", 1}};
  if (p == 2) {
    objs.push_back({"[-1]", 1});
  } else {
    for (std::size_t i = 1; i <= (p - 1) / 2; ++i) {
      std::string base = "r_eta" + std::to_string(p);
      objs.push_back({"[" + base + (i == 1 ? "" : "^" + std::to_string(i)) + "]", 2});
    }
  }
  IntMatrix r(objs.size(), 1), ind(1, objs.size());
  for (std::size_t i = 0; i < objs.size(); ++i) {
    r(i, 0) = objs[i].dim;
    ind(0, i) = 1;
  }
  sys.set_weyl(1, detail::trivial_weyl(*L, 1, objs.size()));
  sys.set_indecomposables(1, std::move(objs), 0);
  sys.set_res(1, 0, 0, r);
  sys.set_ind(0, 1, 0, ind);
  sys.finalize();
  return sys;
}

/// Rational representations of C_p: [1] and the (p-1)-dimensional [rho_p].
inline CoefficientSystem rational_cyclic(const PermGroup& g, std::string group_spec) {
  auto L = detail::prime_cyclic_lattice(g, "rational_cyclic");
  const std::size_t p = L->order();
  CoefficientSystem sys("rational_cyclic(" + std::to_string(p) + ")", Base::Rational, 0,
                        {true, false, true}, L, std::move(group_spec));
  sys.set_indecomposables(0, {{"[1]", 1}}, 0);
  sys.set_weyl(0, detail::trivial_weyl(*L, 0, 1));
  std::string rho = p == 2 ? "[-1]" : "[rho" + std::to_string(p) + "]";
  sys.set_indecomposables(1, {{"[1]", 1}, {rho, static_cast<long long>(p - 1)}}, 0);
  sys.set_weyl(1, detail::trivial_weyl(*L, 1, 2));
  sys.set_res(1, 0, 0, IntMatrix::from_rows({{1}, {static_cast<long long>(p - 1)}}, 1));
  sys.set_ind(0, 1, 0, IntMatrix::from_rows({{1, 1}}, 2));
  sys.finalize();
  return sys;
}

/// Z/p[C_p]-lattices free over F_p: one indecomposable V_i in each
/// dimension 1..p, with V_p the regular representation.
inline CoefficientSystem fp_lattices_cyclic(const PermGroup& g, std::string group_spec) {
  auto L = detail::prime_cyclic_lattice(g, "fp_lattices_cyclic");
  const std::size_t p = L->order();
  CoefficientSystem sys("fp_lattices_cyclic(" + std::to_string(p) + ")", Base::FpLattices,
                        static_cast<int>(p), {false, false, true}, L, std::move(group_spec));
  sys.set_indecomposables(0, {{"[1]", 1}}, 0);
  sys.set_weyl(0, detail::trivial_weyl(*L, 0, 1));
  std::vector<Indecomposable> objs;
  IntMatrix r(p, 1), ind(1, p);
  for (std::size_t i = 1; i <= p; ++i) {
    objs.push_back({"[V" + std::to_string(i) + "]", static_cast<long long>(i)});
    r(i - 1, 0) = static_cast<long long>(i);
  }
  ind(0, p - 1) = 1;
  sys.set_indecomposables(1, std::move(objs), 0);
  sys.set_weyl(1, detail::trivial_weyl(*L, 1, p));
  sys.set_res(1, 0, 0, r);
  sys.set_ind(0, 1, 0, ind);
  sys.finalize();
  return sys;
}

/// Finite G-sets: at H the transitive H-sets H/L, one per local class L.
inline CoefficientSystem burnside(const PermGroup& g, std::string group_spec) {
  auto Lp = std::make_shared<const SubgroupLattice>(g);
  const auto& L = *Lp;
  CoefficientSystem sys("burnside(" + g.name() + ")", Base::FiniteSets, 0, {true, false, true},
                        Lp, std::move(group_spec));
  for (int h = 0; h < L.class_count(); ++h) {
    const auto& locals = L.local_classes(h);
    std::vector<Indecomposable> objs;
    std::map<int, int> seen_count, total;
    for (const auto& lc : locals) ++total[lc.global_class];
    for (const auto& lc : locals) {
      std::string label = "[" + L.subgroup_class(h).name + "/" +
                          L.subgroup_class(lc.global_class).name;
      if (total[lc.global_class] > 1) label += "#" + std::to_string(++seen_count[lc.global_class]);
      objs.push_back({label + "]", static_cast<long long>(L.index(lc.global_class, h))});
    }
    int trivial = static_cast<int>(locals.size()) - 1;
    sys.set_indecomposables(h, std::move(objs), trivial);

    // Weyl: (c_x)_*(H/S) = H/(x S x^-1).
    std::vector<WeylGenerator> weyl;
    for (ElementId x : L.weyl_generators(h)) {
      std::vector<int> perm(locals.size());
      for (std::size_t i = 0; i < locals.size(); ++i)
        perm[i] = L.local_class_of(h, L.subgroup_index(L.conjugate(x, L.subgroup(locals[i].subgroup))));
      weyl.push_back({x, perm});
    }
    sys.set_weyl(h, std::move(weyl));
  }
  for (int h = 0; h < L.class_count(); ++h) {
    const ElementSet& H = L.representative(h);
    auto hs = L.elements_of(H);
    const auto& hlocals = L.local_classes(h);
    for (const auto& lk : hlocals) {
      int k = lk.global_class;
      if (k == h) continue;
      auto embs = L.embeddings(k, h);
      std::size_t e = 0;
      while (embs[e].subgroup != lk.subgroup) ++e;
      const ElementSet& K = L.representative(k);
      ElementId ge = lk.conjugator;
      const ElementSet& Se = L.subgroup(lk.subgroup);
      const auto& klocals = L.local_classes(k);

      // Res: rep(K) acts on H/S through c_ge; orbit stabilizers pulled back.
      IntMatrix r(hlocals.size(), klocals.size());
      for (std::size_t i = 0; i < hlocals.size(); ++i) {
        const ElementSet& S = L.subgroup(hlocals[i].subgroup);
        std::vector<ElementSet> cosets;
        std::vector<bool> covered;
        for (ElementId x : hs) {
          ElementSet c;
          for (ElementId s : L.elements_of(S)) c.set(L.mul(x, s));
          if (std::find(cosets.begin(), cosets.end(), c) == cosets.end()) cosets.push_back(c);
        }
        covered.assign(cosets.size(), false);
        for (std::size_t ci = 0; ci < cosets.size(); ++ci) {
          if (covered[ci]) continue;
          ElementId hx = static_cast<ElementId>(cosets[ci]._Find_first());
          // Orbit under S_e, mark covered.
          for (ElementId s : L.elements_of(Se)) {
            ElementId y = L.mul(s, hx);
            for (std::size_t cj = 0; cj < cosets.size(); ++cj)
              if (cosets[cj].test(y)) covered[cj] = true;
          }
          ElementSet stab = Se & L.conjugate(hx, S);
          ElementSet pulled = L.conjugate(L.inv(ge), stab);
          int local = L.local_class_of(k, L.subgroup_index(pulled));
          r(i, local) += 1;
        }
      }
      (void)K;
      sys.set_res(h, k, e, r);

      // Ind: Ind (K/M) along c_ge = H/(ge M ge^-1).
      IntMatrix ind(klocals.size(), hlocals.size());
      for (std::size_t i = 0; i < klocals.size(); ++i) {
        ElementSet M = L.conjugate(ge, L.subgroup(klocals[i].subgroup));
        ind(i, L.local_class_of(h, L.subgroup_index(M))) = 1;
      }
      sys.set_ind(k, h, e, ind);
    }
  }
  sys.finalize();
  return sys;
}

}  // namespace repfilt
