#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "repfilt/coeffsys.hpp"
#include "repfilt/exactalg.hpp"
#include "repfilt/parallel.hpp"

namespace repfilt {

enum class FiltrationKind { Rank, Complexity };

inline std::string kind_name(FiltrationKind k) {
  return k == FiltrationKind::Rank ? "rank" : "complexity";
}

/// Directory entry for one generator symbol.
struct GeneratorInfo {
  int subgroup = 0;
  std::vector<long long> multiset;
  std::string label;
};

/// Integer combination of generator symbols.
using FreeClassElement = std::map<std::size_t, BigInt>;

struct FiltrationStage {
  FiltrationKind kind = FiltrationKind::Rank;
  long long n = 0;
  std::string group;
  std::string system;
  PresentedAbelianGroup presentation;
  std::vector<GeneratorInfo> generators;
  /// Row per generator: its image in the limit (Rep(G) for the rank
  /// filtration, Z via dimension for the complexity filtration).
  IntMatrix to_limit;
  bool stabilized = false;
};

namespace detail {

inline std::string generator_label(const CoefficientSystem& sys, int h, std::size_t i) {
  int top = sys.lattice().top_class();
  const std::string& label = sys.indecomposables(h)[i].label;
  if (h == top) return label;
  return "tr_{" + sys.class_key(h) + "}^{" + sys.class_key(top) + "}" + label;
}

inline std::vector<BigInt> row_of(const IntMatrix& m, std::size_t r) { return m.row(r); }

/// True when the map Z^gens/rels -> Z^limit given by `images` (row per
/// generator) is an isomorphism. The target here is free of rank
/// images.cols().
inline bool maps_isomorphically_to_free(const PresentedAbelianGroup& p, const IntMatrix& images) {
  std::size_t r = images.cols();
  if (!p.is_free() || p.free_rank() != r) return false;
  if (images.rows() == 0) return r == 0;
  SmithForm f = smith_normal_form(images);
  if (f.diagonal.size() != r) return false;
  for (const auto& d : f.diagonal)
    if (d != 1) return false;
  return true;
}

inline void check_system_ready(const CoefficientSystem& sys) {
  if (sys.class_count() == 0) throw InputError("empty coefficient system");
}

}  // namespace detail

/// pi_0^G of the n-th rank filtration stage.
///
/// Generators are tr_H^G[X] for X indecomposable at H with dim X <= n, one per
/// Weyl orbit. Additivity reduces every multiset generator to these, so the
/// only relations left are tr_H^G[Ind_K^H X'] = tr_K^G[X'] for every
/// embedding K <= H and indecomposable X' with [H:K] dim X' <= n.
inline FiltrationStage rank_pi0(const CoefficientSystem& sys, long long n) {
  detail::check_system_ready(sys);
  if (n < 0) throw InputError("stage must be non-negative");
  const auto& L = sys.lattice();
  const int top = L.top_class();
  FiltrationStage st;
  st.kind = FiltrationKind::Rank;
  st.n = n;
  st.group = sys.group_spec();
  st.system = sys.name();

  std::map<std::pair<int, int>, std::size_t> index;
  std::vector<std::string> labels;
  for (int h = 0; h < L.class_count(); ++h)
    for (std::size_t i = 0; i < sys.size(h); ++i) {
      if (sys.orbit_min(h, i) != static_cast<int>(i) || sys.dim(h, i) > n) continue;
      index[{h, static_cast<int>(i)}] = st.generators.size();
      st.generators.push_back({h, sys.unit(h, i).multiset, detail::generator_label(sys, h, i)});
      labels.push_back(st.generators.back().label);
    }
  auto gen = [&](int h, std::size_t i) { return index.at({h, sys.orbit_min(h, i)}); };
  const std::size_t ng = st.generators.size();

  std::vector<std::vector<std::vector<BigInt>>> per_class(L.class_count());
  parallel_for(static_cast<std::size_t>(L.class_count()), [&](std::size_t hc) {
    int h = static_cast<int>(hc);
    auto& rows = per_class[hc];
    for (const auto& lc : L.local_classes(h)) {
      int k = lc.global_class;
      if (k == h) continue;
      long long idx = static_cast<long long>(L.index(k, h));
      auto embs = L.embeddings(k, h);
      std::size_t e = 0;
      while (embs[e].subgroup != lc.subgroup) ++e;
      const IntMatrix& ind = sys.ind_table(k, h, e);
      for (std::size_t j = 0; j < sys.size(k); ++j) {
        if (idx * sys.dim(k, j) > n) continue;
        std::vector<BigInt> row(ng);
        for (std::size_t m = 0; m < sys.size(h); ++m)
          if (ind(j, m) != 0) row[gen(h, m)] += ind(j, m);
        row[gen(k, j)] -= 1;
        rows.push_back(std::move(row));
      }
    }
  });
  IntMatrix rel(0, ng);
  for (auto& rows : per_class)
    for (auto& r : rows) rel.append_row(r);

  st.to_limit = IntMatrix(ng, sys.size(top));
  for (std::size_t g = 0; g < ng; ++g) {
    const auto& info = st.generators[g];
    std::size_t i = std::find(info.multiset.begin(), info.multiset.end(), 1) - info.multiset.begin();
    const IntMatrix& ind = sys.ind_table(info.subgroup, top, 0);
    for (std::size_t c = 0; c < sys.size(top); ++c) st.to_limit(g, c) = ind(i, c);
  }
  if (rel.rows() > 0 && !(rel * st.to_limit).is_zero())
    throw Error("internal: a rank relation does not vanish in the representation ring");

  st.presentation = PresentedAbelianGroup(std::move(labels), rel);
  st.stabilized = detail::maps_isomorphically_to_free(st.presentation, st.to_limit);
  return st;
}

/// pi_0^G of the n-th complexity filtration stage: Rep(G) modulo
/// Ind_H^G W - dim(W) Ind_H^G[1] for all H and all W with 1 <= dim W <= n.
/// Additivity in W lets W range over indecomposables.
inline FiltrationStage complexity_pi0(const CoefficientSystem& sys, long long n) {
  detail::check_system_ready(sys);
  if (n < 0) throw InputError("stage must be non-negative");
  if (!sys.has_trivial_everywhere())
    throw InputError("system " + sys.name() + " lacks a trivial object at some subgroup class");
  const auto& L = sys.lattice();
  const int top = L.top_class();
  FiltrationStage st;
  st.kind = FiltrationKind::Complexity;
  st.n = n;
  st.group = sys.group_spec();
  st.system = sys.name();
  std::vector<std::string> labels;
  const std::size_t ng = sys.size(top);
  for (std::size_t i = 0; i < ng; ++i) {
    st.generators.push_back({top, sys.unit(top, i).multiset, sys.indecomposables(top)[i].label});
    labels.push_back(sys.indecomposables(top)[i].label);
  }

  std::vector<std::vector<std::vector<BigInt>>> per_class(L.class_count());
  parallel_for(static_cast<std::size_t>(L.class_count()), [&](std::size_t hc) {
    int h = static_cast<int>(hc);
    const IntMatrix& ind = sys.ind_table(h, top, 0);
    std::size_t t = static_cast<std::size_t>(sys.trivial(h));
    for (std::size_t i = 0; i < sys.size(h); ++i) {
      long long d = sys.dim(h, i);
      if (d < 1 || d > n) continue;
      std::vector<BigInt> row(ng);
      for (std::size_t c = 0; c < ng; ++c) row[c] = ind(i, c) - d * ind(t, c);
      per_class[hc].push_back(std::move(row));
    }
  });
  IntMatrix rel(0, ng);
  for (auto& rows : per_class)
    for (auto& r : rows) rel.append_row(r);

  st.to_limit = IntMatrix(ng, 1);
  for (std::size_t i = 0; i < ng; ++i) st.to_limit(i, 0) = sys.dim(top, i);
  st.presentation = PresentedAbelianGroup(std::move(labels), rel);
  st.stabilized = detail::maps_isomorphically_to_free(st.presentation, st.to_limit);
  return st;
}

inline FiltrationStage compute_stage(const CoefficientSystem& sys, FiltrationKind kind, long long n) {
  return kind == FiltrationKind::Rank ? rank_pi0(sys, n) : complexity_pi0(sys, n);
}

/// Map between stages of the same filtration, from.n <= to.n.
struct ConnectingMap {
  IntMatrix generator_images;                 // from.generators x to.generators
  std::vector<std::vector<BigInt>> coordinates;  // canonical image of each generator
  bool surjective = false;
  bool isomorphism = false;
  PresentedAbelianGroup cokernel;
};

inline ConnectingMap connecting_map(const FiltrationStage& from, const FiltrationStage& to) {
  if (from.kind != to.kind || from.group != to.group || from.system != to.system)
    throw InputError("connecting map needs stages of one filtration");
  if (to.n < from.n) throw InputError("connecting map goes from a lower stage to a higher one");
  ConnectingMap cm;
  const std::size_t nf = from.generators.size(), nt = to.generators.size();
  cm.generator_images = IntMatrix(nf, nt);
  for (std::size_t a = 0; a < nf; ++a) {
    std::size_t b = 0;
    while (b < nt && !(to.generators[b].subgroup == from.generators[a].subgroup &&
                       to.generators[b].multiset == from.generators[a].multiset))
      ++b;
    if (b == nt) throw Error("internal: generator missing from later stage");
    cm.generator_images(a, b) = 1;
  }
  for (std::size_t a = 0; a < nf; ++a)
    cm.coordinates.push_back(to.presentation.canonical_image(cm.generator_images.row(a)));

  IntMatrix stacked = to.presentation.relations();
  if (stacked.rows() == 0) stacked = IntMatrix(0, nt);
  for (std::size_t a = 0; a < nf; ++a) stacked.append_row(cm.generator_images.row(a));
  cm.cokernel = PresentedAbelianGroup(to.presentation.generator_labels(), stacked);
  cm.surjective = cm.cokernel.is_trivial();
  cm.isomorphism = cm.surjective && from.presentation.is_isomorphic(to.presentation);
  return cm;
}

/// Pairs (H, W), W indecomposable of dimension exactly n at H and not induced
/// from any proper subgroup; one per Weyl orbit.
inline std::vector<GeneratorInfo> cofiber_pi0_basis(const CoefficientSystem& sys, long long n) {
  if (!sys.flags().semisimple)
    throw InputError("cofiber basis needs a semisimple system; " + sys.name() + " is not");
  const auto& L = sys.lattice();
  std::vector<GeneratorInfo> out;
  for (int h = 0; h < L.class_count(); ++h)
    for (std::size_t i = 0; i < sys.size(h); ++i) {
      if (sys.orbit_min(h, i) != static_cast<int>(i) || sys.dim(h, i) != n) continue;
      bool induced = false;
      for (const auto& lc : L.local_classes(h)) {
        int k = lc.global_class;
        if (k == h) continue;
        long long idx = static_cast<long long>(L.index(k, h));
        for (std::size_t e = 0; e < sys.embedding_count(k, h) && !induced; ++e) {
          const IntMatrix& ind = sys.ind_table(k, h, e);
          for (std::size_t j = 0; j < sys.size(k) && !induced; ++j) {
            if (idx * sys.dim(k, j) != n) continue;
            // Ind X' is a single indecomposable in the orbit of W.
            long long total = 0;
            int hit = -1;
            for (std::size_t m = 0; m < sys.size(h); ++m) {
              total += ind(j, m).convert_to<long long>();
              if (ind(j, m) == 1) hit = static_cast<int>(m);
            }
            if (total == 1 && hit >= 0 && sys.orbit_min(h, hit) == static_cast<int>(i))
              induced = true;
          }
        }
      }
      if (!induced) out.push_back({h, sys.unit(h, i).multiset, detail::generator_label(sys, h, i)});
    }
  return out;
}

struct StabilizationResult {
  FiltrationKind kind = FiltrationKind::Rank;
  std::optional<long long> stage;  // n0, if found within the bound
  long long bound = 0;             // |G|
  /// Stages n in [n0, bound] whose connecting map to n+1 (n < bound) was
  /// verified to be an isomorphism.
  std::vector<long long> certified;
  std::string message;
};

/// Smallest n0 <= |G| after which the connecting maps are isomorphisms up to
/// |G|; for the rank filtration every such stage must also map
/// isomorphically onto Rep(G).
inline StabilizationResult stabilization_stage(const CoefficientSystem& sys, FiltrationKind kind) {
  const long long bound = static_cast<long long>(sys.lattice().order());
  std::vector<FiltrationStage> stages;
  for (long long n = 0; n <= bound; ++n) stages.push_back(compute_stage(sys, kind, n));
  std::vector<bool> iso_next(bound + 1, true);
  for (long long n = 0; n < bound; ++n)
    iso_next[n] = connecting_map(stages[n], stages[n + 1]).isomorphism;
  StabilizationResult r;
  r.kind = kind;
  r.bound = bound;
  long long n0 = bound + 1;
  for (long long n = bound; n >= 0; --n) {
    bool ok = iso_next[n] && (kind == FiltrationKind::Complexity || stages[n].stabilized);
    if (!ok) break;
    n0 = n;
  }
  if (n0 > bound) {
    r.message = "no stabilization <= |G| = " + std::to_string(bound);
    return r;
  }
  r.stage = n0;
  for (long long n = n0; n <= bound; ++n) r.certified.push_back(n);
  r.message = "stable from stage " + std::to_string(n0) + ", verified through " + std::to_string(bound);
  return r;
}

inline nlohmann::json bigint_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

inline nlohmann::json stage_json(const CoefficientSystem& sys, const FiltrationStage& st) {
  nlohmann::json j;
  j["group"] = st.group;
  j["system"] = st.system;
  j["kind"] = kind_name(st.kind);
  j["n"] = st.n;
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& d : st.presentation.invariant_factors()) factors.push_back(bigint_json(d));
  j["invariant_factors"] = factors;
  j["free_rank"] = st.presentation.free_rank();
  j["description"] = st.presentation.describe();
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : st.generators)
    gens.push_back({{"subgroup", sys.class_key(g.subgroup)}, {"multiset", g.multiset}, {"label", g.label}});
  j["generators"] = gens;
  j["relations_count"] = st.presentation.relation_count();
  j["stabilized"] = st.stabilized;
  return j;
}

}  // namespace repfilt
