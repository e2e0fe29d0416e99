#pragma once

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "repfilt/coeffsys.hpp"

namespace repfilt {

using json = nlohmann::json;

namespace detail {

inline json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).convert_to<long long>());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline IntMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected a matrix (array of rows)");
  if (j.empty()) throw InputError(where + ": empty matrix");
  std::size_t cols = 0;
  IntMatrix m;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& row = j[i];
    if (!row.is_array()) throw InputError(where + "[" + std::to_string(i) + "]: expected a row");
    if (i == 0) {
      cols = row.size();
      m = IntMatrix(j.size(), cols);
    }
    if (row.size() != cols) throw InputError(where + ": ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_number_integer())
        throw InputError(where + "[" + std::to_string(i) + "][" + std::to_string(c) +
                         "]: expected an integer");
      m(i, c) = row[c].get<long long>();
    }
  }
  return m;
}

template <class T>
T field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    throw InputError(where + ": missing field '" + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(where + "." + key + ": wrong type");
  }
}

}  // namespace detail

/// Canonical JSON form: one plain matrix per (source, target) pair when the
/// pair has a single embedding, otherwise a list of {conjugator, matrix}.
inline json system_to_json(const CoefficientSystem& sys) {
  const auto& L = sys.lattice();
  json j;
  j["name"] = sys.name();
  j["base"] = base_name(sys.base());
  j["characteristic"] = sys.characteristic();
  j["group"] = sys.group_spec();
  j["flags"] = {{"semisimple", sys.flags().semisimple},
                {"frobenius", sys.flags().frobenius},
                {"mackey", sys.flags().mackey}};
  json groups = json::array();
  for (int h = 0; h < sys.class_count(); ++h) {
    json g;
    g["class_key"] = sys.class_key(h);
    g["trivial"] = sys.trivial(h) >= 0 ? json(sys.indecomposables(h)[sys.trivial(h)].label) : json();
    json objs = json::array();
    for (const auto& o : sys.indecomposables(h)) objs.push_back({{"label", o.label}, {"dim", o.dim}});
    g["indecomposables"] = objs;
    json weyl = json::array();
    for (const auto& wg : sys.weyl_generators(h))
      weyl.push_back({{"element", L.element(wg.element).to_string()}, {"perm", wg.perm}});
    g["weyl"] = weyl;
    json res = json::object(), ind = json::object();
    for (int other = 0; other < sys.class_count(); ++other) {
      if (other == h) continue;
      auto emit = [&](int sub, int sup, auto getter) -> json {
        auto embs = L.embeddings(sub, sup);
        if (embs.size() == 1) return detail::matrix_json(getter(0));
        json list = json::array();
        for (std::size_t e = 0; e < embs.size(); ++e)
          list.push_back({{"conjugator", L.element(embs[e].conjugator).to_string()},
                          {"matrix", detail::matrix_json(getter(e))}});
        return list;
      };
      if (!L.embeddings(other, h).empty())
        res[sys.class_key(other)] =
            emit(other, h, [&](std::size_t e) -> const IntMatrix& { return sys.res_table(h, other, e); });
      if (!L.embeddings(h, other).empty())
        ind[sys.class_key(other)] =
            emit(h, other, [&](std::size_t e) -> const IntMatrix& { return sys.ind_table(h, other, e); });
    }
    g["res"] = res;
    g["ind"] = ind;
    groups.push_back(std::move(g));
  }
  j["groups"] = groups;
  return j;
}

/// Two-space indented JSON with arrays of scalars kept on one line, so
/// matrices print one row per line. Keys stay sorted.
inline void pretty_dump(const json& j, std::string& out, int depth = 0) {
  auto pad = [&](int d) { out.append(static_cast<std::size_t>(2 * d), ' '); };
  if (j.is_array()) {
    bool flat = std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); });
    if (flat || j.empty()) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      pad(depth + 1);
      pretty_dump(j[i], out, depth + 1);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    pad(depth);
    out += "]";
  } else if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      pad(depth + 1);
      out += json(k).dump() + ": ";
      pretty_dump(v, out, depth + 1);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    pad(depth);
    out += "}";
  } else {
    out += j.dump();
  }
}

inline std::string pretty(const json& j) {
  std::string out;
  pretty_dump(j, out);
  return out + "\n";
}

inline std::string dump_system(const CoefficientSystem& sys) { return pretty(system_to_json(sys)); }

/// Builds and finalizes a system from its JSON form. The group spec in the
/// file is used unless `group_override` is given.
inline CoefficientSystem system_from_json(const json& j,
                                          std::optional<std::string> group_override = std::nullopt) {
  const std::string top = "system";
  auto name = detail::field<std::string>(j, "name", top);
  Base base = parse_base(detail::field<std::string>(j, "base", top));
  int characteristic = j.contains("characteristic") ? detail::field<int>(j, "characteristic", top) : 0;
  std::string group_spec = group_override ? *group_override : detail::field<std::string>(j, "group", top);
  SystemFlags flags;
  if (j.contains("flags")) {
    const json& f = j.at("flags");
    flags.semisimple = detail::field<bool>(f, "semisimple", "flags");
    flags.frobenius = detail::field<bool>(f, "frobenius", "flags");
    flags.mackey = detail::field<bool>(f, "mackey", "flags");
  }
  auto lattice = std::make_shared<const SubgroupLattice>(parse_group_spec(group_spec));
  const auto& L = *lattice;
  CoefficientSystem sys(name, base, characteristic, flags, lattice, group_spec);

  if (!j.contains("groups") || !j.at("groups").is_array())
    throw InputError("system: missing array field 'groups'");
  const json& groups = j.at("groups");
  std::vector<const json*> by_class(L.class_count(), nullptr);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    std::string where = "groups[" + std::to_string(gi) + "]";
    auto key = detail::field<std::string>(groups[gi], "class_key", where);
    int cls = L.class_by_name(key);
    if (cls < 0)
      throw InputError(where + ": class_key '" + key + "' is not a subgroup class of " + group_spec);
    if (by_class[cls]) throw InputError(where + ": duplicate class_key '" + key + "'");
    by_class[cls] = &groups[gi];
  }
  for (int c = 0; c < L.class_count(); ++c)
    if (!by_class[c]) throw InputError("system: no entry for subgroup class " + L.subgroup_class(c).name);

  for (int c = 0; c < L.class_count(); ++c) {
    const json& g = *by_class[c];
    std::string where = "class " + L.subgroup_class(c).name;
    if (!g.contains("indecomposables") || !g.at("indecomposables").is_array())
      throw InputError(where + ": missing indecomposables");
    std::vector<Indecomposable> objs;
    for (const auto& o : g.at("indecomposables"))
      objs.push_back({detail::field<std::string>(o, "label", where),
                      detail::field<long long>(o, "dim", where)});
    int trivial = -1;
    if (g.contains("trivial") && !g.at("trivial").is_null()) {
      auto label = detail::field<std::string>(g, "trivial", where);
      for (std::size_t i = 0; i < objs.size(); ++i)
        if (objs[i].label == label) trivial = static_cast<int>(i);
      if (trivial < 0) throw InputError(where + ": trivial label '" + label + "' not found");
    }
    sys.set_indecomposables(c, std::move(objs), trivial);
    if (!g.contains("weyl")) throw InputError("missing weyl table for class " + L.subgroup_class(c).name);
    std::vector<WeylGenerator> weyl;
    for (const auto& w : g.at("weyl")) {
      auto el = detail::field<std::string>(w, "element", where + ".weyl");
      weyl.push_back({L.id_of(Perm::parse(el, L.group().degree())),
                      detail::field<std::vector<int>>(w, "perm", where + ".weyl")});
    }
    sys.set_weyl(c, std::move(weyl));
  }
  sys.prepare_weyl();

  auto read_tables = [&](int c, const char* kind) {
    const json& g = *by_class[c];
    if (!g.contains(kind)) return;
    const bool is_res = std::string(kind) == "res";
    for (const auto& [key, value] : g.at(kind).items()) {
      std::string where = "class " + L.subgroup_class(c).name + "." + kind + "." + key;
      int other = L.class_by_name(key);
      if (other < 0) throw InputError(where + ": unknown class key");
      int sub = is_res ? other : c, sup = is_res ? c : other;
      std::size_t count = L.embeddings(sub, sup).size();
      if (count == 0) throw InputError(where + ": " + L.subgroup_class(sub).name +
                                       " is not contained in " + L.subgroup_class(sup).name);
      std::vector<bool> seen(count, false);
      auto store = [&](std::size_t e, ElementId n, const IntMatrix& given) {
        if (seen[e]) throw InputError(where + ": embedding given twice");
        seen[e] = true;
        const auto& pi = sys.weyl_perm(sub, n);
        IntMatrix canon(given.rows(), given.cols());
        if (is_res) {
          if (given.cols() != pi.size()) throw InputError(where + ": wrong column count");
          for (std::size_t i = 0; i < given.rows(); ++i)
            for (std::size_t jj = 0; jj < given.cols(); ++jj) canon(i, pi[jj]) = given(i, jj);
          sys.set_res(c, other, e, canon);
        } else {
          if (given.rows() != pi.size()) throw InputError(where + ": wrong row count");
          for (std::size_t i = 0; i < given.rows(); ++i)
            for (std::size_t jj = 0; jj < given.cols(); ++jj) canon(pi[i], jj) = given(i, jj);
          sys.set_ind(c, other, e, canon);
        }
      };
      bool plain = value.is_array() && !value.empty() && value[0].is_array();
      if (plain) {
        if (count != 1)
          throw InputError(where + ": " + std::to_string(count) +
                           " embeddings need a list of {conjugator, matrix}");
        store(0, 0, detail::matrix_from_json(value, where));
      } else {
        if (!value.is_array()) throw InputError(where + ": expected matrix or embedding list");
        for (std::size_t i = 0; i < value.size(); ++i) {
          std::string w2 = where + "[" + std::to_string(i) + "]";
          auto conj = detail::field<std::string>(value[i], "conjugator", w2);
          ElementId g = L.id_of(Perm::parse(conj, L.group().degree()));
          auto [e, n] = sys.resolve_embedding(sub, sup, g);
          if (!value[i].contains("matrix")) throw InputError(w2 + ": missing field 'matrix'");
          store(e, n, detail::matrix_from_json(value[i].at("matrix"), w2 + ".matrix"));
        }
      }
    }
  };
  for (int c = 0; c < L.class_count(); ++c) {
    read_tables(c, "res");
    read_tables(c, "ind");
  }
  sys.finalize();
  return sys;
}

inline CoefficientSystem parse_system(const std::string& text,
                                      std::optional<std::string> group_override = std::nullopt) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1 + static_cast<std::size_t>(
                               std::count(text.begin(), text.begin() + std::min(e.byte, text.size()), '\n'));
    throw InputError("system file line " + std::to_string(line) + ": " + e.what());
  }
  return system_from_json(j, std::move(group_override));
}

inline CoefficientSystem load_system(const std::string& path,
                                     std::optional<std::string> group_override = std::nullopt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open system file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str(), std::move(group_override));
}

inline void save_system(const CoefficientSystem& sys, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write system file " + path);
  out << dump_system(sys);
}

/// Subgroup structure used by external table generators: class
/// representatives, Weyl generators and embedding conjugators.
inline json skeleton_json(const SubgroupLattice& L, const std::string& group_spec) {
  json j;
  j["group"] = group_spec;
  j["degree"] = L.group().degree();
  j["order"] = L.order();
  json classes = json::array();
  for (const auto& c : L.classes()) {
    json cj;
    cj["key"] = c.name;
    cj["order"] = c.order;
    json elems = json::array();
    for (ElementId x : L.elements_of(L.representative(c.id))) elems.push_back(L.element(x).images());
    cj["elements"] = elems;
    json weyl = json::array();
    for (ElementId w : L.weyl_generators(c.id)) weyl.push_back(L.element(w).images());
    cj["weyl_generators"] = weyl;
    json weyl_str = json::array();
    for (ElementId w : L.weyl_generators(c.id)) weyl_str.push_back(L.element(w).to_string());
    cj["weyl_generator_cycles"] = weyl_str;
    json embs = json::array();
    for (const auto& lc : L.local_classes(c.id)) {
      if (lc.global_class == c.id) continue;
      embs.push_back({{"sub", L.subgroup_class(lc.global_class).name},
                      {"conjugator", L.element(lc.conjugator).images()},
                      {"conjugator_cycles", L.element(lc.conjugator).to_string()}});
    }
    cj["embeddings"] = embs;
    classes.push_back(std::move(cj));
  }
  j["classes"] = classes;
  return j;
}

}  // namespace repfilt
