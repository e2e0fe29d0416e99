#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repfilt/builtin_data.hpp"
#include "repfilt/builtins.hpp"
#include "repfilt/system_io.hpp"

namespace repfilt {

/// Names accepted by make_system besides file paths.
inline std::vector<std::string> builtin_system_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : data::kBuiltinSystems)
    if (!name.empty()) out.push_back("paper:" + std::string(name));
  for (const char* k : {"burnside", "complex", "real", "rational", "fp", "complex_cyclic(n)",
                        "real_cyclic(p)", "rational_cyclic(p)", "fp_lattices_cyclic(p)"})
    out.emplace_back(k);
  return out;
}

namespace detail {

inline std::optional<std::size_t> call_argument(const std::string& s, const std::string& fn) {
  if (s.rfind(fn + "(", 0) != 0 || s.back() != ')') return std::nullopt;
  return parse_positive(std::string_view(s).substr(fn.size() + 1, s.size() - fn.size() - 2), fn);
}

}  // namespace detail

/// Resolves a system name (optionally prefixed "builtin:") or a file path.
/// `group` may be empty when the system fixes its own group.
inline CoefficientSystem make_system(std::string name, const std::string& group) {
  if (name.rfind("builtin:", 0) == 0) name = name.substr(8);
  if (name.rfind("paper:", 0) == 0) {
    std::string key = name.substr(6);
    for (const auto& [n, text] : data::kBuiltinSystems) {
      if (n != key) continue;
      auto sys = parse_system(std::string(text));
      if (!group.empty()) {
        auto other = parse_group_spec(group);
        if (other.name() != sys.lattice().group().name() || other.order() != sys.lattice().order())
          throw InputError("system " + name + " is defined for " + sys.group_spec() + ", not " + group);
      }
      return sys;
    }
    throw InputError("unknown builtin system '" + name + "'");
  }
  struct Cyclic {
    const char* fn;
    const char* shorthand;
    CoefficientSystem (*make)(const PermGroup&, std::string);
  };
  const Cyclic cyclic[] = {{"complex_cyclic", "complex", complex_cyclic},
                           {"real_cyclic", "real", real_cyclic},
                           {"rational_cyclic", "rational", rational_cyclic},
                           {"fp_lattices_cyclic", "fp", fp_lattices_cyclic}};
  for (const auto& c : cyclic) {
    if (auto n = detail::call_argument(name, c.fn)) {
      std::string spec = "Cn:" + std::to_string(*n);
      if (!group.empty()) {
        auto g = parse_group_spec(group);
        if (g.order() != *n) throw InputError(name + " does not match group " + group);
      }
      return c.make(cyclic_group(*n), spec);
    }
    if (name == c.shorthand) {
      if (group.empty()) throw InputError("system '" + name + "' needs --group");
      return c.make(parse_group_spec(group), group);
    }
  }
  if (name == "burnside") {
    if (group.empty()) throw InputError("system 'burnside' needs --group");
    return burnside(parse_group_spec(group), group);
  }
  if (auto spec = name.rfind("burnside(", 0) == 0 && name.back() == ')'
                      ? std::optional<std::string>(name.substr(9, name.size() - 10))
                      : std::nullopt)
    return burnside(parse_group_spec(*spec), *spec);
  return load_system(name, group.empty() ? std::nullopt : std::optional<std::string>(group));
}

}  // namespace repfilt
