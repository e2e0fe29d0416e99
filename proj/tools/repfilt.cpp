#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "repfilt/filtration.hpp"
#include "repfilt/golden_tables.hpp"
#include "repfilt/posets.hpp"
#include "repfilt/registry.hpp"
#include "repfilt/system_io.hpp"

using nlohmann::json;
using namespace repfilt;

namespace {

constexpr const char* kEngineVersion = "1.0.0";

enum Exit { kOk = 0, kFailure = 1, kInput = 2, kBound = 3 };

struct Common {
  std::string format = "text";
  bool timing = false;
};

/// Printed report: JSON envelope or the text body.
struct Output {
  json inputs = json::object();
  json result;
  std::string text;
  int code = kOk;
};

int emit(const std::string& command, const Common& c, Output out, double seconds) {
  if (c.format == "json") {
    json r{{"command", command}, {"inputs", out.inputs}, {"result", out.result}, {"engine_version", kEngineVersion}};
    if (c.timing) r["timing_seconds"] = seconds;
    std::cout << pretty(r);
  } else {
    std::cout << out.text;
    if (c.timing) std::cout << "time: " << seconds << " s\n";
  }
  return out.code;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string multiset_text(const std::vector<long long>& m) {
  std::vector<std::string> parts;
  for (auto x : m) parts.push_back(std::to_string(x));
  return "(" + join(parts, ",") + ")";
}

FiltrationKind parse_kind(const std::string& k) {
  if (k == "rank") return FiltrationKind::Rank;
  if (k == "complexity") return FiltrationKind::Complexity;
  throw InputError("kind must be 'rank' or 'complexity', got '" + k + "'");
}

std::string stage_text(const CoefficientSystem& sys, const FiltrationStage& st) {
  std::ostringstream os;
  os << kind_name(st.kind) << " stage n=" << st.n << " of " << st.system << " at " << st.group << ": "
     << st.presentation.describe() << "\n";
  os << "free rank " << st.presentation.free_rank() << "\n";
  std::vector<std::string> f;
  for (const auto& d : st.presentation.invariant_factors()) f.push_back(d.str());
  os << "invariant factors: " << (f.empty() ? "none" : join(f, " ")) << "\n";
  os << "generators (" << st.generators.size() << "):\n";
  for (const auto& g : st.generators)
    os << "  " << g.label << "  [" << sys.class_key(g.subgroup) << " " << multiset_text(g.multiset) << "]\n";
  os << "relations: " << st.presentation.relation_count() << "\n";
  os << "maps isomorphically onto the limit: " << (st.stabilized ? "yes" : "no") << "\n";
  return os.str();
}

json check_json(const ValidationCheck& c) {
  return {{"name", c.name}, {"passed", c.passed}, {"verified", c.verified}, {"counterexample", c.counterexample}};
}

FpMatrix parse_matrix(const std::string& text, int p) {
  // Rows separated by ';', entries by ',' or spaces.
  std::vector<int> a;
  std::size_t rows = 0;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    for (char& ch : row)
      if (ch == ',') ch = ' ';
    std::stringstream rs(row);
    long long x;
    std::size_t count = 0;
    while (rs >> x) {
      a.push_back(static_cast<int>(((x % p) + p) % p));
      ++count;
    }
    if (!rs.eof()) throw InputError("bad matrix entry in '" + text + "'");
    if (count > 0) ++rows;
  }
  if (rows == 0 || a.size() != rows * rows) throw InputError("matrix '" + text + "' is not square");
  return FpMatrix{p, rows, a};
}

json weak_json(const WeaklyFixedClass& c, const std::function<std::string(std::size_t)>& label) {
  json j{{"element", label(c.element)}, {"type", c.type == WeakType::Type1 ? "type1" : "type2"}};
  if (c.type == WeakType::Type2) {
    j["summand"] = c.summand;
    j["stabilizer_order"] = c.stabilizer_order;
  } else {
    j["orbit_coarsening"] = c.orbit_coarsening;
    j["two_part_coarsening"] = c.two_part_coarsening;
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"repfilt: pi_0 of rank and complexity filtrations at finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", common.timing, "Report wall-clock time");

  std::string system, group, kind = "rank", filter, out_path;
  long long n = 1;
  std::size_t partitions = 0;
  int q = 0;
  bool list = false, force = false;
  std::vector<std::string> perms, matrices;

  auto add_system = [&](CLI::App* s, bool required_group) {
    s->add_option("--system", system, "Coefficient system: builtin name or JSON file")->required();
    auto* g = s->add_option("--group", group, "Group spec (S3, A5, D5, C4, Cn:7, V4, perm:...)");
    if (required_group) g->required();
  };

  auto* rank = app.add_subcommand("rank", "pi_0 of a rank filtration stage");
  add_system(rank, false);
  rank->add_option("--n", n, "Stage")->required();
  auto* complexity = app.add_subcommand("complexity", "pi_0 of a complexity filtration stage");
  add_system(complexity, false);
  complexity->add_option("--n", n, "Stage")->required();
  auto* cofiber = app.add_subcommand("cofiber", "Free basis of pi_0 of the n-th rank cofiber");
  add_system(cofiber, false);
  cofiber->add_option("--n", n, "Stage")->required();
  auto* connect = app.add_subcommand("connecting-map", "Map from stage n to stage n+1");
  add_system(connect, false);
  connect->add_option("--kind", kind, "rank or complexity");
  connect->add_option("--n", n, "Source stage")->required();
  auto* stabilize = app.add_subcommand("stabilize", "Smallest stage after which pi_0 is constant, up to |G|");
  add_system(stabilize, false);
  stabilize->add_option("--kind", kind, "rank or complexity");
  auto* tables = app.add_subcommand("paper-tables", "Recompute the worked example tables and compare");
  tables->add_option("--filter", filter, "Only rows whose id contains this text");
  auto* poset = app.add_subcommand("poset", "Partition lattice or F_q decomposition poset summary");
  poset->add_option("--partitions", partitions, "Partition lattice of {0..n-1}");
  poset->add_option("--q", q, "Prime field size");
  poset->add_option("--n", n, "Dimension for --q");
  poset->add_flag("--list", list, "List all elements");
  poset->add_option("--perm", perms, "Permutation generating an action on points (repeatable)");
  poset->add_option("--matrix", matrices, "Matrix 'a,b;c,d' generating a linear action (repeatable)");
  auto* lemma = app.add_subcommand("check-lemma", "Verify the refinement criterion for complete subgroups");
  lemma->add_option("--q", q, "Prime field size")->required();
  lemma->add_option("--n", n, "Dimension")->required();
  lemma->add_flag("--force", force, "Run even when q is even");
  auto* validate = app.add_subcommand("validate", "Check coefficient system identities");
  add_system(validate, false);
  auto* save = app.add_subcommand("save-system", "Write a coefficient system as JSON");
  add_system(save, false);
  save->add_option("--out", out_path, "Output file")->required();
  auto* skeleton = app.add_subcommand("skeleton", "Subgroup classes, Weyl generators and embeddings");
  skeleton->add_option("--group", group, "Group spec")->required();
  auto* list_systems = app.add_subcommand("list-systems", "Builtin coefficient systems");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string command = cmd->get_name();
  auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  try {
    Output out;
    if (cmd == rank || cmd == complexity) {
      auto sys = make_system(system, group);
      FiltrationKind k = cmd == rank ? FiltrationKind::Rank : FiltrationKind::Complexity;
      out.inputs = {{"system", system}, {"group", sys.group_spec()}, {"n", n}, {"kind", kind_name(k)}};
      auto st = compute_stage(sys, k, n);
      out.result = stage_json(sys, st);
      out.text = stage_text(sys, st);
    } else if (cmd == cofiber) {
      auto sys = make_system(system, group);
      out.inputs = {{"system", system}, {"group", sys.group_spec()}, {"n", n}, {"kind", "rank"}};
      auto basis = cofiber_pi0_basis(sys, n);
      json b = json::array();
      std::ostringstream os;
      os << "cofiber basis at n=" << n << " (" << basis.size() << " symbols)\n";
      for (const auto& g : basis) {
        b.push_back({{"subgroup", sys.class_key(g.subgroup)}, {"multiset", g.multiset}, {"label", g.label}});
        os << "  " << g.label << "\n";
      }
      out.result = {{"n", n}, {"count", basis.size()}, {"basis", b}};
      out.text = os.str();
    } else if (cmd == connect) {
      auto sys = make_system(system, group);
      FiltrationKind k = parse_kind(kind);
      out.inputs = {{"system", system}, {"group", sys.group_spec()}, {"n", n}, {"kind", kind_name(k)}};
      auto from = compute_stage(sys, k, n), to = compute_stage(sys, k, n + 1);
      auto cm = connecting_map(from, to);
      json coords = json::array();
      for (const auto& row : cm.coordinates) {
        json r = json::array();
        for (const auto& x : row) r.push_back(bigint_json(x));
        coords.push_back(r);
      }
      out.result = {{"from", from.presentation.describe()}, {"to", to.presentation.describe()},
                    {"surjective", cm.surjective}, {"isomorphism", cm.isomorphism},
                    {"cokernel", cm.cokernel.describe()}, {"coordinates", coords}};
      std::ostringstream os;
      os << kind_name(k) << " map n=" << n << " -> " << n + 1 << ": " << from.presentation.describe() << " -> "
         << to.presentation.describe() << "\n"
         << "surjective: " << (cm.surjective ? "yes" : "no") << "\n"
         << "isomorphism: " << (cm.isomorphism ? "yes" : "no") << "\n"
         << "cokernel: " << cm.cokernel.describe() << "\n";
      out.text = os.str();
    } else if (cmd == stabilize) {
      auto sys = make_system(system, group);
      FiltrationKind k = parse_kind(kind);
      out.inputs = {{"system", system}, {"group", sys.group_spec()}, {"kind", kind_name(k)}};
      auto r = stabilization_stage(sys, k);
      out.result = {{"kind", kind_name(k)}, {"bound", r.bound}, {"certified", r.certified}, {"message", r.message}};
      out.result["stage"] = r.stage ? json(*r.stage) : json(nullptr);
      out.text = kind_name(k) + " filtration of " + sys.name() + ": " + r.message + "\n";
    } else if (cmd == tables) {
      out.inputs = {{"filter", filter}};
      auto rows = run_table(golden_rows(), filter);
      json arr = json::array();
      std::ostringstream os;
      std::size_t passed = 0;
      for (const auto& o : rows) {
        std::string status = o.passed ? "PASS" : "FAIL";
        passed += o.passed;
        arr.push_back({{"id", o.row->id}, {"status", status}, {"expected", o.expected},
                       {"observed", o.error.empty() ? o.observed : "error: " + o.error},
                       {"citation", o.row->citation}});
        os << status << "  " << o.row->id << ": expected " << o.expected << ", observed "
           << (o.error.empty() ? o.observed : "error: " + o.error) << "  [" << o.row->citation << "]\n";
      }
      os << passed << " passed, " << rows.size() - passed << " failed\n";
      out.result = {{"rows", arr}, {"passed", passed}, {"failed", rows.size() - passed}};
      out.text = os.str();
      if (passed != rows.size()) out.code = kFailure;
    } else if (cmd == poset) {
      if ((partitions > 0) == (q > 0)) throw InputError("give exactly one of --partitions or --q");
      std::shared_ptr<PartitionLattice> L;
      std::shared_ptr<FqDecompositionPoset> F;
      const Poset* P;
      if (partitions > 0) {
        if (!matrices.empty()) throw InputError("--matrix applies to --q posets");
        L = partition_lattice(partitions);
        P = &L->poset;
        out.inputs = {{"partitions", partitions}};
        out.result["n"] = partitions;
      } else {
        if (!perms.empty()) throw InputError("--perm applies to --partitions posets");
        if (n < 1) throw InputError("--n must be positive");
        F = fq_decomposition_poset(q, static_cast<std::size_t>(n));
        P = &F->poset;
        out.inputs = {{"q", q}, {"n", n}};
        out.result["q"] = q;
        out.result["n"] = n;
      }
      auto summary = summarize(*P);
      out.result["element_count"] = summary.element_count;
      out.result["euler_characteristic"] = summary.euler_characteristic;
      out.result["has_least_element"] = summary.has_least_element;
      std::ostringstream os;
      os << (L ? "partition lattice of " + std::to_string(partitions) + " points"
               : "decompositions of F_" + std::to_string(q) + "^" + std::to_string(n))
         << ": " << P->size << " elements\n"
         << "euler characteristic: " << out.result["euler_characteristic"].get<long long>() << "\n"
         << "least element: " << (out.result["has_least_element"].get<bool>() ? "yes" : "no") << "\n";
      if (list) {
        json el = json::array();
        for (std::size_t i = 0; i < P->size; ++i) {
          el.push_back(P->label(i));
          os << "  " << P->label(i) << "\n";
        }
        out.result["elements"] = el;
      }
      if (!perms.empty() || !matrices.empty()) {
        std::vector<std::size_t> fixed;
        std::vector<WeaklyFixedClass> weak;
        if (L) {
          std::vector<Perm> gens;
          for (const auto& s : perms) gens.push_back(Perm::parse(s, partitions));
          PermGroup G(partitions, gens, "G");
          auto a = make_point_action(G, gens, partitions);
          fixed = fixed_subposet(*L, a);
          weak = weakly_fixed_classes(*L, a);
          out.inputs["perm"] = perms;
        } else {
          std::vector<FpMatrix> gens;
          for (const auto& s : matrices) {
            gens.push_back(parse_matrix(s, q));
            if (gens.back().n != static_cast<std::size_t>(n)) throw InputError("matrix size differs from --n");
          }
          auto a = generated_linear_action(gens, q, static_cast<std::size_t>(n));
          fixed = fixed_subposet(*F, a);
          weak = weakly_fixed_classes(*F, a);
          out.inputs["matrix"] = matrices;
        }
        json fx = json::array(), wk = json::array();
        os << "strongly fixed: " << fixed.size() << "\n";
        for (auto i : fixed) {
          fx.push_back(P->label(i));
          os << "  " << P->label(i) << "\n";
        }
        os << "weakly fixed: " << weak.size() << "\n";
        for (const auto& c : weak) {
          wk.push_back(weak_json(c, P->label));
          os << "  " << P->label(c.element) << "  " << (c.type == WeakType::Type1 ? "type 1" : "type 2");
          if (c.type == WeakType::Type2) os << ", stabilizer of order " << c.stabilizer_order;
          os << "\n";
        }
        out.result["fixed"] = fx;
        out.result["weakly_fixed"] = wk;
      }
      out.text = os.str();
    } else if (cmd == lemma) {
      out.inputs = {{"q", q}, {"n", n}, {"force", force}};
      if (n < 1) throw InputError("--n must be positive");
      auto r = check_refinement_lemma(q, static_cast<std::size_t>(n), force);
      out.result = {{"q", r.q}, {"n", r.n}, {"passed", r.passed}, {"forced", r.forced},
                    {"decompositions_checked", r.decompositions_checked}, {"counterexample", r.counterexample}};
      out.text = std::string(r.passed ? "pass" : "FAIL") + ": refinement criterion over F_" + std::to_string(q) +
                 "^" + std::to_string(n) + ", " + std::to_string(r.decompositions_checked) +
                 " decompositions checked\n" + (r.passed ? "" : "counterexample: " + r.counterexample + "\n");
      if (!r.passed) out.code = kFailure;
    } else if (cmd == validate) {
      auto sys = make_system(system, group);
      out.inputs = {{"system", system}, {"group", sys.group_spec()}};
      auto rep = sys.validate();
      json checks = json::array();
      std::ostringstream os;
      for (const auto& c : rep.checks) {
        checks.push_back(check_json(c));
        os << (c.passed ? "ok    " : "FAIL  ") << c.name << " (" << c.verified << " verified)"
           << (c.passed ? "" : ": " + c.counterexample) << "\n";
      }
      os << (rep.ok() ? "all identities verified" : "validation failed") << "\n";
      out.result = {{"system", sys.name()}, {"ok", rep.ok()}, {"checks", checks}};
      out.text = os.str();
      if (!rep.ok()) out.code = kFailure;
    } else if (cmd == save) {
      auto sys = make_system(system, group);
      out.inputs = {{"system", system}, {"group", sys.group_spec()}, {"out", out_path}};
      save_system(sys, out_path);
      out.result = {{"written", out_path}};
      out.text = "wrote " + out_path + "\n";
    } else if (cmd == skeleton) {
      auto g = parse_group_spec(group);
      SubgroupLattice L(g);
      out.inputs = {{"group", group}};
      out.result = skeleton_json(L, group);
      std::ostringstream os;
      os << g.name() << " of order " << g.order() << ": " << L.class_count() << " subgroup classes\n";
      for (int c = 0; c < L.class_count(); ++c)
        os << "  " << L.subgroup_class(c).name << " (order " << L.subgroup_class(c).order << ")\n";
      out.text = os.str();
    } else if (cmd == list_systems) {
      out.result = builtin_system_names();
      out.text = join(builtin_system_names(), "\n") + "\n";
    }
    return emit(command, common, std::move(out), elapsed());
  } catch (const BoundError& e) {
    std::cerr << "bounds error: " << e.what() << "\n";
    return kBound;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
