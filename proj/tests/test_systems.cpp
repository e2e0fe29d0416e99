#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "repfilt/golden_tables.hpp"
#include "repfilt/registry.hpp"

using namespace repfilt;

namespace {

using Counts = std::map<std::string, long long>;

ObjectClass expect_object(const CoefficientSystem& sys, const std::string& cls, const Counts& counts) {
  int c = sys.lattice().class_by_name(cls);
  std::vector<long long> m(sys.size(c), 0);
  for (const auto& [label, k] : counts) {
    int i = sys.find_label(c, label);
    EXPECT_GE(i, 0) << label << " at " << cls;
    if (i >= 0) m[i] = k;
  }
  return ObjectClass{c, m};
}

ObjectClass induce_label(const CoefficientSystem& sys, const std::string& from, const std::string& label,
                         const std::string& to) {
  int k = sys.lattice().class_by_name(from);
  int h = sys.lattice().class_by_name(to);
  int i = sys.find_label(k, label);
  EXPECT_GE(i, 0) << label << " at " << from;
  return sys.induce(sys.unit(k, static_cast<std::size_t>(i)), h);
}

void expect_ind(const CoefficientSystem& sys, const std::string& from, const std::string& label,
                const std::string& to, const Counts& counts) {
  auto got = induce_label(sys, from, label, to);
  auto want = expect_object(sys, to, counts);
  EXPECT_EQ(got, want) << "Ind_" << from << "^" << to << " " << label << " = " << sys.describe(got);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(PaperSystems, S3ComplexInductions) {
  auto sys = make_system("paper:S3/C", "");
  expect_ind(sys, "e", "[1]", "S3", {{"[1]", 1}, {"[sgn]", 1}, {"[nu3]", 2}});
  expect_ind(sys, "C2", "[1]", "S3", {{"[1]", 1}, {"[nu3]", 1}});
  expect_ind(sys, "C2", "[-1]", "S3", {{"[sgn]", 1}, {"[nu3]", 1}});
  expect_ind(sys, "C3", "[1]", "S3", {{"[1]", 1}, {"[sgn]", 1}});
  expect_ind(sys, "C3", "[eta3]", "S3", {{"[nu3]", 1}});
  expect_ind(sys, "C3", "[eta3^2]", "S3", {{"[nu3]", 1}});
  expect_ind(sys, "e", "[1]", "C3", {{"[1]", 1}, {"[eta3]", 1}, {"[eta3^2]", 1}});
  expect_ind(sys, "e", "[1]", "C2", {{"[1]", 1}, {"[-1]", 1}});
}

TEST(PaperSystems, S3WeylFusesEta) {
  auto sys = make_system("paper:S3/C", "");
  int c3 = sys.lattice().class_by_name("C3");
  int a = sys.find_label(c3, "[eta3]"), b = sys.find_label(c3, "[eta3^2]");
  EXPECT_EQ(sys.orbit_min(c3, a), std::min(a, b));
  EXPECT_EQ(sys.orbit_min(c3, b), std::min(a, b));
  EXPECT_EQ(sys.orbit_min(c3, sys.find_label(c3, "[1]")), sys.find_label(c3, "[1]"));
  int s3 = sys.lattice().class_by_name("S3");
  auto nu = sys.unit(s3, sys.find_label(s3, "[nu3]"));
  EXPECT_EQ(sys.restrict(nu, c3), expect_object(sys, "C3", {{"[eta3]", 1}, {"[eta3^2]", 1}}));
}

TEST(PaperSystems, A4RationalInductions) {
  auto sys = make_system("paper:A4/Q", "");
  expect_ind(sys, "V4", "[1]", "A4", {{"[1]", 1}, {"[eta]", 1}});
  for (const char* phi : {"[phi1]", "[phi2]", "[phi3]"}) expect_ind(sys, "V4", phi, "A4", {{"[nu4]", 1}});
}

TEST(PaperSystems, D5RationalInductions) {
  auto sys = make_system("paper:D5/Q", "");
  expect_ind(sys, "C2", "[1]", "D5", {{"[1]", 1}, {"[psi]", 1}});
  // (-1) tensor psi is isomorphic to psi over Q.
  expect_ind(sys, "C2", "[-1]", "D5", {{"[-1]", 1}, {"[psi]", 1}});
}

TEST(PaperSystems, A5RationalInductions) {
  auto sys = make_system("paper:A5/Q", "");
  expect_ind(sys, "A4", "[1]", "A5", {{"[1]", 1}, {"[nu5]", 1}});
  expect_ind(sys, "A4", "[eta]", "A5", {{"[psi]", 2}});
  expect_ind(sys, "A4", "[nu4]", "A5", {{"[nu5]", 1}, {"[psi]", 1}, {"[L2nu5]", 1}});
  expect_ind(sys, "S3", "[1]", "A5", {{"[1]", 1}, {"[nu5]", 1}, {"[psi]", 1}});
  expect_ind(sys, "S3", "[sgn]", "A5", {{"[nu5]", 1}, {"[L2nu5]", 1}});
  expect_ind(sys, "S3", "[nu3]", "A5", {{"[nu5]", 1}, {"[psi]", 2}, {"[L2nu5]", 1}});
  expect_ind(sys, "D5", "[1]", "A5", {{"[1]", 1}, {"[psi]", 1}});
  expect_ind(sys, "D5", "[-1]", "A5", {{"[L2nu5]", 1}});
  expect_ind(sys, "D5", "[psi]", "A5", {{"[nu5]", 2}, {"[psi]", 2}, {"[L2nu5]", 1}});
}

TEST(PaperSystems, AllValidate) {
  for (const auto& name : builtin_system_names()) {
    if (name.rfind("paper:", 0) != 0) continue;
    auto report = make_system(name, "").validate();
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << name << ": " << c.name << ": " << c.counterexample;
  }
}

TEST(SystemIo, RoundTripIsByteIdentical) {
  for (const char* name : {"paper:A5/Q", "paper:S3/C", "paper:A4/Q"}) {
    auto first = dump_system(make_system(name, ""));
    auto second = dump_system(parse_system(first));
    EXPECT_EQ(first, second) << name;
  }
}

TEST(SystemIo, S3DocMatchesBuiltin) {
  auto doc = read_file(std::string(REPFILT_SOURCE_DIR) + "/docs/s3_complex.json");
  EXPECT_EQ(dump_system(parse_system(doc)), dump_system(make_system("paper:S3/C", "")));
}

TEST(SystemIo, HandWrittenC2MatchesGenerated) {
  auto file = load_system(std::string(REPFILT_SOURCE_DIR) + "/docs/c2_complex.json");
  auto gen = complex_cyclic(cyclic_group(2), "C2");
  EXPECT_TRUE(file.validate().ok());
  ASSERT_EQ(file.class_count(), gen.class_count());
  for (int c = 0; c < gen.class_count(); ++c) {
    int fc = file.lattice().class_by_name(gen.class_key(c));
    ASSERT_GE(fc, 0);
    ASSERT_EQ(file.size(fc), gen.size(c));
    for (std::size_t i = 0; i < gen.size(c); ++i) {
      EXPECT_EQ(file.indecomposables(fc)[i].label, gen.indecomposables(c)[i].label);
      EXPECT_EQ(file.dim(fc, i), gen.dim(c, i));
    }
  }
  int e = gen.lattice().class_by_name("e"), c2 = gen.lattice().class_by_name("C2");
  int fe = file.lattice().class_by_name("e"), fc2 = file.lattice().class_by_name("C2");
  EXPECT_EQ(file.res_table(fc2, fe), gen.res_table(c2, e));
  EXPECT_EQ(file.ind_table(fe, fc2), gen.ind_table(e, c2));
}

TEST(SystemIo, MissingWeylNamesClass) {
  auto j = json::parse(dump_system(make_system("paper:S3/C", "")));
  for (auto& g : j["groups"])
    if (g["class_key"] == "C2") g.erase("weyl");
  try {
    system_from_json(j);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("missing weyl table for class C2"), std::string::npos) << e.what();
  }
}

TEST(SystemIo, ParseErrorReportsLine) {
  try {
    parse_system("{\n  \"name\": \"x\",\n  \"base\": ,\n}");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(SystemIo, WrongGroupRejected) {
  EXPECT_THROW(make_system("paper:S3/C", "A4"), InputError);
  EXPECT_THROW(make_system("complex_cyclic(3)", "C5"), InputError);
  EXPECT_THROW(make_system("paper:nope", ""), InputError);
  EXPECT_THROW(make_system("burnside", ""), InputError);
}

TEST(GoldenTables, OnlyKnownRowsFail) {
  const std::set<std::string> known = {
      "C2/Q complexity n=1",  "C3/Q complexity n=2",  "C5/Q complexity n=4",  "C2/Fp complexity n=1",
      "C3/Fp complexity n=1", "C3/Fp complexity n=2", "C5/Fp complexity n=1", "C5/Fp complexity n=2",
      "C5/Fp complexity n=3", "C5/Fp complexity n=4"};
  auto out = run_table(golden_rows(), "");
  ASSERT_EQ(out.size(), golden_rows().size());
  std::set<std::string> failed;
  for (const auto& o : out) {
    EXPECT_TRUE(o.error.empty()) << o.row->id << ": " << o.error;
    if (!o.passed) failed.insert(o.row->id);
  }
  EXPECT_EQ(failed, known);
}

TEST(GoldenTables, FilterSelectsSubset) {
  auto out = run_table(golden_rows(), "A5/");
  ASSERT_FALSE(out.empty());
  for (const auto& o : out) {
    EXPECT_NE(o.row->id.find("A5/"), std::string::npos);
    EXPECT_TRUE(o.passed) << o.row->id << " observed " << o.observed;
  }
}

TEST(GoldenTables, CorruptedRowFailsAlone) {
  std::vector<TableRow> rows;
  for (const auto& r : golden_rows())
    if (r.id.rfind("S3/C", 0) == 0) rows.push_back(r);
  ASSERT_GE(rows.size(), 3u);
  rows[1].expected_free_rank += 1;
  auto out = run_table(rows, "");
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i].passed, i != 1) << out[i].row->id;
  EXPECT_EQ(out[1].expected, free_text(rows[1].expected_free_rank));
}

TEST(GoldenTables, UnbuildableSystemReportsError) {
  std::vector<TableRow> rows = {{"bad", "no/such/file.json", "S3", FiltrationKind::Rank, 1, 1, ""}};
  auto out = run_table(rows, "");
  ASSERT_EQ(out.size(), 1u);
  EXPECT_FALSE(out[0].passed);
  EXPECT_FALSE(out[0].error.empty());
}
