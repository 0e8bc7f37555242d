#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "tcknot/errors.hpp"
#include "tcknot/tabulate.hpp"

#ifndef TCKNOT_GOLDEN_DIR
#define TCKNOT_GOLDEN_DIR "tests/golden"
#endif

using namespace tcknot;
using namespace testing;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::vector<ReferenceKnot>& refs() {
  static const auto r = load_reference(std::string(TCKNOT_DATA_DIR) + "/reference_knots.csv");
  return r;
}

std::vector<EnumerationRun> runs_up_to(int n) {
  std::vector<EnumerationRun> out;
  for (int k = 2; k <= n; ++k) out.push_back(run(k));
  return out;
}

const std::vector<KnotClass>& named4() {
  static const std::vector<KnotClass> c = [] {
    auto cs = classify(runs_up_to(4));
    name_classes(cs, refs());
    return cs;
  }();
  return c;
}

KnotClass fake(const char* jones, const char* alexander, int c3 = 5) {
  KnotClass k;
  k.jones = hl(jones).mirror_folded();
  k.alexander = lp(alexander);
  k.c3 = c3;
  return k;
}

const ConjectureRow& row_named(const ConjectureReport& rep, const std::string& name) {
  for (const auto& r : rep.rows)
    if (r.name == name) return r;
  FAIL("no row for " << name);
  return rep.rows.front();
}

}  // namespace

TEST_CASE("bundled reference table is the oracle output") {
  std::istringstream in(slurp(std::string(TCKNOT_DATA_DIR) + "/knots_pd.txt"));
  std::vector<ReferenceKnot> rebuilt;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream f(line);
    std::string name, alt, pd;
    int c2 = 0;
    f >> name >> c2 >> alt;
    std::getline(f, pd);
    rebuilt.push_back(reference_from_pd(name, c2, alt == "Y", pd));
  }
  CHECK(rebuilt.size() == 249);
  CHECK(reference_to_csv(rebuilt) == slurp(std::string(TCKNOT_DATA_DIR) + "/reference_knots.csv"));
  CHECK(refs().size() == 249);
  const DoubleDiagram k = parse_pd(kTrefoilPd);
  CHECK(refs().front().name == "3_1");
  CHECK(refs().front().jones == bracket_jones(k, traversal_orientation(k)).mirror_folded());
  CHECK(refs().front().alexander == alexander(k, traversal_orientation(k)));
  CHECK(refs().front().c2 == 3);
  CHECK(refs().front().alternating);
}

TEST_CASE("reference CSV errors") {
  const std::string header = "name,c2,alternating,jones,alexander\n";
  const std::string row = "3_1,3,true,-1*t^-4 + 1*t^-3 + 1*t^-1,1*t^-1 + -1 + 1*t^1\n";
  CHECK(parse_reference("").empty());
  CHECK(parse_reference(header).empty());
  CHECK(parse_reference(header + row).size() == 1);
  CHECK(reference_to_csv(parse_reference(header + row)) == header + row);
  CHECK_THROWS_AS(parse_reference(header + row + row), ValidationError);
  CHECK_THROWS_AS(parse_reference(header + "3_1,3,true,-1*t^-4\n"), ParseError);
  CHECK_THROWS_AS(parse_reference(header + "3_1,x,true,1,1\n"), ParseError);
  CHECK_THROWS_AS(parse_reference(header + "3_1,3,maybe,1,1\n"), ParseError);
  CHECK_THROWS_AS(parse_reference(header + "k,3,true,1,1*t^1 + -1 + 1*t^2\n"), ValidationError);
  CHECK_THROWS_AS(parse_reference(header + "k,3,true,1,1*t^-1 + 1*t^1\n"), ValidationError);
  CHECK_THROWS_AS(parse_reference("name,jones\n"), ParseError);
}

TEST_CASE("identification") {
  const auto& cs = named4();
  CHECK(cs[0].name == "3_1");
  CHECK(cs[1].name == "4_1");
  CHECK(cs[2].name == "5_2");
  CHECK(cs[3].name == "6_1");
  for (const auto& k : cs) {
    const Identification id = identify(k, refs());
    KnotClass m = k;
    m.jones = k.witness_jones.invert_variable();
    CHECK(identify(m, refs()).candidates == id.candidates);
    CHECK(identify(k, refs()).candidates == id.candidates);
  }
  const Identification none = identify(fake("1*t^-9 + 1*t^9", "3*t^-1 + -5 + 3*t^1"), refs());
  CHECK_FALSE(none.name);
  CHECK(none.candidates.empty());
  const Identification both = identify(fake("-1*t^-7 + 1*t^-6 + -1*t^-5 + 1*t^-4 + 1*t^-2",
                                            "1*t^-2 + -1*t^-1 + 1 + -1*t^1 + 1*t^2"),
                                       refs());
  CHECK(both.ambiguous());
  CHECK(both.candidates == std::vector<std::string>{"10_132", "5_1"});
  CHECK_FALSE(both.name);
}

TEST_CASE("labels") {
  const auto labels = class_labels(named4());
  CHECK(labels[0] == "t2_1");
  CHECK(labels[1] == "t2_2");
  CHECK(labels[2] == "t3_1");
  CHECK(labels[3] == "t3_2");
  for (std::size_t i = 0; i < labels.size(); ++i) CHECK(labels[i].empty() == named4()[i].composite);
}

TEST_CASE("conjecture report up to c3 = 4") {
  const ConjectureReport rep = conjecture_report(named4(), refs());
  CHECK(rep.rows.size() == 28);
  CHECK_FALSE(rep.any_violation());
  CHECK(rep.holds + rep.not_applicable == 28);
  const ConjectureRow& k52 = row_named(rep, "5_2");
  CHECK(k52.c3 == 3);
  CHECK(k52.breadth == 2);
  CHECK_FALSE(k52.monic);
  CHECK(k52.verdict == Verdict::ApplicableHolds);
  const ConjectureRow& k31 = row_named(rep, "3_1");
  CHECK(k31.verdict == Verdict::NotApplicableMonic);
  CHECK(k31.weak_holds);
  CHECK(k31.breadth == 2);
  const ConjectureRow& k41 = row_named(rep, "4_1");
  CHECK(k41.c2 == 4);
  CHECK(k41.alternating == true);
  CHECK(k41.alternating_bound == true);
  for (const auto& r : rep.rows) {
    CHECK(r.weak_holds);
    if (r.c2) CHECK(3 * r.c3 >= *r.c2);
  }
  CHECK(to_string(Verdict::NotApplicableMonic) == "not-applicable(monic)");
  const auto j = rep.to_json();
  CHECK(j["violated"] == 0);
  CHECK(j["rows"].size() == 28);
}

TEST_CASE("a violating class is reported") {
  std::vector<KnotClass> cs{fake("1*t^-9 + 1*t^9", "2*t^-2 + -3*t^-1 + 3 + -3*t^1 + 2*t^2", 3)};
  const ConjectureReport rep = conjecture_report(cs, refs());
  CHECK(rep.violated == 1);
  CHECK(rep.weak_violations == 1);
  CHECK(rep.any_violation());
}

TEST_CASE("tables") {
  const auto two = [] {
    auto cs = classify(runs_up_to(2));
    name_classes(cs, refs());
    return cs;
  }();
  const std::string csv = emit_table(two, TableFormat::Csv);
  CHECK(csv.find("t2_1,3_1") != std::string::npos);
  CHECK(csv.find("t2_2,4_1") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  const auto j = nlohmann::ordered_json::parse(emit_table(two, TableFormat::Json));
  CHECK(j.size() == 2);
  CHECK(j[0]["label"] == "t2_1(3_1)");
  CHECK(j[1]["label"] == "t2_2(4_1)");
  const std::string tex = emit_table(two, TableFormat::Latex);
  CHECK(tex.find("\\begin{tabular}") != std::string::npos);
  CHECK(tex.find("$3_{1}$") != std::string::npos);
  const std::string empty = emit_table({}, TableFormat::Csv);
  CHECK(std::count(empty.begin(), empty.end(), '\n') == 1);
  CHECK(nlohmann::ordered_json::parse(emit_table({}, TableFormat::Json)).empty());
  CHECK(table_format_from_string("latex") == TableFormat::Latex);
  CHECK_THROWS_AS(table_format_from_string("xml"), Error);
}

TEST_CASE("report regeneration matches the golden files") {
  const std::string dir = TCKNOT_GOLDEN_DIR;
  std::vector<EnumerationRun> runs;
  for (int n = 2; n <= 4; ++n) runs.push_back(run_from_jsonl(run_to_jsonl(run(n))));
  auto cs = classify(runs);
  name_classes(cs, refs());
  CHECK(emit_counts(count_table(runs, cs), TableFormat::Csv) == slurp(dir + "/counts_n4.csv"));
  CHECK(emit_table(cs, TableFormat::Csv) == slurp(dir + "/table_n4.csv"));
  CHECK(emit_table(cs, TableFormat::Latex) == slurp(dir + "/table_n4.tex"));
  CHECK(conjecture_report(cs, refs()).to_json().dump(2) + "\n" == slurp(dir + "/conjecture_n4.json"));
}

TEST_CASE("tikz") {
  const std::string t = emit_tikz(parse_spd_diagram(kT21));
  CHECK(t.rfind("\\begin{tikzpicture}", 0) == 0);
  CHECK(t.find("\\end{tikzpicture}") != std::string::npos);
  CHECK(t.find("% crossing 0 TBM") != std::string::npos);
  CHECK(t.find("% crossing 1 MTB") != std::string::npos);
  CHECK(t.find("green") != std::string::npos);
  CHECK(t.find("red") != std::string::npos);
  CHECK(emit_tikz(parse_spd_diagram(kT21)) == t);
}
