#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tcknot/diagram.hpp"
#include "tcknot/enumerate.hpp"
#include "tcknot/laurent.hpp"

namespace tcknot {

struct ReferenceKnot {
  std::string name;
  int c2 = 0;
  bool alternating = false;
  HalfLaurent jones;  // mirror folded
  Laurent alexander;
};

/// CSV with header `name,c2,alternating,jones,alexander`; alternating is
/// `true`/`false`. Polynomials use the invariants syntax. Throws ParseError
/// on a malformed row and ValidationError on a duplicate name, a
/// non-symmetric Alexander polynomial or Delta(1) != 1.
std::vector<ReferenceKnot> parse_reference(std::string_view csv);
std::vector<ReferenceKnot> load_reference(const std::string& path);
std::string reference_to_csv(const std::vector<ReferenceKnot>& refs);

/// Reference row for a classical diagram (PD code): Jones by the bracket,
/// Alexander from the Fox matrix.
ReferenceKnot reference_from_pd(const std::string& name, int c2, bool alternating, std::string_view pd);

struct Identification {
  std::optional<std::string> name;      // unique match
  std::vector<std::string> candidates;  // every match, sorted
  bool ambiguous() const { return candidates.size() > 1; }
};

/// Matches the folded Jones and the Alexander polynomial of a class.
Identification identify(const KnotClass& k, const std::vector<ReferenceKnot>& refs);
/// Sets KnotClass::name for every unique match.
void name_classes(std::vector<KnotClass>& classes, const std::vector<ReferenceKnot>& refs);

/// Labels `t<c3>_<i>` for prime classes in order; empty for composites.
std::vector<std::string> class_labels(const std::vector<KnotClass>& classes);

enum class Verdict { ApplicableHolds, ApplicableViolated, NotApplicableMonic };
std::string to_string(Verdict v);

struct ConjectureRow {
  std::string label;
  std::optional<std::string> name;
  int c3 = 0;
  int breadth = 0;
  bool monic = false;
  Verdict verdict = Verdict::NotApplicableMonic;
  bool weak_holds = true;              // c3 >= breadth
  std::optional<int> c2;               // when uniquely named
  std::optional<bool> alternating;
  std::optional<bool> third_bound;     // 3 c3 >= c2
  std::optional<bool> alternating_bound;  // 2 c3 >= c2, alternating only
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;
  int holds = 0;
  int violated = 0;
  int not_applicable = 0;
  int weak_violations = 0;
  int bound_violations = 0;
  bool any_violation() const { return violated > 0 || weak_violations > 0 || bound_violations > 0; }
  nlohmann::ordered_json to_json() const;
};

/// One row per prime class.
ConjectureReport conjecture_report(const std::vector<KnotClass>& classes, const std::vector<ReferenceKnot>& refs);

enum class TableFormat { Json, Csv, Latex };
/// Throws Error on an unknown name.
TableFormat table_format_from_string(std::string_view s);

/// Prime classes with labels such as `t2_1(3_1)`.
std::string emit_table(const std::vector<KnotClass>& classes, TableFormat format);
/// Projection and knot counts per n.
std::string emit_counts(const std::vector<CountRow>& rows, TableFormat format);

/// Standalone tikzpicture of a diagram: Tutte-style layout, the bottom
/// strand green and the top strand red near each crossing, loops black.
std::string emit_tikz(const TripleDiagram& d);

}  // namespace tcknot
