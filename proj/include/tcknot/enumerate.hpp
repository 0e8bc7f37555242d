#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tcknot/canonical.hpp"
#include "tcknot/diagram.hpp"
#include "tcknot/invariants.hpp"
#include "tcknot/laurent.hpp"

namespace tcknot {

struct Budget {
  double wall_seconds = 0;   // 0 = unlimited
  std::int64_t node_cap = 0; // search nodes, 0 = unlimited
};

struct EnumerationOptions {
  bool fold_mirror = true;
  int threads = 0;  // 0 = OpenMP default, 1 = serial
  Budget budget;
  /// Depth (paired darts) of the prefix tree split into parallel work items.
  int split_depth = 8;
};

/// Serializable frontier of an interrupted search.
struct ResumeState {
  int n = 0;
  bool fold_mirror = true;
  int split_depth = 0;
  std::vector<std::uint8_t> done;              // per work item
  std::vector<std::vector<std::uint16_t>> found;  // canonical maps from finished items

  nlohmann::ordered_json to_json() const;
  static ResumeState from_json(const nlohmann::ordered_json& j);
};

struct EnumerationRun {
  int n = 0;
  bool fold_mirror = true;
  /// One canonical representative per M1 class, in code order.
  std::vector<TripleProjection> projections;
  /// Size of each class in canonical prime knot projections.
  std::vector<int> class_sizes;
  /// Counters from the search.
  std::int64_t rooted_maps = 0;      // spherical rooted maps visited as leaves
  std::int64_t canonical_maps = 0;   // distinct maps (after mirror folding when on)
  std::int64_t knot_projections = 0; // prime, single component
  bool complete = true;
  std::optional<ResumeState> resume;
};

/// Raw canonical spherical maps with n crossings (no filters).
std::vector<TripleProjection> enumerate_maps(int n, const EnumerationOptions& opt,
                                             EnumerationRun* stats = nullptr,
                                             const ResumeState* resume = nullptr);

/// Prime single-component projections, one canonical representative per
/// class of the M1 move. Throws Error on a bad n; a budget stop returns a run
/// with complete = false and a resume state.
EnumerationRun enumerate_projections(int n, const EnumerationOptions& opt = {},
                                     const ResumeState* resume = nullptr);

/// Groups prime knot projections into M1 classes; returns representatives
/// (smallest canonical code) and class sizes.
void reduce_by_moves(std::vector<TripleProjection>& maps, std::vector<int>& sizes, bool fold_mirror);

/// All 6^n height assignments in base-6 index order (crossing 0 most
/// significant). Empty if the projection is not a single component.
std::vector<TripleDiagram> enumerate_diagrams(const TripleProjection& p);

// ---- classification -------------------------------------------------------

struct WitnessKey {
  int n = 0;
  int projection = 0;          // index in its run
  std::uint64_t heights = 0;   // base-6 height index
  auto operator<=>(const WitnessKey&) const = default;
};

struct KnotClass {
  HalfLaurent jones;      // mirror folded
  HalfLaurent witness_jones;  // of the witness itself, not folded
  Laurent alexander;
  std::optional<Laurent2> homfly;    // mirror folded when known
  std::optional<Laurent2> kauffman;  // F(a, z), mirror folded when known
  int c3 = 0;
  TripleDiagram witness;
  WitnessKey witness_key;
  std::int64_t diagram_count = 0;
  bool ambiguous = false;
  /// Invariants factor as those of a connected sum of two other classes.
  bool composite = false;
  std::vector<Laurent2> homfly_candidates;  // when ambiguous
  std::optional<std::string> name;
};

struct ClassifyOptions {
  int threads = 0;
  /// HOMFLY is computed for this many diagrams per bucket (all when the
  /// bucket is at most this large or when n <= exhaustive_n).
  int homfly_sample = 4;
  int homfly_exhaustive_n = 3;
  /// Budget for both HOMFLY and Kauffman recursions.
  HomflyBudget homfly_budget{};
  bool fold_mirror = true;
  /// Refine every bucket by the Kauffman signature of all its members.
  bool kauffman = true;
};

/// Buckets every diagram of every run by (Jones, Alexander) fingerprint,
/// discards the unknot bucket (V = 1 and Delta = 1), splits the rest by the
/// Kauffman signature of every member and then by HOMFLY samples, and
/// assigns c3 = least n. A group is ambiguous when a member's Kauffman or
/// sampled HOMFLY value is out of budget. Runs may come in any order.
/// Classes are sorted by (c3, witness key) and composites are marked.
std::vector<KnotClass> classify(const std::vector<EnumerationRun>& runs, const ClassifyOptions& opt = {});

/// Flags classes whose Jones and Alexander polynomials (and HOMFLY or
/// Kauffman when both factors know them) equal those of a connected sum of two other
/// nontrivial classes in the list. Called by classify and merge_classes.
void mark_composites(std::vector<KnotClass>& classes);

/// Associative, commutative merge of two classification results.
std::vector<KnotClass> merge_classes(const std::vector<KnotClass>& a, const std::vector<KnotClass>& b);

struct CountRow {
  int n = 0;
  int projections = 0;
  int knots = 0;
  bool operator==(const CountRow&) const = default;
};

/// Rows per run: #projections and #prime (non-composite) classes with c3 = n.
std::vector<CountRow> count_table(const std::vector<EnumerationRun>& runs, const std::vector<KnotClass>& classes);

// ---- artifacts -------------------------------------------------------------

nlohmann::ordered_json projection_record(const EnumerationRun& run, std::size_t index);
nlohmann::ordered_json class_record(const KnotClass& k);
KnotClass class_from_record(const nlohmann::ordered_json& j);
/// JSON lines: one "run" header, then one record per projection.
std::string run_to_jsonl(const EnumerationRun& run);
EnumerationRun run_from_jsonl(const std::string& text);

}  // namespace tcknot
