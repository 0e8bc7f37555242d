#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "tcknot/diagram.hpp"

namespace tcknot {

enum class MoveKind { M1, M2, JR, JRPrime };

std::string to_string(MoveKind k);
MoveKind move_kind_from_string(const std::string& s);

/// A located left-hand side. For M1 the anchor is the loop dart at slot s
/// (looping to slot s+1). For JR kinds the anchor is the finger dart (slot f)
/// of the base crossing; the finger runs through `width` further crossings
/// and ends in a monogon.
struct MoveSite {
  MoveKind kind = MoveKind::M1;
  Dart anchor = 0;
  int width = 0;

  bool operator==(const MoveSite&) const = default;
};

nlohmann::ordered_json to_json(const MoveSite& s);
MoveSite move_site_from_json(const nlohmann::ordered_json& j);

// ---- projection moves --------------------------------------------------

std::vector<MoveSite> find_m_sites(const TripleProjection& p);
/// M1 moves the monogon at the site to the opposite side of its crossing
/// (the four outer edges rotate by two slots). It is an involution.
/// M2 is not realized by a rewrite (see find_m_sites).
TripleProjection apply_m(const TripleProjection& p, const MoveSite& site);

// ---- diagram moves -----------------------------------------------------

/// Finger chains of width <= max_width whose straight strands and arc
/// levels satisfy the JR (top arc outgoing, straight strands bottom) or JR'
/// (bottom arc outgoing, straight strands top) condition under `o`.
std::vector<MoveSite> find_jr_sites(const TripleDiagram& d, const Orientation& o, int max_width = 4);

/// What a JR retraction removed, enough to restore it exactly.
struct MoveRecord {
  /// Original ids of the surviving crossings, in their new order.
  std::vector<int> kept;
  /// Per removed dart (6 per removed crossing, in removal order): a removed
  /// dart index when internal, otherwise -1 - x for the surviving result
  /// dart x it was attached to.
  std::vector<Dart> link;
  std::vector<HeightWord> heights;
  std::vector<std::uint8_t> outgoing;
};

/// Retracts the finger at `site`; the crossing count drops by width + 1.
/// Throws MoveError when the pattern does not match or its heights violate
/// the side condition under `o`.
TripleDiagram apply_jr(const TripleDiagram& d, const MoveSite& site, const Orientation& o,
                       MoveRecord* record = nullptr);
TripleDiagram apply_jr_prime(const TripleDiagram& d, const MoveSite& site, const Orientation& o,
                             MoveRecord* record = nullptr);
/// Inverse rewrite: reinserts the removed crossings after the existing ones.
TripleDiagram invert_jr(const TripleDiagram& d, const MoveRecord& record);

/// Orientation of d restricted to the surviving darts after a retraction.
Orientation carry_orientation(const Orientation& o, const MoveRecord& record);

/// Inserts a one-crossing curl: the edge of dart `tail` is looped around and
/// the edge of dart `straight` passes through the curl's crossing, both
/// edges bordering a common face. Heights make it a JR (prime: JR') site
/// of width 0 under the extension of `o`. Throws MoveError if no planar
/// single-component placement exists.
TripleDiagram insert_curl(const TripleDiagram& d, const Orientation& o, Dart tail, Dart straight, bool prime,
                          Orientation* extended = nullptr);

}  // namespace tcknot
