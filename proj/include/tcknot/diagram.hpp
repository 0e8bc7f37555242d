#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace tcknot {

// Darts (half-edges) of a triple-crossing map are numbered 6*crossing + slot,
// slots counterclockwise. The strand through slot s leaves through slot s+3.
using Dart = int;

inline constexpr int kTripleValence = 6;
inline constexpr int kDoubleValence = 4;

enum class Level : std::uint8_t { Top = 0, Middle = 1, Bottom = 2 };

char level_char(Level l);
std::optional<Level> level_from_char(char c);

/// Level of each strand at a triple crossing; entry i is the strand through
/// slots (i, i+3).
struct HeightWord {
  std::array<Level, 3> strand{Level::Top, Level::Middle, Level::Bottom};

  bool is_permutation() const;
  int strand_at(Level l) const;
  /// +1 when the levels descend T -> M -> B going counterclockwise over
  /// strands 0 -> 1 -> 2, -1 otherwise.
  int cyclic_sign() const;
  /// "TMB" style text.
  std::array<char, 3> letters() const;
  auto operator<=>(const HeightWord&) const = default;

  /// The six permutations in a fixed order (TMB, TBM, MTB, MBT, BTM, BMT).
  static const std::array<HeightWord, 6>& all();
  /// Index into all().
  int index() const;
};

/// Read-only view of one crossing: slot i refers to the twin of dart 6*id+i.
struct TripleCrossing {
  int id = 0;
  std::array<Dart, 6> slots{};
  std::optional<HeightWord> heights;
};

/// A connected 6-valent rotation system; the pairing is an involution on darts.
/// The zero-crossing projection stands for the crossingless unknot.
class TripleProjection {
 public:
  TripleProjection() = default;
  /// Checks only that `twin` is a fixed-point-free involution.
  explicit TripleProjection(std::vector<Dart> twin);

  int crossing_count() const { return static_cast<int>(twin_.size()) / kTripleValence; }
  int dart_count() const { return static_cast<int>(twin_.size()); }
  int edge_count() const { return dart_count() / 2; }
  bool empty() const { return twin_.empty(); }

  Dart twin(Dart d) const { return twin_[static_cast<std::size_t>(d)]; }
  const std::vector<Dart>& twins() const { return twin_; }
  TripleCrossing crossing(int id) const;

  static constexpr int crossing_of(Dart d) { return d / kTripleValence; }
  static constexpr int slot_of(Dart d) { return d % kTripleValence; }
  static constexpr Dart dart(int crossing, int slot) {
    return crossing * kTripleValence + ((slot % kTripleValence) + kTripleValence) % kTripleValence;
  }
  static constexpr Dart ccw(Dart d) { return dart(crossing_of(d), slot_of(d) + 1); }
  static constexpr Dart cw(Dart d) { return dart(crossing_of(d), slot_of(d) - 1); }
  static constexpr Dart opposite(Dart d) { return dart(crossing_of(d), slot_of(d) + 3); }
  bool is_loop(Dart d) const { return crossing_of(twin(d)) == crossing_of(d); }

  bool operator==(const TripleProjection&) const = default;

 private:
  std::vector<Dart> twin_;
};

/// A projection with a height word at every crossing.
class TripleDiagram {
 public:
  TripleDiagram() = default;
  /// Validates the projection as a knot projection (connected, spherical,
  /// one component); throws ValidationError.
  TripleDiagram(TripleProjection projection, std::vector<HeightWord> heights);

  static TripleDiagram unknot() { return {}; }
  bool is_unknot_stub() const { return projection_.empty(); }

  const TripleProjection& projection() const { return projection_; }
  const std::vector<HeightWord>& heights() const { return heights_; }
  const HeightWord& height(int crossing) const { return heights_[static_cast<std::size_t>(crossing)]; }
  int crossing_count() const { return projection_.crossing_count(); }
  TripleCrossing crossing(int id) const;

  bool operator==(const TripleDiagram&) const = default;

 private:
  TripleProjection projection_;
  std::vector<HeightWord> heights_;
};

/// Per-dart direction: outgoing[d] is true when the strand leaves its
/// crossing through dart d. Shared by triple and double diagrams.
struct Orientation {
  std::vector<std::uint8_t> outgoing;

  Orientation reversed() const;
  bool operator==(const Orientation&) const = default;
};

/// A classical 4-valent diagram; darts are 4*crossing + slot counterclockwise,
/// the strand through slot s leaves through slot s+2.
class DoubleDiagram {
 public:
  DoubleDiagram() = default;
  /// over_even[c] is 1 when the strand through slots (0,2) is the over strand.
  DoubleDiagram(std::vector<Dart> twin, std::vector<std::uint8_t> over_even);

  int crossing_count() const { return static_cast<int>(twin_.size()) / kDoubleValence; }
  int dart_count() const { return static_cast<int>(twin_.size()); }
  Dart twin(Dart d) const { return twin_[static_cast<std::size_t>(d)]; }
  const std::vector<Dart>& twins() const { return twin_; }
  const std::vector<std::uint8_t>& over_even() const { return over_even_; }
  bool is_over(Dart d) const {
    return (slot_of(d) % 2 == 0) == (over_even_[static_cast<std::size_t>(crossing_of(d))] != 0);
  }

  static constexpr int crossing_of(Dart d) { return d / kDoubleValence; }
  static constexpr int slot_of(Dart d) { return d % kDoubleValence; }
  static constexpr Dart dart(int crossing, int slot) {
    return crossing * kDoubleValence + ((slot % kDoubleValence) + kDoubleValence) % kDoubleValence;
  }
  static constexpr Dart ccw(Dart d) { return dart(crossing_of(d), slot_of(d) + 1); }
  static constexpr Dart cw(Dart d) { return dart(crossing_of(d), slot_of(d) - 1); }
  static constexpr Dart opposite(Dart d) { return dart(crossing_of(d), slot_of(d) + 2); }

  bool operator==(const DoubleDiagram&) const = default;

 private:
  std::vector<Dart> twin_;
  std::vector<std::uint8_t> over_even_;
};

// ---- structure ---------------------------------------------------------

/// Face cycles of the rotation system; every dart lies in exactly one cycle.
std::vector<std::vector<Dart>> faces(const TripleProjection& p);
std::vector<std::vector<Dart>> faces(const DoubleDiagram& d);
/// V - E + F.
int euler_characteristic(const TripleProjection& p);
int euler_characteristic(const DoubleDiagram& d);

bool is_connected(const TripleProjection& p);
/// No 2-edge cut of the loopless underlying multigraph splits the crossings
/// into two nonempty sides.
bool is_prime(const TripleProjection& p);
/// Number of closed strands obtained by going straight through crossings.
int component_count(const TripleProjection& p);
int component_count(const DoubleDiagram& d);

/// Throws ValidationError unless `p` is a connected spherical projection.
void validate_projection(const TripleProjection& p);
/// validate_projection plus a single strand component.
void validate_knot_projection(const TripleProjection& p);

// ---- orientation -------------------------------------------------------

/// The orientations of the single component with in/out alternation around
/// every crossing. Throws ConsistencyError if none exists.
std::vector<Orientation> natural_orientations(const TripleDiagram& d);
bool is_natural(const TripleProjection& p, const Orientation& o);
/// Orientation obtained by traversing the single component from dart 0
/// entering its crossing; works on any knot diagram.
Orientation traversal_orientation(const DoubleDiagram& d);

// ---- transforms --------------------------------------------------------

/// Planar reflection: reverses every rotation.
TripleProjection mirror(const TripleProjection& p);
TripleDiagram mirror(const TripleDiagram& d);
/// Switches every double crossing (the mirror knot).
DoubleDiagram crossing_mirror(const DoubleDiagram& d);

/// Replaces every triple crossing by three double crossings so that T is over
/// M and B and M is over B. Crossing 3*i + j of the result comes from triple
/// crossing i.
DoubleDiagram convert_to_double(const TripleDiagram& d);

/// The three-crossing gadget behind convert_to_double, in double darts of
/// sub-crossings 0..2 (sub-crossing j of triple crossing i is 3i + j).
struct Gadget {
  /// Boundary slot s -> double dart.
  std::array<Dart, 6> external;
  /// Internal edges as double-dart pairs.
  std::array<std::array<Dart, 2>, 3> internal;
  /// over_even flag of each sub-crossing for height word h.
  static std::array<std::uint8_t, 3> over_even(const HeightWord& h);
};
const Gadget& gadget();

/// Relabels crossings (perm[old] = new) and rotates each crossing's slots
/// (slot s of old crossing c becomes slot s - rotate[c]). Heights follow.
TripleProjection relabel(const TripleProjection& p, const std::vector<int>& perm,
                         const std::vector<int>& rotate);
TripleDiagram relabel(const TripleDiagram& d, const std::vector<int>& perm,
                      const std::vector<int>& rotate);

}  // namespace tcknot
