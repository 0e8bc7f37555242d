#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tcknot/diagram.hpp"

namespace tcknot {

/// Isomorphism-invariant code of a projection or diagram: the twin array
/// read in breadth-first order from the minimizing root, followed by the
/// height-word indices when heights are present.
struct CanonicalCode {
  std::vector<std::uint16_t> code;
  bool mirror_folded = false;

  auto operator<=>(const CanonicalCode&) const = default;
  std::string to_string() const;
};

/// Code read from `root` (which becomes dart 0); with `reflect` slots are
/// read clockwise. Equal for two maps iff a root-preserving isomorphism exists.
std::vector<std::uint16_t> rooted_code(const TripleProjection& p, Dart root, bool reflect);

/// Minimum rooted code over all 6n roots, and over the reflected rotation
/// when `fold_mirror`.
CanonicalCode canonical_code(const TripleProjection& p, bool fold_mirror);
CanonicalCode canonical_code(const TripleDiagram& d, bool fold_mirror);

/// The relabelled projection whose twin array is its canonical code.
TripleProjection canonical_form(const TripleProjection& p, bool fold_mirror);
TripleDiagram canonical_form(const TripleDiagram& d, bool fold_mirror);

/// True when no other root (or reflection) gives a smaller rooted code than
/// the identity reading from dart 0. Used for orderly generation.
bool is_canonically_rooted(const TripleProjection& p, bool fold_mirror);

}  // namespace tcknot
