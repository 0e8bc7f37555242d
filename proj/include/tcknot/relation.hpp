#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tcknot/diagram.hpp"
#include "tcknot/laurent.hpp"

namespace tcknot {

/// A perfect matching of the six boundary slots: partner[s] is matched to s.
using Matching = std::array<std::uint8_t, 6>;

/// The five non-crossing matchings in a fixed order: the two "three short
/// arcs" matchings, then the three "two short arcs and a long one" rotations.
const std::array<Matching, 5>& noncrossing_matchings();
/// Index into noncrossing_matchings(), or -1 for a crossing matching.
int matching_index(const Matching& m);
/// Matching after rotating slots by r (slot s becomes s - r).
Matching rotate_matching(const Matching& m, int r);

/// 0 for class x (levels descend counterclockwise), 1 for class y.
inline int chirality_class(const HeightWord& h) { return h.cyclic_sign() > 0 ? 0 : 1; }

struct RelationTerm {
  int matching = 0;  // index into noncrossing_matchings()
  HalfLaurent coeff;
};

struct TripleRelation {
  /// Writhe-normalized coefficients for a representative of each class
  /// (TMB for x, TBM for y).
  std::array<std::vector<RelationTerm>, 2> classes;
  /// Coefficient of every matching for every height word (index per
  /// HeightWord::index()); zero when the matching does not occur.
  std::array<std::array<HalfLaurent, 5>, 6> by_height;
  /// Writhe of the gadget under a natural orientation, per height word.
  std::array<int, 6> writhe{};
};

/// Symbolic bracket expansion of the deconstruction gadget for every height
/// word, normalized per crossing by (-A^3)^(-w) and converted with
/// A = t^(-1/4). Throws ConsistencyError if a state leaves a crossing
/// matching or a fractional t exponent.
TripleRelation derive_triple_relation();
/// Cached result of derive_triple_relation().
const TripleRelation& triple_relation();

/// Every relation coefficient is a signed monomial; this is the compact form
/// used by the state-sum kernels.
struct Monomial {
  int doubled_exponent = 0;
  int sign = 0;  // 0 when the matching does not occur
};
const std::array<std::array<Monomial, 5>, 6>& relation_monomials();

}  // namespace tcknot
