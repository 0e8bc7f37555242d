#include "tcknot/relation.hpp"

#include <numeric>

#include "tcknot/errors.hpp"

namespace tcknot {

namespace {

int find(std::array<int, 12>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
  return x;
}

void unite(std::array<int, 12>& parent, int a, int b) {
  a = find(parent, a);
  b = find(parent, b);
  if (a != b) parent[static_cast<std::size_t>(a)] = b;
}

// Outgoing flags of the 12 gadget darts when even boundary slots point out.
std::array<std::uint8_t, 12> gadget_orientation() {
  const Gadget& g = gadget();
  std::array<Dart, 12> twin{};
  twin.fill(-1);
  for (const auto& e : g.internal) {
    twin[static_cast<std::size_t>(e[0])] = e[1];
    twin[static_cast<std::size_t>(e[1])] = e[0];
  }
  std::array<std::uint8_t, 12> out{};
  for (int s = 1; s < 6; s += 2) {
    // Enter at odd slot s and walk straight until leaving through a boundary dart.
    Dart x = g.external[static_cast<std::size_t>(s)];
    for (;;) {
      const Dart y = DoubleDiagram::opposite(x);
      out[static_cast<std::size_t>(y)] = 1;
      if (twin[static_cast<std::size_t>(y)] < 0) break;
      x = twin[static_cast<std::size_t>(y)];
    }
  }
  return out;
}

// Ends p0..p3 counterclockwise with the over strand through p0 and p2.
std::array<int, 4> ends(int sub, bool over_even) {
  std::array<int, 4> p{};
  for (int k = 0; k < 4; ++k) p[static_cast<std::size_t>(k)] = DoubleDiagram::dart(sub, k + (over_even ? 0 : 1));
  return p;
}

}  // namespace

const std::array<Matching, 5>& noncrossing_matchings() {
  static const std::array<Matching, 5> all{{
      {1, 0, 3, 2, 5, 4},
      {5, 2, 1, 4, 3, 0},
      {1, 0, 5, 4, 3, 2},
      {3, 2, 1, 0, 5, 4},
      {5, 4, 3, 2, 1, 0},
  }};
  return all;
}

int matching_index(const Matching& m) {
  const auto& all = noncrossing_matchings();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == m) return static_cast<int>(i);
  return -1;
}

Matching rotate_matching(const Matching& m, int r) {
  Matching out{};
  for (int s = 0; s < 6; ++s) {
    const int ns = ((s - r) % 6 + 6) % 6;
    out[static_cast<std::size_t>(ns)] = static_cast<std::uint8_t>(((m[static_cast<std::size_t>(s)] - r) % 6 + 6) % 6);
  }
  return out;
}

TripleRelation derive_triple_relation() {
  const Gadget& g = gadget();
  const auto outgoing = gadget_orientation();
  const Laurent delta = Laurent::monomial(2, -1) + Laurent::monomial(-2, -1);
  std::array<int, 12> boundary_slot{};
  boundary_slot.fill(-1);
  for (int s = 0; s < 6; ++s) boundary_slot[static_cast<std::size_t>(g.external[static_cast<std::size_t>(s)])] = s;

  TripleRelation rel;
  for (const HeightWord& h : HeightWord::all()) {
    const auto over = Gadget::over_even(h);
    // Sign: positive when the over strand runs p0 -> p2 and the under p1 -> p3.
    int w = 0;
    for (int sub = 0; sub < 3; ++sub) {
      const auto p = ends(sub, over[static_cast<std::size_t>(sub)] != 0);
      const bool over_fwd = outgoing[static_cast<std::size_t>(p[2])] != 0;
      const bool under_fwd = outgoing[static_cast<std::size_t>(p[3])] != 0;
      w += over_fwd == under_fwd ? 1 : -1;
    }
    std::array<Laurent, 5> bracket{};
    for (int state = 0; state < 8; ++state) {
      std::array<int, 12> parent{};
      std::iota(parent.begin(), parent.end(), 0);
      for (const auto& e : g.internal) unite(parent, e[0], e[1]);
      int a_minus_b = 0;
      for (int sub = 0; sub < 3; ++sub) {
        const auto p = ends(sub, over[static_cast<std::size_t>(sub)] != 0);
        if ((state >> sub) & 1) {  // A: joins the regions swept by turning the over strand counterclockwise
          unite(parent, p[1], p[2]);
          unite(parent, p[3], p[0]);
          ++a_minus_b;
        } else {
          unite(parent, p[0], p[1]);
          unite(parent, p[2], p[3]);
          --a_minus_b;
        }
      }
      Matching m{};
      std::array<int, 12> first{};
      first.fill(-1);
      int loops = 0;
      std::array<char, 12> root_has_boundary{};
      for (int x = 0; x < 12; ++x) {
        const int s = boundary_slot[static_cast<std::size_t>(x)];
        if (s < 0) continue;
        const int r = find(parent, x);
        root_has_boundary[static_cast<std::size_t>(r)] = 1;
        if (first[static_cast<std::size_t>(r)] < 0) {
          first[static_cast<std::size_t>(r)] = s;
        } else {
          m[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(first[static_cast<std::size_t>(r)]);
          m[static_cast<std::size_t>(first[static_cast<std::size_t>(r)])] = static_cast<std::uint8_t>(s);
        }
      }
      for (int x = 0; x < 12; ++x)
        if (find(parent, x) == x && !root_has_boundary[static_cast<std::size_t>(x)]) ++loops;
      const int idx = matching_index(m);
      if (idx < 0) throw ConsistencyError("gadget state produced a crossing matching");
      bracket[static_cast<std::size_t>(idx)] += Laurent::monomial(a_minus_b) * delta.pow(static_cast<unsigned>(loops));
    }
    const Laurent norm = Laurent::monomial(-3 * w, (w % 2 == 0) ? 1 : -1);
    const auto hi = static_cast<std::size_t>(h.index());
    rel.writhe[hi] = w;
    for (std::size_t j = 0; j < 5; ++j) {
      const Laurent in_a = bracket[j] * norm;
      // A^k = t^(-k/4), i.e. doubled t exponent -k/2.
      Laurent doubled;
      for (auto [k, c] : in_a.terms()) {
        if (k % 2 != 0) throw ConsistencyError("gadget bracket has an odd power of A after normalization");
        doubled.add_term(-k / 2, c);
      }
      rel.by_height[hi][j] = HalfLaurent::from_doubled(doubled);
    }
  }
  const HeightWord reps[2] = {HeightWord{{Level::Top, Level::Middle, Level::Bottom}},
                              HeightWord{{Level::Top, Level::Bottom, Level::Middle}}};
  for (int c = 0; c < 2; ++c)
    for (int j = 0; j < 5; ++j) {
      const HalfLaurent& coeff = rel.by_height[static_cast<std::size_t>(reps[c].index())][static_cast<std::size_t>(j)];
      if (!coeff.is_zero()) rel.classes[static_cast<std::size_t>(c)].push_back({j, coeff});
    }
  return rel;
}

const TripleRelation& triple_relation() {
  static const TripleRelation rel = derive_triple_relation();
  return rel;
}

const std::array<std::array<Monomial, 5>, 6>& relation_monomials() {
  static const auto table = [] {
    std::array<std::array<Monomial, 5>, 6> t{};
    const TripleRelation& rel = triple_relation();
    for (std::size_t h = 0; h < 6; ++h)
      for (std::size_t j = 0; j < 5; ++j) {
        const auto& terms = rel.by_height[h][j].doubled().terms();
        if (terms.empty()) continue;
        if (terms.size() != 1) throw ConsistencyError("triple relation coefficient is not a monomial");
        const auto [e, c] = *terms.begin();
        if (c != 1 && c != -1) throw ConsistencyError("triple relation coefficient is not a unit monomial");
        t[h][j] = {e, static_cast<int>(c)};
      }
    return t;
  }();
  return table;
}

}  // namespace tcknot
