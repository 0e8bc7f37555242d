#include <map>

#include "doctest.h"
#include "support.hpp"
#include "tcknot/canonical.hpp"
#include "tcknot/errors.hpp"
#include "tcknot/moves.hpp"

using namespace tcknot;
using namespace testing;

namespace {

TripleDiagram apply_site(const TripleDiagram& d, const MoveSite& s, const Orientation& o, MoveRecord* rec) {
  return s.kind == MoveKind::JR ? apply_jr(d, s, o, rec) : apply_jr_prime(d, s, o, rec);
}

// Applies every JR/JR' site of width <= 2 and checks the rewrite; returns
// the number of applications per width.
std::map<int, int> exercise(const TripleDiagram& d, const Orientation& o) {
  std::map<int, int> count;
  const HalfLaurent v = jones_triple(d);
  for (const MoveSite& s : find_jr_sites(d, o, 2)) {
    MoveRecord rec;
    const TripleDiagram r = apply_site(d, s, o, &rec);
    CHECK(r.crossing_count() == d.crossing_count() - s.width - 1);
    if (!r.is_unknot_stub()) {
      CHECK_NOTHROW(validate_knot_projection(r.projection()));
      CHECK(is_natural(r.projection(), carry_orientation(o, rec)));
    }
    CHECK(jones_triple(r) == v);
    const TripleDiagram back = invert_jr(r, rec);
    CHECK(canonical_code(back, false) == canonical_code(d, false));
    ++count[s.width];
  }
  return count;
}

}  // namespace

TEST_CASE("move kinds and sites serialize") {
  for (MoveKind k : {MoveKind::M1, MoveKind::M2, MoveKind::JR, MoveKind::JRPrime})
    CHECK(move_kind_from_string(to_string(k)) == k);
  const MoveSite s{MoveKind::JRPrime, 7, 2};
  CHECK(move_site_from_json(to_json(s)) == s);
  CHECK_THROWS(move_kind_from_string("J9"));
}

TEST_CASE("M1 rewrites") {
  int applied = 0;
  bool saw_free = false;
  for (int n = 2; n <= 4; ++n)
    for (const auto& p : maps(n)) {
      const auto sites = find_m_sites(p);
      if (sites.empty()) saw_free = true;
      for (const MoveSite& s : sites) {
        const TripleProjection q = apply_m(p, s);
        CHECK_NOTHROW(validate_projection(q));
        CHECK(apply_m(q, s) == p);
        CHECK(component_count(q) == component_count(p));
        ++applied;
      }
    }
  CHECK(applied > 100);
  CHECK(saw_free);
  bool changed = false;
  for (const auto& p : maps(3))
    for (const MoveSite& s : find_m_sites(p))
      changed = changed || canonical_code(apply_m(p, s), true) != canonical_code(p, true);
  CHECK(changed);
  const TripleProjection p = parse_spd_diagram(kT21).projection();
  CHECK_THROWS_AS(apply_m(p, MoveSite{MoveKind::M2, 0, 0}), MoveError);
  CHECK_THROWS_AS(apply_m(p, MoveSite{MoveKind::M1, 3, 0}), MoveError);
}

TEST_CASE("JR and JR' preserve Jones on enumerated diagrams") {
  std::map<int, int> total;
  for (int n = 1; n <= 3; ++n)
    for (const auto& d : all_diagrams(n))
      for (const auto& o : natural_orientations(d))
        for (auto [w, c] : exercise(d, o)) total[w] += c;
  for (const auto& d : random_diagrams(4, 300, 41))
    for (const auto& o : natural_orientations(d))
      for (auto [w, c] : exercise(d, o)) total[w] += c;
  int all = 0;
  for (auto [w, c] : total) {
    MESSAGE("width " << w << ": " << c << " applications");
    all += c;
  }
  CHECK(all >= 100);
  CHECK(total[0] > 0);
  CHECK(total[1] > 0);
  CHECK(total[2] > 0);
}

TEST_CASE("constructed curls retract to the original diagram") {
  int applied = 0;
  for (const auto& d : random_diagrams(3, 60, 77)) {
    const Orientation o = natural_orientations(d).front();
    const HalfLaurent v = jones_triple(d);
    for (Dart tail = 0; tail < d.projection().dart_count(); tail += 5)
      for (Dart straight = 0; straight < d.projection().dart_count(); straight += 7)
        for (bool prime : {false, true}) {
          Orientation ext;
          TripleDiagram big;
          try {
            big = insert_curl(d, o, tail, straight, prime, &ext);
          } catch (const MoveError&) {
            continue;
          }
          CHECK(is_natural(big.projection(), ext));
          CHECK(jones_triple(big) == v);
          const auto sites = find_jr_sites(big, ext, 0);
          const MoveKind want = prime ? MoveKind::JRPrime : MoveKind::JR;
          bool retracted = false;
          for (const MoveSite& s : sites) {
            if (s.kind != want || TripleProjection::crossing_of(s.anchor) != d.crossing_count()) continue;
            const TripleDiagram back = apply_site(big, s, ext, nullptr);
            CHECK(canonical_code(back, false) == canonical_code(d, false));
            CHECK(jones_triple(back) == v);
            retracted = true;
            ++applied;
            break;
          }
          CHECK(retracted);
        }
  }
  MESSAGE("curl retractions: " << applied);
  CHECK(applied >= 100);
}

TEST_CASE("JR side conditions are enforced") {
  int rejected = 0;
  for (const auto& d : all_diagrams(2)) {
    const Orientation o = natural_orientations(d).front();
    for (const MoveSite& s : find_jr_sites(d, o, 1)) {
      const MoveSite other{s.kind == MoveKind::JR ? MoveKind::JRPrime : MoveKind::JR, s.anchor, s.width};
      try {
        apply_site(d, other, o, nullptr);
      } catch (const MoveError&) {
        ++rejected;
      }
    }
  }
  CHECK(rejected > 0);
  const TripleDiagram d = parse_spd_diagram(kT21);
  CHECK_THROWS_AS(apply_jr(d, MoveSite{MoveKind::JR, 2, 0}, natural_orientations(d).front()), MoveError);
}
