#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "support.hpp"
#include "tcknot/canonical.hpp"
#include "tcknot/errors.hpp"

using namespace tcknot;
using namespace testing;

namespace {

// Some connected 2-crossing pairing that is not spherical.
TripleProjection toroidal_map() {
  std::vector<Dart> twin(12, -1);
  std::optional<TripleProjection> found;
  const auto rec = [&](auto&& self) -> void {
    if (found) return;
    const auto open = std::find(twin.begin(), twin.end(), -1);
    if (open == twin.end()) {
      TripleProjection p(twin);
      if (is_connected(p) && euler_characteristic(p) != 2) found = p;
      return;
    }
    const Dart h = static_cast<Dart>(open - twin.begin());
    for (Dart g = h + 1; g < 12; ++g) {
      if (twin[static_cast<std::size_t>(g)] >= 0) continue;
      twin[static_cast<std::size_t>(h)] = g;
      twin[static_cast<std::size_t>(g)] = h;
      self(self);
      twin[static_cast<std::size_t>(h)] = twin[static_cast<std::size_t>(g)] = -1;
    }
  };
  rec(rec);
  REQUIRE(found);
  return *found;
}

TripleProjection bridged_pair(bool swap) {
  std::vector<Dart> twin{1, 0, 3, 2, 10, 11, 7, 6, 9, 8, 4, 5};
  if (swap) {
    twin[4] = 11, twin[5] = 10, twin[10] = 5, twin[11] = 4;
  }
  return TripleProjection(twin);
}

}  // namespace

TEST_CASE("t2_1 parses as a one-component diagram") {
  const TripleDiagram d = parse_spd_diagram(kT21);
  CHECK(d.crossing_count() == 2);
  CHECK(component_count(d.projection()) == 1);
  CHECK(faces(d.projection()).size() == 6);
  CHECK(euler_characteristic(d.projection()) == 2);
  CHECK(is_prime(d.projection()));
  CHECK(is_connected(d.projection()));
}

TEST_CASE("sPD errors") {
  CHECK_THROWS_AS(parse_spd("sPD[]"), ValidationError);
  try {
    parse_spd("sPD[X[1,1,1,3,4,5|TBM],X[2,5,4,3,6,6|MTB]]");
    FAIL("expected a pairing error");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == "pairing");
  }
  CHECK_THROWS_AS(parse_spd("sPD[X[1,1,2,3,4,5|TBM],X[2,5,4,3,6,6|MTB]"), ParseError);
  CHECK_THROWS_AS(parse_spd("sPD[X[1,1,2,3,4,5|TBM],X[2,5,4,3,6,6|MMB]]"), ValidationError);
  CHECK_THROWS_AS(parse_spd("sPD[X[1,1,2,3,4,5|TBM],X[2,5,4,3,6,6]]"), ValidationError);
  CHECK_THROWS_AS(parse_spd_diagram("sPD[X[1,1,2,3,4,5],X[2,5,4,3,6,6]]"), ValidationError);
}

TEST_CASE("serialization") {
  const TripleDiagram d = parse_spd_diagram(kT21);
  const std::string s = serialize_spd(d);
  CHECK(serialize_spd(parse_spd_diagram(s)) == s);
  CHECK(canonical_code(parse_spd_diagram(s), false) == canonical_code(d, false));
  const std::string bare = serialize_spd(d.projection());
  CHECK(bare.find('|') == std::string::npos);
  CHECK(std::holds_alternative<TripleProjection>(parse_spd(bare)));
}

TEST_CASE("round trip of every enumerated map up to n = 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : maps(n)) {
      const std::string s = serialize_spd(p);
      const auto back = std::get<TripleProjection>(parse_spd(s));
      CHECK(serialize_spd(back) == s);
      CHECK(canonical_code(back, true) == canonical_code(p, true));
    }
  for (const auto& d : random_diagrams(4, 200, 3)) {
    const auto back = parse_spd_diagram(serialize_spd(d));
    CHECK(canonical_code(back, false) == canonical_code(d, false));
    CHECK(jones_triple(back) == jones_triple(d));
  }
}

TEST_CASE("Euler characteristic of every generated map") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : maps(n)) {
      CHECK(p.edge_count() == 3 * p.crossing_count());
      CHECK(euler_characteristic(p) == 2);
      CHECK(faces(p).size() == static_cast<std::size_t>(2 + 2 * n));
    }
  const TripleProjection n1(std::vector<Dart>{1, 0, 3, 2, 5, 4});
  CHECK(faces(n1).size() == 4);
}

TEST_CASE("structural validation") {
  const TripleProjection torus = toroidal_map();
  CHECK(euler_characteristic(torus) != 2);
  try {
    validate_projection(torus);
    FAIL("expected non-spherical");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == "non-spherical");
  }
  const TripleProjection apart(std::vector<Dart>{1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10});
  CHECK_FALSE(is_connected(apart));
  CHECK_THROWS_AS(validate_projection(apart), ValidationError);
  int spherical = 0;
  for (bool swap : {false, true}) {
    const TripleProjection p = bridged_pair(swap);
    if (euler_characteristic(p) != 2) continue;
    ++spherical;
    CHECK(is_connected(p));
    CHECK_FALSE(is_prime(p));
  }
  CHECK(spherical >= 1);
}

TEST_CASE("strands pair opposite slots") {
  for (const auto& d : random_diagrams(4, 50, 5)) {
    const auto os = natural_orientations(d);
    for (const auto& o : os)
      for (Dart x = 0; x < d.projection().dart_count(); ++x)
        CHECK(o.outgoing[static_cast<std::size_t>(x)] != o.outgoing[static_cast<std::size_t>(TripleProjection::opposite(x))]);
  }
}

TEST_CASE("natural orientations") {
  const TripleDiagram d = parse_spd_diagram(kT21);
  const auto os = natural_orientations(d);
  REQUIRE(os.size() == 2);
  CHECK(os[0].reversed() == os[1]);
  CHECK(is_natural(d.projection(), os[0]));
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : knot_maps(n)) {
      const TripleDiagram any(p, std::vector<HeightWord>(static_cast<std::size_t>(n)));
      const auto o = natural_orientations(any);
      CHECK(o.size() == 2);
      CHECK(o[0].reversed() == o[1]);
    }
}

TEST_CASE("mirror") {
  const TripleDiagram d = parse_spd_diagram(kT21);
  CHECK(canonical_code(mirror(mirror(d)), false) == canonical_code(d, false));
  CHECK(mirror(mirror(d)) == d);
  CHECK(jones_triple(mirror(d)) == jones_triple(d).invert_variable());
  const DoubleDiagram dd = convert_to_double(d);
  CHECK(crossing_mirror(crossing_mirror(dd)) == dd);
  const DoubleDiagram dm = convert_to_double(mirror(d));
  CHECK(bracket_jones(dm, traversal_orientation(dm)) ==
        bracket_jones(crossing_mirror(dd), traversal_orientation(crossing_mirror(dd))));
  const TripleDiagram fig8 = parse_spd_diagram(kT22);
  CHECK(jones_triple(mirror(fig8)) == jones_triple(fig8));
  CHECK(alexander_of(mirror(fig8)) == alexander_of(fig8));
}

TEST_CASE("mirror involution on enumerated diagrams") {
  for (const auto& d : random_diagrams(4, 200, 9)) {
    CHECK(mirror(mirror(d)) == d);
    CHECK(jones_triple(mirror(d)) == jones_triple(d).invert_variable());
  }
}

TEST_CASE("convert_to_double") {
  const TripleDiagram d = parse_spd_diagram(kT21);
  const DoubleDiagram dd = convert_to_double(d);
  CHECK(dd.crossing_count() == 6);
  CHECK(euler_characteristic(dd) == 2);
  CHECK(component_count(dd) == 1);
  CHECK(bracket_jones(dd, traversal_orientation(dd)) == hl("1*t^1 + 1*t^3 + -1*t^4"));
  CHECK(convert_to_double(TripleDiagram::unknot()).crossing_count() == 0);
}

TEST_CASE("PD codes") {
  const DoubleDiagram k = parse_pd(kTrefoilPd);
  CHECK(k.crossing_count() == 3);
  CHECK(component_count(k) == 1);
  CHECK(euler_characteristic(k) == 2);
  CHECK(parse_pd("PD" + kTrefoilPd) == k);
  CHECK(parse_pd("X" + kTrefoilPd) == k);
  CHECK_THROWS_AS(parse_pd("[[1,5,2,4],[3,1,4,6],[5,3,6,1]]"), ValidationError);
  CHECK_THROWS_AS(parse_pd("[[1,5,2,4],[3,1,4,6]"), ParseError);
}
