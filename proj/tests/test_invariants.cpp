#include <fstream>

#include "doctest.h"
#include "support.hpp"
#include "tcknot/errors.hpp"

using namespace tcknot;
using namespace testing;

namespace {

const char* const kTrefoilLeft = "-1*t^-4 + 1*t^-3 + 1*t^-1";
const char* const kTrefoilRight = "1*t^1 + 1*t^3 + -1*t^4";
const char* const kFigureEight = "1*t^-2 + -1*t^-1 + 1 + -1*t^1 + 1*t^2";

Laurent2 kf(const char* s) { return Laurent2::parse(s, 'a'); }

DoubleDiagram pd_of(const std::string& name) {
  std::ifstream in(std::string(TCKNOT_DATA_DIR) + "/knots_pd.txt");
  for (std::string line; std::getline(in, line);)
    if (line.rfind(name + " ", 0) == 0) return parse_pd(line.substr(line.find('[')));
  FAIL("no PD code for " << name);
  return {};
}

}  // namespace

TEST_CASE("bracket oracle on classical diagrams") {
  const DoubleDiagram k = parse_pd(kTrefoilPd);
  const HalfLaurent v = bracket_jones(k, traversal_orientation(k));
  CHECK((v == hl(kTrefoilLeft) || v == hl(kTrefoilRight)));
  CHECK(bracket_jones(crossing_mirror(k), traversal_orientation(k)) == v.invert_variable());
  const DoubleDiagram e = parse_pd(kFigureEightPd);
  CHECK(bracket_jones(e, traversal_orientation(e)) == hl(kFigureEight));
  for (const char* kink : {"[[1,2,2,1]]", "[[2,1,1,2]]", "[[1,1,2,2]]", "[[2,2,1,1]]"}) {
    const DoubleDiagram c = parse_pd(kink);
    CHECK(bracket_jones(c, traversal_orientation(c)) == HalfLaurent(1));
    CHECK(alexander(c, traversal_orientation(c)) == Laurent(1));
  }
  CHECK(bracket_jones(DoubleDiagram(), Orientation{}) == HalfLaurent(1));
}

TEST_CASE("jones_triple on the small tabulated diagrams") {
  CHECK(jones_triple(TripleDiagram::unknot()) == HalfLaurent(1));
  CHECK(jones_triple(parse_spd_diagram(kUnknot1)) == HalfLaurent(1));
  CHECK(jones_triple(parse_spd_diagram(kT21)) == hl(kTrefoilRight));
  CHECK(jones_triple(parse_spd_diagram(kT22)) == hl(kFigureEight));
  CHECK(jones_triple(parse_spd_diagram(kT31)).mirror_folded() ==
        hl("-1*t^-6 + 1*t^-5 + -1*t^-4 + 2*t^-3 + -1*t^-2 + 1*t^-1"));
  CHECK(jones_triple(parse_spd_diagram(kT32)).mirror_folded() ==
        hl("1*t^-4 + -1*t^-3 + 1*t^-2 + -2*t^-1 + 2 + -1*t^1 + 1*t^2"));
}

TEST_CASE("oracle equivalence, exhaustive for n <= 3") {
  int count = 0;
  for (int n = 1; n <= 3; ++n)
    for (const auto& d : all_diagrams(n)) {
      CHECK(jones_triple(d) == oracle_jones(d));
      ++count;
    }
  MESSAGE("diagrams compared: " << count);
  CHECK(count > 1000);
}

TEST_CASE("oracle equivalence on random n = 4 diagrams") {
  for (const auto& d : random_diagrams(4, 1000, 2024)) CHECK(jones_triple(d) == oracle_jones(d));
}

TEST_CASE("oracle equivalence on random n = 5 diagrams") {
  const auto& reps = run(5).projections;
  std::mt19937 rng(5);
  for (int i = 0; i < 1000; ++i) {
    std::vector<HeightWord> h;
    for (int c = 0; c < 5; ++c) h.push_back(HeightWord::all()[rng() % 6]);
    const TripleDiagram d(reps[rng() % reps.size()], h);
    CHECK(jones_triple(d) == oracle_jones(d));
  }
}

TEST_CASE("Jones kernel agrees with the reference state sum") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& p : knot_maps(n)) {
      const JonesKernel kernel(p);
      const auto serial = kernel.evaluate_all(1);
      const auto parallel = kernel.evaluate_all(0);
      CHECK(serial == parallel);
      for (std::uint64_t i = 0; i < serial.size(); i += 7)
        CHECK(serial[i] == jones_triple(TripleDiagram(p, heights_from_index(i, n))));
    }
}

TEST_CASE("mirror symmetry of Jones") {
  for (const auto& d : random_diagrams(4, 300, 8)) CHECK(jones_triple(mirror(d)) == jones_triple(d).invert_variable());
}

TEST_CASE("Alexander polynomial") {
  CHECK(alexander_of(parse_spd_diagram(kT21)) == lp("1*t^-1 + -1 + 1*t^1"));
  CHECK(alexander_of(parse_spd_diagram(kT22)) == lp("-1*t^-1 + 3 + -1*t^1"));
  CHECK(alexander_of(parse_spd_diagram(kT31)) == lp("2*t^-1 + -3 + 2*t^1"));
  CHECK(alexander_of(parse_spd_diagram(kT32)) == lp("-2*t^-1 + 5 + -2*t^1"));
  CHECK(alexander_of(parse_spd_diagram(kUnknot1)) == Laurent(1));
  const DoubleDiagram k = parse_pd(kTrefoilPd);
  CHECK(alexander(k, traversal_orientation(k)) == lp("1*t^-1 + -1 + 1*t^1"));
  CHECK(alexander(k, traversal_orientation(k).reversed()) == alexander(k, traversal_orientation(k)));
}

TEST_CASE("Alexander symmetry and normalization on every computed polynomial") {
  const auto check = [](const TripleDiagram& d) {
    const DoubleDiagram dd = convert_to_double(d);
    const Orientation o = traversal_orientation(dd);
    const Laurent a = alexander(dd, o);
    CHECK(a.scale_exponents(-1) == a);
    CHECK(a.eval_at_one() == 1);
    CHECK(alexander_signature(dd, o) == alexander_signature(a));
  };
  for (int n = 1; n <= 3; ++n)
    for (const auto& d : all_diagrams(n)) check(d);
  for (const auto& d : random_diagrams(4, 500, 12)) check(d);
}

TEST_CASE("HOMFLY") {
  const DoubleDiagram c = parse_pd("[[1,2,2,1]]");
  CHECK(homfly(c, traversal_orientation(c)) == Laurent2(1));
  const DoubleDiagram k = parse_pd(kTrefoilPd);
  const Laurent2 hk = homfly(k, traversal_orientation(k));
  CHECK(hk.mirror_folded() == Laurent2::parse("-1*v^-4 + 2*v^-2 + 1*v^-2*z^2"));
  CHECK(homfly(crossing_mirror(k), traversal_orientation(k)) == hk.mirror());
  CHECK(homfly(k, traversal_orientation(k).reversed()) == hk);
  const DoubleDiagram e = parse_pd(kFigureEightPd);
  CHECK(homfly(e, traversal_orientation(e)) == Laurent2::parse("1*v^-2 + -1 + -1*z^2 + 1*v^2"));
  CHECK_THROWS_AS(homfly(k, traversal_orientation(k), HomflyBudget{2, 1000}), BudgetExceeded);
}

TEST_CASE("HOMFLY specializes to Jones on every n <= 3 diagram") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& d : all_diagrams(n)) {
      const DoubleDiagram dd = convert_to_double(d);
      const Orientation o = traversal_orientation(dd);
      CHECK(homfly(dd, o).to_jones() == bracket_jones(dd, o));
    }
}

TEST_CASE("Kauffman polynomial") {
  const DoubleDiagram k = parse_pd(kTrefoilPd);
  const Laurent2 fk = kauffman(k);
  CHECK(fk.mirror_folded() ==
        kf("1*a^-5*z^1 + -1*a^-4 + 1*a^-4*z^2 + 1*a^-3*z^1 + -2*a^-2 + 1*a^-2*z^2"));
  CHECK(kauffman(crossing_mirror(k)) == fk.mirror());
  const DoubleDiagram e = parse_pd(kFigureEightPd);
  CHECK(kauffman(e) == kf("-1*a^-2 + 1*a^-2*z^2 + -1*a^-1*z^1 + 1*a^-1*z^3 + -1 + 2*z^2 + -1*a^1*z^1 + "
                          "1*a^1*z^3 + -1*a^2 + 1*a^2*z^2"));
  CHECK(kauffman(parse_pd("[[1,2,2,1]]")) == Laurent2(1));
  CHECK(kauffman_signature(k) == kauffman_signature(crossing_mirror(k)));
  CHECK(kauffman_signature(k) != kauffman_signature(e));
  CHECK_THROWS_AS(kauffman(k, HomflyBudget{2, 1000}), BudgetExceeded);
}

TEST_CASE("Kauffman separates a HOMFLY-equal pair") {
  const DoubleDiagram a = pd_of("5_1");
  const DoubleDiagram b = pd_of("10_132");
  CHECK(bracket_jones(a, traversal_orientation(a)).mirror_folded() ==
        bracket_jones(b, traversal_orientation(b)).mirror_folded());
  CHECK(alexander(a, traversal_orientation(a)) == alexander(b, traversal_orientation(b)));
  CHECK(homfly(a, traversal_orientation(a)).mirror_folded() == homfly(b, traversal_orientation(b)).mirror_folded());
  CHECK(kauffman(a).mirror_folded() != kauffman(b).mirror_folded());
  CHECK(kauffman_signature(a) != kauffman_signature(b));
}

TEST_CASE("Kauffman signature is a function of the exact polynomial") {
  for (const auto& d : random_diagrams(3, 100, 21)) {
    const DoubleDiagram dd = convert_to_double(d);
    const DoubleDiagram dm = convert_to_double(mirror(d));
    CHECK(kauffman(dm).mirror_folded() == kauffman(dd).mirror_folded());
    CHECK(kauffman_signature(dm) == kauffman_signature(dd));
  }
}
