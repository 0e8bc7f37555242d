#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "tcknot/relation.hpp"

using namespace tcknot;
using namespace testing;

namespace {

std::vector<HalfLaurent> multiset(const std::vector<RelationTerm>& terms) {
  std::vector<HalfLaurent> out;
  for (const auto& t : terms) out.push_back(t.coeff);
  std::sort(out.begin(), out.end());
  return out;
}

// {-t^{3/2}, -t, -t, -t^{1/2}, -t^{1/2}}. With A = t^(-1/4) this is the
// class whose levels do not descend counterclockwise (index 1).
std::vector<HalfLaurent> expected_y() {
  std::vector<HalfLaurent> v{HalfLaurent::monomial(3, -1), HalfLaurent::monomial(2, -1), HalfLaurent::monomial(2, -1),
                             HalfLaurent::monomial(1, -1), HalfLaurent::monomial(1, -1)};
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<HalfLaurent> inverted(std::vector<HalfLaurent> v) {
  for (auto& h : v) h = h.invert_variable();
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("five non-crossing matchings") {
  const auto& ms = noncrossing_matchings();
  CHECK(ms.size() == 5);
  std::set<Matching> distinct(ms.begin(), ms.end());
  CHECK(distinct.size() == 5);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    CHECK(matching_index(ms[i]) == static_cast<int>(i));
    for (int r = 0; r < 6; ++r) CHECK(matching_index(rotate_matching(ms[i], r)) >= 0);
  }
  CHECK(matching_index(Matching{3, 4, 5, 0, 1, 2}) == -1);
}

TEST_CASE("relation coefficients") {
  const TripleRelation rel = derive_triple_relation();
  CHECK(multiset(rel.classes[1]) == expected_y());
  CHECK(multiset(rel.classes[0]) == inverted(expected_y()));
  for (const auto& h : HeightWord::all()) {
    int nonzero = 0;
    for (const auto& c : rel.by_height[static_cast<std::size_t>(h.index())]) nonzero += c.is_zero() ? 0 : 1;
    CHECK(nonzero == 5);
  }
  const auto& mono = relation_monomials();
  for (int h = 0; h < 6; ++h)
    for (int m = 0; m < 5; ++m) {
      const Monomial& x = mono[static_cast<std::size_t>(h)][static_cast<std::size_t>(m)];
      CHECK(HalfLaurent::monomial(x.doubled_exponent, x.sign) ==
            rel.by_height[static_cast<std::size_t>(h)][static_cast<std::size_t>(m)]);
    }
}

TEST_CASE("chirality classes split the height words evenly") {
  int x = 0;
  for (const auto& h : HeightWord::all()) x += chirality_class(h) == 0;
  CHECK(x == 3);
  const TripleRelation& rel = triple_relation();
  for (const auto& h : HeightWord::all()) {
    std::vector<HalfLaurent> v;
    for (const auto& c : rel.by_height[static_cast<std::size_t>(h.index())])
      if (!c.is_zero()) v.push_back(c);
    std::sort(v.begin(), v.end());
    CHECK(v == (chirality_class(h) == 1 ? expected_y() : inverted(expected_y())));
  }
}
