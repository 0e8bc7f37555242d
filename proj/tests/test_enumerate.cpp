#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "tcknot/canonical.hpp"
#include "tcknot/errors.hpp"
#include "tcknot/tabulate.hpp"

using namespace tcknot;
using namespace testing;

namespace {

std::vector<EnumerationRun> runs_up_to(int n) {
  std::vector<EnumerationRun> out;
  for (int k = 2; k <= n; ++k) out.push_back(run(k));
  return out;
}

const std::vector<KnotClass>& classes4() {
  static const std::vector<KnotClass> c = classify(runs_up_to(4));
  return c;
}

std::vector<KnotClass> primes(const std::vector<KnotClass>& cs, int c3) {
  std::vector<KnotClass> out;
  for (const auto& k : cs)
    if (!k.composite && k.c3 == c3) out.push_back(k);
  return out;
}

std::vector<std::string> codes(const EnumerationRun& r) {
  std::vector<std::string> out;
  for (const auto& p : r.projections) out.push_back(canonical_code(p, true).to_string());
  return out;
}

}  // namespace

TEST_CASE("projection counts") {
  CHECK(run(2).projections.size() == 1);
  CHECK(run(3).projections.size() == 2);
  CHECK(run(4).projections.size() == 15);
  CHECK_THROWS_AS(enumerate_projections(0), Error);
  CHECK_THROWS_AS(enumerate_projections(7), Error);
}

TEST_CASE("serial and parallel searches agree") {
  for (int n = 2; n <= 4; ++n) {
    EnumerationOptions serial;
    serial.threads = 1;
    const EnumerationRun a = enumerate_projections(n, serial);
    const EnumerationRun& b = run(n);
    CHECK(codes(a) == codes(b));
    CHECK(a.class_sizes == b.class_sizes);
    CHECK(a.canonical_maps == b.canonical_maps);
  }
}

TEST_CASE("stored projections") {
  for (int n = 2; n <= 4; ++n) {
    const EnumerationRun& r = run(n);
    const auto cs = codes(r);
    CHECK(std::set<std::string>(cs.begin(), cs.end()).size() == cs.size());
    int total = 0;
    for (int s : r.class_sizes) total += s;
    CHECK(total == r.knot_projections);
    for (const auto& p : r.projections) {
      CHECK(is_prime(p));
      CHECK(component_count(p) == 1);
      CHECK(euler_characteristic(p) == 2);
    }
  }
}

TEST_CASE("every raw prime knot map reduces onto one representative") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<TripleProjection> raw;
    for (const auto& p : maps(n))
      if (component_count(p) == 1 && is_prime(p)) raw.push_back(p);
    std::vector<int> sizes(raw.size(), 1);
    reduce_by_moves(raw, sizes, true);
    std::vector<std::string> got;
    for (const auto& p : raw) got.push_back(canonical_code(p, true).to_string());
    CHECK(got == codes(run(n)));
    CHECK(sizes == run(n).class_sizes);
  }
}

TEST_CASE("height assignments") {
  const TripleProjection p = run(2).projections.front();
  const auto ds = enumerate_diagrams(p);
  CHECK(ds.size() == 36);
  CHECK(ds[0].heights() == heights_from_index(0, 2));
  CHECK(ds[35].heights() == heights_from_index(35, 2));
  std::set<std::string> folded;
  for (const auto& d : ds) folded.insert(jones_triple(d).mirror_folded().to_string());
  CHECK(folded.count(hl("-1*t^-4 + 1*t^-3 + 1*t^-1").to_string()) == 1);
  CHECK(folded.count(hl("1*t^-2 + -1*t^-1 + 1 + -1*t^1 + 1*t^2").to_string()) == 1);
  bool multi = false;
  for (const auto& q : maps(2))
    if (component_count(q) != 1) {
      CHECK(enumerate_diagrams(q).empty());
      multi = true;
    }
  CHECK(multi);
}

TEST_CASE("two natural orientations on every knot diagram, n <= 4") {
  std::int64_t checked = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : knot_maps(n)) {
      // The count depends only on the projection, but every height word is visited.
      for (const auto& d : enumerate_diagrams(p)) {
        const auto os = natural_orientations(d);
        CHECK(os.size() == 2);
        ++checked;
      }
    }
  MESSAGE("diagrams: " << checked);
}

TEST_CASE("budget stop and resume") {
  EnumerationOptions opt;
  opt.budget.node_cap = 2000;
  const EnumerationRun partial = enumerate_projections(4, opt);
  REQUIRE_FALSE(partial.complete);
  REQUIRE(partial.resume);
  const ResumeState state = ResumeState::from_json(nlohmann::ordered_json::parse(partial.resume->to_json().dump()));
  CHECK(state.to_json() == partial.resume->to_json());
  EnumerationRun resumed = enumerate_projections(4, {}, &state);
  CHECK(resumed.complete);
  CHECK(codes(resumed) == codes(run(4)));
  ResumeState wrong = state;
  wrong.n = 3;
  CHECK_THROWS_AS(enumerate_projections(4, {}, &wrong), Error);
  CHECK_THROWS(ResumeState::from_json(nlohmann::ordered_json::parse(R"({"n":"x"})")));
}

TEST_CASE("run artifacts round trip") {
  for (int n = 2; n <= 4; ++n) {
    const std::string text = run_to_jsonl(run(n));
    const EnumerationRun back = run_from_jsonl(text);
    CHECK(back.n == n);
    CHECK(codes(back) == codes(run(n)));
    CHECK(back.class_sizes == run(n).class_sizes);
    CHECK(run_to_jsonl(back) == text);
  }
}

TEST_CASE("classification up to n = 4") {
  const auto& cs = classes4();
  const auto c2 = primes(cs, 2), c3 = primes(cs, 3), c4 = primes(cs, 4);
  CHECK(c2.size() == 2);
  CHECK(c3.size() == 2);
  CHECK(c4.size() == 24);
  const std::vector<CountRow> expected{{2, 1, 2}, {3, 2, 2}, {4, 15, 24}};
  CHECK(count_table(runs_up_to(4), cs) == expected);
  for (const auto& k : cs) CHECK_FALSE(k.ambiguous);
  const auto two = classify(runs_up_to(2));
  CHECK(two.size() == 2);
  CHECK(two[0].alexander == lp("1*t^-1 + -1 + 1*t^1"));
  CHECK(two[1].alexander == lp("-1*t^-1 + 3 + -1*t^1"));
}

TEST_CASE("three composites at c3 = 4") {
  int composites = 0;
  for (const auto& k : classes4()) composites += k.composite;
  CHECK(composites == 3);
}

TEST_CASE("witnesses reproduce their fingerprints") {
  for (const auto& k : classes4()) {
    const TripleDiagram& d = k.witness;
    CHECK(d.crossing_count() == k.c3);
    CHECK(jones_triple(d) == k.witness_jones);
    CHECK(jones_triple(d).mirror_folded() == k.jones);
    CHECK(jones_triple(mirror(d)).mirror_folded() == k.jones);
    CHECK(alexander_of(d) == k.alexander);
    CHECK(alexander_of(mirror(d)) == k.alexander);
    const DoubleDiagram dd = convert_to_double(d);
    if (k.homfly) CHECK(homfly(dd, traversal_orientation(dd)).mirror_folded() == *k.homfly);
    if (k.kauffman) {
      CHECK(kauffman(dd).mirror_folded() == *k.kauffman);
      CHECK(kauffman(convert_to_double(mirror(d))).mirror_folded() == *k.kauffman);
    }
  }
}

TEST_CASE("merging is order independent and keeps the least c3") {
  const auto a = classify({run(2), run(3)});
  const auto b = classify({run(4)});
  const auto ab = merge_classes(a, b);
  const auto ba = merge_classes(b, a);
  const auto& all = classes4();
  REQUIRE(ab.size() == all.size());
  REQUIRE(ba.size() == all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(class_record(ab[i]) == class_record(all[i]));
    CHECK(class_record(ba[i]) == class_record(all[i]));
  }
  const auto shuffled = classify({run(4), run(2), run(3)});
  REQUIRE(shuffled.size() == all.size());
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(class_record(shuffled[i]) == class_record(all[i]));
  const auto c = merge_classes(merge_classes(classify({run(2)}), classify({run(3)})), b);
  REQUIRE(c.size() == all.size());
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(c[i].c3 == all[i].c3);
}

TEST_CASE("class records round trip") {
  for (const auto& k : classes4()) {
    const auto j = class_record(k);
    const KnotClass back = class_from_record(nlohmann::ordered_json::parse(j.dump()));
    CHECK(class_record(back) == j);
    CHECK(back.witness == k.witness);
  }
}

TEST_CASE("unfolded classification keeps chiral pairs apart") {
  ClassifyOptions opt;
  opt.fold_mirror = false;
  const auto cs = classify(runs_up_to(2), opt);
  // 3_1 splits into two chiralities; 4_1 is amphichiral.
  CHECK(cs.size() == 3);
}
