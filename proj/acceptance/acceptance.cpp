// Runs the ten acceptance criteria and prints one PASS/FAIL line each.
// Exit status is 0 only when every criterion passes.
//
//   TCKNOT_ACCEPT_N5=0   skip the n = 5 run (criterion 3 reports PARTIAL)

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "../tests/support.hpp"
#include "tcknot/canonical.hpp"
#include "tcknot/moves.hpp"
#include "tcknot/relation.hpp"
#include "tcknot/tabulate.hpp"

using namespace tcknot;
using namespace testing;

namespace {

enum class Status { Pass, Fail, Partial };

struct Outcome {
  Status status = Status::Pass;
  std::string detail;
};

// Collects failed checks for one criterion.
class Checker {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ += ok ? 0 : 1;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << failed_ << " failed check(s)";
    for (const auto& f : failures_) s << "; " << f;
    return s.str();
  }

 private:
  std::vector<std::string> failures_;
  long failed_ = 0;
};

bool n5_enabled() {
  const char* v = std::getenv("TCKNOT_ACCEPT_N5");
  return !v || std::string(v) != "0";
}

const std::vector<ReferenceKnot>& refs() {
  static const auto r = load_reference(std::string(TCKNOT_DATA_DIR) + "/reference_knots.csv");
  return r;
}

std::vector<EnumerationRun> runs_up_to(int n) {
  std::vector<EnumerationRun> out;
  for (int k = 2; k <= n; ++k) out.push_back(run(k));
  return out;
}

const std::vector<KnotClass>& named(int n) {
  static std::map<int, std::vector<KnotClass>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto cs = classify(runs_up_to(n));
    name_classes(cs, refs());
    it = cache.emplace(n, std::move(cs)).first;
  }
  return it->second;
}

std::vector<const KnotClass*> primes_at(const std::vector<KnotClass>& cs, int c3) {
  std::vector<const KnotClass*> out;
  for (const auto& k : cs)
    if (!k.composite && k.c3 == c3) out.push_back(&k);
  return out;
}

std::string counts(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ", ") + std::to_string(x);
  return s;
}

Outcome projections() {
  std::vector<std::size_t> got;
  for (int n = 2; n <= 4; ++n) got.push_back(run(n).projections.size());
  const bool ok = got == std::vector<std::size_t>{1, 2, 15};
  return {ok ? Status::Pass : Status::Fail, counts(got)};
}

Outcome knots() {
  const auto& cs = named(4);
  std::vector<std::size_t> got;
  for (int c = 2; c <= 4; ++c) got.push_back(primes_at(cs, c).size());
  Checker ck;
  ck.check(got == std::vector<std::size_t>{2, 2, 24}, "prime classes " + counts(got));
  for (const auto& k : cs) ck.check(!k.ambiguous, "ambiguous class at c3=" + std::to_string(k.c3));
  const std::vector<CountRow> expected{{2, 1, 2}, {3, 2, 2}, {4, 15, 24}};
  ck.check(count_table(runs_up_to(4), cs) == expected, "count table");
  return {ck.ok() ? Status::Pass : Status::Fail,
          counts(got) + (ck.ok() ? "" : "; " + ck.summary())};
}

Outcome extended() {
  if (!n5_enabled()) return {Status::Partial, "n=5 skipped (TCKNOT_ACCEPT_N5=0)"};
  const std::size_t p = run(5).projections.size();
  const std::size_t k = primes_at(named(5), 5).size();
  const bool ok = run(5).complete && p == 116 && k == 118;
  return {ok ? Status::Pass : Status::Fail,
          "n=5: " + std::to_string(p) + " projections, " + std::to_string(k) + " knots"};
}

Outcome naming() {
  const auto& cs = named(4);
  std::vector<std::string> got;
  for (int c = 2; c <= 3; ++c)
    for (const KnotClass* k : primes_at(cs, c)) got.push_back(k->name.value_or("?"));
  const bool ok = got == std::vector<std::string>{"3_1", "4_1", "5_2", "6_1"};
  std::string s;
  for (const auto& g : got) s += (s.empty() ? "" : ", ") + g;
  return {ok ? Status::Pass : Status::Fail, s};
}

Outcome oracle() {
  Checker ck;
  long exhaustive = 0;
  for (int n = 1; n <= 3; ++n)
    for (const auto& d : all_diagrams(n)) {
      ck.check(jones_triple(d) == oracle_jones(d), serialize_spd(d));
      ++exhaustive;
    }
  const auto rnd = random_diagrams(4, 1000, 2024);
  for (const auto& d : rnd) ck.check(jones_triple(d) == oracle_jones(d), serialize_spd(d));
  return {ck.ok() ? Status::Pass : Status::Fail,
          std::to_string(exhaustive) + " diagrams n<=3, " + std::to_string(rnd.size()) + " random n=4" +
              (ck.ok() ? "" : "; " + ck.summary())};
}

Outcome relation() {
  const TripleRelation rel = derive_triple_relation();
  std::vector<HalfLaurent> want{HalfLaurent::monomial(3, -1), HalfLaurent::monomial(2, -1),
                                HalfLaurent::monomial(2, -1), HalfLaurent::monomial(1, -1),
                                HalfLaurent::monomial(1, -1)};
  std::sort(want.begin(), want.end());
  std::vector<HalfLaurent> mirrored;
  for (const auto& h : want) mirrored.push_back(h.invert_variable());
  std::sort(mirrored.begin(), mirrored.end());
  std::set<std::vector<HalfLaurent>> got;
  for (const auto& cls : rel.classes) {
    std::vector<HalfLaurent> v;
    for (const auto& t : cls) v.push_back(t.coeff);
    std::sort(v.begin(), v.end());
    got.insert(v);
  }
  const bool ok = got == std::set<std::vector<HalfLaurent>>{want, mirrored};
  return {ok ? Status::Pass : Status::Fail, "coefficient multiset and its mirror"};
}

Outcome conjecture() {
  const int top = n5_enabled() ? 5 : 4;
  const ConjectureReport rep = conjecture_report(named(top), refs());
  std::ostringstream s;
  s << "c3<=" << top << ": " << rep.rows.size() << " classes, " << rep.holds << " hold, " << rep.not_applicable
    << " monic, " << rep.violated << " violated, " << rep.weak_violations << " weak violations, "
    << rep.bound_violations << " bound violations";
  return {rep.any_violation() ? Status::Fail : Status::Pass, s.str()};
}

Outcome orientations() {
  Checker ck;
  long checked = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : knot_maps(n))
      for (const auto& d : enumerate_diagrams(p)) {
        const auto os = natural_orientations(d);
        ck.check(os.size() == 2 && os[0].reversed() == os[1], serialize_spd(d));
        ++checked;
      }
  return {ck.ok() ? Status::Pass : Status::Fail,
          std::to_string(checked) + " diagrams n<=4" + (ck.ok() ? "" : "; " + ck.summary())};
}

Outcome moves() {
  Checker ck;
  std::map<int, long> per_width;
  const auto exercise = [&](const TripleDiagram& d) {
    const HalfLaurent v = jones_triple(d);
    for (const auto& o : natural_orientations(d))
      for (const MoveSite& s : find_jr_sites(d, o, 2)) {
        const TripleDiagram r = s.kind == MoveKind::JR ? apply_jr(d, s, o) : apply_jr_prime(d, s, o);
        ck.check(jones_triple(r) == v, serialize_spd(d));
        ++per_width[s.width];
      }
  };
  for (int n = 1; n <= 3; ++n)
    for (const auto& d : all_diagrams(n)) exercise(d);
  for (const auto& d : random_diagrams(4, 300, 41)) exercise(d);
  long total = 0;
  std::string s;
  for (auto [w, c] : per_width) {
    total += c;
    s += " k=" + std::to_string(w) + ":" + std::to_string(c);
  }
  const bool ok = ck.ok() && total >= 100;
  return {ok ? Status::Pass : Status::Fail,
          std::to_string(total) + " applications" + s + (ck.ok() ? "" : "; " + ck.summary())};
}

Outcome properties() {
  Checker ck;
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : maps(n)) {
      ck.check(euler_characteristic(p) == 2, "euler " + serialize_spd(p));
      const std::string s = serialize_spd(p);
      ck.check(serialize_spd(std::get<TripleProjection>(parse_spd(s))) == s, "round trip " + s);
    }
  for (int n = 1; n <= 3; ++n)
    for (const auto& d : all_diagrams(n)) {
      const Laurent a = alexander_of(d);
      ck.check(a.scale_exponents(-1) == a && a.eval_at_one() == 1, "alexander " + serialize_spd(d));
      ck.check(mirror(mirror(d)) == d, "mirror " + serialize_spd(d));
      ck.check(canonical_code(parse_spd_diagram(serialize_spd(d)), false) == canonical_code(d, false),
               "diagram round trip " + serialize_spd(d));
    }
  for (const auto& d : random_diagrams(4, 500, 12)) {
    const Laurent a = alexander_of(d);
    ck.check(a.scale_exponents(-1) == a && a.eval_at_one() == 1, "alexander " + serialize_spd(d));
    ck.check(mirror(mirror(d)) == d, "mirror " + serialize_spd(d));
  }
  for (int n = 1; n <= 3; ++n) {
    const auto& ms = maps(n);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      ck.check(brute_isomorphic(ms[i], canonical_form(ms[i], true), true), "canonical form " + serialize_spd(ms[i]));
      for (std::size_t j = i + 1; j < ms.size(); ++j)
        ck.check(!brute_isomorphic(ms[i], ms[j], true), "distinct codes isomorphic at n=" + std::to_string(n));
    }
  }
  return {ck.ok() ? Status::Pass : Status::Fail,
          ck.ok() ? "euler, alexander, round trip, mirror, canonical completeness" : ck.summary()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"projection counts n=2..4", projections},
      {"knot counts c3=2..4", knots},
      {"extended run n=5", extended},
      {"naming at c3=2,3", naming},
      {"oracle equivalence", oracle},
      {"relation derivation", relation},
      {"conjecture check", conjecture},
      {"natural orientations", orientations},
      {"move preservation", moves},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {Status::Fail, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const char* tag = r.status == Status::Pass ? "PASS" : r.status == Status::Fail ? "FAIL" : "PARTIAL";
    failed += r.status == Status::Fail;
    std::cout << "[" << tag << "] " << (i + 1) << ". " << criteria[i].first << ": " << r.detail << " ("
              << std::fixed;
    std::cout.precision(1);
    std::cout << secs << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
