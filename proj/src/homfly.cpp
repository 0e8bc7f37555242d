#include <algorithm>
#include <map>
#include <numeric>

#include "tcknot/errors.hpp"
#include "tcknot/invariants.hpp"
#include "modular.hpp"

namespace tcknot {

namespace {

using namespace detail;

using DD = DoubleDiagram;

// Oriented link diagram that may lose crossings; circles without crossings
// are only counted.
struct LinkState {
  std::vector<Dart> twin;
  std::vector<std::uint8_t> over_even;
  std::vector<std::uint8_t> outgoing;
  int free_circles = 0;

  int crossings() const { return static_cast<int>(over_even.size()); }
  bool is_over(Dart d) const {
    return (DD::slot_of(d) % 2 == 0) == (over_even[static_cast<std::size_t>(DD::crossing_of(d))] != 0);
  }
  bool out(Dart d) const { return outgoing[static_cast<std::size_t>(d)] != 0; }

  int sign(int c) const {
    const int first = over_even[static_cast<std::size_t>(c)] ? 0 : 1;
    return out(DD::dart(c, first + 2)) == out(DD::dart(c, first + 3)) ? 1 : -1;
  }

  int components() const {
    std::vector<char> seen(twin.size(), 0);
    int comps = 0;
    for (Dart d = 0; d < static_cast<Dart>(twin.size()); ++d) {
      if (seen[static_cast<std::size_t>(d)]) continue;
      ++comps;
      for (Dart x = d; !seen[static_cast<std::size_t>(x)]; x = twin[static_cast<std::size_t>(DD::opposite(x))]) {
        seen[static_cast<std::size_t>(x)] = 1;
        seen[static_cast<std::size_t>(DD::opposite(x))] = 1;
      }
    }
    return comps;
  }

  // First crossing met on its under strand when components are walked in
  // order of their smallest outgoing dart; -1 if descending.
  int first_bad_crossing() const {
    std::vector<char> met(over_even.size(), 0);
    std::vector<char> seen(twin.size(), 0);
    for (Dart start = 0; start < static_cast<Dart>(twin.size()); ++start) {
      if (!out(start) || seen[static_cast<std::size_t>(start)]) continue;
      for (Dart x = start; !seen[static_cast<std::size_t>(x)];) {
        seen[static_cast<std::size_t>(x)] = 1;
        const Dart y = twin[static_cast<std::size_t>(x)];
        seen[static_cast<std::size_t>(y)] = 1;
        const int c = DD::crossing_of(y);
        if (!met[static_cast<std::size_t>(c)]) {
          met[static_cast<std::size_t>(c)] = 1;
          if (!is_over(y)) return c;
        }
        x = DD::opposite(y);
      }
    }
    return -1;
  }

  int writhe() const {
    int w = 0;
    for (int c = 0; c < crossings(); ++c) w += sign(c);
    return w;
  }

  // A coherent orientation: each component is walked from its smallest
  // dart, in the direction `prefer` gives that dart when present.
  void orient(const std::vector<std::uint8_t>* prefer = nullptr) {
    outgoing.assign(twin.size(), 0);
    std::vector<char> seen(twin.size(), 0);
    for (Dart start = 0; start < static_cast<Dart>(twin.size()); ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      const bool forward = !prefer || (*prefer)[static_cast<std::size_t>(start)] != 0;
      const Dart first = forward ? start : twin[static_cast<std::size_t>(start)];
      for (Dart x = first; !seen[static_cast<std::size_t>(x)];) {
        const Dart y = twin[static_cast<std::size_t>(x)];
        seen[static_cast<std::size_t>(x)] = seen[static_cast<std::size_t>(y)] = 1;
        outgoing[static_cast<std::size_t>(x)] = 1;
        x = DD::opposite(y);
      }
    }
  }

  // Removes crossing c. Mode 0 joins slots {0,1},{2,3}, mode 1 joins
  // {1,2},{3,0} (unoriented smoothings, result reoriented keeping as much
  // of the old orientation as one flip per component allows); mode 2 lets
  // both strands pass straight through and keeps the orientation.
  LinkState spliced(int c, int mode) const {
    const auto in_c = [c](Dart d) { return DD::crossing_of(d) == c; };
    const auto partner = [&](Dart y) {
      if (mode == 2) return DD::opposite(y);
      const int sl = (DD::slot_of(y) - mode + 4) % 4;
      return DD::dart(c, mode + (sl ^ 1));
    };
    const auto renumber = [c](Dart d) {
      const int x = DD::crossing_of(d);
      return DD::dart(x > c ? x - 1 : x, DD::slot_of(d));
    };
    LinkState s;
    s.free_circles = free_circles;
    s.twin.resize(twin.size() - kDoubleValence);
    s.outgoing.resize(twin.size() - kDoubleValence);
    for (int x = 0; x < crossings(); ++x)
      if (x != c) s.over_even.push_back(over_even[static_cast<std::size_t>(x)]);
    std::array<char, 4> reached{};
    for (Dart d = 0; d < static_cast<Dart>(twin.size()); ++d) {
      if (in_c(d)) continue;
      Dart y = twin[static_cast<std::size_t>(d)];
      while (in_c(y)) {
        reached[static_cast<std::size_t>(DD::slot_of(y))] = 1;
        const Dart p = partner(y);
        reached[static_cast<std::size_t>(DD::slot_of(p))] = 1;
        y = twin[static_cast<std::size_t>(p)];
      }
      s.twin[static_cast<std::size_t>(renumber(d))] = renumber(y);
      s.outgoing[static_cast<std::size_t>(renumber(d))] = outgoing[static_cast<std::size_t>(d)];
    }
    for (int j = 0; j < 4; ++j) {
      if (reached[static_cast<std::size_t>(j)]) continue;
      ++s.free_circles;
      for (Dart z = DD::dart(c, j); !reached[static_cast<std::size_t>(DD::slot_of(z))];) {
        reached[static_cast<std::size_t>(DD::slot_of(z))] = 1;
        const Dart p = partner(z);
        reached[static_cast<std::size_t>(DD::slot_of(p))] = 1;
        z = twin[static_cast<std::size_t>(p)];
      }
    }
    if (mode != 2) {
      const std::vector<std::uint8_t> prefer = s.outgoing;
      s.orient(&prefer);
    }
    return s;
  }

  // Removes every curl (a crossing with two adjacent ends joined); returns
  // the sum of their signs.
  int remove_curls() {
    int total = 0;
    for (bool again = true; again;) {
      again = false;
      for (Dart d = 0; d < static_cast<Dart>(twin.size()) && !again; ++d)
        if (twin[static_cast<std::size_t>(d)] == DD::ccw(d)) {
          const int c = DD::crossing_of(d);
          total += sign(c);
          *this = spliced(c, 2);
          again = true;
        }
    }
    return total;
  }

  // Removes curls and bigons whose edges are over at both ends (each such
  // pair has opposite signs, so the writhe only changes by the curls);
  // returns the sum of the curl signs.
  int simplify() {
    int total = remove_curls();
    for (bool again = true; again;) {
      again = false;
      for (Dart d = 0; d < static_cast<Dart>(twin.size()) && !again; ++d) {
        const Dart e = twin[static_cast<std::size_t>(d)];
        const int c1 = DD::crossing_of(d);
        const int c2 = DD::crossing_of(e);
        if (c1 == c2 || !is_over(d) || !is_over(e)) continue;
        if (twin[static_cast<std::size_t>(DD::ccw(d))] != DD::cw(e)) continue;
        *this = spliced(std::max(c1, c2), 2);
        *this = spliced(std::min(c1, c2), 2);
        total += remove_curls();
        again = true;
      }
    }
    return total;
  }

  LinkState switched(int c) const {
    LinkState s = *this;
    s.over_even[static_cast<std::size_t>(c)] ^= 1;
    return s;
  }

  // Oriented smoothing of crossing c.
  LinkState smoothed(int c) const {
    const auto in_c = [c](Dart d) { return DD::crossing_of(d) == c; };
    // Incoming end -> the adjacent outgoing end other than its continuation.
    const auto pass = [&](Dart y) {
      const Dart a = DD::dart(c, DD::slot_of(y) + 1);
      return out(a) && a != DD::opposite(y) ? a : DD::dart(c, DD::slot_of(y) - 1);
    };
    const auto renumber = [c](Dart d) {
      const int x = DD::crossing_of(d);
      return DD::dart(x > c ? x - 1 : x, DD::slot_of(d));
    };
    LinkState s;
    s.free_circles = free_circles;
    s.twin.resize(twin.size() - kDoubleValence);
    s.outgoing.resize(twin.size() - kDoubleValence);
    for (int x = 0; x < crossings(); ++x)
      if (x != c) s.over_even.push_back(over_even[static_cast<std::size_t>(x)]);
    std::array<char, 4> reached{};
    for (Dart d = 0; d < static_cast<Dart>(twin.size()); ++d) {
      if (in_c(d)) continue;
      Dart y = twin[static_cast<std::size_t>(d)];
      while (in_c(y)) {
        // y is incoming when d is outgoing, otherwise walk backwards.
        if (out(d)) {
          reached[static_cast<std::size_t>(DD::slot_of(y))] = 1;
          y = twin[static_cast<std::size_t>(pass(y))];
        } else {
          Dart from = -1;
          for (int k = 0; k < 4; ++k) {
            const Dart cand = DD::dart(c, k);
            if (!out(cand) && pass(cand) == y) from = cand;
          }
          reached[static_cast<std::size_t>(DD::slot_of(from))] = 1;
          y = twin[static_cast<std::size_t>(from)];
        }
      }
      s.twin[static_cast<std::size_t>(renumber(d))] = renumber(y);
      s.outgoing[static_cast<std::size_t>(renumber(d))] = outgoing[static_cast<std::size_t>(d)];
    }
    // Incoming ends never reached from outside lie on closed circles.
    std::array<char, 4> done{};
    for (int k = 0; k < 4; ++k) {
      const Dart y = DD::dart(c, k);
      if (out(y) || reached[static_cast<std::size_t>(k)] || done[static_cast<std::size_t>(k)]) continue;
      ++s.free_circles;
      for (Dart z = y; !done[static_cast<std::size_t>(DD::slot_of(z))];) {
        done[static_cast<std::size_t>(DD::slot_of(z))] = 1;
        z = twin[static_cast<std::size_t>(pass(z))];
      }
    }
    return s;
  }
};

// Rooted breadth-first code of the piece containing `root`; stops early
// (returning false) once it exceeds `bound`.
bool rooted_code(const LinkState& s, Dart root, bool oriented, std::vector<std::uint16_t>& code,
                 const std::vector<std::uint16_t>* bound, std::vector<int>* members) {
  const int n = s.crossings();
  std::vector<int> idx(static_cast<std::size_t>(n), -1), off(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  const auto discover = [&](Dart d) {
    idx[static_cast<std::size_t>(DD::crossing_of(d))] = static_cast<int>(order.size());
    off[static_cast<std::size_t>(DD::crossing_of(d))] = DD::slot_of(d);
    order.push_back(DD::crossing_of(d));
  };
  const auto label = [&](Dart d) {
    const int c = DD::crossing_of(d);
    return idx[static_cast<std::size_t>(c)] * 4 + ((DD::slot_of(d) - off[static_cast<std::size_t>(c)]) % 4 + 4) % 4;
  };
  code.clear();
  bool tied = bound != nullptr;
  const auto push = [&](std::uint16_t v) {
    const std::size_t k = code.size();
    code.push_back(v);
    if (tied) {
      if (k >= bound->size() || v > (*bound)[k]) return false;
      if (v < (*bound)[k]) tied = false;
    }
    return true;
  };
  discover(root);
  for (std::size_t k = 0; k < 4 * order.size(); ++k) {
    const int c = order[k / 4];
    const Dart d = DD::dart(c, off[static_cast<std::size_t>(c)] + static_cast<int>(k % 4));
    const Dart t = s.twin[static_cast<std::size_t>(d)];
    if (idx[static_cast<std::size_t>(DD::crossing_of(t))] < 0) discover(t);
    if (!push(static_cast<std::uint16_t>(label(t)))) return false;
  }
  for (int c : order) {
    const int o = off[static_cast<std::size_t>(c)];
    const int over = (s.over_even[static_cast<std::size_t>(c)] != 0) != (o % 2 == 1) ? 1 : 0;
    const int flags = oriented ? over * 4 + s.out(DD::dart(c, o)) * 2 + s.out(DD::dart(c, o + 1)) : over;
    if (!push(static_cast<std::uint16_t>(flags))) return false;
  }
  if (members) *members = order;
  return true;
}

std::vector<std::uint16_t> memo_key(const LinkState& s, bool oriented) {
  const int n = s.crossings();
  std::vector<int> piece(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<std::uint16_t>> codes;
  std::vector<std::uint16_t> code;
  for (int c = 0; c < n; ++c) {
    if (piece[static_cast<std::size_t>(c)] >= 0) continue;
    std::vector<int> members;
    rooted_code(s, DD::dart(c, 0), oriented, code, nullptr, &members);
    for (int m : members) piece[static_cast<std::size_t>(m)] = static_cast<int>(codes.size());
    std::vector<std::uint16_t> best = code;
    for (int m : members)
      for (int k = 0; k < 4; ++k)
        if (rooted_code(s, DD::dart(m, k), oriented, code, &best, nullptr) && code < best) best = code;
    codes.push_back(std::move(best));
  }
  std::sort(codes.begin(), codes.end());
  std::vector<std::uint16_t> key{static_cast<std::uint16_t>(s.free_circles)};
  for (const auto& c : codes) {
    key.push_back(static_cast<std::uint16_t>(c.size()));
    key.insert(key.end(), c.begin(), c.end());
  }
  return key;
}

class HomflySolver {
 public:
  explicit HomflySolver(const HomflyBudget& b) : budget_(b) {
    unlink_factor_ = Laurent2::monomial(-1, -1) - Laurent2::monomial(1, -1);
  }

  Laurent2 solve(LinkState s) {
    if (++nodes_ > budget_.max_nodes) throw BudgetExceeded("HOMFLY skein tree exceeded its node budget");
    s.simplify();
    const int bad = s.first_bad_crossing();
    if (bad < 0) return unlink_factor_.pow(static_cast<unsigned>(s.components() + s.free_circles - 1));
    auto key = memo_key(s, true);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const Laurent2 switched = solve(s.switched(bad));
    const Laurent2 smoothed = solve(s.smoothed(bad));
    Laurent2 result = s.sign(bad) > 0
                          ? Laurent2::monomial(2, 0) * switched + Laurent2::monomial(1, 1) * smoothed
                          : Laurent2::monomial(-2, 0) * switched - Laurent2::monomial(-1, 1) * smoothed;
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  HomflyBudget budget_;
  Laurent2 unlink_factor_;
  std::int64_t nodes_ = 0;
  std::map<std::vector<std::uint16_t>, Laurent2> memo_;
};

// Exact coefficients in (a, z).
struct PolyRing {
  using Value = Laurent2;
  Value a_pow(int k) const { return Laurent2::monomial(k, 0); }
  Value z() const { return Laurent2::monomial(0, 1); }
  Value circle() const { return Laurent2::monomial(1, -1) + Laurent2::monomial(-1, -1) - Laurent2(1); }
  Value pow(const Value& x, unsigned k) const { return x.pow(k); }
  Value one() const { return 1; }
};

// Values at (a, z) and (1/a, z) modulo 2^61 - 1, carried together.
struct PointPair {
  ModValue x, y;
  friend PointPair operator+(PointPair p, PointPair q) { return {p.x + q.x, p.y + q.y}; }
  friend PointPair operator-(PointPair p, PointPair q) { return {p.x - q.x, p.y - q.y}; }
  friend PointPair operator*(PointPair p, PointPair q) { return {p.x * q.x, p.y * q.y}; }
};

struct PointRing {
  using Value = PointPair;
  std::uint64_t a, a_inv, zv;
  Value a_pow(int k) const {
    const auto e = static_cast<std::uint64_t>(k >= 0 ? k : -k);
    const ModValue up{mod_pow(a, e)}, down{mod_pow(a_inv, e)};
    return k >= 0 ? Value{up, down} : Value{down, up};
  }
  Value z() const { return {{zv}, {zv}}; }
  Value circle() const {
    const ModValue c = ModValue{mod_mul((a + a_inv) % kModPrime, mod_pow(zv, kModPrime - 2))} - ModValue{1};
    return {c, c};
  }
  Value pow(const Value& v, unsigned k) const { return {{mod_pow(v.x.v, k)}, {mod_pow(v.y.v, k)}}; }
  Value one() const { return {{1}, {1}}; }
};

// Regular isotopy invariant L with L(O) = 1, L(D+) + L(D-) = z (L(D0) + L(Dinf))
// and a factor a per positive curl.
template <class Ring>
class KauffmanSolver {
 public:
  using Value = typename Ring::Value;
  KauffmanSolver(const HomflyBudget& b, Ring ring) : budget_(b), ring_(ring), circle_(ring.circle()) {}

  Value solve(LinkState s) {
    if (++nodes_ > budget_.max_nodes) throw BudgetExceeded("Kauffman skein tree exceeded its node budget");
    const Value curls = ring_.a_pow(s.simplify());
    const int bad = s.first_bad_crossing();
    if (bad < 0)
      return curls * ring_.a_pow(s.writhe()) *
             ring_.pow(circle_, static_cast<unsigned>(s.components() + s.free_circles - 1));
    auto key = memo_key(s, false);
    if (auto it = memo_.find(key); it != memo_.end()) return curls * it->second;
    Value result = ring_.z() * (solve(s.spliced(bad, 0)) + solve(s.spliced(bad, 1))) - solve(s.switched(bad));
    memo_.emplace(std::move(key), result);
    return curls * result;
  }

 private:
  HomflyBudget budget_;
  Ring ring_;
  Value circle_;
  std::int64_t nodes_ = 0;
  std::map<std::vector<std::uint16_t>, Value> memo_;
};

template <class Ring>
typename Ring::Value kauffman_in(const DoubleDiagram& dd, const HomflyBudget& budget, Ring ring) {
  if (dd.crossing_count() > budget.max_crossings)
    throw BudgetExceeded("Kauffman polynomial limited to " + std::to_string(budget.max_crossings) + " crossings");
  if (dd.crossing_count() == 0) return ring.one();
  LinkState s{dd.twins(), dd.over_even(), {}, 0};
  s.orient();
  return ring.a_pow(-s.writhe()) * KauffmanSolver<Ring>(budget, ring).solve(s);
}

}  // namespace

Laurent2 kauffman(const DoubleDiagram& dd, const HomflyBudget& budget) {
  return kauffman_in(dd, budget, PolyRing{});
}

KauffmanSignature kauffman_signature(const DoubleDiagram& dd, const HomflyBudget& budget) {
  // A mirror swaps a and 1/a, so both are evaluated and sorted.
  constexpr std::uint64_t a = 0x1d3f5a7b9c2e4f61ULL % kModPrime;
  constexpr std::uint64_t z = 0x0b7e151628aed2a6ULL % kModPrime;
  const std::uint64_t a_inv = mod_pow(a, kModPrime - 2);
  const PointPair v = kauffman_in(dd, budget, PointRing{a, a_inv, z});
  return {{std::min(v.x.v, v.y.v), std::max(v.x.v, v.y.v)}};
}

Laurent2 homfly(const DoubleDiagram& dd, const Orientation& o, const HomflyBudget& budget) {
  if (dd.crossing_count() > budget.max_crossings)
    throw BudgetExceeded("HOMFLY limited to " + std::to_string(budget.max_crossings) + " crossings");
  if (dd.crossing_count() == 0) return 1;
  LinkState s{dd.twins(), dd.over_even(), o.outgoing, 0};
  return HomflySolver(budget).solve(s);
}

}  // namespace tcknot
