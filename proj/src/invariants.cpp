#include "tcknot/invariants.hpp"

#include <numeric>

#include "tcknot/errors.hpp"
#include "tcknot/relation.hpp"
#include "modular.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tcknot {

namespace {

using namespace detail;

using TP = TripleProjection;
using DD = DoubleDiagram;

int find(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

// Unites and reports whether two classes merged.
bool unite(std::vector<int>& parent, int a, int b) {
  a = find(parent, a);
  b = find(parent, b);
  if (a == b) return false;
  parent[static_cast<std::size_t>(a)] = b;
  return true;
}

const HalfLaurent& delta() {
  static const HalfLaurent d = HalfLaurent::monomial(1, -1) + HalfLaurent::monomial(-1, -1);
  return d;
}

// Parent array with every edge of p already joined; classes count edges.
std::vector<int> edge_classes(const TP& p) {
  std::vector<int> parent(static_cast<std::size_t>(p.dart_count()));
  std::iota(parent.begin(), parent.end(), 0);
  for (Dart x = 0; x < p.dart_count(); ++x) unite(parent, x, p.twin(x));
  return parent;
}

constexpr std::array<std::uint64_t, 4> kSamplePoints{2, 3, 5, 7};

// Arc presentation: per crossing the over arc, incoming and outgoing under arcs.
struct ArcCrossing {
  int over = 0, under_in = 0, under_out = 0, sign = 0;
};

std::vector<ArcCrossing> arc_presentation(const DD& dd, const Orientation& o) {
  const int n = dd.crossing_count();
  std::vector<ArcCrossing> rows(static_cast<std::size_t>(n));
  if (n == 0) return rows;
  const auto out = [&](Dart x) { return o.outgoing[static_cast<std::size_t>(x)] != 0; };
  Dart start = -1;
  for (int s = 0; s < kDoubleValence && start < 0; ++s) {
    const Dart x = DD::dart(0, s);
    if (!dd.is_over(x) && out(x)) start = x;
  }
  if (start < 0) throw ValidationError("orientation", "orientation is inconsistent at crossing 0");
  int arc = 0;
  int visited = 0;
  Dart x = start;
  do {
    const Dart y = dd.twin(x);
    if (out(y)) throw ValidationError("orientation", "orientation is inconsistent along an edge");
    const int c = DD::crossing_of(y);
    auto& row = rows[static_cast<std::size_t>(c)];
    if (dd.is_over(y)) {
      row.over = arc;
    } else {
      row.under_in = arc;
      ++arc;
      row.under_out = arc % n;
    }
    x = DD::opposite(y);
    visited += 2;
  } while (x != start);
  if (visited != dd.dart_count()) throw ValidationError("not-a-knot", "Alexander polynomial needs a knot diagram");
  for (int c = 0; c < n; ++c) rows[static_cast<std::size_t>(c)].sign = crossing_sign(dd, o, c);
  return rows;
}

template <class Add>
void fox_rows(const std::vector<ArcCrossing>& rows, Add add) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const ArcCrossing& a = rows[r];
    if (a.sign > 0) {
      add(r, a.over, Laurent(1) - Laurent::monomial(1));
      add(r, a.under_in, Laurent::monomial(1));
      add(r, a.under_out, Laurent(-1));
    } else {
      add(r, a.over, Laurent::monomial(1) - Laurent(1));
      add(r, a.under_in, Laurent(1));
      add(r, a.under_out, Laurent::monomial(1, -1));
    }
  }
}

Laurent bareiss_determinant(std::vector<std::vector<Laurent>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Laurent prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::uint64_t det_mod(std::vector<std::vector<std::uint64_t>> m) {
  const std::size_t n = m.size();
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && m[r][k] == 0) ++r;
    if (r == n) return 0;
    if (r != k) {
      std::swap(m[k], m[r]);
      det = kModPrime - det;
    }
    det = mod_mul(det, m[k][k]);
    const std::uint64_t inv = mod_pow(m[k][k], kModPrime - 2);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const std::uint64_t f = mod_mul(m[i][k], inv);
      for (std::size_t j = k; j < n; ++j) {
        const std::uint64_t sub = mod_mul(f, m[k][j]);
        m[i][j] = m[i][j] >= sub ? m[i][j] - sub : m[i][j] + kModPrime - sub;
      }
    }
  }
  return det;
}

std::uint64_t eval_mod(const Laurent& p, std::uint64_t t) {
  const std::uint64_t inv = mod_pow(t, kModPrime - 2);
  std::uint64_t s = 0;
  for (auto [e, c] : p.terms()) {
    const std::uint64_t base = e >= 0 ? mod_pow(t, static_cast<std::uint64_t>(e)) : mod_pow(inv, static_cast<std::uint64_t>(-e));
    s = (s + mod_mul(base, to_mod(c))) % kModPrime;
  }
  return s;
}

}  // namespace

// ---- Jones -------------------------------------------------------------

HalfLaurent jones_triple(const TripleDiagram& d) {
  if (d.is_unknot_stub()) return 1;
  const TP& p = d.projection();
  const TripleRelation& rel = triple_relation();
  const auto& matchings = noncrossing_matchings();
  const int n = p.crossing_count();
  HalfLaurent total;
  // Loop fragments are joined crossing by crossing; a union that closes a
  // class completes a loop.
  const auto rec = [&](auto&& self, int i, std::vector<int> parent, int closed, const HalfLaurent& coeff) -> void {
    if (i == n) {
      total += coeff * delta().pow(static_cast<unsigned>(closed - 1));
      return;
    }
    const auto& row = rel.by_height[static_cast<std::size_t>(d.height(i).index())];
    for (std::size_t j = 0; j < 5; ++j) {
      if (row[j].is_zero()) continue;
      std::vector<int> next = parent;
      int now_closed = closed;
      for (int s = 0; s < 6; ++s) {
        const int partner = matchings[j][static_cast<std::size_t>(s)];
        if (partner < s) continue;
        if (!unite(next, TP::dart(i, s), TP::dart(i, partner))) ++now_closed;
      }
      self(self, i + 1, std::move(next), now_closed, coeff * row[j]);
    }
  };
  rec(rec, 0, edge_classes(p), 0, HalfLaurent(1));
  return total;
}

std::vector<HeightWord> heights_from_index(std::uint64_t index, int n) {
  std::vector<HeightWord> h(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    h[static_cast<std::size_t>(i)] = HeightWord::all()[index % 6];
    index /= 6;
  }
  return h;
}

JonesKernel::JonesKernel(const TripleProjection& p) : n_(p.crossing_count()) {
  if (n_ > 8) throw BudgetExceeded("Jones kernel limited to 8 crossings");
  const auto& matchings = noncrossing_matchings();
  std::size_t states = 1;
  for (int i = 0; i < n_; ++i) states *= 5;
  loops_.resize(states);
  std::size_t next_index = 0;
  const auto rec = [&](auto&& self, int i, std::vector<int> parent, int closed) -> void {
    if (i == n_) {
      loops_[next_index++] = static_cast<std::uint8_t>(closed);
      return;
    }
    for (std::size_t j = 0; j < 5; ++j) {
      std::vector<int> next = parent;
      int now_closed = closed;
      for (int s = 0; s < 6; ++s) {
        const int partner = matchings[j][static_cast<std::size_t>(s)];
        if (partner > s && !unite(next, TP::dart(i, s), TP::dart(i, partner))) ++now_closed;
      }
      self(self, i + 1, std::move(next), now_closed);
    }
  };
  if (n_ == 0) {
    loops_[0] = 1;
  } else {
    rec(rec, 0, edge_classes(p), 0);
  }
  delta_pow_.push_back(1);
  for (int k = 1; k <= 3 * n_ + 1; ++k) delta_pow_.push_back(delta_pow_.back() * delta());
}

void JonesKernel::accumulate(const std::array<int, 8>& h, std::vector<std::int64_t>& hist) const {
  const auto& mono = relation_monomials();
  const int span = 6 * n_ + 1;  // doubled exponents lie in [-3n, 3n]
  std::size_t m = 0;
  const auto rec = [&](auto&& self, int i, int exponent, int sign) -> void {
    if (i == n_) {
      hist[static_cast<std::size_t>(loops_[m++]) * static_cast<std::size_t>(span) +
           static_cast<std::size_t>(exponent + 3 * n_)] += sign;
      return;
    }
    const auto& row = mono[static_cast<std::size_t>(h[static_cast<std::size_t>(i)])];
    for (std::size_t j = 0; j < 5; ++j) self(self, i + 1, exponent + row[j].doubled_exponent, sign * row[j].sign);
  };
  rec(rec, 0, 0, 1);
}

HalfLaurent JonesKernel::collect(const std::vector<std::int64_t>& hist) const {
  const int span = 6 * n_ + 1;
  HalfLaurent out;
  for (std::size_t loops = 1; loops < delta_pow_.size(); ++loops) {
    Laurent part;
    for (int e = 0; e < span; ++e)
      part.add_term(e - 3 * n_, hist[loops * static_cast<std::size_t>(span) + static_cast<std::size_t>(e)]);
    if (!part.is_zero()) out += HalfLaurent::from_doubled(part) * delta_pow_[loops - 1];
  }
  return out;
}

HalfLaurent JonesKernel::evaluate(const std::vector<HeightWord>& heights) const {
  if (static_cast<int>(heights.size()) != n_) throw Error("height count does not match the projection");
  if (n_ == 0) return 1;
  std::array<int, 8> h{};
  for (int i = 0; i < n_; ++i) h[static_cast<std::size_t>(i)] = heights[static_cast<std::size_t>(i)].index();
  std::vector<std::int64_t> hist(static_cast<std::size_t>((3 * n_ + 2) * (6 * n_ + 1)), 0);
  accumulate(h, hist);
  return collect(hist);
}

HalfLaurent JonesKernel::evaluate(std::uint64_t index) const {
  return evaluate(heights_from_index(index, n_));
}

std::vector<HalfLaurent> JonesKernel::evaluate_all(int threads) const {
  std::uint64_t total = 1;
  for (int i = 0; i < n_; ++i) total *= 6;
  std::vector<HalfLaurent> out(total);
  const std::size_t hist_size = static_cast<std::size_t>((3 * n_ + 2) * (6 * n_ + 1));
#ifdef _OPENMP
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nthreads)
  {
    std::vector<std::int64_t> hist(hist_size);
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
      std::fill(hist.begin(), hist.end(), 0);
      std::array<int, 8> h{};
      std::uint64_t rest = static_cast<std::uint64_t>(idx);
      for (int i = n_ - 1; i >= 0; --i) {
        h[static_cast<std::size_t>(i)] = static_cast<int>(rest % 6);
        rest /= 6;
      }
      if (n_ == 0) {
        out[0] = 1;
        continue;
      }
      accumulate(h, hist);
      out[static_cast<std::size_t>(idx)] = collect(hist);
    }
  }
#else
  (void)threads;
  (void)hist_size;
  for (std::uint64_t idx = 0; idx < total; ++idx) out[idx] = evaluate(idx);
#endif
  return out;
}

// ---- double-crossing invariants -----------------------------------------

int crossing_sign(const DoubleDiagram& dd, const Orientation& o, int c) {
  const int first = dd.over_even()[static_cast<std::size_t>(c)] ? 0 : 1;
  const Dart p2 = DD::dart(c, first + 2);
  const Dart p3 = DD::dart(c, first + 3);
  const bool over_fwd = o.outgoing[static_cast<std::size_t>(p2)] != 0;
  const bool under_fwd = o.outgoing[static_cast<std::size_t>(p3)] != 0;
  return over_fwd == under_fwd ? 1 : -1;
}

int writhe(const DoubleDiagram& dd, const Orientation& o) {
  int w = 0;
  for (int c = 0; c < dd.crossing_count(); ++c) w += crossing_sign(dd, o, c);
  return w;
}

HalfLaurent bracket_jones(const DoubleDiagram& dd, const Orientation& o) {
  const int n = dd.crossing_count();
  if (n == 0) return 1;
  if (n > 24) throw BudgetExceeded("bracket state sum limited to 24 crossings");
  std::vector<int> base(static_cast<std::size_t>(dd.dart_count()));
  std::iota(base.begin(), base.end(), 0);
  for (Dart x = 0; x < dd.dart_count(); ++x) unite(base, x, dd.twin(x));
  // Bracket in A as a Laurent polynomial; delta = -A^2 - A^-2.
  const Laurent delta_a = Laurent::monomial(2, -1) + Laurent::monomial(-2, -1);
  std::vector<Laurent> delta_pow{Laurent(1)};
  for (int k = 1; k <= 2 * n + 1; ++k) delta_pow.push_back(delta_pow.back() * delta_a);
  std::vector<std::int64_t> hist(static_cast<std::size_t>((2 * n + 2) * (2 * n + 1)), 0);
  const auto ends = [&](int c) {
    const int first = dd.over_even()[static_cast<std::size_t>(c)] ? 0 : 1;
    std::array<Dart, 4> p{};
    for (int k = 0; k < 4; ++k) p[static_cast<std::size_t>(k)] = DD::dart(c, first + k);
    return p;
  };
  for (std::uint64_t state = 0; state < (1ULL << n); ++state) {
    std::vector<int> parent = base;
    int a_minus_b = 0;
    for (int c = 0; c < n; ++c) {
      const auto p = ends(c);
      if ((state >> c) & 1ULL) {
        unite(parent, p[1], p[2]);
        unite(parent, p[3], p[0]);
        ++a_minus_b;
      } else {
        unite(parent, p[0], p[1]);
        unite(parent, p[2], p[3]);
        --a_minus_b;
      }
    }
    int loops = 0;
    for (int x = 0; x < dd.dart_count(); ++x)
      if (find(parent, x) == x) ++loops;
    hist[static_cast<std::size_t>(loops) * static_cast<std::size_t>(2 * n + 1) + static_cast<std::size_t>(a_minus_b + n)] += 1;
  }
  Laurent bracket;
  for (int loops = 1; loops <= 2 * n + 1; ++loops) {
    Laurent part;
    for (int e = 0; e <= 2 * n; ++e)
      part.add_term(e - n, hist[static_cast<std::size_t>(loops) * static_cast<std::size_t>(2 * n + 1) + static_cast<std::size_t>(e)]);
    if (!part.is_zero()) bracket += part * delta_pow[static_cast<std::size_t>(loops - 1)];
  }
  const int w = writhe(dd, o);
  bracket *= Laurent::monomial(-3 * w, w % 2 == 0 ? 1 : -1);
  Laurent doubled;
  for (auto [k, c] : bracket.terms()) {
    if (k % 2 != 0) throw ConsistencyError("odd A power in a normalized knot bracket");
    doubled.add_term(-k / 2, c);
  }
  return HalfLaurent::from_doubled(doubled);
}

Orientation double_orientation(const TripleDiagram& d, const Orientation& o) {
  const DoubleDiagram dd = convert_to_double(d);
  Orientation out = traversal_orientation(dd);
  if (d.is_unknot_stub()) return out;
  const Dart probe = gadget().external[0];
  if (out.outgoing[static_cast<std::size_t>(probe)] != o.outgoing[0]) out = out.reversed();
  return out;
}

Laurent alexander(const DoubleDiagram& dd, const Orientation& o) {
  const int n = dd.crossing_count();
  if (n <= 1) return 1;
  const auto rows = arc_presentation(dd, o);
  std::vector<std::vector<Laurent>> m(static_cast<std::size_t>(n), std::vector<Laurent>(static_cast<std::size_t>(n)));
  fox_rows(rows, [&](std::size_t r, int col, const Laurent& v) { m[r][static_cast<std::size_t>(col)] += v; });
  m.pop_back();
  for (auto& row : m) row.pop_back();
  Laurent det = bareiss_determinant(std::move(m));
  if (det.is_zero()) throw ConsistencyError("Alexander determinant vanished for a knot");
  const int lo = det.min_exponent();
  const int hi = det.max_exponent();
  if ((lo + hi) % 2 != 0) throw ConsistencyError("Alexander determinant is not symmetric up to a unit");
  det = det.shift(-(lo + hi) / 2);
  if (det.eval_at_one() < 0) det = -det;
  if (det.eval_at_one() != 1) throw ConsistencyError("Alexander polynomial does not evaluate to 1 at t = 1");
  return det;
}

AlexanderSignature alexander_signature(const DoubleDiagram& dd, const Orientation& o) {
  const int n = dd.crossing_count();
  if (n <= 1) return alexander_signature(Laurent(1));
  const auto rows = arc_presentation(dd, o);
  const auto size = static_cast<std::size_t>(n - 1);
  AlexanderSignature sig;
  std::vector<std::vector<std::uint64_t>> m(size, std::vector<std::uint64_t>(size));
  for (std::size_t k = 0; k < kSamplePoints.size(); ++k) {
    std::uint64_t value = 1;
    for (std::uint64_t t : {kSamplePoints[k], mod_pow(kSamplePoints[k], kModPrime - 2)}) {
      for (auto& row : m) std::fill(row.begin(), row.end(), 0);
      const auto add = [&](std::size_t r, int col, std::uint64_t v) {
        if (r < size && static_cast<std::size_t>(col) < size) m[r][static_cast<std::size_t>(col)] = (m[r][static_cast<std::size_t>(col)] + v) % kModPrime;
      };
      const std::uint64_t one_minus_t = (1 + kModPrime - t) % kModPrime;
      const std::uint64_t t_minus_one = (t + kModPrime - 1) % kModPrime;
      // Same rows as fox_rows, evaluated at t.
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const ArcCrossing& a = rows[r];
        if (a.sign > 0) {
          add(r, a.over, one_minus_t);
          add(r, a.under_in, t);
          add(r, a.under_out, kModPrime - 1);
        } else {
          add(r, a.over, t_minus_one);
          add(r, a.under_in, 1);
          add(r, a.under_out, kModPrime - t);
        }
      }
      value = mod_mul(value, det_mod(m));
    }
    sig.value[k] = value;
  }
  return sig;
}

AlexanderSignature alexander_signature(const Laurent& delta_poly) {
  AlexanderSignature sig;
  for (std::size_t k = 0; k < kSamplePoints.size(); ++k)
    sig.value[k] = mod_mul(eval_mod(delta_poly, kSamplePoints[k]),
                          eval_mod(delta_poly, mod_pow(kSamplePoints[k], kModPrime - 2)));
  return sig;
}

}  // namespace tcknot
