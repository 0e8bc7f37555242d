#include "tcknot/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tcknot/errors.hpp"

namespace tcknot {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

void check_involution(const std::vector<Dart>& twin, int valence) {
  if (twin.size() % static_cast<std::size_t>(valence) != 0)
    throw ValidationError("pairing", "dart count is not a multiple of " + std::to_string(valence));
  const int n = static_cast<int>(twin.size());
  for (int d = 0; d < n; ++d) {
    const Dart t = twin[static_cast<std::size_t>(d)];
    if (t < 0 || t >= n) throw ValidationError("pairing", "dart " + std::to_string(d) + " has no twin");
    if (t == d) throw ValidationError("pairing", "dart " + std::to_string(d) + " is its own twin");
    if (twin[static_cast<std::size_t>(t)] != d)
      throw ValidationError("pairing", "pairing is not an involution at dart " + std::to_string(d));
  }
}

template <class Map>
std::vector<std::vector<Dart>> trace_faces(const Map& m) {
  std::vector<std::vector<Dart>> out;
  std::vector<char> seen(static_cast<std::size_t>(m.dart_count()), 0);
  for (Dart d = 0; d < m.dart_count(); ++d) {
    if (seen[static_cast<std::size_t>(d)]) continue;
    std::vector<Dart> cycle;
    for (Dart x = d; !seen[static_cast<std::size_t>(x)]; x = Map::ccw(m.twin(x))) {
      seen[static_cast<std::size_t>(x)] = 1;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

template <class Map>
int count_components(const Map& m) {
  std::vector<char> seen(static_cast<std::size_t>(m.dart_count()), 0);
  int comps = 0;
  for (Dart d = 0; d < m.dart_count(); ++d) {
    if (seen[static_cast<std::size_t>(d)]) continue;
    ++comps;
    for (Dart x = d; !seen[static_cast<std::size_t>(x)]; x = m.twin(Map::opposite(x))) {
      seen[static_cast<std::size_t>(x)] = 1;
      seen[static_cast<std::size_t>(Map::opposite(x))] = 1;
    }
  }
  return comps;
}

HeightWord rotate_heights(const HeightWord& h, int rotate) {
  HeightWord out;
  for (int i = 0; i < 3; ++i) out.strand[static_cast<std::size_t>((((i - rotate) % 3) + 3) % 3)] = h.strand[static_cast<std::size_t>(i)];
  return out;
}

}  // namespace

char level_char(Level l) {
  switch (l) {
    case Level::Top: return 'T';
    case Level::Middle: return 'M';
    case Level::Bottom: return 'B';
  }
  return '?';
}

std::optional<Level> level_from_char(char c) {
  switch (c) {
    case 'T': return Level::Top;
    case 'M': return Level::Middle;
    case 'B': return Level::Bottom;
    default: return std::nullopt;
  }
}

bool HeightWord::is_permutation() const {
  std::array<int, 3> seen{};
  for (Level l : strand) ++seen[static_cast<std::size_t>(l)];
  return seen == std::array<int, 3>{1, 1, 1};
}

int HeightWord::strand_at(Level l) const {
  for (int i = 0; i < 3; ++i)
    if (strand[static_cast<std::size_t>(i)] == l) return i;
  return -1;
}

int HeightWord::cyclic_sign() const {
  const int t = strand_at(Level::Top);
  return strand[static_cast<std::size_t>((t + 1) % 3)] == Level::Middle ? 1 : -1;
}

std::array<char, 3> HeightWord::letters() const {
  return {level_char(strand[0]), level_char(strand[1]), level_char(strand[2])};
}

const std::array<HeightWord, 6>& HeightWord::all() {
  using L = Level;
  static const std::array<HeightWord, 6> words{{
      {{L::Top, L::Middle, L::Bottom}},
      {{L::Top, L::Bottom, L::Middle}},
      {{L::Middle, L::Top, L::Bottom}},
      {{L::Middle, L::Bottom, L::Top}},
      {{L::Bottom, L::Top, L::Middle}},
      {{L::Bottom, L::Middle, L::Top}},
  }};
  return words;
}

int HeightWord::index() const {
  const auto& w = all();
  return static_cast<int>(std::find(w.begin(), w.end(), *this) - w.begin());
}

TripleProjection::TripleProjection(std::vector<Dart> twin) : twin_(std::move(twin)) {
  check_involution(twin_, kTripleValence);
}

TripleCrossing TripleProjection::crossing(int id) const {
  TripleCrossing c;
  c.id = id;
  for (int s = 0; s < kTripleValence; ++s) c.slots[static_cast<std::size_t>(s)] = twin(dart(id, s));
  return c;
}

TripleDiagram::TripleDiagram(TripleProjection projection, std::vector<HeightWord> heights)
    : projection_(std::move(projection)), heights_(std::move(heights)) {
  if (static_cast<int>(heights_.size()) != projection_.crossing_count())
    throw ValidationError("heights", "one height word per crossing required");
  for (const HeightWord& h : heights_)
    if (!h.is_permutation()) throw ValidationError("heights", "height word is not a permutation of {T,M,B}");
  if (!projection_.empty()) validate_knot_projection(projection_);
}

TripleCrossing TripleDiagram::crossing(int id) const {
  TripleCrossing c = projection_.crossing(id);
  c.heights = height(id);
  return c;
}

Orientation Orientation::reversed() const {
  Orientation o;
  o.outgoing.reserve(outgoing.size());
  for (auto b : outgoing) o.outgoing.push_back(b ? 0 : 1);
  return o;
}

DoubleDiagram::DoubleDiagram(std::vector<Dart> twin, std::vector<std::uint8_t> over_even)
    : twin_(std::move(twin)), over_even_(std::move(over_even)) {
  check_involution(twin_, kDoubleValence);
  if (static_cast<int>(over_even_.size()) != crossing_count())
    throw ValidationError("heights", "one over/under flag per double crossing required");
}

std::vector<std::vector<Dart>> faces(const TripleProjection& p) { return trace_faces(p); }
std::vector<std::vector<Dart>> faces(const DoubleDiagram& d) { return trace_faces(d); }

int euler_characteristic(const TripleProjection& p) {
  if (p.empty()) return 2;
  return p.crossing_count() - p.edge_count() + static_cast<int>(faces(p).size());
}

int euler_characteristic(const DoubleDiagram& d) {
  if (d.crossing_count() == 0) return 2;
  return d.crossing_count() - d.dart_count() / 2 + static_cast<int>(faces(d).size());
}

bool is_connected(const TripleProjection& p) {
  const int n = p.crossing_count();
  if (n <= 1) return true;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  int groups = n;
  for (Dart d = 0; d < p.dart_count(); ++d) {
    const int a = find_root(parent, TripleProjection::crossing_of(d));
    const int b = find_root(parent, TripleProjection::crossing_of(p.twin(d)));
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --groups;
    }
  }
  return groups == 1;
}

bool is_prime(const TripleProjection& p) {
  const int n = p.crossing_count();
  std::vector<std::pair<int, int>> edges;
  for (Dart d = 0; d < p.dart_count(); ++d) {
    const Dart t = p.twin(d);
    if (d < t && !p.is_loop(d)) edges.emplace_back(TripleProjection::crossing_of(d), TripleProjection::crossing_of(t));
  }
  const auto connected_without = [&](std::size_t skip_a, std::size_t skip_b) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    int groups = n;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (e == skip_a || e == skip_b) continue;
      const int a = find_root(parent, edges[e].first);
      const int b = find_root(parent, edges[e].second);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --groups;
      }
    }
    return groups == 1;
  };
  if (!connected_without(edges.size(), edges.size())) return false;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (!connected_without(i, j)) return false;
  return true;
}

int component_count(const TripleProjection& p) { return p.empty() ? 1 : count_components(p); }
int component_count(const DoubleDiagram& d) { return count_components(d); }

void validate_projection(const TripleProjection& p) {
  if (p.empty()) throw ValidationError("empty", "projection has no crossings");
  if (!is_connected(p)) throw ValidationError("disconnected", "underlying graph is disconnected");
  const int chi = euler_characteristic(p);
  if (chi != 2)
    throw ValidationError("non-spherical",
                          "rotation system has Euler characteristic " + std::to_string(chi) + ", expected 2");
}

void validate_knot_projection(const TripleProjection& p) {
  validate_projection(p);
  const int c = component_count(p);
  if (c != 1) throw ValidationError("not-a-knot", "diagram has " + std::to_string(c) + " components, not a knot");
}

bool is_natural(const TripleProjection& p, const Orientation& o) {
  if (static_cast<int>(o.outgoing.size()) != p.dart_count()) return false;
  for (Dart d = 0; d < p.dart_count(); ++d)
    if (o.outgoing[static_cast<std::size_t>(d)] == o.outgoing[static_cast<std::size_t>(TripleProjection::ccw(d))]) return false;
  return true;
}

std::vector<Orientation> natural_orientations(const TripleDiagram& d) {
  const TripleProjection& p = d.projection();
  if (p.empty()) return {};
  Orientation forward;
  forward.outgoing.assign(static_cast<std::size_t>(p.dart_count()), 0);
  for (Dart x = 0;;) {
    forward.outgoing[static_cast<std::size_t>(TripleProjection::opposite(x))] = 1;
    x = p.twin(TripleProjection::opposite(x));
    if (x == 0) break;
  }
  std::vector<Orientation> out;
  for (Orientation o : {forward, forward.reversed()})
    if (is_natural(p, o)) out.push_back(std::move(o));
  if (out.empty())
    throw ConsistencyError("knot diagram admits no natural orientation; in/out alternation fails");
  return out;
}

Orientation traversal_orientation(const DoubleDiagram& d) {
  Orientation o;
  o.outgoing.assign(static_cast<std::size_t>(d.dart_count()), 0);
  std::vector<char> seen(static_cast<std::size_t>(d.dart_count()), 0);
  for (Dart start = 0; start < d.dart_count(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    for (Dart x = start; !seen[static_cast<std::size_t>(x)]; x = d.twin(DoubleDiagram::opposite(x))) {
      seen[static_cast<std::size_t>(x)] = 1;
      seen[static_cast<std::size_t>(DoubleDiagram::opposite(x))] = 1;
      o.outgoing[static_cast<std::size_t>(DoubleDiagram::opposite(x))] = 1;
    }
  }
  return o;
}

TripleProjection mirror(const TripleProjection& p) {
  std::vector<Dart> twin(p.twins().size());
  const auto reflect = [](Dart d) {
    return TripleProjection::dart(TripleProjection::crossing_of(d), -TripleProjection::slot_of(d));
  };
  for (Dart d = 0; d < p.dart_count(); ++d) twin[static_cast<std::size_t>(reflect(d))] = reflect(p.twin(d));
  return TripleProjection(std::move(twin));
}

TripleDiagram mirror(const TripleDiagram& d) {
  if (d.is_unknot_stub()) return d;
  std::vector<HeightWord> heights;
  for (const HeightWord& h : d.heights()) heights.push_back({{h.strand[0], h.strand[2], h.strand[1]}});
  return TripleDiagram(mirror(d.projection()), std::move(heights));
}

DoubleDiagram crossing_mirror(const DoubleDiagram& d) {
  std::vector<std::uint8_t> flipped;
  for (auto b : d.over_even()) flipped.push_back(b ? 0 : 1);
  return DoubleDiagram(d.twins(), std::move(flipped));
}

const Gadget& gadget() {
  // Sub-crossing 0 crosses strands (0,1), 1 crosses (0,2), 2 crosses (1,2).
  static const Gadget g{
      {DoubleDiagram::dart(0, 0), DoubleDiagram::dart(0, 1), DoubleDiagram::dart(1, 1), DoubleDiagram::dart(1, 2),
       DoubleDiagram::dart(2, 2), DoubleDiagram::dart(2, 3)},
      {{{DoubleDiagram::dart(0, 2), DoubleDiagram::dart(1, 0)},
        {DoubleDiagram::dart(0, 3), DoubleDiagram::dart(2, 0)},
        {DoubleDiagram::dart(1, 3), DoubleDiagram::dart(2, 1)}}},
  };
  return g;
}

std::array<std::uint8_t, 3> Gadget::over_even(const HeightWord& h) {
  // Strands on the even/odd slots of each sub-crossing.
  static constexpr std::array<std::pair<int, int>, 3> kStrands{{{0, 1}, {0, 2}, {1, 2}}};
  std::array<std::uint8_t, 3> out{};
  for (std::size_t sub = 0; sub < 3; ++sub) {
    const auto [even, odd] = kStrands[sub];
    out[sub] = h.strand[static_cast<std::size_t>(even)] < h.strand[static_cast<std::size_t>(odd)] ? 1 : 0;
  }
  return out;
}

DoubleDiagram convert_to_double(const TripleDiagram& d) {
  const TripleProjection& p = d.projection();
  const int n = p.crossing_count();
  const Gadget& g = gadget();
  const auto shift = [](int i, Dart local) { return local + 12 * i; };
  std::vector<Dart> twin(static_cast<std::size_t>(12 * n), -1);
  std::vector<std::uint8_t> over(static_cast<std::size_t>(3 * n), 0);
  for (int i = 0; i < n; ++i) {
    for (const auto& edge : g.internal) {
      twin[static_cast<std::size_t>(shift(i, edge[0]))] = shift(i, edge[1]);
      twin[static_cast<std::size_t>(shift(i, edge[1]))] = shift(i, edge[0]);
    }
    const auto flags = Gadget::over_even(d.height(i));
    std::copy(flags.begin(), flags.end(), over.begin() + 3 * i);
  }
  const auto ext = [&](Dart t) {
    return shift(TripleProjection::crossing_of(t), g.external[static_cast<std::size_t>(TripleProjection::slot_of(t))]);
  };
  for (Dart t = 0; t < p.dart_count(); ++t) twin[static_cast<std::size_t>(ext(t))] = ext(p.twin(t));
  return DoubleDiagram(std::move(twin), std::move(over));
}

TripleProjection relabel(const TripleProjection& p, const std::vector<int>& perm, const std::vector<int>& rotate) {
  const auto map = [&](Dart d) {
    const int c = TripleProjection::crossing_of(d);
    return TripleProjection::dart(perm[static_cast<std::size_t>(c)], TripleProjection::slot_of(d) - rotate[static_cast<std::size_t>(c)]);
  };
  std::vector<Dart> twin(p.twins().size());
  for (Dart d = 0; d < p.dart_count(); ++d) twin[static_cast<std::size_t>(map(d))] = map(p.twin(d));
  return TripleProjection(std::move(twin));
}

TripleDiagram relabel(const TripleDiagram& d, const std::vector<int>& perm, const std::vector<int>& rotate) {
  std::vector<HeightWord> heights(d.heights().size());
  for (std::size_t c = 0; c < heights.size(); ++c)
    heights[static_cast<std::size_t>(perm[c])] = rotate_heights(d.heights()[c], rotate[c]);
  return TripleDiagram(relabel(d.projection(), perm, rotate), std::move(heights));
}

}  // namespace tcknot
