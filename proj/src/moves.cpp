#include "tcknot/moves.hpp"

#include <algorithm>
#include <array>

#include "tcknot/errors.hpp"

namespace tcknot {

namespace {

using TP = TripleProjection;

bool is_monogon(const TP& p, Dart d) { return p.twin(d) == TP::ccw(d); }

struct Link {
  int crossing;
  int finger;  // slot of the first finger dart
};

// Follows the finger from `base` toward its monogon. Returns the chain
// (base first) or empty if no monogon is reached within max_len crossings.
std::vector<Link> walk_finger(const TP& p, Link base, int max_len) {
  std::vector<Link> chain{base};
  while (static_cast<int>(chain.size()) <= max_len) {
    const Link cur = chain.back();
    const Dart f = TP::dart(cur.crossing, cur.finger);
    if (is_monogon(p, f)) return chain;
    const Dart a = p.twin(f);
    const Dart b = p.twin(TP::ccw(f));
    const int z = TP::crossing_of(a);
    if (TP::crossing_of(b) != z || b != TP::cw(a)) return {};
    if (std::any_of(chain.begin(), chain.end(), [z](const Link& l) { return l.crossing == z; })) return {};
    chain.push_back({z, TP::slot_of(b) + 3});
  }
  return {};
}

// Walks from a monogon back to successive bases: chain[i] is the i-th
// crossing behind the tip (tip first).
std::vector<Link> walk_back(const TP& p, Link tip, int max_len) {
  std::vector<Link> chain{tip};
  while (static_cast<int>(chain.size()) < max_len) {
    const Link cur = chain.back();
    const Dart back = TP::dart(cur.crossing, cur.finger + 3);
    const Dart a = p.twin(back);              // previous crossing, finger slot + 1
    const Dart b = p.twin(TP::ccw(back));     // previous crossing, finger slot
    const int y = TP::crossing_of(a);
    if (TP::crossing_of(b) != y || a != TP::ccw(b)) break;
    if (std::any_of(chain.begin(), chain.end(), [y](const Link& l) { return l.crossing == y; })) break;
    chain.push_back({y, TP::slot_of(b)});
  }
  return chain;
}

// Side condition at one chain crossing.
bool link_matches(const TripleDiagram& d, const Orientation& o, Link l, bool prime) {
  const HeightWord& h = d.height(l.crossing);
  const Dart f = TP::dart(l.crossing, l.finger);
  const int straight = (l.finger + 2) % 3;
  const int outward = o.outgoing[static_cast<std::size_t>(f)] ? l.finger % 3 : (l.finger + 1) % 3;
  const Level want_straight = prime ? Level::Top : Level::Bottom;
  const Level want_out = prime ? Level::Bottom : Level::Top;
  return h.strand[static_cast<std::size_t>(straight)] == want_straight &&
         h.strand[static_cast<std::size_t>(outward)] == want_out;
}

TripleDiagram retract(const TripleDiagram& d, const MoveSite& site, const Orientation& o, bool prime,
                      MoveRecord* record) {
  const TP& p = d.projection();
  if (site.kind != (prime ? MoveKind::JRPrime : MoveKind::JR))
    throw MoveError("site kind does not match the requested move");
  if (site.anchor < 0 || site.anchor >= p.dart_count()) throw MoveError("site anchor out of range");
  if (o.outgoing.size() != p.twins().size() || !is_natural(p, o))
    throw MoveError("orientation is not a natural orientation of the diagram");
  const auto chain = walk_finger(p, {TP::crossing_of(site.anchor), TP::slot_of(site.anchor)}, site.width + 1);
  if (static_cast<int>(chain.size()) != site.width + 1) throw MoveError("finger pattern not present at site");
  for (const Link& l : chain)
    if (!link_matches(d, o, l, prime))
      throw MoveError(prime ? "JR' side condition violated: straight strands must be top and the outgoing arc bottom"
                            : "JR side condition violated: straight strands must be bottom and the outgoing arc top");

  const int n = p.crossing_count();
  std::vector<int> pos(static_cast<std::size_t>(n), -1);  // chain position of removed crossings
  for (std::size_t i = 0; i < chain.size(); ++i) pos[static_cast<std::size_t>(chain[i].crossing)] = static_cast<int>(i);
  const auto removed = [&](Dart x) { return pos[static_cast<std::size_t>(TP::crossing_of(x))] >= 0; };
  // Strand continuation through a removed crossing, -1 for finger internals.
  const auto pass = [&](Dart x) -> Dart {
    const Link& l = chain[static_cast<std::size_t>(pos[static_cast<std::size_t>(TP::crossing_of(x))])];
    const int rel = ((TP::slot_of(x) - l.finger) % 6 + 6) % 6;
    if (rel == 2 || rel == 5) return TP::opposite(x);
    if (&l == &chain.front() && (rel == 3 || rel == 4)) return TP::dart(l.crossing, l.finger + (rel == 3 ? 4 : 3));
    return -1;
  };

  std::vector<int> new_id(static_cast<std::size_t>(n), -1);
  std::vector<int> kept;
  for (int c = 0; c < n; ++c)
    if (pos[static_cast<std::size_t>(c)] < 0) {
      new_id[static_cast<std::size_t>(c)] = static_cast<int>(kept.size());
      kept.push_back(c);
    }
  const auto renumber = [&](Dart x) { return TP::dart(new_id[static_cast<std::size_t>(TP::crossing_of(x))], TP::slot_of(x)); };

  std::vector<Dart> twin(kept.size() * kTripleValence);
  for (int c : kept)
    for (int s = 0; s < kTripleValence; ++s) {
      const Dart x = TP::dart(c, s);
      Dart y = p.twin(x);
      for (int guard = 0; removed(y); ++guard) {
        const Dart through = pass(y);
        if (through < 0 || guard > p.dart_count()) throw ConsistencyError("finger retraction lost a strand");
        y = p.twin(through);
      }
      twin[static_cast<std::size_t>(renumber(x))] = renumber(y);
    }

  if (record) {
    record->kept = kept;
    record->link.clear();
    record->heights.clear();
    record->outgoing.clear();
    for (const Link& l : chain) {
      record->heights.push_back(d.height(l.crossing));
      for (int s = 0; s < kTripleValence; ++s) {
        const Dart x = TP::dart(l.crossing, s);
        const Dart t = p.twin(x);
        record->link.push_back(removed(t)
                                   ? TP::dart(pos[static_cast<std::size_t>(TP::crossing_of(t))], TP::slot_of(t))
                                   : -1 - renumber(t));
        record->outgoing.push_back(o.outgoing[static_cast<std::size_t>(x)]);
      }
    }
  }
  if (kept.empty()) return TripleDiagram::unknot();
  std::vector<HeightWord> heights;
  for (int c : kept) heights.push_back(d.height(c));
  return TripleDiagram(TP(std::move(twin)), std::move(heights));
}

}  // namespace

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::M1: return "M1";
    case MoveKind::M2: return "M2";
    case MoveKind::JR: return "JR";
    case MoveKind::JRPrime: return "JR'";
  }
  return "?";
}

MoveKind move_kind_from_string(const std::string& s) {
  for (MoveKind k : {MoveKind::M1, MoveKind::M2, MoveKind::JR, MoveKind::JRPrime})
    if (to_string(k) == s) return k;
  throw ParseError("unknown move kind '" + s + "'");
}

nlohmann::ordered_json to_json(const MoveSite& s) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(s.kind);
  j["crossing"] = TP::crossing_of(s.anchor);
  j["slot"] = TP::slot_of(s.anchor);
  j["width"] = s.width;
  return j;
}

MoveSite move_site_from_json(const nlohmann::ordered_json& j) {
  try {
    MoveSite s;
    s.kind = move_kind_from_string(j.at("kind").get<std::string>());
    const int c = j.at("crossing").get<int>();
    const int slot = j.at("slot").get<int>();
    if (c < 0 || slot < 0 || slot >= kTripleValence) throw ParseError("move site anchor out of range");
    s.anchor = TP::dart(c, slot);
    s.width = j.value("width", 0);
    if (s.width < 0) throw ParseError("negative move width");
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad move site: ") + e.what());
  }
}

std::vector<MoveSite> find_m_sites(const TripleProjection& p) {
  std::vector<MoveSite> out;
  for (Dart d = 0; d < p.dart_count(); ++d)
    if (is_monogon(p, d)) out.push_back({MoveKind::M1, d, 0});
  return out;
}

TripleProjection apply_m(const TripleProjection& p, const MoveSite& site) {
  if (site.kind != MoveKind::M1) throw MoveError("only M1 has a rewrite");
  if (site.anchor < 0 || site.anchor >= p.dart_count() || p.twin(site.anchor) != TP::ccw(site.anchor))
    throw MoveError("stale M1 site: no monogon at anchor");
  const int c = TP::crossing_of(site.anchor);
  const int s = TP::slot_of(site.anchor);
  // Swap outer slot s+2+k with s+4+k; conjugating the pairing moves the
  // outer edges two slots around the crossing.
  const auto sigma = [&](Dart x) {
    if (TP::crossing_of(x) != c) return x;
    const int rel = ((TP::slot_of(x) - s) % 6 + 6) % 6;
    if (rel < 2) return x;
    return TP::dart(c, s + 2 + ((rel - 2 + 2) % 4));
  };
  std::vector<Dart> twin(p.twins().size());
  for (Dart x = 0; x < p.dart_count(); ++x) twin[static_cast<std::size_t>(sigma(x))] = sigma(p.twin(x));
  return TP(std::move(twin));
}

std::vector<MoveSite> find_jr_sites(const TripleDiagram& d, const Orientation& o, int max_width) {
  std::vector<MoveSite> out;
  const TP& p = d.projection();
  for (Dart t = 0; t < p.dart_count(); ++t) {
    if (!is_monogon(p, t)) continue;
    const auto chain = walk_back(p, {TP::crossing_of(t), TP::slot_of(t)}, max_width + 1);
    for (bool prime : {false, true}) {
      for (std::size_t i = 0; i < chain.size(); ++i) {
        if (!link_matches(d, o, chain[i], prime)) break;
        out.push_back({prime ? MoveKind::JRPrime : MoveKind::JR, TP::dart(chain[i].crossing, chain[i].finger),
                       static_cast<int>(i)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const MoveSite& a, const MoveSite& b) {
    return std::tie(a.anchor, a.width, a.kind) < std::tie(b.anchor, b.width, b.kind);
  });
  return out;
}

TripleDiagram apply_jr(const TripleDiagram& d, const MoveSite& site, const Orientation& o, MoveRecord* record) {
  return retract(d, site, o, false, record);
}

TripleDiagram apply_jr_prime(const TripleDiagram& d, const MoveSite& site, const Orientation& o,
                             MoveRecord* record) {
  return retract(d, site, o, true, record);
}

TripleDiagram invert_jr(const TripleDiagram& d, const MoveRecord& record) {
  const int m = d.crossing_count();
  const int base = m * kTripleValence;
  std::vector<Dart> twin = d.projection().twins();
  twin.resize(static_cast<std::size_t>(base) + record.link.size());
  for (std::size_t j = 0; j < record.link.size(); ++j) {
    const Dart l = record.link[j];
    const Dart self = base + static_cast<Dart>(j);
    if (l >= 0) {
      twin[static_cast<std::size_t>(self)] = base + l;
    } else {
      const Dart x = -1 - l;
      if (x >= base) throw MoveError("move record does not fit the diagram");
      twin[static_cast<std::size_t>(self)] = x;
      twin[static_cast<std::size_t>(x)] = self;
    }
  }
  std::vector<HeightWord> heights = d.heights();
  heights.insert(heights.end(), record.heights.begin(), record.heights.end());
  return TripleDiagram(TP(std::move(twin)), std::move(heights));
}

Orientation carry_orientation(const Orientation& o, const MoveRecord& record) {
  Orientation out;
  for (int c : record.kept)
    for (int s = 0; s < kTripleValence; ++s)
      out.outgoing.push_back(o.outgoing[static_cast<std::size_t>(TP::dart(c, s))]);
  return out;
}

TripleDiagram insert_curl(const TripleDiagram& d, const Orientation& o, Dart tail, Dart straight, bool prime,
                          Orientation* extended) {
  const TP& p = d.projection();
  if (p.empty()) throw MoveError("cannot insert a curl into the crossingless unknot");
  if (tail < 0 || tail >= p.dart_count() || straight < 0 || straight >= p.dart_count())
    throw MoveError("curl darts out of range");
  const Dart t2 = p.twin(tail);
  const Dart u2 = p.twin(straight);
  if (straight == tail || straight == t2) throw MoveError("curl needs two distinct edges");
  const int m = p.crossing_count();
  const auto x = [m](int slot) { return TP::dart(m, slot); };
  for (int variant = 0; variant < 4; ++variant) {
    std::vector<Dart> twin = p.twins();
    twin.resize(twin.size() + kTripleValence);
    const auto join = [&](Dart a, Dart b) {
      twin[static_cast<std::size_t>(a)] = b;
      twin[static_cast<std::size_t>(b)] = a;
    };
    join(x(0), x(1));
    const bool swap_tail = variant & 1;
    const bool swap_straight = variant & 2;
    join(x(3), swap_tail ? t2 : tail);
    join(x(4), swap_tail ? tail : t2);
    join(x(2), swap_straight ? u2 : straight);
    join(x(5), swap_straight ? straight : u2);
    TP q(std::move(twin));
    if (euler_characteristic(q) != 2 || component_count(q) != 1) continue;
    std::vector<HeightWord> heights = d.heights();
    heights.push_back({});
    TripleDiagram probe(q, heights);
    Orientation chosen;
    for (Orientation& cand : natural_orientations(probe))
      if (cand.outgoing[static_cast<std::size_t>(tail)] == o.outgoing[static_cast<std::size_t>(tail)]) chosen = cand;
    if (chosen.outgoing.empty()) continue;
    HeightWord h;
    const int outward = chosen.outgoing[static_cast<std::size_t>(x(0))] ? 0 : 1;
    h.strand[2] = prime ? Level::Top : Level::Bottom;
    h.strand[static_cast<std::size_t>(outward)] = prime ? Level::Bottom : Level::Top;
    h.strand[static_cast<std::size_t>(1 - outward)] = Level::Middle;
    heights.back() = h;
    if (extended) *extended = chosen;
    return TripleDiagram(std::move(q), std::move(heights));
  }
  throw MoveError("edges do not share a face; no planar curl placement");
}

}  // namespace tcknot
