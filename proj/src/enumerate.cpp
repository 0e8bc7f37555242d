#include "tcknot/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "tcknot/errors.hpp"
#include "tcknot/invariants.hpp"
#include "tcknot/moves.hpp"
#include "tcknot/spd.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tcknot {

namespace {

using TP = TripleProjection;
using Clock = std::chrono::steady_clock;

// ---- search -------------------------------------------------------------

// Partial rotation system; pair[d] < 0 while d is open. Crossings are
// created in breadth-first order, each entered at slot 0.
struct Partial {
  std::vector<std::int16_t> pair;
  int created = 0;
};

// Euler characteristic with open darts treated as leaves; a partial map
// can only complete to a sphere while this stays 2.
bool spherical_so_far(const Partial& s) {
  const int darts = 6 * s.created;
  int open = 0;
  for (int d = 0; d < darts; ++d) open += s.pair[static_cast<std::size_t>(d)] < 0;
  std::vector<char> seen(static_cast<std::size_t>(darts), 0);
  int faces = 0;
  for (int d = 0; d < darts; ++d) {
    if (seen[static_cast<std::size_t>(d)]) continue;
    ++faces;
    for (int x = d; !seen[static_cast<std::size_t>(x)];) {
      seen[static_cast<std::size_t>(x)] = 1;
      const int t = s.pair[static_cast<std::size_t>(x)];
      x = TP::ccw(t < 0 ? x : t);
    }
  }
  const int v = s.created + open;
  const int e = (darts - open) / 2 + open;
  return v - e + faces == 2;
}

// Compares the code read from (root, reflect) with the identity reading as
// far as both are determined: -1 when the other reading is smaller, +1 when
// larger, 0 when undecided.
int compare_partial(const Partial& s, Dart root, bool reflect) {
  const int n = s.created;
  std::array<int, 16> idx{}, off{}, order{};
  idx.fill(-1);
  int found = 0;
  const auto discover = [&](Dart d) {
    idx[static_cast<std::size_t>(TP::crossing_of(d))] = found;
    off[static_cast<std::size_t>(TP::crossing_of(d))] = TP::slot_of(d);
    order[static_cast<std::size_t>(found++)] = TP::crossing_of(d);
  };
  discover(root);
  for (int k = 0; k < 6 * n; ++k) {
    if (k / 6 >= found) return 0;
    const int mine = s.pair[static_cast<std::size_t>(k)];
    const int c = order[static_cast<std::size_t>(k / 6)];
    const int o = off[static_cast<std::size_t>(c)];
    const Dart d = TP::dart(c, reflect ? o - k % 6 : o + k % 6);
    const int t = s.pair[static_cast<std::size_t>(d)];
    if (t < 0 || mine < 0) return 0;
    if (idx[static_cast<std::size_t>(TP::crossing_of(t))] < 0) discover(t);
    const int tc = TP::crossing_of(t);
    const int ns = ((reflect ? off[static_cast<std::size_t>(tc)] - TP::slot_of(t) : TP::slot_of(t) - off[static_cast<std::size_t>(tc)]) % 6 + 6) % 6;
    const int label = idx[static_cast<std::size_t>(tc)] * 6 + ns;
    if (label != mine) return label < mine ? -1 : 1;
  }
  return 0;
}

bool may_be_canonical(const Partial& s, bool fold) {
  for (int r = 0; r < (fold ? 2 : 1); ++r)
    for (Dart root = 0; root < 6 * s.created; ++root) {
      if (root == 0 && r == 0) continue;
      if (compare_partial(s, root, r == 1) < 0) return false;
    }
  return true;
}

struct SearchContext {
  int n = 0;
  bool fold = true;
  Budget budget;
  Clock::time_point start;
  std::atomic<std::int64_t>* nodes = nullptr;
  std::atomic<bool>* stop = nullptr;
  std::atomic<std::int64_t>* leaves = nullptr;

  bool out_of_budget() const {
    if (stop->load(std::memory_order_relaxed)) return true;
    const std::int64_t k = nodes->fetch_add(1, std::memory_order_relaxed) + 1;
    bool over = budget.node_cap > 0 && k > budget.node_cap;
    if (!over && budget.wall_seconds > 0 && (k & 1023) == 0)
      over = std::chrono::duration<double>(Clock::now() - start).count() > budget.wall_seconds;
    if (over) stop->store(true);
    return over;
  }
};

// Children of a partial map: the first open dart is paired with a new
// crossing or with a later open dart.
template <class Visit>
void for_each_child(Partial& s, int n, Visit visit) {
  int h = -1;
  for (int d = 0; d < 6 * s.created; ++d)
    if (s.pair[static_cast<std::size_t>(d)] < 0) {
      h = d;
      break;
    }
  if (h < 0) return;
  if (s.created < n) {
    const int fresh = 6 * s.created;
    s.pair[static_cast<std::size_t>(h)] = static_cast<std::int16_t>(fresh);
    s.pair[static_cast<std::size_t>(fresh)] = static_cast<std::int16_t>(h);
    ++s.created;
    visit(s);
    --s.created;
    s.pair[static_cast<std::size_t>(h)] = -1;
    s.pair[static_cast<std::size_t>(fresh)] = -1;
  }
  for (int g = h + 1; g < 6 * s.created; ++g) {
    if (s.pair[static_cast<std::size_t>(g)] >= 0) continue;
    s.pair[static_cast<std::size_t>(h)] = static_cast<std::int16_t>(g);
    s.pair[static_cast<std::size_t>(g)] = static_cast<std::int16_t>(h);
    visit(s);
    s.pair[static_cast<std::size_t>(h)] = -1;
    s.pair[static_cast<std::size_t>(g)] = -1;
  }
}

bool complete(const Partial& s, int n) {
  if (s.created != n) return false;
  return std::none_of(s.pair.begin(), s.pair.begin() + 6 * n, [](std::int16_t v) { return v < 0; });
}

bool viable(const Partial& s, bool fold) { return spherical_so_far(s) && may_be_canonical(s, fold); }

// Depth-first search below `s`; returns false if interrupted.
bool search(Partial& s, const SearchContext& ctx, std::vector<std::vector<std::uint16_t>>& out) {
  if (ctx.out_of_budget()) return false;
  if (complete(s, ctx.n)) {
    ctx.leaves->fetch_add(1, std::memory_order_relaxed);
    TP p(std::vector<Dart>(s.pair.begin(), s.pair.end()));
    if (is_canonically_rooted(p, ctx.fold)) out.emplace_back(s.pair.begin(), s.pair.end());
    return true;
  }
  bool ok = true;
  for_each_child(s, ctx.n, [&](Partial& child) {
    if (ok && viable(child, ctx.fold)) ok = search(child, ctx, out);
  });
  return ok;
}

// Prefix nodes at `depth` decisions, in depth-first order. Complete maps
// shallower than depth become items themselves.
void frontier(Partial& s, int n, bool fold, int depth, std::vector<Partial>& items) {
  if (depth == 0 || complete(s, n)) {
    items.push_back(s);
    return;
  }
  for_each_child(s, n, [&](Partial& child) {
    if (viable(child, fold)) frontier(child, n, fold, depth - 1, items);
  });
}

Partial root_partial(int n) {
  Partial s;
  s.pair.assign(static_cast<std::size_t>(6 * n), -1);
  s.created = 1;
  return s;
}

// ---- classification helpers ----------------------------------------------

Laurent2 fold_homfly(const Laurent2& p) { return p.mirror_folded(); }

TripleDiagram diagram_for(const std::vector<const EnumerationRun*>& by_n, const WitnessKey& k) {
  const EnumerationRun* run = by_n[static_cast<std::size_t>(k.n)];
  const TP& p = run->projections[static_cast<std::size_t>(k.projection)];
  return TripleDiagram(p, heights_from_index(k.heights, p.crossing_count()));
}

Laurent2 homfly_of(const TripleDiagram& d, const HomflyBudget& b) {
  const DoubleDiagram dd = convert_to_double(d);
  return fold_homfly(homfly(dd, traversal_orientation(dd), b));
}

bool same_class_key(const KnotClass& a, const KnotClass& b) {
  return a.jones == b.jones && a.alexander == b.alexander && a.homfly == b.homfly && a.kauffman == b.kauffman;
}

bool class_order(const KnotClass& a, const KnotClass& b) {
  return std::tie(a.c3, a.witness_key) < std::tie(b.c3, b.witness_key);
}

}  // namespace

// ---- resume ----------------------------------------------------------------

nlohmann::ordered_json ResumeState::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["fold_mirror"] = fold_mirror;
  j["split_depth"] = split_depth;
  std::string flags;
  for (auto b : done) flags += b ? '1' : '0';
  j["done"] = flags;
  nlohmann::ordered_json codes = nlohmann::ordered_json::array();
  for (const auto& c : found) codes.push_back(c);
  j["found"] = codes;
  return j;
}

ResumeState ResumeState::from_json(const nlohmann::ordered_json& j) {
  try {
    ResumeState r;
    r.n = j.at("n").get<int>();
    r.fold_mirror = j.at("fold_mirror").get<bool>();
    r.split_depth = j.at("split_depth").get<int>();
    for (char ch : j.at("done").get<std::string>()) {
      if (ch != '0' && ch != '1') throw ParseError("bad resume flags");
      r.done.push_back(ch == '1');
    }
    for (const auto& c : j.at("found")) r.found.push_back(c.get<std::vector<std::uint16_t>>());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad resume state: ") + e.what());
  }
}

// ---- projections -------------------------------------------------------------

std::vector<TripleProjection> enumerate_maps(int n, const EnumerationOptions& opt, EnumerationRun* stats,
                                             const ResumeState* resume) {
  if (n < 1 || n > 6) throw Error("crossing count must be between 1 and 6");
  const int depth = resume ? resume->split_depth : opt.split_depth;
  if (resume && (resume->n != n || resume->fold_mirror != opt.fold_mirror))
    throw Error("resume state belongs to a different run");

  Partial root = root_partial(n);
  std::vector<Partial> items;
  if (viable(root, opt.fold_mirror)) frontier(root, n, opt.fold_mirror, depth, items);
  if (resume && resume->done.size() != items.size()) throw Error("resume state does not match the search frontier");

  std::atomic<std::int64_t> nodes{0}, leaves{0};
  std::atomic<bool> stop{false};
  SearchContext ctx{n, opt.fold_mirror, opt.budget, Clock::now(), &nodes, &stop, &leaves};
  std::vector<std::vector<std::vector<std::uint16_t>>> results(items.size());
  std::vector<std::uint8_t> done(items.size(), 0);
  if (resume) done = resume->done;

  const auto run_item = [&](std::size_t i) {
    if (done[i]) return;
    Partial s = items[i];
    std::vector<std::vector<std::uint16_t>> out;
    if (search(s, ctx, out)) {
      results[i] = std::move(out);
      done[i] = 1;
    }
  };
#ifdef _OPENMP
  const int nthreads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(items.size()); ++i) run_item(static_cast<std::size_t>(i));
#else
  for (std::size_t i = 0; i < items.size(); ++i) run_item(i);
#endif

  std::vector<std::vector<std::uint16_t>> codes;
  if (resume) codes = resume->found;
  for (auto& r : results)
    for (auto& c : r) codes.push_back(std::move(c));
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());

  const bool finished = std::all_of(done.begin(), done.end(), [](std::uint8_t b) { return b != 0; });
  if (stats) {
    stats->rooted_maps += leaves.load();
    stats->complete = finished;
    if (!finished) {
      ResumeState st;
      st.n = n;
      st.fold_mirror = opt.fold_mirror;
      st.split_depth = depth;
      st.done = done;
      st.found = codes;
      stats->resume = std::move(st);
    } else {
      stats->resume.reset();
    }
  }
  std::vector<TripleProjection> maps;
  maps.reserve(codes.size());
  for (const auto& c : codes) maps.emplace_back(std::vector<Dart>(c.begin(), c.end()));
  return maps;
}

void reduce_by_moves(std::vector<TripleProjection>& maps, std::vector<int>& sizes, bool fold_mirror) {
  std::map<std::vector<std::uint16_t>, int> index;
  std::vector<std::vector<std::uint16_t>> codes;
  for (const TP& p : maps) {
    codes.push_back(canonical_code(p, fold_mirror).code);
    index.emplace(codes.back(), static_cast<int>(codes.size()) - 1);
  }
  std::vector<int> parent(maps.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (const MoveSite& site : find_m_sites(maps[i])) {
      const auto code = canonical_code(apply_m(maps[i], site), fold_mirror).code;
      auto it = index.find(code);
      if (it == index.end()) throw ConsistencyError("M1 left the class of prime knot projections");
      const int a = find(static_cast<int>(i));
      const int b = find(it->second);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  // Roots are the smallest index, hence the smallest code, of their class.
  std::map<int, int> count;
  for (std::size_t i = 0; i < maps.size(); ++i) ++count[find(static_cast<int>(i))];
  std::vector<TripleProjection> reps;
  sizes.clear();
  for (auto [root, k] : count) {
    reps.push_back(maps[static_cast<std::size_t>(root)]);
    sizes.push_back(k);
  }
  maps = std::move(reps);
}

EnumerationRun enumerate_projections(int n, const EnumerationOptions& opt, const ResumeState* resume) {
  EnumerationRun run;
  run.n = n;
  run.fold_mirror = opt.fold_mirror;
  std::vector<TripleProjection> maps = enumerate_maps(n, opt, &run, resume);
  run.canonical_maps = static_cast<std::int64_t>(maps.size());
  if (!run.complete) return run;
  std::vector<TripleProjection> knots;
  for (TP& p : maps)
    if (component_count(p) == 1 && is_prime(p)) knots.push_back(std::move(p));
  run.knot_projections = static_cast<std::int64_t>(knots.size());
  reduce_by_moves(knots, run.class_sizes, opt.fold_mirror);
  run.projections = std::move(knots);
  return run;
}

std::vector<TripleDiagram> enumerate_diagrams(const TripleProjection& p) {
  std::vector<TripleDiagram> out;
  if (component_count(p) != 1) return out;
  std::uint64_t total = 1;
  for (int i = 0; i < p.crossing_count(); ++i) total *= 6;
  out.reserve(total);
  for (std::uint64_t h = 0; h < total; ++h) out.emplace_back(p, heights_from_index(h, p.crossing_count()));
  return out;
}

// ---- classification ----------------------------------------------------------

std::vector<KnotClass> classify(const std::vector<EnumerationRun>& runs, const ClassifyOptions& opt) {
  int max_n = 0;
  for (const auto& r : runs) {
    if (!r.complete) throw Error("cannot classify an incomplete run");
    max_n = std::max(max_n, r.n);
  }
  std::vector<const EnumerationRun*> by_n(static_cast<std::size_t>(max_n + 1), nullptr);
  for (const auto& r : runs) {
    if (by_n[static_cast<std::size_t>(r.n)]) throw Error("duplicate run for n = " + std::to_string(r.n));
    by_n[static_cast<std::size_t>(r.n)] = &r;
  }
#ifdef _OPENMP
  const int nthreads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#endif

  // Fingerprint every diagram by (folded Jones, Alexander signature).
  std::map<std::pair<HalfLaurent, AlexanderSignature>, std::vector<WitnessKey>> buckets;
  for (int n = 1; n <= max_n; ++n) {
    const EnumerationRun* run = by_n[static_cast<std::size_t>(n)];
    if (!run) continue;
    for (std::size_t pi = 0; pi < run->projections.size(); ++pi) {
      const TP& p = run->projections[pi];
      const JonesKernel kernel(p);
      const std::vector<HalfLaurent> jones = kernel.evaluate_all(opt.threads);
      std::vector<AlexanderSignature> sigs(jones.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) num_threads(nthreads)
#endif
      for (std::int64_t h = 0; h < static_cast<std::int64_t>(jones.size()); ++h) {
        const TripleDiagram d(p, heights_from_index(static_cast<std::uint64_t>(h), n));
        const DoubleDiagram dd = convert_to_double(d);
        sigs[static_cast<std::size_t>(h)] = alexander_signature(dd, traversal_orientation(dd));
      }
      for (std::size_t h = 0; h < jones.size(); ++h) {
        const HalfLaurent v = opt.fold_mirror ? jones[h].mirror_folded() : jones[h];
        buckets[{v, sigs[h]}].push_back({n, static_cast<int>(pi), h});
      }
    }
  }
  const HalfLaurent one(1);
  buckets.erase({one, alexander_signature(Laurent(1))});  // unknot by fingerprint

  // Refine by the Kauffman signature of every member.
  std::vector<std::vector<WitnessKey>> groups;
  std::vector<std::uint8_t> kauffman_known;
  for (auto& [key, members] : buckets) {
    std::sort(members.begin(), members.end());
    if (!opt.kauffman) {
      groups.push_back(std::move(members));
      kauffman_known.push_back(0);
      continue;
    }
    std::vector<std::optional<KauffmanSignature>> sig(members.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(members.size()); ++i) {
      try {
        const DoubleDiagram dd = convert_to_double(diagram_for(by_n, members[static_cast<std::size_t>(i)]));
        sig[static_cast<std::size_t>(i)] = kauffman_signature(dd, opt.homfly_budget);
      } catch (const BudgetExceeded&) {
      }
    }
    std::map<KauffmanSignature, std::vector<WitnessKey>> split;
    std::vector<WitnessKey> unknown;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (sig[i]) split[*sig[i]].push_back(members[i]);
      else unknown.push_back(members[i]);
    }
    // Unknown members join the group when it is the only one; otherwise
    // they form their own group, flagged ambiguous below.
    if (split.size() == 1 && !unknown.empty()) {
      auto& only = split.begin()->second;
      only.insert(only.end(), unknown.begin(), unknown.end());
      std::sort(only.begin(), only.end());
      unknown.clear();
    }
    const bool known = unknown.empty();
    for (auto& [k, m] : split) {
      groups.push_back(std::move(m));
      kauffman_known.push_back(known ? 1 : 0);
    }
    if (!unknown.empty()) {
      groups.push_back(std::move(unknown));
      kauffman_known.push_back(0);
    }
  }

  std::vector<KnotClass> result;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const std::vector<WitnessKey>& members = groups[gi];
    KnotClass k;
    k.witness_key = members.front();
    k.c3 = k.witness_key.n;
    k.witness = diagram_for(by_n, k.witness_key);
    k.witness_jones = jones_triple(k.witness);
    k.jones = opt.fold_mirror ? k.witness_jones.mirror_folded() : k.witness_jones;
    const DoubleDiagram dd = convert_to_double(k.witness);
    k.alexander = alexander(dd, traversal_orientation(dd));
    k.diagram_count = static_cast<std::int64_t>(members.size());
    if (kauffman_known[gi]) {
      try {
        const Laurent2 f = kauffman(dd, opt.homfly_budget);
        k.kauffman = opt.fold_mirror ? f.mirror_folded() : f;
      } catch (const BudgetExceeded&) {
      }
    } else {
      k.ambiguous = opt.kauffman;
    }

    // HOMFLY on samples; disagreeing samples trigger a full pass and a split.
    const bool all = k.c3 <= opt.homfly_exhaustive_n || static_cast<int>(members.size()) <= opt.homfly_sample;
    const std::size_t take = all ? members.size() : static_cast<std::size_t>(opt.homfly_sample);
    const auto compute = [&](std::size_t count, std::vector<std::optional<Laurent2>>& out) {
      out.assign(count, std::nullopt);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
#endif
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
        try {
          out[static_cast<std::size_t>(i)] =
              homfly_of(diagram_for(by_n, members[static_cast<std::size_t>(i)]), opt.homfly_budget);
        } catch (const BudgetExceeded&) {
        }
      }
    };
    std::vector<std::optional<Laurent2>> values;
    compute(take, values);
    std::set<Laurent2> distinct;
    bool missing = false;
    for (const auto& v : values) {
      if (v) distinct.insert(*v);
      else missing = true;
    }
    if (distinct.size() <= 1) {
      if (!distinct.empty() && !missing) k.homfly = *distinct.begin();
      result.push_back(std::move(k));
      continue;
    }
    if (!all) compute(members.size(), values);
    std::map<Laurent2, std::vector<WitnessKey>> split;
    std::vector<WitnessKey> unknown;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i]) split[*values[i]].push_back(members[i]);
      else unknown.push_back(members[i]);
    }
    if (!unknown.empty()) {
      k.ambiguous = true;
      for (const auto& [h, m] : split) k.homfly_candidates.push_back(h);
      result.push_back(std::move(k));
      continue;
    }
    for (auto& [h, part_members] : split) {
      KnotClass part = k;
      part.homfly = h;
      part.witness_key = part_members.front();
      part.c3 = part.witness_key.n;
      part.witness = diagram_for(by_n, part.witness_key);
      part.witness_jones = jones_triple(part.witness);
      part.diagram_count = static_cast<std::int64_t>(part_members.size());
      result.push_back(std::move(part));
    }
  }
  std::sort(result.begin(), result.end(), class_order);
  mark_composites(result);
  return result;
}

void mark_composites(std::vector<KnotClass>& classes) {
  for (KnotClass& k : classes) {
    k.composite = false;
    for (std::size_t i = 0; i < classes.size() && !k.composite; ++i)
      for (std::size_t j = i; j < classes.size() && !k.composite; ++j) {
        const KnotClass& a = classes[i];
        const KnotClass& b = classes[j];
        if (&a == &k || &b == &k || a.alexander * b.alexander != k.alexander) continue;
        const HalfLaurent va = a.witness_jones;
        bool jones_ok = false;
        for (const HalfLaurent& vb : {b.witness_jones, b.witness_jones.invert_variable()})
          jones_ok = jones_ok || (va * vb).mirror_folded() == k.jones;
        if (!jones_ok) continue;
        if (a.kauffman && b.kauffman && k.kauffman) {
          bool kauffman_ok = false;
          for (const Laurent2& fb : {*b.kauffman, b.kauffman->mirror()})
            kauffman_ok = kauffman_ok || ((*a.kauffman) * fb).mirror_folded() == *k.kauffman;
          if (!kauffman_ok) continue;
        }
        if (a.homfly && b.homfly && k.homfly) {
          bool homfly_ok = false;
          for (const Laurent2& pb : {*b.homfly, b.homfly->mirror()})
            homfly_ok = homfly_ok || ((*a.homfly) * pb).mirror_folded() == *k.homfly;
          if (!homfly_ok) continue;
        }
        k.composite = true;
      }
  }
}

std::vector<KnotClass> merge_classes(const std::vector<KnotClass>& a, const std::vector<KnotClass>& b) {
  std::vector<KnotClass> out = a;
  for (const KnotClass& k : b) {
    auto it = std::find_if(out.begin(), out.end(), [&](const KnotClass& x) { return same_class_key(x, k); });
    if (it == out.end()) {
      out.push_back(k);
      continue;
    }
    KnotClass& m = *it;
    m.diagram_count += k.diagram_count;
    m.ambiguous = m.ambiguous || k.ambiguous;
    if (k.witness_key < m.witness_key) {
      m.witness_key = k.witness_key;
      m.witness = k.witness;
      m.witness_jones = k.witness_jones;
    }
    m.c3 = std::min(m.c3, k.c3);
    m.composite = m.composite || k.composite;
    if (!m.name) m.name = k.name;
    for (const auto& h : k.homfly_candidates)
      if (std::find(m.homfly_candidates.begin(), m.homfly_candidates.end(), h) == m.homfly_candidates.end())
        m.homfly_candidates.push_back(h);
    std::sort(m.homfly_candidates.begin(), m.homfly_candidates.end());
  }
  std::sort(out.begin(), out.end(), class_order);
  mark_composites(out);
  return out;
}

std::vector<CountRow> count_table(const std::vector<EnumerationRun>& runs, const std::vector<KnotClass>& classes) {
  std::vector<CountRow> rows;
  for (const auto& r : runs) {
    CountRow row{r.n, static_cast<int>(r.projections.size()), 0};
    for (const auto& k : classes) row.knots += k.c3 == r.n && !k.composite;
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(), [](const CountRow& x, const CountRow& y) { return x.n < y.n; });
  return rows;
}

// ---- artifacts ---------------------------------------------------------------

nlohmann::ordered_json projection_record(const EnumerationRun& run, std::size_t index) {
  nlohmann::ordered_json j;
  j["type"] = "projection";
  j["n"] = run.n;
  j["index"] = index;
  j["spd"] = serialize_spd(run.projections[index]);
  j["code"] = canonical_code(run.projections[index], run.fold_mirror).to_string();
  j["class_size"] = index < run.class_sizes.size() ? run.class_sizes[index] : 1;
  return j;
}

nlohmann::ordered_json class_record(const KnotClass& k) {
  nlohmann::ordered_json j;
  j["type"] = "class";
  j["c3"] = k.c3;
  j["name"] = k.name ? nlohmann::ordered_json(*k.name) : nlohmann::ordered_json(nullptr);
  j["jones"] = k.jones.to_string();
  j["witness_jones"] = k.witness_jones.to_string();
  j["alexander"] = k.alexander.to_string();
  j["homfly"] = k.homfly ? nlohmann::ordered_json(k.homfly->to_string()) : nlohmann::ordered_json(nullptr);
  j["kauffman"] = k.kauffman ? nlohmann::ordered_json(k.kauffman->to_string('a')) : nlohmann::ordered_json(nullptr);
  j["breadth"] = breadth(k.alexander);
  j["monic"] = is_monic(k.alexander);
  j["witness"] = serialize_spd(k.witness);
  j["witness_key"] = {k.witness_key.n, k.witness_key.projection, k.witness_key.heights};
  j["diagram_count"] = k.diagram_count;
  j["ambiguous"] = k.ambiguous;
  j["composite"] = k.composite;
  nlohmann::ordered_json cands = nlohmann::ordered_json::array();
  for (const auto& h : k.homfly_candidates) cands.push_back(h.to_string());
  j["homfly_candidates"] = cands;
  return j;
}

KnotClass class_from_record(const nlohmann::ordered_json& j) {
  try {
    KnotClass k;
    k.c3 = j.at("c3").get<int>();
    if (!j.at("name").is_null()) k.name = j.at("name").get<std::string>();
    k.jones = HalfLaurent::parse(j.at("jones").get<std::string>());
    k.witness_jones = HalfLaurent::parse(j.at("witness_jones").get<std::string>());
    k.alexander = Laurent::parse(j.at("alexander").get<std::string>());
    if (!j.at("homfly").is_null()) k.homfly = Laurent2::parse(j.at("homfly").get<std::string>());
    if (!j.at("kauffman").is_null()) k.kauffman = Laurent2::parse(j.at("kauffman").get<std::string>(), 'a');
    k.witness = parse_spd_diagram(j.at("witness").get<std::string>());
    const auto& wk = j.at("witness_key");
    k.witness_key = {wk.at(0).get<int>(), wk.at(1).get<int>(), wk.at(2).get<std::uint64_t>()};
    k.diagram_count = j.at("diagram_count").get<std::int64_t>();
    k.ambiguous = j.at("ambiguous").get<bool>();
    k.composite = j.at("composite").get<bool>();
    for (const auto& h : j.at("homfly_candidates")) k.homfly_candidates.push_back(Laurent2::parse(h.get<std::string>()));
    return k;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad class record: ") + e.what());
  }
}

std::string run_to_jsonl(const EnumerationRun& run) {
  nlohmann::ordered_json head;
  head["type"] = "run";
  head["n"] = run.n;
  head["fold_mirror"] = run.fold_mirror;
  head["complete"] = run.complete;
  head["rooted_maps"] = run.rooted_maps;
  head["canonical_maps"] = run.canonical_maps;
  head["knot_projections"] = run.knot_projections;
  head["projections"] = run.projections.size();
  std::string out = head.dump() + "\n";
  for (std::size_t i = 0; i < run.projections.size(); ++i) out += projection_record(run, i).dump() + "\n";
  return out;
}

EnumerationRun run_from_jsonl(const std::string& text) {
  EnumerationRun run;
  std::istringstream in(text);
  std::string line;
  bool have_head = false;
  std::size_t expected = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(line);
      const std::string type = j.at("type").get<std::string>();
      if (type == "run") {
        run.n = j.at("n").get<int>();
        run.fold_mirror = j.at("fold_mirror").get<bool>();
        run.complete = j.at("complete").get<bool>();
        run.rooted_maps = j.at("rooted_maps").get<std::int64_t>();
        run.canonical_maps = j.at("canonical_maps").get<std::int64_t>();
        run.knot_projections = j.at("knot_projections").get<std::int64_t>();
        expected = j.at("projections").get<std::size_t>();
        have_head = true;
      } else if (type == "projection") {
        if (!have_head) throw ParseError("projection record before run header");
        const auto parsed = parse_spd(j.at("spd").get<std::string>());
        const auto* p = std::get_if<TripleProjection>(&parsed);
        if (!p) throw ParseError("projection record carries heights");
        // Stored codes are canonical: restore the canonical labelling.
        run.projections.push_back(canonical_form(*p, run.fold_mirror));
        run.class_sizes.push_back(j.at("class_size").get<int>());
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad run record: ") + e.what());
    }
  }
  if (!have_head) throw ParseError("run artifact has no header");
  if (run.projections.size() != expected) throw ParseError("run artifact is truncated");
  return run;
}

}  // namespace tcknot
