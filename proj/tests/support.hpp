#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "tcknot/diagram.hpp"
#include "tcknot/enumerate.hpp"
#include "tcknot/invariants.hpp"
#include "tcknot/spd.hpp"

#ifndef TCKNOT_DATA_DIR
#define TCKNOT_DATA_DIR "data"
#endif

namespace testing {

using namespace tcknot;

// The two diagrams on the 2-crossing projection.
inline const char* const kT21 = "sPD[X[1,1,2,3,4,5|TBM],X[2,5,4,3,6,6|MTB]]";
inline const char* const kT22 = "sPD[X[1,1,2,3,4,5|TBM],X[2,5,4,3,6,6|MBT]]";
// 5_2 and 6_1 on one of the 3-crossing projections.
inline const char* const kT31 = "sPD[X[1,1,2,3,4,5|TBM],X[2,6,7,3,8,8|MTB],X[4,7,6,9,9,5|TBM]]";
inline const char* const kT32 = "sPD[X[1,1,2,3,4,5|TBM],X[2,6,7,3,8,8|MBT],X[4,7,6,9,9,5|TBM]]";
// One crossing, three loops.
inline const char* const kUnknot1 = "sPD[X[1,1,2,2,3,3|TMB]]";

inline const std::string kTrefoilPd = "[[1,5,2,4],[3,1,4,6],[5,3,6,2]]";
inline const std::string kFigureEightPd = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]";

inline HalfLaurent hl(const char* s) { return HalfLaurent::parse(s); }
inline Laurent lp(const char* s) { return Laurent::parse(s); }

inline const EnumerationRun& run(int n) {
  static std::map<int, EnumerationRun> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_projections(n)).first;
  return it->second;
}

inline const std::vector<TripleProjection>& maps(int n) {
  static std::map<int, std::vector<TripleProjection>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_maps(n, {})).first;
  return it->second;
}

// Knot projections (one component) among all canonical maps.
inline std::vector<TripleProjection> knot_maps(int n) {
  std::vector<TripleProjection> out;
  for (const auto& p : maps(n))
    if (component_count(p) == 1) out.push_back(p);
  return out;
}

inline std::vector<TripleDiagram> all_diagrams(int n) {
  std::vector<TripleDiagram> out;
  for (const auto& p : knot_maps(n))
    for (auto& d : enumerate_diagrams(p)) out.push_back(std::move(d));
  return out;
}

inline std::vector<TripleDiagram> random_diagrams(int n, int count, unsigned seed) {
  const auto ps = knot_maps(n);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick_h(0, 5);
  std::uniform_int_distribution<std::size_t> pick_p(0, ps.size() - 1);
  std::vector<TripleDiagram> out;
  for (int i = 0; i < count; ++i) {
    const TripleProjection& p = ps[pick_p(rng)];
    std::vector<HeightWord> h;
    for (int c = 0; c < n; ++c) h.push_back(HeightWord::all()[static_cast<std::size_t>(pick_h(rng))]);
    out.emplace_back(p, h);
  }
  return out;
}

inline HalfLaurent oracle_jones(const TripleDiagram& d) {
  const DoubleDiagram dd = convert_to_double(d);
  return bracket_jones(dd, traversal_orientation(dd));
}

inline Laurent alexander_of(const TripleDiagram& d) {
  const DoubleDiagram dd = convert_to_double(d);
  return alexander(dd, traversal_orientation(dd));
}

// Tries every crossing bijection, rotation and (when allowed) reflection.
inline bool brute_isomorphic(const TripleProjection& p, const TripleProjection& q, bool allow_reflection) {
  const int n = p.crossing_count();
  if (q.crossing_count() != n) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> rot(static_cast<std::size_t>(n), 0);
  do {
    for (int reflect = 0; reflect <= (allow_reflection ? 1 : 0); ++reflect) {
      std::fill(rot.begin(), rot.end(), 0);
      for (;;) {
        const auto f = [&](Dart d) {
          const auto c = static_cast<std::size_t>(TripleProjection::crossing_of(d));
          const int s = TripleProjection::slot_of(d);
          return TripleProjection::dart(perm[c], reflect ? rot[c] - s : s + rot[c]);
        };
        bool ok = true;
        for (Dart d = 0; d < p.dart_count() && ok; ++d) ok = q.twin(f(d)) == f(p.twin(d));
        if (ok) return true;
        int k = 0;
        while (k < n && ++rot[static_cast<std::size_t>(k)] == 6) rot[static_cast<std::size_t>(k++)] = 0;
        if (k == n) break;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace testing
