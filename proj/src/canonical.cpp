#include "tcknot/canonical.hpp"

#include <algorithm>
#include <optional>

namespace tcknot {

namespace {

// Breadth-first reader; darts are visited in new-label order and crossings
// are numbered on first contact, entered at their new slot 0.
class RootedReader {
 public:
  RootedReader(const TripleProjection& p, Dart root, bool reflect)
      : p_(p), reflect_(reflect),
        new_index_(static_cast<std::size_t>(p.crossing_count()), -1),
        offset_(static_cast<std::size_t>(p.crossing_count()), 0) {
    discover(root);
  }

  int dart_count() const { return p_.dart_count(); }

  // Old dart carrying new label k; all crossings up to k/6 are discovered.
  Dart old_dart(int k) const {
    const int c = order_[static_cast<std::size_t>(k / kTripleValence)];
    const int off = offset_[static_cast<std::size_t>(c)];
    const int s = k % kTripleValence;
    return TripleProjection::dart(c, reflect_ ? off - s : off + s);
  }

  // New label of the twin of the dart with new label k.
  std::uint16_t next(int k) {
    const Dart t = p_.twin(old_dart(k));
    if (new_index_[static_cast<std::size_t>(TripleProjection::crossing_of(t))] < 0) discover(t);
    return static_cast<std::uint16_t>(new_label(t));
  }

  int new_label(Dart d) const {
    const int c = TripleProjection::crossing_of(d);
    const int off = offset_[static_cast<std::size_t>(c)];
    const int s = TripleProjection::slot_of(d);
    const int ns = ((reflect_ ? off - s : s - off) % kTripleValence + kTripleValence) % kTripleValence;
    return new_index_[static_cast<std::size_t>(c)] * kTripleValence + ns;
  }

  // Height word of new crossing `i` expressed in new slots.
  HeightWord relabelled_heights(const TripleDiagram& d, int i) const {
    const int c = order_[static_cast<std::size_t>(i)];
    const HeightWord& h = d.height(c);
    HeightWord out;
    for (int s = 0; s < 3; ++s) {
      const int ns = new_label(TripleProjection::dart(c, s)) % kTripleValence;
      out.strand[static_cast<std::size_t>(ns % 3)] = h.strand[static_cast<std::size_t>(s)];
    }
    return out;
  }

 private:
  void discover(Dart d) {
    const int c = TripleProjection::crossing_of(d);
    new_index_[static_cast<std::size_t>(c)] = static_cast<int>(order_.size());
    offset_[static_cast<std::size_t>(c)] = TripleProjection::slot_of(d);
    order_.push_back(c);
  }

  const TripleProjection& p_;
  bool reflect_;
  std::vector<int> new_index_;
  std::vector<int> offset_;
  std::vector<int> order_;
};

struct Best {
  Dart root = 0;
  bool reflect = false;
  std::vector<std::uint16_t> code;
};

// Full code for (root, reflect) unless it exceeds `bound`, in which case
// nullopt. Heights are appended when `d` is given.
std::optional<std::vector<std::uint16_t>> read_bounded(const TripleProjection& p, const TripleDiagram* d, Dart root,
                                                       bool reflect, const std::vector<std::uint16_t>* bound) {
  RootedReader reader(p, root, reflect);
  std::vector<std::uint16_t> code;
  const int darts = p.dart_count();
  const int total = darts + (d ? p.crossing_count() : 0);
  code.reserve(static_cast<std::size_t>(total));
  bool tied = bound != nullptr;
  const auto push = [&](std::uint16_t v) {
    const std::size_t k = code.size();
    code.push_back(v);
    if (tied) {
      if (v > (*bound)[k]) return false;
      if (v < (*bound)[k]) tied = false;
    }
    return true;
  };
  for (int k = 0; k < darts; ++k)
    if (!push(reader.next(k))) return std::nullopt;
  if (d)
    for (int i = 0; i < p.crossing_count(); ++i)
      if (!push(static_cast<std::uint16_t>(reader.relabelled_heights(*d, i).index()))) return std::nullopt;
  return code;
}

Best search(const TripleProjection& p, const TripleDiagram* d, bool fold_mirror) {
  Best best;
  bool have = false;
  for (int r = 0; r < (fold_mirror ? 2 : 1); ++r) {
    for (Dart root = 0; root < p.dart_count(); ++root) {
      auto code = read_bounded(p, d, root, r == 1, have ? &best.code : nullptr);
      if (!code) continue;
      if (!have || *code < best.code) {
        best = {root, r == 1, std::move(*code)};
        have = true;
      }
    }
  }
  return best;
}

}  // namespace

std::string CanonicalCode::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(code[i]);
  }
  return out;
}

std::vector<std::uint16_t> rooted_code(const TripleProjection& p, Dart root, bool reflect) {
  return *read_bounded(p, nullptr, root, reflect, nullptr);
}

CanonicalCode canonical_code(const TripleProjection& p, bool fold_mirror) {
  if (p.empty()) return {{}, fold_mirror};
  return {search(p, nullptr, fold_mirror).code, fold_mirror};
}

CanonicalCode canonical_code(const TripleDiagram& d, bool fold_mirror) {
  if (d.is_unknot_stub()) return {{}, fold_mirror};
  return {search(d.projection(), &d, fold_mirror).code, fold_mirror};
}

TripleProjection canonical_form(const TripleProjection& p, bool fold_mirror) {
  if (p.empty()) return p;
  const auto code = search(p, nullptr, fold_mirror).code;
  return TripleProjection(std::vector<Dart>(code.begin(), code.end()));
}

TripleDiagram canonical_form(const TripleDiagram& d, bool fold_mirror) {
  if (d.is_unknot_stub()) return d;
  const TripleProjection& p = d.projection();
  const Best best = search(p, &d, fold_mirror);
  const auto darts = static_cast<std::size_t>(p.dart_count());
  std::vector<Dart> twin(best.code.begin(), best.code.begin() + static_cast<std::ptrdiff_t>(darts));
  std::vector<HeightWord> heights;
  for (std::size_t i = darts; i < best.code.size(); ++i) heights.push_back(HeightWord::all()[best.code[i]]);
  return TripleDiagram(TripleProjection(std::move(twin)), std::move(heights));
}

bool is_canonically_rooted(const TripleProjection& p, bool fold_mirror) {
  std::vector<std::uint16_t> identity(p.twins().begin(), p.twins().end());
  for (int r = 0; r < (fold_mirror ? 2 : 1); ++r)
    for (Dart root = 0; root < p.dart_count(); ++root) {
      if (root == 0 && r == 0) continue;
      auto code = read_bounded(p, nullptr, root, r == 1, &identity);
      if (code && *code < identity) return false;
    }
  return true;
}

}  // namespace tcknot
