#include "tcknot/spd.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "tcknot/errors.hpp"

namespace tcknot {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string text) : s_(std::move(text)) {}

  bool done() const { return i_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[i_]; }
  void expect(std::string_view tok) {
    if (s_.compare(i_, tok.size(), tok) != 0)
      throw ParseError("expected '" + std::string(tok) + "' at offset " + std::to_string(i_));
    i_ += tok.size();
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  long long number() {
    const std::size_t start = i_;
    while (!done() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) throw ParseError("expected edge label at offset " + std::to_string(start));
    if (i_ - start > 9) throw ParseError("edge label too large at offset " + std::to_string(start));
    return std::stoll(s_.substr(start, i_ - start));
  }
  char letter() {
    if (done()) throw ParseError("unexpected end of input");
    return s_[i_++];
  }

 private:
  std::string s_;
  std::size_t i_ = 0;
};

std::string strip_whitespace(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::string heights_text(const HeightWord& h) {
  const auto l = h.letters();
  return std::string(l.begin(), l.end());
}

// Labels edges 1..E by first appearance in slot order.
std::vector<int> edge_labels(const TripleProjection& p) {
  std::vector<int> label(static_cast<std::size_t>(p.dart_count()), 0);
  int next = 1;
  for (Dart d = 0; d < p.dart_count(); ++d) {
    if (label[static_cast<std::size_t>(d)] != 0) continue;
    label[static_cast<std::size_t>(d)] = next;
    label[static_cast<std::size_t>(p.twin(d))] = next;
    ++next;
  }
  return label;
}

std::string serialize(const TripleProjection& p, const std::vector<HeightWord>* heights) {
  const auto label = edge_labels(p);
  std::string out = "sPD[";
  for (int c = 0; c < p.crossing_count(); ++c) {
    if (c) out += ',';
    out += "X[";
    for (int s = 0; s < kTripleValence; ++s) {
      if (s) out += ',';
      out += std::to_string(label[static_cast<std::size_t>(TripleProjection::dart(c, s))]);
    }
    if (heights) out += '|' + heights_text((*heights)[static_cast<std::size_t>(c)]);
    out += ']';
  }
  out += ']';
  return out;
}

nlohmann::ordered_json projection_json(const TripleProjection& p, const std::vector<HeightWord>* heights) {
  const auto label = edge_labels(p);
  nlohmann::ordered_json j;
  j["crossings"] = nlohmann::ordered_json::array();
  for (int c = 0; c < p.crossing_count(); ++c) {
    nlohmann::ordered_json x;
    x["id"] = c;
    auto slots = nlohmann::ordered_json::array();
    for (int s = 0; s < kTripleValence; ++s) slots.push_back(label[static_cast<std::size_t>(TripleProjection::dart(c, s))]);
    x["slots"] = slots;
    if (heights) x["heights"] = heights_text((*heights)[static_cast<std::size_t>(c)]);
    j["crossings"].push_back(x);
  }
  j["pairing"] = p.twins();
  return j;
}

}  // namespace

ParsedSpd parse_spd(std::string_view text) {
  Cursor cur(strip_whitespace(text));
  cur.expect("sPD[");
  std::vector<std::array<long long, 6>> labels;
  std::vector<std::optional<HeightWord>> words;
  if (cur.peek() != ']') {
    do {
      cur.expect("X[");
      std::array<long long, 6> row{};
      for (int s = 0; s < kTripleValence; ++s) {
        if (s) cur.expect(",");
        row[static_cast<std::size_t>(s)] = cur.number();
        if (row[static_cast<std::size_t>(s)] < 1) throw ParseError("edge labels must be >= 1");
      }
      std::optional<HeightWord> word;
      if (cur.accept('|')) {
        HeightWord h;
        for (int i = 0; i < 3; ++i) {
          const char ch = cur.letter();
          const auto level = level_from_char(ch);
          if (!level) throw ParseError(std::string("bad height letter '") + ch + "'");
          h.strand[static_cast<std::size_t>(i)] = *level;
        }
        if (!h.is_permutation()) throw ValidationError("heights", "height word is not a permutation of {T,M,B}");
        word = h;
      }
      cur.expect("]");
      labels.push_back(row);
      words.push_back(word);
    } while (cur.accept(','));
  }
  cur.expect("]");
  if (!cur.done()) throw ParseError("trailing characters after sPD code");
  if (labels.empty()) throw ValidationError("empty", "sPD code has no crossings");

  const bool any_heights = std::any_of(words.begin(), words.end(), [](const auto& w) { return w.has_value(); });
  const bool all_heights = std::all_of(words.begin(), words.end(), [](const auto& w) { return w.has_value(); });
  if (any_heights && !all_heights) throw ValidationError("heights", "height words must be given at every crossing or none");

  std::map<long long, std::vector<Dart>> occurrences;
  for (std::size_t c = 0; c < labels.size(); ++c)
    for (int s = 0; s < kTripleValence; ++s)
      occurrences[labels[c][static_cast<std::size_t>(s)]].push_back(TripleProjection::dart(static_cast<int>(c), s));
  std::vector<Dart> twin(labels.size() * kTripleValence, -1);
  for (const auto& [label, darts] : occurrences) {
    if (darts.size() != 2)
      throw ValidationError("pairing", "edge label " + std::to_string(label) + " appears " +
                                           std::to_string(darts.size()) + " times, expected 2");
    twin[static_cast<std::size_t>(darts[0])] = darts[1];
    twin[static_cast<std::size_t>(darts[1])] = darts[0];
  }
  TripleProjection p(std::move(twin));
  if (!all_heights) {
    validate_projection(p);
    return p;
  }
  std::vector<HeightWord> heights;
  for (const auto& w : words) heights.push_back(*w);
  return TripleDiagram(std::move(p), std::move(heights));
}

TripleDiagram parse_spd_diagram(std::string_view text) {
  auto parsed = parse_spd(text);
  if (auto* d = std::get_if<TripleDiagram>(&parsed)) return std::move(*d);
  throw ValidationError("heights", "sPD code has no height words");
}

std::string serialize_spd(const TripleProjection& p) { return serialize(p, nullptr); }
std::string serialize_spd(const TripleDiagram& d) { return serialize(d.projection(), &d.heights()); }

nlohmann::ordered_json to_json(const TripleProjection& p) { return projection_json(p, nullptr); }
nlohmann::ordered_json to_json(const TripleDiagram& d) { return projection_json(d.projection(), &d.heights()); }

DoubleDiagram parse_pd(std::string_view text) {
  std::string s = strip_whitespace(text);
  if (s.rfind("PD", 0) == 0) s = s.substr(2);
  // Brackets of any kind, X[...] groups, commas: keep the numbers per group.
  std::vector<std::vector<long long>> groups;
  std::vector<long long>* current = nullptr;
  int depth = 0;
  for (std::size_t i = 0; i < s.size();) {
    const char c = s[i];
    if (c == '[' || c == '(') {
      if (++depth > 2) throw ParseError("PD code nested too deeply");
      if (depth == 2) current = &groups.emplace_back();
      ++i;
    } else if (c == ']' || c == ')') {
      if (--depth < 0) throw ParseError("unbalanced brackets in PD code");
      if (depth < 2) current = nullptr;
      ++i;
    } else if (c == ',' || c == 'X') {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (!current) throw ParseError("label outside a crossing in PD code");
      if (j - i > 9) throw ParseError("PD label too large");
      current->push_back(std::stoll(s.substr(i, j - i)));
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in PD code");
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets in PD code");
  std::map<long long, std::vector<Dart>> where;
  for (std::size_t c = 0; c < groups.size(); ++c) {
    if (groups[c].size() != 4) throw ParseError("PD crossing " + std::to_string(c) + " does not have 4 labels");
    for (int k = 0; k < 4; ++k)
      where[groups[c][static_cast<std::size_t>(k)]].push_back(DoubleDiagram::dart(static_cast<int>(c), k));
  }
  std::vector<Dart> twin(groups.size() * kDoubleValence);
  for (const auto& [label, darts] : where) {
    if (darts.size() != 2) throw ValidationError("pairing", "PD label " + std::to_string(label) + " does not appear exactly twice");
    twin[static_cast<std::size_t>(darts[0])] = darts[1];
    twin[static_cast<std::size_t>(darts[1])] = darts[0];
  }
  return DoubleDiagram(std::move(twin), std::vector<std::uint8_t>(groups.size(), 0));
}

}  // namespace tcknot
