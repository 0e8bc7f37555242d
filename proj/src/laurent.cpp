#include "tcknot/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "tcknot/errors.hpp"

namespace tcknot {

Laurent::Laurent(Coeff constant) {
  if (constant != 0) terms_[0] = constant;
}

Laurent Laurent::monomial(int exponent, Coeff coeff) {
  Laurent p;
  p.add_term(exponent, coeff);
  return p;
}

Coeff Laurent::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int Laurent::min_exponent() const {
  if (terms_.empty()) throw Error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int Laurent::max_exponent() const {
  if (terms_.empty()) throw Error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

void Laurent::add_term(int exponent, Coeff coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& rhs) {
  for (auto [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& rhs) {
  for (auto [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (auto [ea, ca] : a.terms_)
    for (auto [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Laurent& Laurent::operator*=(const Laurent& rhs) {
  *this = *this * rhs;
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (auto [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

std::strong_ordering Laurent::operator<=>(const Laurent& rhs) const {
  return std::lexicographical_compare_three_way(terms_.begin(), terms_.end(),
                                                rhs.terms_.begin(), rhs.terms_.end());
}

Laurent Laurent::pow(unsigned k) const {
  Laurent result = 1;
  Laurent base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

Laurent Laurent::scale_exponents(int factor) const {
  Laurent r;
  for (auto [e, c] : terms_) r.add_term(e * factor, c);
  return r;
}

Laurent Laurent::shift(int by) const {
  Laurent r;
  for (auto [e, c] : terms_) r.terms_[e + by] = c;
  return r;
}

Coeff Laurent::eval_at_one() const {
  Coeff s = 0;
  for (auto [e, c] : terms_) s += c;
  return s;
}

Laurent Laurent::exact_div(const Laurent& divisor) const {
  if (divisor.is_zero()) throw Error("division by zero polynomial");
  Laurent rem = *this;
  Laurent quot;
  const int dlow = divisor.min_exponent();
  const int dhigh = divisor.max_exponent();
  const Coeff lead = divisor.coeff(dhigh);
  while (!rem.is_zero()) {
    const int rhigh = rem.max_exponent();
    if (rhigh - dhigh < rem.min_exponent() - dlow) break;
    const Coeff c = rem.coeff(rhigh);
    if (c % lead != 0) break;
    const Laurent q = monomial(rhigh - dhigh, c / lead);
    quot += q;
    rem -= q * divisor;
  }
  if (!rem.is_zero()) throw Error("inexact polynomial division");
  return quot;
}

namespace {

void append_term(std::ostringstream& out, bool first, Coeff c, const std::string& mono) {
  if (!first) out << " + ";
  out << c;
  if (!mono.empty()) out << '*' << mono;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

// Splits "a + -b + c" style sums without breaking on the minus of an exponent.
// Accepts both " + " separated signed terms and plain "a-b+c" sums.
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    const bool after_caret = i > 0 && s[i - 1] == '^';
    if ((ch == '+' || ch == '-') && !after_caret && !cur.empty() && cur != "+" && cur != "-") {
      terms.push_back(cur);
      cur.clear();
      if (ch == '-') cur = "-";
      continue;
    }
    if (ch == '+' && cur.empty()) continue;
    cur += ch;
  }
  if (!cur.empty()) terms.push_back(cur);
  return terms;
}

Coeff parse_int(const std::string& s, std::string_view ctx) {
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad coefficient '" + s + "' in '" + std::string(ctx) + "'");
  }
  if (pos != s.size()) throw ParseError("bad coefficient '" + s + "' in '" + std::string(ctx) + "'");
  return v;
}

// Parses exponent text "e" or "e/2"; returns the doubled exponent when `half`.
int parse_exponent(const std::string& s, bool half, std::string_view ctx) {
  if (s.empty() || s == "+" || s == "-" || s.front() == '/')
    throw ParseError("missing exponent in '" + std::string(ctx) + "'");
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    const auto e = static_cast<int>(parse_int(s, ctx));
    return half ? 2 * e : e;
  }
  if (!half || s.substr(slash + 1) != "2")
    throw ParseError("fractional exponent not allowed in '" + std::string(ctx) + "'");
  return static_cast<int>(parse_int(s.substr(0, slash), ctx));
}

// Parses a univariate sum; exponents doubled when `half`.
Laurent parse_univariate(std::string_view text, std::string_view var, bool half) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty polynomial");
  Laurent p;
  if (s == "0") return p;
  for (const std::string& term : split_terms(s)) {
    const auto vpos = term.find(var);
    if (vpos == std::string::npos) {
      p.add_term(0, parse_int(term, text));
      continue;
    }
    std::string coef = term.substr(0, vpos);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    const Coeff c = parse_int(coef, text);
    std::string rest = term.substr(vpos + var.size());
    int e = half ? 2 : 1;
    if (!rest.empty()) {
      if (rest[0] != '^') throw ParseError("bad term '" + term + "'");
      rest = rest.substr(1);
      if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
      e = parse_exponent(rest, half, text);
    }
    p.add_term(e, c);
  }
  return p;
}

}  // namespace

std::string Laurent::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto [e, c] : terms_) {
    append_term(out, first, c, e == 0 ? "" : std::string(var) + "^" + std::to_string(e));
    first = false;
  }
  return out.str();
}

Laurent Laurent::parse(std::string_view text, std::string_view var) {
  return parse_univariate(text, var, false);
}

HalfLaurent HalfLaurent::mirror_folded() const {
  HalfLaurent inv = invert_variable();
  return std::min(*this, inv);
}

std::string HalfLaurent::to_string() const {
  if (doubled_.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto [e2, c] : doubled_.terms()) {
    std::string mono;
    if (e2 != 0) mono = (e2 % 2 == 0) ? "t^" + std::to_string(e2 / 2) : "t^" + std::to_string(e2) + "/2";
    append_term(out, first, c, mono);
    first = false;
  }
  return out.str();
}

HalfLaurent HalfLaurent::parse(std::string_view text) {
  return from_doubled(parse_univariate(text, "t", true));
}

Laurent2::Laurent2(Coeff constant) {
  if (constant != 0) terms_[{0, 0}] = constant;
}

Laurent2 Laurent2::monomial(int v_exp, int z_exp, Coeff c) {
  Laurent2 p;
  p.add_term(v_exp, z_exp, c);
  return p;
}

void Laurent2::add_term(int v_exp, int z_exp, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({v_exp, z_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent2& Laurent2::operator+=(const Laurent2& r) {
  for (auto [k, c] : r.terms_) add_term(k.first, k.second, c);
  return *this;
}

Laurent2& Laurent2::operator-=(const Laurent2& r) {
  for (auto [k, c] : r.terms_) add_term(k.first, k.second, -c);
  return *this;
}

Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
  Laurent2 r;
  for (auto [ka, ca] : a.terms_)
    for (auto [kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

std::strong_ordering Laurent2::operator<=>(const Laurent2& r) const {
  return std::lexicographical_compare_three_way(terms_.begin(), terms_.end(), r.terms_.begin(),
                                                r.terms_.end());
}

Laurent2 Laurent2::pow(unsigned k) const {
  Laurent2 result = 1;
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

Laurent2 Laurent2::mirror() const {
  Laurent2 r;
  for (auto [k, c] : terms_) r.add_term(-k.first, k.second, c);
  return r;
}

Laurent2 Laurent2::mirror_folded() const { return std::min(*this, mirror()); }

HalfLaurent Laurent2::to_jones() const {
  // z = t^(1/2) - t^(-1/2), v = t; in doubled exponents v -> 2, z -> {1, -1}.
  const HalfLaurent z = HalfLaurent::monomial(1) - HalfLaurent::monomial(-1);
  HalfLaurent out;
  for (auto [k, c] : terms_) {
    // Negative z powers only occur for split links.
    if (k.second < 0) throw Error("HOMFLY with negative z power has no Laurent Jones image");
    out += HalfLaurent::monomial(2 * k.first, c) * z.pow(static_cast<unsigned>(k.second));
  }
  return out;
}

std::string Laurent2::to_string(char first_var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto [k, c] : terms_) {
    std::string mono;
    if (k.first != 0) mono = std::string(1, first_var) + "^" + std::to_string(k.first);
    if (k.second != 0) mono += (mono.empty() ? "" : "*") + std::string("z^") + std::to_string(k.second);
    append_term(out, first, c, mono);
    first = false;
  }
  return out.str();
}

Laurent2 Laurent2::parse(std::string_view text, char first_var) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty polynomial");
  Laurent2 p;
  if (s == "0") return p;
  for (const std::string& term : split_terms(s)) {
    std::vector<std::string> factors;
    std::string cur;
    for (char ch : term) {
      if (ch == '*') {
        factors.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    factors.push_back(cur);
    Coeff c = 1;
    int ve = 0, ze = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      std::string f = factors[i];
      bool negate = false;
      if (i == 0 && !f.empty() && (f[0] == '-' || f[0] == '+') && f.size() > 1 && (f[1] == first_var || f[1] == 'z')) {
        negate = f[0] == '-';
        f = f.substr(1);
      }
      if (!f.empty() && (f[0] == first_var || f[0] == 'z')) {
        int e = 1;
        if (f.size() > 1) {
          if (f[1] != '^') throw ParseError("bad factor '" + f + "' in '" + std::string(text) + "'");
          std::string ex = f.substr(2);
          if (ex.size() >= 2 && ex.front() == '(' && ex.back() == ')') ex = ex.substr(1, ex.size() - 2);
          e = static_cast<int>(parse_int(ex, text));
        }
        (f[0] == first_var ? ve : ze) += e;
        if (negate) c = -c;
      } else if (i == 0) {
        c = parse_int(f, text);
      } else {
        throw ParseError("bad factor '" + f + "' in '" + std::string(text) + "'");
      }
    }
    p.add_term(ve, ze, c);
  }
  return p;
}

int breadth(const Laurent& p) {
  if (p.is_zero()) throw Error("breadth of zero polynomial");
  return p.max_exponent() - p.min_exponent();
}

bool is_monic(const Laurent& p) {
  if (p.is_zero()) throw Error("is_monic of zero polynomial");
  const Coeff lead = p.coeff(p.max_exponent());
  return lead == 1 || lead == -1;
}

}  // namespace tcknot
