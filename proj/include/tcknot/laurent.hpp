#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace tcknot {

using Coeff = std::int64_t;

/// Sparse Laurent polynomial in one variable with integer exponents.
/// Zero coefficients are never stored.
class Laurent {
 public:
  Laurent() = default;
  Laurent(Coeff constant);  // NOLINT: implicit on purpose, lets `Laurent p = 1;`

  static Laurent monomial(int exponent, Coeff coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Coeff>& terms() const { return terms_; }
  Coeff coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  Laurent& operator+=(const Laurent& rhs);
  Laurent& operator-=(const Laurent& rhs);
  Laurent& operator*=(const Laurent& rhs);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;
  bool operator==(const Laurent&) const = default;
  std::strong_ordering operator<=>(const Laurent& rhs) const;

  void add_term(int exponent, Coeff coeff);
  Laurent pow(unsigned k) const;
  /// x -> x^factor (factor may be negative).
  Laurent scale_exponents(int factor) const;
  Laurent shift(int by) const;
  /// Exact value at x = 1.
  Coeff eval_at_one() const;
  /// Division by a divisor known to divide exactly; throws otherwise.
  Laurent exact_div(const Laurent& divisor) const;

  /// Terms ascending by exponent, `c*x^e` with a bare `c` for e = 0.
  std::string to_string(std::string_view var = "t") const;
  static Laurent parse(std::string_view text, std::string_view var = "t");

 private:
  std::map<int, Coeff> terms_;
};

/// Laurent polynomial in t^(1/2); exponents are stored doubled.
class HalfLaurent {
 public:
  HalfLaurent() = default;
  HalfLaurent(Coeff constant) : doubled_(constant) {}  // NOLINT
  static HalfLaurent from_doubled(Laurent p) {
    HalfLaurent h;
    h.doubled_ = std::move(p);
    return h;
  }
  /// c * t^(half_exponent / 2)
  static HalfLaurent monomial(int half_exponent, Coeff c = 1) {
    return from_doubled(Laurent::monomial(half_exponent, c));
  }

  const Laurent& doubled() const { return doubled_; }
  bool is_zero() const { return doubled_.is_zero(); }

  HalfLaurent& operator+=(const HalfLaurent& r) { doubled_ += r.doubled_; return *this; }
  HalfLaurent& operator-=(const HalfLaurent& r) { doubled_ -= r.doubled_; return *this; }
  HalfLaurent& operator*=(const HalfLaurent& r) { doubled_ *= r.doubled_; return *this; }
  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(HalfLaurent a, const HalfLaurent& b) { return a *= b; }
  HalfLaurent operator-() const { return from_doubled(-doubled_); }
  bool operator==(const HalfLaurent&) const = default;
  std::strong_ordering operator<=>(const HalfLaurent& r) const { return doubled_ <=> r.doubled_; }

  HalfLaurent pow(unsigned k) const { return from_doubled(doubled_.pow(k)); }
  /// t -> t^-1
  HalfLaurent invert_variable() const { return from_doubled(doubled_.scale_exponents(-1)); }
  /// The smaller of p(t) and p(1/t); invariant under mirroring.
  HalfLaurent mirror_folded() const;

  /// `t^3/2`, `t^-1/2` for half-integer exponents.
  std::string to_string() const;
  static HalfLaurent parse(std::string_view text);

 private:
  Laurent doubled_;
};

/// Two-variable Laurent polynomial in (v, z), used for HOMFLY; Kauffman
/// polynomials reuse it with a in place of v.
class Laurent2 {
 public:
  using Key = std::pair<int, int>;
  Laurent2() = default;
  Laurent2(Coeff constant);  // NOLINT
  static Laurent2 monomial(int v_exp, int z_exp, Coeff c = 1);

  const std::map<Key, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Laurent2& operator+=(const Laurent2& r);
  Laurent2& operator-=(const Laurent2& r);
  friend Laurent2 operator+(Laurent2 a, const Laurent2& b) { return a += b; }
  friend Laurent2 operator-(Laurent2 a, const Laurent2& b) { return a -= b; }
  friend Laurent2 operator*(const Laurent2& a, const Laurent2& b);
  bool operator==(const Laurent2&) const = default;
  std::strong_ordering operator<=>(const Laurent2& r) const;

  void add_term(int v_exp, int z_exp, Coeff c);
  Laurent2 pow(unsigned k) const;
  /// v -> v^-1 (the mirror image under the skein convention used here).
  Laurent2 mirror() const;
  Laurent2 mirror_folded() const;

  /// Substitutes v = t, z = t^(1/2) - t^(-1/2).
  HalfLaurent to_jones() const;

  std::string to_string(char first_var = 'v') const;
  /// Inverse of to_string (terms `c*v^a*z^b`, factors optional).
  static Laurent2 parse(std::string_view text, char first_var = 'v');

 private:
  std::map<Key, Coeff> terms_;
};

/// max exponent - min exponent; throws on the zero polynomial.
int breadth(const Laurent& p);
/// Leading (highest order) coefficient is +-1; throws on the zero polynomial.
bool is_monic(const Laurent& p);

}  // namespace tcknot
