#pragma once

#include <cstdint>

// Arithmetic modulo the Mersenne prime 2^61 - 1, used for fingerprints.
namespace tcknot::detail {

inline constexpr std::uint64_t kModPrime = (1ULL << 61) - 1;

inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(r & kModPrime) + static_cast<std::uint64_t>(r >> 61);
  if (lo >= kModPrime) lo -= kModPrime;
  return lo;
}

inline std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mod_mul(r, a);
    a = mod_mul(a, a);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t to_mod(std::int64_t v) {
  const std::int64_t m = v % static_cast<std::int64_t>(kModPrime);
  return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(kModPrime) : m);
}

struct ModValue {
  std::uint64_t v = 0;
  friend ModValue operator+(ModValue x, ModValue y) {
    const std::uint64_t s = x.v + y.v;
    return {s >= kModPrime ? s - kModPrime : s};
  }
  friend ModValue operator-(ModValue x, ModValue y) { return {x.v >= y.v ? x.v - y.v : x.v + kModPrime - y.v}; }
  friend ModValue operator*(ModValue x, ModValue y) { return {mod_mul(x.v, y.v)}; }
};

}  // namespace tcknot::detail
