#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace lsp {

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

inline std::int64_t lcm(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

// inverse of a modulo m in [0, m); m == 1 gives 0
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t r0 = mod(a, m), r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw std::domain_error("inverse_mod: not invertible");
  return mod(s0, m);
}

inline std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b = mod(b, m);
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * b % m);
    b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t euler_phi(std::int64_t n);
int mobius(std::int64_t n);
std::int64_t radical(std::int64_t n);

}  // namespace lsp
