#include "lsp/dedekind.hpp"

#include "lsp/modular.hpp"

#include <stdexcept>

namespace lsp {

namespace {

using i128 = __int128;

BigInt to_big(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  BigInt hi(static_cast<unsigned long>(u >> 64));
  BigInt r = (hi << 64) + BigInt(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  return neg ? BigInt(-r) : r;
}

// 2k * ((a / k))
std::int64_t saw2(std::int64_t a, std::int64_t k) {
  std::int64_t r = mod(a, k);
  return r == 0 ? 0 : 2 * r - k;
}

std::int64_t phi_of(const PrimeContext& ctx, std::int64_t k) { return ctx.p / gcd(k, ctx.p); }

void require_k(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("modulus k must be positive");
}

}  // namespace

Rational dedekind_s(std::int64_t h, std::int64_t k) {
  require_k(k);
  i128 acc = 0;
  std::int64_t hm = mod(h, k);
  for (std::int64_t m = 1; m < k; ++m) acc += static_cast<i128>(saw2(hm * m, k)) * saw2(m, k);
  return make_rational(to_big(acc), BigInt(4) * k * k);
}

BigInt dedekind_t(std::int64_t h, std::int64_t k) {
  require_k(k);
  i128 acc = 0;
  for (std::int64_t m = 1; m < k; ++m) acc += static_cast<i128>(m) * floor_div(h * m, k);
  return to_big(acc);
}

Rational s_chi(const PrimeContext& ctx, std::int64_t h, std::int64_t k) {
  require_k(k);
  std::int64_t len = phi_of(ctx, k) * k;
  std::int64_t hm = mod(h, k);
  i128 acc = 0;
  for (std::int64_t m = 1; m < len; ++m) {
    int c = ctx.chi_of(m);
    if (c == 0) continue;
    acc += static_cast<i128>(c * saw2(hm * m, k)) * saw2(m, len);
  }
  return make_rational(to_big(acc), BigInt(4) * k * len);
}

Rational t_chi(const PrimeContext& ctx, std::int64_t h, std::int64_t k) {
  require_k(k);
  std::int64_t phi = phi_of(ctx, k);
  std::int64_t len = phi * k;
  i128 acc = 0;
  for (std::int64_t m = 1; m < len; ++m) {
    int c = ctx.chi_of(m);
    if (c == 0) continue;
    acc += static_cast<i128>(m * c) * floor_div(h * m, k);
  }
  return make_rational(to_big(acc), BigInt(static_cast<long>(phi)));
}

Rational s_tilde_chi(const PrimeContext& ctx, std::int64_t a, std::int64_t b) {
  if (b <= 1 || gcd(a, b) != 1) throw std::invalid_argument("s_tilde_chi: needs b > 1 and (a,b) = 1");
  std::int64_t len = b * ctx.p;
  i128 acc = 0;
  for (std::int64_t m = 1; m < len; ++m) acc += static_cast<i128>(saw2(m, len)) * b1_chi_twice(ctx, a * m, b);
  return make_rational(to_big(acc), BigInt(4) * len);
}

BigInt S_of_y(const PrimeContext& ctx, std::int64_t a, const Rational& y) {
  if (gcd(a, ctx.p) != 1) throw std::invalid_argument("S_of_y: needs (a,p) = 1");
  std::int64_t c = to_int64(BigInt(y.get_num()));
  std::int64_t d = to_int64(BigInt(y.get_den()));
  i128 acc = 0;
  for (std::int64_t m = 1; m < ctx.p; ++m)
    for (std::int64_t n = 1; n < ctx.p; ++n)
      acc += static_cast<i128>(m * ctx.chi[n]) * floor_div(d * (a * m + n) + a * c, d * ctx.p);
  return to_big(acc);
}

bool verify_reciprocity_classical(std::int64_t h, std::int64_t k) {
  if (h < 1 || k < 1 || gcd(h, k) != 1) throw std::invalid_argument("verify_reciprocity_classical: needs (h,k) = 1");
  Rational lhs = dedekind_s(h, k) + dedekind_s(k, h);
  Rational rhs = (make_rational(h, k) + make_rational(k, h) + make_rational(1, h * k)) / 12 - Rational(1, 4);
  BigInt tl = dedekind_t(h, k) * h + dedekind_t(k, h) * k;
  BigInt tr = BigInt(h - 1) * (k - 1) * (8 * h * k - h - k - 1);
  return lhs == rhs && tr % 12 == 0 && tl == tr / 12;
}

bool verify_reciprocity_chi(const PrimeContext& ctx, std::int64_t h, std::int64_t k, ReciprocityCase c) {
  if (h <= 1 || k < 1 || gcd(h, k) != 1) throw std::invalid_argument("verify_reciprocity_chi: needs h > 1, (h,k) = 1");
  if (c == ReciprocityCase::coprime) {
    if (k % ctx.p == 0) throw std::invalid_argument("verify_reciprocity_chi: coprime case needs (k,p) = 1");
    return s_chi(ctx, h, k) + s_tilde_chi(ctx, k, h) == make_rational(h, 2 * k) * ctx.b2;
  }
  if (k % ctx.p != 0) throw std::invalid_argument("verify_reciprocity_chi: p-divides case needs p | K");
  int ch = ctx.chi_of(h);
  Rational rhs = make_rational(h * h + ch, 2 * h * k) * ctx.b2;
  std::int64_t khat = inverse_mod(k, h);
  bool alt = s_chi(ctx, h, k) + ch * s_chi(ctx, khat, h) == rhs;
  bool orig = s_chi(ctx, h, k) + s_tilde_chi(ctx, k, h) == rhs;
  return alt && orig;
}

}  // namespace lsp
