#include "lsp/context.hpp"

#include "lsp/modular.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace lsp {

const char* to_string(QuarticClass c) {
  switch (c) {
    case QuarticClass::zero: return "zero";
    case QuarticClass::quartic: return "quartic";
    case QuarticClass::quadratic_nonquartic: return "quadratic-nonquartic";
    case QuarticClass::nonquadratic: return "nonquadratic";
  }
  return "?";
}

namespace {

bool is_primitive_root(std::int64_t g, std::int64_t p) {
  std::int64_t n = p - 1;
  for (std::int64_t d = 2; d <= n; ++d) {
    if (n % d || !is_prime(d)) continue;
    if (pow_mod(g, n / d, p) == 1) return false;
  }
  return true;
}

}  // namespace

PrimeContext make_context(std::int64_t p) {
  if (!is_prime(p) || p % 4 != 1)
    throw std::invalid_argument("make_context: p must be a prime = 1 mod 4, got " + std::to_string(p));
  PrimeContext c;
  c.p = p;
  c.q = (p - 1) / 2;
  c.chi.assign(static_cast<std::size_t>(p), -1);
  c.chi[0] = 0;
  for (std::int64_t a = 1; a < p; ++a) c.chi[static_cast<std::size_t>(a * a % p)] = 1;
  for (std::int64_t a = 1; a <= c.q; ++a) (c.chi[a] == 1 ? c.r_set : c.s_set).push_back(a);

  BigInt sum = 0;
  for (std::int64_t m = 1; m < p; ++m) sum += BigInt(static_cast<long>(m * m)) * c.chi[m];
  c.b2 = make_rational(sum, BigInt(static_cast<long>(p)));

  c.g = 2;
  if (p == 17) c.g = 3;
  while (!is_primitive_root(c.g, p)) ++c.g;
  c.i_val = pow_mod(c.g, (p - 1) / 4, p);
  c.dlog.assign(static_cast<std::size_t>(p), -1);
  std::int64_t x = 1;
  for (std::int64_t e = 0; e < p - 1; ++e) {
    c.dlog[x] = e;
    x = x * c.g % p;
  }

  std::int64_t f = 1;
  for (std::int64_t m = 2; m <= c.q; ++m) f = f * m % p;
  if (f == c.i_val) c.epsilon = 0;
  else if (f == p - c.i_val) c.epsilon = 1;
  else throw std::logic_error("make_context: q! is not a square root of -1");

  c.kappa_sq = make_rational(2 * (p - 1), 3 * p);
  c.chi_prefix.resize(static_cast<std::size_t>(p));
  int run = 0;
  for (std::int64_t m = 0; m < p; ++m) c.chi_prefix[m] = run += c.chi[m];
  return c;
}

const PrimeContext& context_for(std::int64_t p) {
  static std::mutex mu;
  static std::map<std::int64_t, std::unique_ptr<PrimeContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[p];
  if (!slot) slot = std::make_unique<PrimeContext>(make_context(p));
  return *slot;
}

int legendre(const PrimeContext& ctx, std::int64_t a) { return ctx.chi_of(a); }

int quartic_index(const PrimeContext& ctx, std::int64_t a) {
  std::int64_t r = mod(a, ctx.p);
  if (r == 0) return -1;
  return static_cast<int>(ctx.dlog[r] % 4);
}

QuarticClass quartic_class(const PrimeContext& ctx, std::int64_t a) {
  int e = quartic_index(ctx, a);
  if (e < 0) return QuarticClass::zero;
  if (e == 0) return QuarticClass::quartic;
  if (e == 2) return QuarticClass::quadratic_nonquartic;
  return QuarticClass::nonquadratic;
}

Rational b2_chi(const PrimeContext& ctx) { return ctx.b2; }

std::int64_t frac_mod(std::int64_t a, std::int64_t k) { return mod(a, k); }

std::int64_t norm_mod(std::int64_t a, std::int64_t k) {
  std::int64_t r = mod(a, k);
  return r * 2 <= k ? r : k - r;
}

std::int64_t b1_chi_twice(const PrimeContext& ctx, std::int64_t c, std::int64_t b) {
  std::int64_t cc = mod(c, ctx.p * b);
  std::int64_t fl = cc / b;
  std::int64_t v = -2 * ctx.chi_prefix[fl];
  if (cc % b == 0) v += ctx.chi[fl];
  return v;
}

Rational b1_chi(const PrimeContext& ctx, const Rational& y) {
  Rational yy = reduce_mod(y, ctx.p);
  std::int64_t fl = to_int64(floor_of(yy));
  Rational v(-ctx.chi_prefix[fl]);
  if (is_integer(yy)) v += make_rational(ctx.chi[fl], 2);
  return v;
}

std::int64_t calB(const PrimeContext& ctx, std::int64_t a) {
  std::int64_t r = mod(a, ctx.p);
  return 6 * r * r - 6 * ctx.p * r + ctx.p * ctx.p;
}

QConstants q_constants(const PrimeContext& ctx, unsigned bits) {
  PrecisionScope scope(bits + kGuardBits);
  HPReal pi = hp_pi();
  HPReal pr = hp_pow2(-(ctx.p - 1) / 4), ps = pr;
  for (auto r : ctx.r_set) pr /= sin(pi * r / ctx.p);
  for (auto s : ctx.s_set) ps /= sin(pi * s / ctx.p);
  QConstants out;
  out.q_r = pr;
  out.q_s = ps;
  out.q_big = (pr * pr) / (ps * ps);
  out.bits = bits;
  return out;
}

}  // namespace lsp
