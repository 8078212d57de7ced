#include "lsp/charsums.hpp"

#include "lsp/dedekind.hpp"
#include "lsp/modular.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>
#include <stdexcept>

namespace lsp {

const char* to_string(Variant v) { return v == Variant::plain ? "plain" : "dagger"; }

const char* to_string(TauPair t) {
  switch (t) {
    case TauPair::er: return "er";
    case TauPair::es: return "es";
    case TauPair::odd_r: return "or";
    case TauPair::odd_s: return "os";
  }
  return "?";
}

PhaseExponent lambda_exponent(const PrimeContext& ctx, std::int64_t h, std::int64_t k, Variant v) {
  if (k < 1 || gcd(h, k) != 1) throw std::invalid_argument("lambda_exponent: needs (h,k) = 1");
  Rational twisted = 2 * s_chi(ctx, h, k) - s_chi(ctx, 2 * h, k);
  if (v == Variant::dagger) twisted = -twisted;
  Rational plain = dedekind_s(2 * h, k) - dedekind_s(2 * h * ctx.p, k);
  return {(twisted + plain) / 2, v};
}

namespace {

// 4kL * sum over mu mod L, mu = +-a (mod p) for a in set, of ((h mu / k)) ((mu / L)); L = lcm(k,p)
__int128 omega_sum(const PrimeContext& ctx, const std::vector<std::int64_t>& set, std::int64_t h, std::int64_t k) {
  std::vector<char> member(static_cast<std::size_t>(ctx.p), 0);
  for (auto a : set) member[a] = member[ctx.p - a] = 1;
  std::int64_t len = lcm(k, ctx.p);
  std::int64_t hm = mod(h, k);
  __int128 acc = 0;
  for (std::int64_t m = 1; m < len; ++m) {
    if (!member[m % ctx.p]) continue;
    std::int64_t a = mod(hm * m, k);
    if (a == 0) continue;
    acc += static_cast<__int128>(2 * a - k) * (2 * m - len);
  }
  return acc;
}

Rational from_i128(__int128 v, std::int64_t den) {
  // the sums stay far below 2^63 at the sizes used here
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("omega_sum: overflow");
  return make_rational(static_cast<std::int64_t>(v), den);
}

}  // namespace

Rational phi_root(const PrimeContext& ctx, std::int64_t h, std::int64_t k, Variant v) {
  if (k < 1 || gcd(h, k) != 1) throw std::invalid_argument("phi_root: needs (h,k) = 1");
  const auto& up = v == Variant::plain ? ctx.s_set : ctx.r_set;
  const auto& fixed = v == Variant::plain ? ctx.r_set : ctx.s_set;
  __int128 acc = omega_sum(ctx, fixed, h, k) + omega_sum(ctx, up, 2 * h, k) - omega_sum(ctx, up, h, k);
  std::int64_t den = 4 * k * lcm(k, ctx.p);
  return reduce_mod(from_i128(acc, den), 2);
}

HPReal lambda_k(const PrimeContext& ctx, std::int64_t k, Variant v, unsigned bits) {
  if (k < 1) throw std::invalid_argument("lambda_k: k must be positive");
  PrecisionScope scope(bits + kGuardBits);
  if (k % ctx.p == 0) return HPReal(1);
  HPReal pi = hp_pi();
  std::int64_t kb = inverse_mod(k, ctx.p);
  auto csc = [&](std::int64_t a) { return HPReal(1) / sin(pi * HPReal(norm_mod(a, ctx.p)) / HPReal(ctx.p)); };
  const auto& lead = v == Variant::plain ? ctx.r_set : ctx.s_set;
  const auto& other = v == Variant::plain ? ctx.s_set : ctx.r_set;
  HPReal r = hp_pow2(-(ctx.p - 1) / 4);
  for (auto a : lead) r *= csc(kb * a);
  if (k % 2 == 0)
    for (auto a : other) r *= csc(2 * kb * a) / csc(kb * a);
  return r;
}

const PhaseTable& phase_table(const PrimeContext& ctx, std::int64_t k, Variant v) {
  static std::mutex mu;
  static std::map<std::tuple<std::int64_t, std::int64_t, int>, std::unique_ptr<PhaseTable>> cache;
  auto key = std::make_tuple(ctx.p, k, static_cast<int>(v));
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto t = std::make_unique<PhaseTable>();
  t->k = k;
  t->variant = v;
  for (std::int64_t h = 0; h < k; ++h) {
    if (gcd(h, k) != 1) continue;
    t->h.push_back(h);
    t->lambda.push_back(lambda_exponent(ctx, h, k, v).value);
  }
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[key];
  if (!slot) slot = std::move(t);
  return *slot;
}

namespace {

struct TermSpec {
  std::int64_t k, n, m;
  int chi_filter;       // 0: all h, else require chi_h == chi_filter
  std::int64_t d;       // -1: no residue restriction
  bool invert_double;   // inverse taken of 2h (else of h)
  Variant v;
};

KloostermanSum build(const PrimeContext& ctx, const TermSpec& t, KloostermanKind kind) {
  KloostermanSum out;
  out.kind = kind;
  out.variant = t.v;
  out.p = ctx.p;
  out.k = t.k;
  out.n = t.n;
  out.m = t.m;
  out.d = t.d;
  const PhaseTable& table = phase_table(ctx, t.k, t.v);
  for (std::size_t i = 0; i < table.h.size(); ++i) {
    std::int64_t h = table.h[i];
    if (t.chi_filter != 0 && ctx.chi_of(h) != t.chi_filter) continue;
    if (t.d >= 0 && mod(h, ctx.p) != t.d) continue;
    Rational phase = table.lambda[i];
    std::int64_t lin = t.n * h;
    if (t.m != 0) lin += t.m * inverse_mod(t.invert_double ? 2 * h : h, t.k);
    phase -= make_rational(2 * mod(lin, t.k), t.k);
    out.sum.add_phase(phase);
    ++out.term_count;
  }
  return out;
}

void require_odd_p_multiple(const PrimeContext& ctx, std::int64_t K) {
  if (K < 1 || K % ctx.p != 0 || K % 2 == 0) throw std::invalid_argument("K must be an odd multiple of p");
}

}  // namespace

KloostermanSum kloosterman_L(const PrimeContext& ctx, std::int64_t k, std::int64_t n, Variant v) {
  if (k < 1 || k % ctx.p == 0) throw std::invalid_argument("kloosterman_L: needs (k,p) = 1");
  return build(ctx, {k, n, 0, 0, -1, false, v}, v == Variant::plain ? KloostermanKind::L : KloostermanKind::L_dagger);
}

KloostermanSum kloosterman_L_plus(const PrimeContext& ctx, std::int64_t K, std::int64_t n, std::int64_t m) {
  require_odd_p_multiple(ctx, K);
  return build(ctx, {K, n, m, 1, -1, true, Variant::plain}, KloostermanKind::L_plus);
}

KloostermanSum kloosterman_L_nmd(const PrimeContext& ctx, std::int64_t k, std::int64_t n, std::int64_t m,
                                 std::int64_t d, Variant v) {
  if (k < 1 || k % ctx.p != 0) throw std::invalid_argument("kloosterman_L_nmd: needs p | k");
  if (d < 0 || d >= ctx.p || d == 0) throw std::invalid_argument("kloosterman_L_nmd: needs 0 < d < p");
  return build(ctx, {k, n, m, 0, d, k % 2 == 1, v}, KloostermanKind::L_nmd);
}

KloostermanSum kloosterman_dagger(const PrimeContext& ctx, std::int64_t k, std::int64_t n) {
  return kloosterman_L(ctx, k, n, Variant::dagger);
}

KloostermanSum kloosterman_dagger_minus(const PrimeContext& ctx, std::int64_t K, std::int64_t n, std::int64_t m) {
  require_odd_p_multiple(ctx, K);
  return build(ctx, {K, n, m, -1, -1, true, Variant::dagger}, KloostermanKind::L_dagger_minus);
}

TauCount tau_count(const PrimeContext& ctx, std::int64_t h, std::int64_t K, TauPair pair) {
  require_odd_p_multiple(ctx, K);
  if (gcd(h, K) != 1) throw std::invalid_argument("tau_count: needs (h,K) = 1");
  int parity = (pair == TauPair::er || pair == TauPair::es) ? 0 : 1;
  int cls = (pair == TauPair::er || pair == TauPair::odd_r) ? 1 : -1;
  TauCount t{0, pair};
  for (std::int64_t m = 1; m < K; ++m) {
    if (m % 2 != parity || ctx.chi_of(m) != cls) continue;
    if (mod(h * m, K) % 2 == 1) ++t.count;
  }
  return t;
}

namespace {

std::string witness(const PrimeContext& ctx, std::int64_t h, std::int64_t K, Variant v, const std::string& detail) {
  std::ostringstream os;
  os << "p=" << ctx.p << " K=" << K << " h=" << h << " " << to_string(v) << ": " << detail;
  return os.str();
}

}  // namespace

CheckResult check_congruence_mod16(const PrimeContext& ctx, std::int64_t h, std::int64_t K, Variant v) {
  require_odd_p_multiple(ctx, K);
  Rational x = lambda_exponent(ctx, h, K, v).value * (24 * K);
  if (!is_integer(x)) return {false, witness(ctx, h, K, v, "24K*Lambda not integral: " + x.get_str())};
  BigInt lhs = x.get_num();
  TauPair pair = v == Variant::plain ? TauPair::es : TauPair::er;
  std::int64_t tau = tau_count(ctx, 2 * h, K, pair).count;
  BigInt rhs = BigInt(4 * (ctx.chi_of(h) - 1) + 2 * (2 * h - 1) * (ctx.p - 1) + 8 * tau);
  BigInt diff = lhs - rhs;
  bool ok = mpz_divisible_ui_p(diff.get_mpz_t(), 16) != 0;
  return {ok, ok ? "" : witness(ctx, h, K, v, "24K*Lambda=" + lhs.get_str() + " rhs=" + rhs.get_str())};
}

CheckResult check_congruence_modThK(const PrimeContext& ctx, std::int64_t h, std::int64_t K, Variant v) {
  require_odd_p_multiple(ctx, K);
  Rational x = lambda_exponent(ctx, h, K, v).value * (24 * K);
  if (!is_integer(x)) return {false, witness(ctx, h, K, v, "24K*Lambda not integral: " + x.get_str())};
  BigInt lhs = x.get_num();
  std::int64_t theta = gcd(3, K);
  std::int64_t M = theta * K;
  std::int64_t hb = inverse_mod(h, M);
  std::int64_t h2b = inverse_mod(2 * h, M);
  int sign = v == Variant::plain ? 1 : -1;
  // 3 chi_h (4 - chi_2) B2 hbar; integral since B2 has denominator dividing (4 - chi_2)
  Rational main = Rational(3 * sign * ctx.chi_of(h) * (4 - ctx.chi_of(2)) * hb) * ctx.b2;
  if (!is_integer(main)) return {false, witness(ctx, h, K, v, "main term not integral: " + main.get_str())};
  BigInt rhs = main.get_num() - BigInt(ctx.p - 1) * (2 * h + h2b);
  BigInt diff = lhs - rhs;
  bool ok = mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(M)) != 0;
  if (theta == 1 && mpz_divisible_ui_p(lhs.get_mpz_t(), 3) == 0) ok = false;
  return {ok, ok ? "" : witness(ctx, h, K, v, "24K*Lambda=" + lhs.get_str() + " rhs=" + rhs.get_str() +
                                                 " mod " + std::to_string(M))};
}

TauTableReport verify_tau_table(const PrimeContext& ctx, std::int64_t K_max) {
  TauTableReport rep;
  const std::int64_t p4 = (ctx.p - 1) / 4;
  const int e = ctx.epsilon;
  // rows: class of h as g^(4 eta + row); columns er, es, or, os
  const std::int64_t table[4][4] = {
      {0, 0, p4, p4},
      {1 + e, e, 1 + e + p4, e + p4},
      {1, 1, 1 + p4, 1 + p4},
      {e, 1 + e, e + p4, 1 + e + p4},
  };
  const TauPair cols[4] = {TauPair::er, TauPair::es, TauPair::odd_r, TauPair::odd_s};
  for (std::int64_t K = ctx.p; K <= K_max; K += 2 * ctx.p) {
    for (std::int64_t h = 1; h < K; ++h) {
      if (gcd(h, K) != 1) continue;
      int row = quartic_index(ctx, h);
      for (int c = 0; c < 4; ++c) {
        ++rep.checked;
        std::int64_t got = tau_count(ctx, h, K, cols[c]).count % 2;
        if (got != table[row][c] % 2) {
          ++rep.violations;
          if (rep.first_witness.empty()) {
            std::ostringstream os;
            os << "p=" << ctx.p << " K=" << K << " h=" << h << " row=" << row << " col=" << to_string(cols[c])
               << " parity=" << got;
            rep.first_witness = os.str();
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace lsp
