#include "lsp/series.hpp"

#include "lsp/bessel.hpp"
#include "lsp/cyclotomic.hpp"
#include "lsp/modular.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace lsp {

namespace {

void apply_factor(BigIntSeries& b, std::int64_t part, int c) {
  std::int64_t n = static_cast<std::int64_t>(b.size()) - 1;
  if (c == 1)
    for (std::int64_t i = part; i <= n; ++i) b[i] += b[i - part];
  else if (c == -1)
    for (std::int64_t i = part; i <= n; ++i) b[i] -= b[i - part];
}

}  // namespace

SignedPartitionTable oracle_table(const PrimeContext& ctx, int sign, std::int64_t n_max,
                                  const std::vector<std::int64_t>& factor_order) {
  if (n_max < 1) throw std::invalid_argument("oracle_table: n_max must be >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("oracle_table: sign must be +1 or -1");
  std::vector<char> seen(static_cast<std::size_t>(n_max + 1), 0);
  for (auto m : factor_order) {
    if (m < 1 || m > n_max || seen[m]) throw std::invalid_argument("oracle_table: factor order is not a permutation");
    seen[m] = 1;
  }
  if (static_cast<std::int64_t>(factor_order.size()) != n_max)
    throw std::invalid_argument("oracle_table: factor order is not a permutation");
  SignedPartitionTable t;
  t.p = ctx.p;
  t.sign = sign;
  t.values.assign(static_cast<std::size_t>(n_max + 1), BigInt(0));
  t.values[0] = 1;
  for (auto m : factor_order) apply_factor(t.values, m, sign * ctx.chi_of(m));
  return t;
}

SignedPartitionTable oracle_table(const PrimeContext& ctx, int sign, std::int64_t n_max) {
  std::vector<std::int64_t> order(static_cast<std::size_t>(std::max<std::int64_t>(n_max, 0)));
  for (std::int64_t m = 1; m <= n_max; ++m) order[m - 1] = m;
  return oracle_table(ctx, sign, n_max, order);
}

std::set<std::int64_t> scan_vanishing(const SignedPartitionTable& table, std::int64_t modulus, std::int64_t n_min,
                                      std::int64_t n_max) {
  if (modulus < 1 || n_min < 1) throw std::invalid_argument("scan_vanishing: needs modulus >= 1, n_min >= 1");
  if (n_max >= static_cast<std::int64_t>(table.values.size())) throw std::invalid_argument("scan_vanishing: table too short");
  std::set<std::int64_t> out;
  for (std::int64_t r = 0; r < modulus; ++r) {
    bool any = false, all_zero = true;
    for (std::int64_t n = n_min; n <= n_max && all_zero; ++n) {
      if (mod(n, modulus) != r) continue;
      any = true;
      all_zero = table.values[n] == 0;
    }
    if (any && all_zero) out.insert(r);
  }
  return out;
}

std::set<std::int64_t> scan_vanishing(const PrimeContext& ctx, int sign, std::int64_t modulus, std::int64_t n_min,
                                      std::int64_t n_max) {
  return scan_vanishing(oracle_table(ctx, sign, n_max), modulus, n_min, n_max);
}

std::vector<BigInt> sigma_coeffs(const PrimeContext& ctx, int sign, std::int64_t m_max) {
  if (m_max < 0) throw std::invalid_argument("sigma_coeffs: m_max must be >= 0");
  const std::int64_t p = ctx.p;
  const auto& doubled = sign > 0 ? ctx.r_set : ctx.s_set;
  const auto& shifted = sign > 0 ? ctx.s_set : ctx.r_set;
  std::vector<std::int64_t> starts;
  for (auto a : doubled) {
    starts.push_back(2 * a);
    starts.push_back(2 * p - 2 * a);
  }
  for (auto a : shifted) {
    starts.push_back(p + 2 * a);
    starts.push_back(p - 2 * a);
  }
  BigIntSeries b(static_cast<std::size_t>(m_max + 1), BigInt(0));
  b[0] = 1;
  for (auto e : starts)
    for (std::int64_t part = e; part <= m_max; part += 2 * p) apply_factor(b, part, 1);
  return b;
}

namespace {

HPComplex cpow(HPComplex x, std::int64_t e) {
  HPComplex r(HPReal(1));
  while (e > 0) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

HPComplex scaled(const HPComplex& z, const HPReal& c) { return {z.re * c, z.im * c}; }

// exp(pi i * half_turns)
HPComplex half_turn_root(const Rational& half_turns) { return unit_root(hp_from(half_turns) / 2); }

// relative bound for replacing a product of (1 - w_n)^{+-1} over n >= N by 1, given sum |w_n| <= t < 1
HPReal tail_from_sum(const HPReal& t) {
  if (t >= 1) return HPReal(1e30);
  return exp(t / (1 - t)) - 1;
}

struct Accum {
  HPComplex value{HPReal(1)};
  HPReal tail_sum{0};
};

// multiplies (c x^e; x^step)^{-1} into acc
void recip_poch(Accum& acc, const HPComplex& c, const HPComplex& x, std::int64_t e, std::int64_t step, std::int64_t n) {
  HPComplex z = c * cpow(x, e);
  HPComplex q = cpow(x, step);
  HPComplex prod(HPReal(1));
  HPComplex zq = z;
  for (std::int64_t i = 0; i < n; ++i) {
    prod *= HPComplex(HPReal(1)) - zq;
    zq *= q;
  }
  acc.value /= prod;
  HPReal aq = abs(q);
  acc.tail_sum += abs(zq) / (1 - aq);
}

}  // namespace

ProductValue q_pochhammer(const HPComplex& z, const HPComplex& q, std::int64_t truncation, unsigned bits) {
  PrecisionScope scope(bits + kGuardBits);
  HPReal aq = abs(q);
  if (aq >= 1) throw std::domain_error("q_pochhammer: needs |q| < 1");
  HPComplex prod(HPReal(1));
  HPComplex zq = z;
  for (std::int64_t i = 0; i < truncation; ++i) {
    prod *= HPComplex(HPReal(1)) - zq;
    zq *= q;
  }
  return {prod, tail_from_sum(abs(zq) / (1 - aq))};
}

const char* to_string(ThetaFamily f) {
  switch (f) {
    case ThetaFamily::R_plus: return "R+";
    case ThetaFamily::R_minus: return "R-";
    case ThetaFamily::S_plus: return "S+";
    case ThetaFamily::S_minus: return "S-";
    case ThetaFamily::T_plus: return "T+";
    case ThetaFamily::T_minus: return "T-";
    case ThetaFamily::U_plus: return "U+";
    case ThetaFamily::U_minus: return "U-";
    case ThetaFamily::F_r: return "F_r";
    case ThetaFamily::F_s: return "F_s";
    case ThetaFamily::G_r: return "G_r";
    case ThetaFamily::G_s: return "G_s";
    case ThetaFamily::Phi: return "Phi";
    case ThetaFamily::PhiDagger: return "PhiDagger";
  }
  return "?";
}

ProductValue theta_products(const PrimeContext& ctx, ThetaFamily family, const HPComplex& x, std::int64_t n,
                            unsigned bits) {
  PrecisionScope scope(bits + kGuardBits);
  if (abs(x) >= 1) throw std::domain_error("theta_products: needs |x| < 1");
  const std::int64_t p = ctx.p;
  const HPComplex one(HPReal(1)), minus_one(HPReal(-1));
  Accum acc;
  auto pair = [&](const std::vector<std::int64_t>& set, const HPComplex& c) {
    for (auto a : set) {
      recip_poch(acc, c, x, a, p, n);
      recip_poch(acc, c, x, p - a, p, n);
    }
  };
  auto doubled = [&](const std::vector<std::int64_t>& set) {
    for (auto a : set) {
      recip_poch(acc, one, x, 2 * a, 2 * p, n);
      recip_poch(acc, one, x, 2 * p - 2 * a, 2 * p, n);
    }
  };
  auto shifted = [&](const std::vector<std::int64_t>& set) {
    for (auto a : set) {
      recip_poch(acc, one, x, p + 2 * a, 2 * p, n);
      recip_poch(acc, one, x, p - 2 * a, 2 * p, n);
    }
  };
  auto omega = [&](std::int64_t t) { return unit_root(HPReal(t) / HPReal(p)); };
  // (c w_t x^e, c conj(w_t) x^e; x^step)^{-1} over t in set
  auto rotated = [&](const std::vector<std::int64_t>& set, const HPComplex& c, std::int64_t e, std::int64_t step) {
    for (auto t : set) {
      HPComplex w = omega(t);
      recip_poch(acc, c * w, x, e, step, n);
      recip_poch(acc, c * conj(w), x, e, step, n);
    }
  };
  switch (family) {
    case ThetaFamily::F_r: pair(ctx.r_set, one); break;
    case ThetaFamily::F_s: pair(ctx.s_set, one); break;
    case ThetaFamily::G_r: pair(ctx.r_set, minus_one); break;
    case ThetaFamily::G_s: pair(ctx.s_set, minus_one); break;
    case ThetaFamily::R_plus:
      pair(ctx.r_set, one);
      pair(ctx.s_set, minus_one);
      break;
    case ThetaFamily::R_minus:
      pair(ctx.r_set, minus_one);
      pair(ctx.s_set, one);
      break;
    case ThetaFamily::S_plus:
      doubled(ctx.r_set);
      shifted(ctx.s_set);
      break;
    case ThetaFamily::S_minus:
      shifted(ctx.r_set);
      doubled(ctx.s_set);
      break;
    case ThetaFamily::T_plus:
      rotated(ctx.r_set, one, 1, 1);
      rotated(ctx.s_set, minus_one, 1, 1);
      break;
    case ThetaFamily::T_minus:
      rotated(ctx.r_set, minus_one, 1, 1);
      rotated(ctx.s_set, one, 1, 1);
      break;
    case ThetaFamily::U_plus:
      rotated(ctx.r_set, one, 2, 2);
      rotated(ctx.s_set, one, 1, 2);
      break;
    case ThetaFamily::U_minus:
      rotated(ctx.r_set, one, 1, 2);
      rotated(ctx.s_set, one, 2, 2);
      break;
    case ThetaFamily::Phi:
    case ThetaFamily::PhiDagger: {
      int sg = family == ThetaFamily::Phi ? 1 : -1;
      for (std::int64_t a = 1; a < p; ++a) recip_poch(acc, HPComplex(HPReal(sg * ctx.chi[a])), x, a, p, n);
      break;
    }
  }
  return {acc.value, tail_from_sum(acc.tail_sum)};
}

const char* to_string(FeqCase c) {
  switch (c) {
    case FeqCase::two_p: return "2p";
    case FeqCase::p: return "p";
    case FeqCase::two: return "2";
    case FeqCase::one: return "1";
  }
  return "?";
}

FeqCase feq_case_for(const PrimeContext& ctx, std::int64_t k) {
  std::int64_t g = gcd(k, 2 * ctx.p);
  if (g == 2 * ctx.p) return FeqCase::two_p;
  if (g == ctx.p) return FeqCase::p;
  if (g == 2) return FeqCase::two;
  return FeqCase::one;
}

FeqResult verify_functional_equation(const PrimeContext& ctx, FeqCase c, std::int64_t h, std::int64_t k,
                                     const HPComplex& z, std::int64_t truncation, unsigned bits, Variant v) {
  if (k < 1 || h < 1 || h > k || gcd(h, k) != 1) throw std::invalid_argument("verify_functional_equation: needs 0 < h <= k, (h,k) = 1");
  if (feq_case_for(ctx, k) != c) throw std::invalid_argument("verify_functional_equation: gcd(k,2p) does not match the case");
  PrecisionScope scope(bits + kGuardBits);
  if (z.re <= 0) throw std::invalid_argument("verify_functional_equation: needs Re z > 0");
  const std::int64_t p = ctx.p;
  const bool dag = v == Variant::dagger;
  HPReal pi = hp_pi();
  HPComplex i_unit(HPReal(0), HPReal(1));
  HPComplex zinv = inverse(z);

  HPComplex x = exp(scaled(HPComplex(HPReal(0), 2 * pi * h) - scaled(z, 2 * pi), HPReal(1) / HPReal(k)));

  std::int64_t H = h * p, K = k * p;
  Rational a_coef;
  std::int64_t inv = 0;
  HPReal shrink;
  std::int64_t shrink_den = 0;
  int sel = 0;
  ThetaFamily plus{}, minus{};
  HPReal lam(1);
  switch (c) {
    case FeqCase::two_p:
      a_coef = Rational(-1);
      inv = inverse_mod(h, k);
      shrink_den = k;
      shrink = 2 * pi;
      sel = ctx.chi_of(h);
      plus = ThetaFamily::R_plus;
      minus = ThetaFamily::R_minus;
      break;
    case FeqCase::p: {
      Rational inner = Rational(3) / Rational(ctx.q) * ctx.chi_of(h) * (Rational(1) - Rational(ctx.chi_of(2), 4)) * ctx.b2;
      a_coef = (dag ? -inner : inner) - Rational(1, 4);
      inv = inverse_mod(2 * h, k);
      shrink_den = k;
      shrink = pi;
      sel = ctx.chi_of(h);
      plus = ThetaFamily::S_plus;
      minus = ThetaFamily::S_minus;
      break;
    }
    case FeqCase::two:
      a_coef = make_rational(1, p);
      inv = inverse_mod(H, k);
      shrink_den = K;
      shrink = 2 * pi;
      sel = ctx.chi_of(k);
      plus = ThetaFamily::T_plus;
      minus = ThetaFamily::T_minus;
      lam = lambda_k(ctx, k, v, bits);
      break;
    case FeqCase::one:
      a_coef = make_rational(1, 4 * p);
      inv = inverse_mod(2 * H, k);
      shrink_den = K;
      shrink = pi;
      sel = ctx.chi_of(k);
      plus = ThetaFamily::U_plus;
      minus = ThetaFamily::U_minus;
      lam = lambda_k(ctx, k, v, bits);
      break;
  }
  if (dag) sel = -sel;

  HPComplex xt = exp(HPComplex(HPReal(0), -2 * pi * inv / k) - scaled(zinv, shrink / HPReal(shrink_den)));
  HPComplex psi = scaled(scaled(zinv, hp_from(a_coef)) + z, pi * ctx.q / (6 * k));
  HPComplex phi = half_turn_root(lambda_exponent(ctx, h, k, v).value);

  ProductValue lhs = theta_products(ctx, dag ? ThetaFamily::PhiDagger : ThetaFamily::Phi, x, truncation, bits);
  ProductValue omega = theta_products(ctx, sel > 0 ? plus : minus, xt, truncation, bits);
  HPComplex rhs = scaled(phi * exp(psi) * omega.value, lam);

  FeqResult r;
  r.residual = abs(lhs.value - rhs) / abs(lhs.value);
  r.tail_bound = lhs.tail_bound + omega.tail_bound;
  r.inconclusive = r.tail_bound >= hp_pow2(-static_cast<long>(bits) / 2);
  r.abs_x = abs(x);
  r.abs_x_transformed = abs(xt);
  (void)i_unit;
  return r;
}

std::vector<Rational> c_sequence(const PrimeContext& ctx) {
  Rational base = (Rational(1) - make_rational(ctx.chi_of(2), 4)) * ctx.b2 - make_rational(ctx.p - 1, 24);
  std::vector<Rational> out;
  for (std::int64_t m = 0;; ++m) {
    Rational c = base - 2 * m;
    if (c <= 0) break;
    out.push_back(c);
  }
  return out;
}

namespace {

struct Rademacher {
  const PrimeContext& ctx;
  int sign;
  Variant v;
  SeriesEvalConfig cfg;
  HPReal pi, kappa;
  std::vector<Rational> cs;
  std::vector<BigInt> sigma;
  std::map<std::int64_t, HPReal> lam;

  Rademacher(const PrimeContext& c, int s, const SeriesEvalConfig& conf)
      : ctx(c), sign(s), v(s > 0 ? Variant::plain : Variant::dagger), cfg(conf) {
    pi = hp_pi();
    kappa = pi * sqrt(hp_from(ctx.kappa_sq));
    cs = c_sequence(ctx);
    sigma = sigma_coeffs(ctx, 1, static_cast<std::int64_t>(cs.size()));
    for (std::int64_t k = 1; k <= 2 * cfg.k_max; ++k) {
      if (k % ctx.p == 0) continue;
      lam.emplace(k, lambda_k(ctx, k, v, cfg.precision));
      phase_table(ctx, k, v);
    }
    for (std::int64_t k = ctx.p; k <= cfg.k_max; k += 2 * ctx.p) phase_table(ctx, k, v);
  }

  HPComplex L(std::int64_t k, std::int64_t n) const {
    return cyclo_to_complex(kloosterman_L(ctx, k, n, v).sum, cfg.precision);
  }

  HPComplex Lp(std::int64_t k, std::int64_t n, std::int64_t m) const {
    auto s = v == Variant::plain ? kloosterman_L_plus(ctx, k, n, m) : kloosterman_dagger_minus(ctx, k, n, m);
    return cyclo_to_complex(s.sum, cfg.precision);
  }

  RademacherResult eval(std::int64_t n) const {
    Rational nt = Rational(n) + make_rational(ctx.p - 1, 24);
    HPReal rn = sqrt(hp_from(nt));
    HPComplex s12, s3;
    for (std::int64_t k = 1; k <= cfg.k_max; ++k) {
      std::int64_t g = gcd(k, 2 * ctx.p);
      if (g == 1) {
        HPComplex t = scaled(L(k, n), lam.at(k)) + scaled(L(2 * k, n), lam.at(2 * k));
        s12 += scaled(t, bessel_I1(kappa * rn / (2 * k), cfg.precision) / (2 * k));
      } else if (g == 2 && k % 4 == 0) {
        s12 += scaled(L(k, n), lam.at(k) * bessel_I1(kappa * rn / k, cfg.precision) / k);
      } else if (g == ctx.p) {
        for (std::size_t m = 0; m < cs.size(); ++m) {
          if (sigma[m] == 0) continue;
          HPReal rc = sqrt(hp_from(cs[m]));
          HPReal w = rc * hp_from(sigma[m]) / (2 * k) * bessel_I1(2 * pi / k * rc * rn, cfg.precision);
          s3 += scaled(Lp(k, n, static_cast<std::int64_t>(m)), w);
        }
      }
    }
    // d(phi) = i d(omega) contributes 2 pi i against the 1/(2 pi i) of the Bessel contour integral
    HPReal raw = 2 * pi * ((kappa / (4 * pi * rn)) * s12.re + s3.re / rn);
    RademacherResult r;
    r.n = n;
    r.raw = raw;
    HPReal fl = floor(raw + HPReal(0.5));
    mpfr_get_z(r.rounded.get_mpz_t(), fl.backend().data(), MPFR_RNDN);
    r.distance_to_integer = abs(raw - fl);
    r.k_max = cfg.k_max;
    r.flagged = r.distance_to_integer > HPReal(0.4);
    return r;
  }
};

}  // namespace

std::vector<RademacherResult> rademacher_eval_range(const PrimeContext& ctx, int sign, std::int64_t n_lo,
                                                    std::int64_t n_hi, const SeriesEvalConfig& cfg) {
  if (ctx.p != 5 && ctx.p != 13 && ctx.p != 17) throw std::invalid_argument("rademacher_eval: p must be 5, 13 or 17");
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("rademacher_eval: needs 1 <= n_lo <= n_hi");
  if (cfg.k_max < 1) throw std::invalid_argument("rademacher_eval: k_max must be >= 1");
  PrecisionScope scope(cfg.precision + kGuardBits);
  Rademacher rs(ctx, sign, cfg);
  std::vector<RademacherResult> out(static_cast<std::size_t>(n_hi - n_lo + 1));
  unsigned workers = cfg.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  if (workers <= 1) {
    for (std::int64_t n = n_lo; n <= n_hi; ++n) out[n - n_lo] = rs.eval(n);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::int64_t n = n_lo + w; n <= n_hi; n += workers) out[n - n_lo] = rs.eval(n);
    });
  for (auto& t : pool) t.join();
  return out;
}

RademacherResult rademacher_eval(const PrimeContext& ctx, int sign, std::int64_t n, const SeriesEvalConfig& cfg) {
  return rademacher_eval_range(ctx, sign, n, n, cfg).front();
}

}  // namespace lsp
