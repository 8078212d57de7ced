#pragma once
// Brute-force reference implementations used only by the tests. None of them call into the
// library's number-theoretic code, so agreement is evidence and not a tautology.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

inline std::int64_t md(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

inline int legendre(std::int64_t a, std::int64_t p) {
  a = md(a, p);
  if (a == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x)
    if (x * x % p == a) return 1;
  return -1;
}

inline mpq_class saw(const mpq_class& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  mpq_class frac = x - mpq_class(f);
  if (frac == 0) return 0;
  return frac - mpq_class(1, 2);
}

inline mpq_class q(std::int64_t a, std::int64_t b) {
  mpq_class r(static_cast<long>(a), static_cast<long>(b));
  r.canonicalize();
  return r;
}

inline mpq_class dedekind_s(std::int64_t h, std::int64_t k) {
  mpq_class acc = 0;
  for (std::int64_t mu = 0; mu < k; ++mu) acc += saw(q(h * mu, k)) * saw(q(mu, k));
  return acc;
}

inline mpq_class b2(std::int64_t p) {
  mpq_class acc = 0;
  for (std::int64_t m = 1; m < p; ++m) acc += m * m * legendre(m, p);
  return acc / p;
}

// sum over mu mod lcm(k,p) of chi_mu ((h mu / k)) ((mu / lcm))
inline mpq_class s_chi(std::int64_t h, std::int64_t k, std::int64_t p) {
  std::int64_t L = std::lcm(k, p);
  mpq_class acc = 0;
  for (std::int64_t mu = 0; mu < L; ++mu) {
    int c = legendre(mu, p);
    if (c) acc += c * saw(q(h * mu, k)) * saw(q(mu, L));
  }
  return acc;
}

// B_{1,chi}(y) read off as the sawtooth-weighted character sum (1/p-periodic form)
inline mpq_class b1_chi(const mpq_class& y, std::int64_t p) {
  mpq_class acc = 0;
  for (std::int64_t nu = 0; nu < p; ++nu) {
    int c = legendre(nu, p);
    if (c) acc += c * saw((y + nu) / p);
  }
  return acc;
}

// s-tilde via the double sum over mu mod bp and nu mod p
inline mpq_class s_tilde(std::int64_t a, std::int64_t b, std::int64_t p) {
  mpq_class acc = 0;
  for (std::int64_t mu = 0; mu < b * p; ++mu) {
    mpq_class w = saw(q(mu, b * p));
    if (w == 0) continue;
    for (std::int64_t nu = 0; nu < p; ++nu) {
      int c = legendre(nu, p);
      if (c) acc += c * w * saw(q(a * mu + b * nu, b * p));
    }
  }
  return acc;
}

// the direct double-sawtooth definition of the phase exponent
inline mpq_class lambda_direct(std::int64_t h, std::int64_t k, std::int64_t p, bool dagger) {
  std::int64_t L = std::lcm(k, p);
  mpq_class acc = 0;
  for (std::int64_t mu = 0; mu < L; ++mu) {
    int c = legendre(mu, p);
    if (!c) continue;
    mpq_class one = saw(q(h * mu, k)), two = saw(q(2 * h * mu, k)) - saw(q(h * mu, k));
    bool first = dagger ? c == -1 : c == 1;
    acc += (first ? one : two) * saw(q(mu, L));
  }
  return acc;
}

inline std::int64_t inverse(std::int64_t a, std::int64_t m) {
  a = md(a, m);
  for (std::int64_t x = 0; x < m; ++x)
    if (a * x % m == 1 % m) return x;
  return -1;
}

// generic Kloosterman-type sum in double precision; filter(h) picks the summands
inline std::complex<double> kloosterman(std::int64_t k, std::int64_t n, std::int64_t m, std::int64_t p, bool dagger,
                                        const std::function<bool(std::int64_t)>& filter, bool invert_double) {
  std::complex<double> acc = 0;
  for (std::int64_t h = 0; h < k; ++h) {
    if (std::gcd(h, k) != 1 || !filter(h)) continue;
    double lam = lambda_direct(h, k, p, dagger).get_d();
    std::int64_t inv = m == 0 ? 0 : inverse(invert_double ? 2 * h : h, k);
    double ph = lam - 2.0 * static_cast<double>(md(n * h + m * inv, k)) / static_cast<double>(k);
    acc += std::polar(1.0, M_PI * ph);
  }
  return acc;
}

// sum over partitions of n of the product of f over the parts, by direct enumeration
inline std::vector<mpz_class> signed_partitions(int n_max, const std::function<int(int)>& f) {
  std::vector<mpz_class> out(static_cast<std::size_t>(n_max + 1), 0);
  for (int n = 0; n <= n_max; ++n) {
    mpz_class total = 0;
    std::function<void(int, int, long)> walk = [&](int remaining, int largest, long weight) {
      if (remaining == 0) {
        total += weight;
        return;
      }
      for (int part = std::min(remaining, largest); part >= 1; --part) {
        long w = weight * f(part);
        if (w != 0) walk(remaining - part, part, w);
      }
    };
    walk(n, n, 1);
    out[static_cast<std::size_t>(n)] = total;
  }
  return out;
}

}  // namespace oracle
