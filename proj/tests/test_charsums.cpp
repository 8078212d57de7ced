#include "doctest.h"
#include "oracle.hpp"

#include "lsp/charsums.hpp"
#include "lsp/dedekind.hpp"
#include "lsp/modular.hpp"

#include <complex>

using namespace lsp;

namespace {

std::complex<double> to_cd(const HPComplex& z) {
  return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

bool near(const KloostermanSum& s, std::complex<double> want, double tol = 1e-9) {
  return std::abs(to_cd(s.numeric()) - want) < tol;
}

}

TEST_SUITE("charsums") {

TEST_CASE("Lambda examples") {
  const auto& c17 = context_for(17);
  CHECK(lambda_exponent(c17, 3, 1).value == 0);
  CHECK(lambda_exponent(c17, 1, 17).value == make_rational(7, 17));
  Rational big = 24 * 17 * lambda_exponent(c17, 1, 17).value;
  REQUIRE(is_integer(big));
  CHECK(mod(to_int64(big), 16) == 8);
  CHECK(lambda_exponent(c17, 3, 10).value == make_rational(-8, 5));
  CHECK(lambda_exponent(c17, 3, 10, Variant::dagger).value == make_rational(7, 5));
  const auto& c5 = context_for(5);
  CHECK(lambda_exponent(c5, 1, 3).value == make_rational(4, 9));
  CHECK(lambda_exponent(c5, 1, 3, Variant::dagger).value == make_rational(-5, 9));
  CHECK(lambda_exponent(c5, 1, 3).value == oracle::lambda_direct(1, 3, 5, false));
  CHECK_THROWS_AS(lambda_exponent(c17, 2, 4), std::invalid_argument);
}

TEST_CASE("Lambda against the double-sawtooth definition") {
  for (std::int64_t p : {5, 13, 17})
    for (auto v : {Variant::plain, Variant::dagger}) {
      const auto& c = context_for(p);
      for (std::int64_t k = 1; k <= 2 * p + 6; ++k)
        for (std::int64_t h = 0; h < k; ++h)
          if (gcd(h, k) == 1) CHECK(lambda_exponent(c, h, k, v).value == oracle::lambda_direct(h, k, p, v == Variant::dagger));
    }
}

TEST_CASE("phase from omega products") {
  const auto& c5 = context_for(5);
  CHECK(phi_root(c5, 1, 1) == 0);
  CHECK_THROWS_AS(phi_root(c5, 3, 6), std::invalid_argument);
  const auto& c17 = context_for(17);
  CHECK(phi_root(c17, 2, 17) == reduce_mod(lambda_exponent(c17, 2, 17).value, 2));
  for (std::int64_t p : {5, 13, 17})
    for (auto v : {Variant::plain, Variant::dagger})
      for (std::int64_t k = 1; k <= 30; ++k)
        for (std::int64_t h = 0; h < k; ++h) {
          if (gcd(h, k) != 1) continue;
          Rational r = phi_root(context_for(p), h, k, v);
          CHECK(r >= 0);
          CHECK(r < 2);
          CHECK(r == reduce_mod(lambda_exponent(context_for(p), h, k, v).value, 2));
        }
}

TEST_CASE("lambda_k") {
  PrecisionScope scope(160);
  const auto& c17 = context_for(17);
  CHECK(abs(lambda_k(c17, 17) - 1) < hp_pow2(-120));
  CHECK(abs(lambda_k(c17, 1) - sqrt(1 + 4 / sqrt(HPReal(17)))) < hp_pow2(-120));
  // p = 5 mod 8: ratios read off the cosecant products directly
  for (std::int64_t p : {5, 13}) {
    const auto& c = context_for(p);
    HPReal Q = q_constants(c).q_big;
    for (std::int64_t k = 1; k <= 41; k += 2) {
      if (k % p == 0) continue;
      int x = c.chi_of(k);
      HPReal l1 = lambda_k(c, k), l2 = lambda_k(c, 2 * k), l4 = lambda_k(c, 4 * k), l8 = lambda_k(c, 8 * k);
      CHECK(abs(l1 - (x == 1 ? q_constants(c).q_r : q_constants(c).q_s)) < hp_pow2(-110));
      CHECK(abs(l2 - pow(Q, -x) * l1) < hp_pow2(-110));
      CHECK(abs(l4 - sqrt(pow(Q, x)) * l1) < hp_pow2(-110));
      CHECK(abs(l8 - l2) < hp_pow2(-110));
      CHECK(abs(l4 - pow(Q, HPReal(-3 * c.chi_of(2 * k)) / 2) * l2) < hp_pow2(-110));
    }
  }
  for (auto v : {Variant::plain, Variant::dagger})
    for (std::int64_t k = 1; k <= 40; ++k) {
      if (k % 17 == 0) continue;
      CHECK(abs(lambda_k(c17, 2 * k, v) - lambda_k(c17, k, v)) < hp_pow2(-110));
    }
  auto q17 = q_constants(c17);
  for (std::int64_t k = 1; k <= 40; ++k) {
    if (k % 17 == 0) continue;
    HPReal want = c17.chi_of(k) == 1 ? q17.q_r : q17.q_s;
    CHECK(abs(lambda_k(c17, k) - want) < hp_pow2(-110));
  }
}

TEST_CASE("phase tables") {
  const auto& c13 = context_for(13);
  const auto& t = phase_table(c13, 12, Variant::plain);
  CHECK(t.h == std::vector<std::int64_t>{1, 5, 7, 11});
  for (std::size_t i = 0; i < t.h.size(); ++i) CHECK(t.lambda[i] == lambda_exponent(c13, t.h[i], 12).value);
  CHECK(&phase_table(c13, 12, Variant::plain) == &t);
}

TEST_CASE("L_k examples") {
  const auto& c17 = context_for(17);
  auto one = kloosterman_L(c17, 1, 5);
  CHECK(one.term_count == 1);
  CHECK(near(one, 1));
  auto six = kloosterman_L(c17, 6, 3), three = kloosterman_L(c17, 3, 3);
  CyclotomicSum diff = six.sum;
  diff.add(three.sum, 1);
  CHECK(test_zero(diff).zero);
  CHECK(kloosterman_L(c17, 4, 1).is_zero().zero);
  CHECK(kloosterman_L(c17, 4, 1).is_zero().exact);
  CHECK(near(kloosterman_L(c17, 7, 3), {2.35689586789221, 0}, 1e-12));
  CHECK_THROWS_AS(kloosterman_L(c17, 34, 1), std::invalid_argument);
}

TEST_CASE("L_K plus examples") {
  const auto& c17 = context_for(17);
  CHECK(kloosterman_L_plus(c17, 17, 2, 0).is_zero().zero);
  auto v = kloosterman_L_plus(c17, 17, 1, 0);
  CHECK_FALSE(v.is_zero().zero);
  CHECK(near(v, {4.50901642326447, 0}, 1e-12));
  CHECK(kloosterman_L_plus(c17, 51, 19, 2).is_zero().zero);
  CHECK(kloosterman_L_plus(c17, 51, 4, 1).is_zero().zero);
  CHECK_THROWS_AS(kloosterman_L_plus(c17, 34, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(kloosterman_L_plus(c17, 15, 1, 0), std::invalid_argument);
}

TEST_CASE("L_k(n,m;d) examples") {
  const auto& c17 = context_for(17);
  CyclotomicSum acc(CyclotomicSum::kUnbounded);
  for (std::int64_t d : c17.r_set) {
    acc.add(kloosterman_L_nmd(c17, 17, 1, 0, d).sum);
    acc.add(kloosterman_L_nmd(c17, 17, 1, 0, 17 - d).sum);
  }
  acc.add(kloosterman_L_plus(c17, 17, 1, 0).sum, -1);
  CHECK(test_zero(acc).zero);
  const auto& c5 = context_for(5);
  auto s1 = kloosterman_L_nmd(c5, 10, 1, 0, 1);
  CHECK(abs(s1.numeric()) <= HPReal(s1.term_count));
  CHECK(near(s1, {0.951056516295154, -0.309016994374947}, 1e-12));
  CHECK(kloosterman_L_nmd(c5, 10, 1, 0, 2).term_count == kloosterman_L_nmd(c5, 10, 1, 0, 3).term_count);
  CHECK_THROWS_AS(kloosterman_L_nmd(c5, 12, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("dagger examples") {
  const auto& c17 = context_for(17);
  CyclotomicSum diff = kloosterman_dagger(c17, 6, 3).sum;
  diff.add(kloosterman_dagger(c17, 3, 3).sum);
  CHECK(test_zero(diff).zero);
  CHECK(kloosterman_dagger(c17, 4, 1).is_zero().zero);
  CHECK(kloosterman_dagger_minus(c17, 17, 11, 0).is_zero().zero);
  CHECK(near(kloosterman_dagger(context_for(13), 5, 2), {-1, 0}, 1e-12));
}

TEST_CASE("sums against the double-precision oracle") {
  for (std::int64_t p : {5, 13, 17}) {
    const auto& c = context_for(p);
    auto all = [](std::int64_t) { return true; };
    auto quad = [&](std::int64_t h) { return oracle::legendre(h, p) == 1; };
    auto nonquad = [&](std::int64_t h) { return oracle::legendre(h, p) == -1; };
    for (std::int64_t k = 1; k <= 24; ++k) {
      if (k % p == 0) continue;
      for (std::int64_t n = 0; n <= 5; ++n) {
        CHECK(near(kloosterman_L(c, k, n), oracle::kloosterman(k, n, 0, p, false, all, false)));
        CHECK(near(kloosterman_dagger(c, k, n), oracle::kloosterman(k, n, 0, p, true, all, false)));
      }
    }
    for (std::int64_t K : {p, 3 * p, 5 * p})
      for (std::int64_t n = 0; n <= 4; ++n)
        for (std::int64_t m = 0; m <= 2; ++m) {
          CHECK(near(kloosterman_L_plus(c, K, n, m), oracle::kloosterman(K, n, m, p, false, quad, true)));
          CHECK(near(kloosterman_dagger_minus(c, K, n, m), oracle::kloosterman(K, n, m, p, true, nonquad, true)));
        }
    for (std::int64_t k : {p, 2 * p, 3 * p, 4 * p})
      for (std::int64_t d = 1; d < p; d += 3)
        for (std::int64_t m = 0; m <= 2; ++m) {
          auto in_class = [&](std::int64_t h) { return oracle::md(h, p) == d; };
          CHECK(near(kloosterman_L_nmd(c, k, 2, m, d), oracle::kloosterman(k, 2, m, p, false, in_class, k % 2 == 1)));
        }
  }
}

TEST_CASE("tau counts") {
  const auto& c17 = context_for(17);
  CHECK(tau_count(c17, 1, 17, TauPair::es).count % 2 == 0);
  CHECK(tau_count(c17, 2, 17, TauPair::es).count % 2 == 1);
  CHECK(tau_count(c17, 1, 17, TauPair::odd_s).count % 2 == 0);
  CHECK_THROWS_AS(tau_count(c17, 1, 34, TauPair::er), std::invalid_argument);
  CHECK_THROWS_AS(tau_count(c17, 1, 15, TauPair::er), std::invalid_argument);
  for (std::int64_t p : {5, 13, 17}) {
    const auto& c = context_for(p);
    for (std::int64_t K : {p, 3 * p, 7 * p})
      for (std::int64_t h = 1; h < K; h += 2) {
        if (gcd(h, K) != 1) continue;
        for (auto pair : {TauPair::er, TauPair::es, TauPair::odd_r, TauPair::odd_s}) {
          std::int64_t n = 0;
          for (std::int64_t mu = 1; mu < K; ++mu) {
            if (mu % p == 0) continue;
            bool even = mu % 2 == 0;
            bool want_even = pair == TauPair::er || pair == TauPair::es;
            int cls = pair == TauPair::er || pair == TauPair::odd_r ? 1 : -1;
            if (even == want_even && oracle::legendre(mu, p) == cls && oracle::md(h * mu, K) % 2 == 1) ++n;
          }
          auto t = tau_count(c, h, K, pair);
          CHECK(t.count == n);
          CHECK(t.count <= K * (p - 1) / 4);
        }
      }
  }
}

TEST_CASE("congruence checks for p = 17") {
  const auto& c17 = context_for(17);
  CHECK(check_congruence_mod16(c17, 1, 17, Variant::plain).pass);
  CHECK(check_congruence_mod16(c17, 5, 51, Variant::plain).pass);
  CHECK(check_congruence_mod16(c17, 3, 17, Variant::dagger).pass);
  CHECK(check_congruence_modThK(c17, 2, 17, Variant::plain).pass);
  CHECK(check_congruence_modThK(c17, 2, 51, Variant::plain).pass);
  CHECK(check_congruence_modThK(c17, 3, 17, Variant::dagger).pass);
  for (std::int64_t K = 17; K <= 17 * 9; K += 34)
    for (std::int64_t h = 1; h < K; ++h) {
      if (gcd(h, K) != 1) continue;
      Variant v = c17.chi_of(h) == 1 ? Variant::plain : Variant::dagger;
      CHECK(check_congruence_mod16(c17, h, K, v).pass);
      CHECK(check_congruence_modThK(c17, h, K, v).pass);
    }
}

TEST_CASE("congruence mod theta K for p = 5, 13") {
  for (std::int64_t p : {5, 13}) {
    const auto& c = context_for(p);
    for (std::int64_t K = p; K <= 7 * p; K += 2 * p)
      for (std::int64_t h = 1; h < K; ++h) {
        if (gcd(h, K) != 1) continue;
        Variant v = c.chi_of(h) == 1 ? Variant::plain : Variant::dagger;
        CHECK(check_congruence_modThK(c, h, K, v).pass);
      }
  }
}

TEST_CASE("tau table") {
  for (auto [p, K] : {std::pair<std::int64_t, std::int64_t>{17, 171}, {5, 105}, {13, 117}}) {
    auto r = verify_tau_table(context_for(p), K);
    CHECK(r.checked > 0);
    CHECK_MESSAGE(r.violations == 0, r.first_witness);
  }
}

TEST_CASE("trivial bound") {
  for (std::int64_t p : {5, 13, 17}) {
    const auto& c = context_for(p);
    for (std::int64_t k = 1; k <= 30; ++k) {
      if (k % p == 0) continue;
      auto s = kloosterman_L(c, k, 1);
      CHECK(abs(s.numeric()) <= HPReal(s.term_count) + hp_pow2(-100));
      CHECK(s.sum.l1_norm() <= s.term_count);
    }
  }
}

}
