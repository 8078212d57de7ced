#pragma once

#include "lsp/context.hpp"
#include "lsp/cyclotomic.hpp"
#include "lsp/hp.hpp"
#include "lsp/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lsp {

enum class Variant { plain, dagger };

const char* to_string(Variant v);

// phi_{h,k} = exp(pi i * value)
struct PhaseExponent {
  Rational value;
  Variant variant = Variant::plain;
};

// Lambda(h,k) from the Dedekind-sum form; requires (h,k) = 1.
PhaseExponent lambda_exponent(const PrimeContext& ctx, std::int64_t h, std::int64_t k, Variant v = Variant::plain);

// Phase of phi_{h,k} from the omega products, in half-turns reduced into [0,2).
Rational phi_root(const PrimeContext& ctx, std::int64_t h, std::int64_t k, Variant v = Variant::plain);

HPReal lambda_k(const PrimeContext& ctx, std::int64_t k, Variant v = Variant::plain,
                unsigned bits = kDefaultPrecisionBits);

// Lambda(h,k) for every 0 <= h < k with (h,k) = 1; cached per (p, k, variant).
struct PhaseTable {
  std::int64_t k = 0;
  Variant variant = Variant::plain;
  std::vector<std::int64_t> h;
  std::vector<Rational> lambda;
};

const PhaseTable& phase_table(const PrimeContext& ctx, std::int64_t k, Variant v);

enum class KloostermanKind { L, L_plus, L_dagger, L_dagger_minus, L_nmd };

struct KloostermanSum {
  CyclotomicSum sum{CyclotomicSum::kUnbounded};
  KloostermanKind kind = KloostermanKind::L;
  Variant variant = Variant::plain;
  std::int64_t p = 0, k = 0, n = 0, m = 0, d = -1;
  std::int64_t term_count = 0;

  ZeroTest is_zero(std::int64_t exact_cap = CyclotomicSum::kDefaultOrderCap) const { return test_zero(sum, exact_cap); }
  HPComplex numeric(unsigned bits = kDefaultPrecisionBits) const { return cyclo_to_complex(sum, bits); }
};

// L_k(n), (k,p) = 1
KloostermanSum kloosterman_L(const PrimeContext& ctx, std::int64_t k, std::int64_t n, Variant v = Variant::plain);
// L_K^+(n,m), K = p * odd, chi_h = +1
KloostermanSum kloosterman_L_plus(const PrimeContext& ctx, std::int64_t K, std::int64_t n, std::int64_t m);
// L_k(n,m;d), p | k, h = d mod p; the inverse is of h for even k and of 2h for odd k
KloostermanSum kloosterman_L_nmd(const PrimeContext& ctx, std::int64_t k, std::int64_t n, std::int64_t m,
                                 std::int64_t d, Variant v = Variant::plain);
// L_k^dagger(n), (k,p) = 1
KloostermanSum kloosterman_dagger(const PrimeContext& ctx, std::int64_t k, std::int64_t n);
// (L_K^dagger)^-(n,m), K = p * odd, chi_h = -1
KloostermanSum kloosterman_dagger_minus(const PrimeContext& ctx, std::int64_t K, std::int64_t n, std::int64_t m);

enum class TauPair { er, es, odd_r, odd_s };

const char* to_string(TauPair t);

struct TauCount {
  std::int64_t count = 0;
  TauPair pair = TauPair::er;
};

// K = p * odd, (h,K) = 1
TauCount tau_count(const PrimeContext& ctx, std::int64_t h, std::int64_t K, TauPair pair);

struct CheckResult {
  bool pass = false;
  std::string witness;
};

CheckResult check_congruence_mod16(const PrimeContext& ctx, std::int64_t h, std::int64_t K, Variant v);
CheckResult check_congruence_modThK(const PrimeContext& ctx, std::int64_t h, std::int64_t K, Variant v);

struct TauTableReport {
  std::int64_t checked = 0;
  std::int64_t violations = 0;
  std::string first_witness;
};

TauTableReport verify_tau_table(const PrimeContext& ctx, std::int64_t K_max);

}  // namespace lsp
