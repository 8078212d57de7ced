#pragma once

#include "lsp/charsums.hpp"
#include "lsp/context.hpp"
#include "lsp/hp.hpp"
#include "lsp/rational.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace lsp {

using BigIntSeries = std::vector<BigInt>;

struct SignedPartitionTable {
  std::int64_t p = 0;
  int sign = 1;
  BigIntSeries values;  // values[n] = p(n, sign * chi), values[0] = 1
};

SignedPartitionTable oracle_table(const PrimeContext& ctx, int sign, std::int64_t n_max);
// Same expansion with the geometric factors m = 1..n_max applied in the given order.
SignedPartitionTable oracle_table(const PrimeContext& ctx, int sign, std::int64_t n_max,
                                  const std::vector<std::int64_t>& factor_order);

std::set<std::int64_t> scan_vanishing(const SignedPartitionTable& table, std::int64_t modulus, std::int64_t n_min,
                                      std::int64_t n_max);
std::set<std::int64_t> scan_vanishing(const PrimeContext& ctx, int sign, std::int64_t modulus, std::int64_t n_min,
                                      std::int64_t n_max);

// coefficients of S^+ (sign = 1) or S^- (sign = -1)
std::vector<BigInt> sigma_coeffs(const PrimeContext& ctx, int sign, std::int64_t m_max);

struct ProductValue {
  HPComplex value;
  HPReal tail_bound;  // relative
};

// prod_{n < N} (1 - z q^n); rejects |q| >= 1
ProductValue q_pochhammer(const HPComplex& z, const HPComplex& q, std::int64_t truncation,
                          unsigned bits = kDefaultPrecisionBits);

enum class ThetaFamily { R_plus, R_minus, S_plus, S_minus, T_plus, T_minus, U_plus, U_minus, F_r, F_s, G_r, G_s, Phi, PhiDagger };

const char* to_string(ThetaFamily f);

// rejects |x| >= 1
ProductValue theta_products(const PrimeContext& ctx, ThetaFamily family, const HPComplex& x, std::int64_t truncation,
                            unsigned bits = kDefaultPrecisionBits);

enum class FeqCase { two_p, p, two, one };

const char* to_string(FeqCase c);
FeqCase feq_case_for(const PrimeContext& ctx, std::int64_t k);

struct FeqResult {
  HPReal residual;    // |LHS - RHS| / |LHS|
  HPReal tail_bound;  // combined relative truncation bound of both sides
  bool inconclusive = false;
  HPReal abs_x;
  HPReal abs_x_transformed;
};

FeqResult verify_functional_equation(const PrimeContext& ctx, FeqCase c, std::int64_t h, std::int64_t k,
                                     const HPComplex& z, std::int64_t truncation,
                                     unsigned bits = kDefaultPrecisionBits, Variant v = Variant::plain);

struct SeriesEvalConfig {
  std::int64_t k_max = 60;
  unsigned precision = kDefaultPrecisionBits;
  bool parallel = false;
};

struct RademacherResult {
  std::int64_t n = 0;
  HPReal raw;
  BigInt rounded;
  HPReal distance_to_integer;
  std::int64_t k_max = 0;
  bool flagged = false;  // distance_to_integer > 0.4
};

// c_m = (1 - chi_2/4) B2 - (p-1)/24 - 2m for the m with c_m > 0
std::vector<Rational> c_sequence(const PrimeContext& ctx);

RademacherResult rademacher_eval(const PrimeContext& ctx, int sign, std::int64_t n, const SeriesEvalConfig& cfg = {});
std::vector<RademacherResult> rademacher_eval_range(const PrimeContext& ctx, int sign, std::int64_t n_lo,
                                                    std::int64_t n_hi, const SeriesEvalConfig& cfg = {});

}  // namespace lsp
