#pragma once

#include "lsp/context.hpp"
#include "lsp/rational.hpp"

#include <cstdint>

namespace lsp {

// s(h,k) = sum over mu mod k of ((h mu / k)) ((mu / k))
Rational dedekind_s(std::int64_t h, std::int64_t k);
// t(h,k) = sum over 0 <= mu < k of mu [h mu / k]
BigInt dedekind_t(std::int64_t h, std::int64_t k);

// phi = p / (k,p); sums run over mu mod phi*k = lcm(k,p)
Rational s_chi(const PrimeContext& ctx, std::int64_t h, std::int64_t k);
Rational t_chi(const PrimeContext& ctx, std::int64_t h, std::int64_t k);

// requires b > 1 and (a,b) = 1
Rational s_tilde_chi(const PrimeContext& ctx, std::int64_t a, std::int64_t b);

// S(y) = sum over mu, nu mod p of mu chi_nu [(a mu + a y + nu) / p]; requires (a,p) = 1
BigInt S_of_y(const PrimeContext& ctx, std::int64_t a, const Rational& y);

bool verify_reciprocity_classical(std::int64_t h, std::int64_t k);

enum class ReciprocityCase { coprime, p_divides };

// coprime: (k,p) = 1, (h,k) = 1, h > 1.  p_divides: p | k, (h,k) = 1, h > 1.
// Throws std::invalid_argument on violated preconditions.
bool verify_reciprocity_chi(const PrimeContext& ctx, std::int64_t h, std::int64_t k, ReciprocityCase c);

}  // namespace lsp
