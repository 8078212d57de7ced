#pragma once

#include "lsp/hp.hpp"
#include "lsp/rational.hpp"

#include <cstdint>
#include <vector>

namespace lsp {

enum class QuarticClass { zero, quartic, quadratic_nonquartic, nonquadratic };

const char* to_string(QuarticClass c);

struct PrimeContext {
  std::int64_t p = 0;
  std::int64_t q = 0;                 // (p-1)/2
  std::vector<int> chi;               // chi[a] for 0 <= a < p
  std::vector<std::int64_t> r_set;    // quadratic residues in 1..q
  std::vector<std::int64_t> s_set;    // nonresidues in 1..q
  Rational b2;
  std::int64_t g = 0;                 // primitive root
  std::int64_t i_val = 0;             // g^((p-1)/4) mod p
  int epsilon = 0;                    // q! = (-1)^epsilon * i mod p
  Rational kappa_sq;                  // (2/3)(1 - 1/p)
  std::vector<std::int64_t> dlog;     // dlog[a] base g, a in 1..p-1
  std::vector<int> chi_prefix;        // sum of chi[0..m]

  int chi_of(std::int64_t a) const { return chi[static_cast<std::size_t>(((a % p) + p) % p)]; }
};

// Throws std::invalid_argument unless p is a prime with p = 1 mod 4.
PrimeContext make_context(std::int64_t p);
// Memoized per p for the life of the process.
const PrimeContext& context_for(std::int64_t p);

int legendre(const PrimeContext& ctx, std::int64_t a);
QuarticClass quartic_class(const PrimeContext& ctx, std::int64_t a);
// exponent of a in base g, reduced mod 4; -1 when p | a
int quartic_index(const PrimeContext& ctx, std::int64_t a);
Rational b2_chi(const PrimeContext& ctx);

std::int64_t frac_mod(std::int64_t a, std::int64_t k);
std::int64_t norm_mod(std::int64_t a, std::int64_t k);

Rational b1_chi(const PrimeContext& ctx, const Rational& y);
// 2 * B_{1,chi}(c / b), b > 0
std::int64_t b1_chi_twice(const PrimeContext& ctx, std::int64_t c, std::int64_t b);

std::int64_t calB(const PrimeContext& ctx, std::int64_t a);

struct QConstants {
  HPReal q_r;
  HPReal q_s;
  HPReal q_big;
  unsigned bits = kDefaultPrecisionBits;
};

QConstants q_constants(const PrimeContext& ctx, unsigned bits = kDefaultPrecisionBits);

}  // namespace lsp
