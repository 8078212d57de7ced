#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lsp {

using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

BigInt floor_of(const Rational& x);
bool is_integer(const Rational& x);

// ((x)) = x - floor(x) - 1/2, and 0 at integers
Rational rational_sawtooth(const Rational& x);

// x reduced into [0, m)
Rational reduce_mod(const Rational& x, std::int64_t m);

std::int64_t to_int64(const BigInt& x);
std::int64_t to_int64(const Rational& x);  // throws unless integral and in range

std::string to_string(const Rational& x);

}  // namespace lsp
