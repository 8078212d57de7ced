#include "lsp/rational.hpp"

#include <limits>
#include <stdexcept>

namespace lsp {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r{BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))};
  r.canonicalize();
  return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r{num, den};
  r.canonicalize();
  return r;
}

BigInt floor_of(const Rational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Rational rational_sawtooth(const Rational& x) {
  if (is_integer(x)) return Rational(0);
  Rational r = x - Rational(floor_of(x));
  r -= Rational(1, 2);
  return r;
}

Rational reduce_mod(const Rational& x, std::int64_t m) {
  Rational q = x / Rational(static_cast<long>(m));
  Rational r = x - Rational(floor_of(q) * static_cast<long>(m));
  return r;
}

std::int64_t to_int64(const BigInt& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("to_int64: out of range");
  return x.get_si();
}

std::int64_t to_int64(const Rational& x) {
  if (!is_integer(x)) throw std::domain_error("to_int64: not an integer");
  return to_int64(x.get_num());
}

std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace lsp
