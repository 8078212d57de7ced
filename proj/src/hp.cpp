#include "lsp/hp.hpp"

#include <cmath>
#include <sstream>

namespace lsp {

unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

PrecisionScope::PrecisionScope(unsigned bits) : saved_(HPReal::default_precision()) {
  unsigned want = digits10_for_bits(bits);
  if (want != saved_) HPReal::default_precision(want);
}

PrecisionScope::~PrecisionScope() {
  if (HPReal::default_precision() != saved_) HPReal::default_precision(saved_);
}

HPReal hp_pi() {
  HPReal r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

HPReal hp_from(const mpq_class& q) {
  HPReal r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

HPReal hp_from(const mpz_class& z) {
  HPReal r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

HPReal hp_pow2(long e) {
  HPReal r(1);
  mpfr_mul_2si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
  return r;
}

HPComplex exp(const HPComplex& a) {
  HPReal m = exp(a.re);
  return {m * cos(a.im), m * sin(a.im)};
}

HPComplex unit_root(const HPReal& turns) {
  HPReal t = 2 * hp_pi() * turns;
  return {cos(t), sin(t)};
}

HPComplex inverse(const HPComplex& a) {
  HPReal d = norm(a);
  return {a.re / d, -a.im / d};
}

std::string to_string(const HPReal& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

}  // namespace lsp
