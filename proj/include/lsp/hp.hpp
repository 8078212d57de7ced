#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include <string>

namespace lsp {

using HPReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                             boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr unsigned kGuardBits = 32;

// Sets the working precision of newly created HPReal values. The underlying default is
// process-wide, so the scope writes only when the value changes; worker threads stay
// race-free as long as the caller fixes the precision before spawning them.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

unsigned digits10_for_bits(unsigned bits);

HPReal hp_pi();
HPReal hp_from(const mpq_class& q);
HPReal hp_from(const mpz_class& z);
HPReal hp_pow2(long e);

struct HPComplex {
  HPReal re;
  HPReal im;

  HPComplex() : re(0), im(0) {}
  HPComplex(HPReal r) : re(std::move(r)), im(0) {}
  HPComplex(HPReal r, HPReal i) : re(std::move(r)), im(std::move(i)) {}

  HPComplex& operator+=(const HPComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  HPComplex& operator-=(const HPComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  HPComplex& operator*=(const HPComplex& o) {
    HPReal r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  HPComplex& operator/=(const HPComplex& o) {
    HPReal d = o.re * o.re + o.im * o.im;
    HPReal r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
};

inline HPComplex operator+(HPComplex a, const HPComplex& b) { return a += b; }
inline HPComplex operator-(HPComplex a, const HPComplex& b) { return a -= b; }
inline HPComplex operator*(HPComplex a, const HPComplex& b) { return a *= b; }
inline HPComplex operator/(HPComplex a, const HPComplex& b) { return a /= b; }
inline HPComplex operator-(const HPComplex& a) { return {-a.re, -a.im}; }

inline HPComplex conj(const HPComplex& a) { return {a.re, -a.im}; }
inline HPReal norm(const HPComplex& a) { return a.re * a.re + a.im * a.im; }
inline HPReal abs(const HPComplex& a) { return sqrt(norm(a)); }

HPComplex exp(const HPComplex& a);
// exp(2*pi*i*t)
HPComplex unit_root(const HPReal& turns);
HPComplex inverse(const HPComplex& a);

std::string to_string(const HPReal& x, int digits = 20);

}  // namespace lsp
