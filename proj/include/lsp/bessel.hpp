#pragma once

#include "lsp/hp.hpp"

#include <stdexcept>

namespace lsp {

// I_1 by the ascending series; stops once a term drops below rel_tol * partial sum.
template <class Real>
Real bessel_i1_series(const Real& x, const Real& rel_tol) {
  if (x < 0) throw std::domain_error("bessel_I1: negative argument");
  if (x == 0) return Real(0);
  Real half = x / 2;
  Real h2 = half * half;
  Real term = half;
  Real sum = term;
  for (long m = 1;; ++m) {
    term *= h2;
    term /= Real(m) * Real(m + 1);
    sum += term;
    if (term < rel_tol * sum) break;
  }
  return sum;
}

// Absolute error below 2^(8-P) for the arguments used here (x < ~200).
HPReal bessel_I1(const HPReal& x, unsigned bits = kDefaultPrecisionBits);
double bessel_I1(double x);

}  // namespace lsp
