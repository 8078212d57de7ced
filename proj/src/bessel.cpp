#include "lsp/bessel.hpp"

#include <cmath>

namespace lsp {

HPReal bessel_I1(const HPReal& x, unsigned bits) {
  PrecisionScope scope(bits + kGuardBits);
  return bessel_i1_series(x, hp_pow2(-static_cast<long>(bits) - 8));
}

double bessel_I1(double x) { return bessel_i1_series(x, std::ldexp(1.0, -60)); }

}  // namespace lsp
