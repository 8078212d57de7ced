#include "lsp/modular.hpp"

namespace lsp {

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    while (n % d == 0) n /= d;
    r -= r / d;
  }
  if (n > 1) r -= r / n;
  return r;
}

int mobius(std::int64_t n) {
  int s = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    s = -s;
  }
  if (n > 1) s = -s;
  return s;
}

std::int64_t radical(std::int64_t n) {
  std::int64_t r = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    r *= d;
    while (n % d == 0) n /= d;
  }
  return n > 1 ? r * n : r;
}

}  // namespace lsp
