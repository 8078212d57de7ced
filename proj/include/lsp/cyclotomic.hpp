#pragma once

#include "lsp/hp.hpp"
#include "lsp/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace lsp {

class OrderOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Integer combination of M-th roots of unity; coefficient j counts exp(2 pi i j / M).
// For even M the upper half is folded onto the lower half with a sign flip.
// Stored sparsely; coeffs() materializes the dense vector of length M.
class CyclotomicSum {
 public:
  static constexpr std::int64_t kDefaultOrderCap = 8160;  // 2 * lcm(16, 3, 2040)
  static constexpr std::int64_t kUnbounded = INT64_MAX;

  explicit CyclotomicSum(std::int64_t order_cap = kDefaultOrderCap);

  std::int64_t order() const { return order_; }
  std::int64_t order_cap() const { return cap_; }
  std::vector<std::int64_t> coeffs() const;
  const std::map<std::int64_t, std::int64_t>& terms() const { return terms_; }

  // adds mult * exp(pi i * half_turns)
  void add_phase(const Rational& half_turns, std::int64_t mult = 1);
  void add(const CyclotomicSum& other, std::int64_t mult = 1);

  std::int64_t l1_norm() const;
  bool all_coeffs_zero() const;

 private:
  void rescale(std::int64_t new_order);
  void bump(std::int64_t j, std::int64_t v);

  std::int64_t order_ = 1;
  std::int64_t cap_;
  std::map<std::int64_t, std::int64_t> terms_;
};

CyclotomicSum cyclo_add_phase(CyclotomicSum acc, const Rational& half_turns);

// Exact: reduces the coefficient polynomial modulo Phi_M.
bool cyclo_is_zero(const CyclotomicSum& s);

HPComplex cyclo_to_complex(const CyclotomicSum& s, unsigned bits = kDefaultPrecisionBits);

// Phi_m via the product over d | m of (x^d - 1)^mu(m/d); coefficients low to high.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t m);

struct ZeroTest {
  bool zero = false;
  bool exact = false;  // false: decided numerically, |value| < 2^(-P/2)
};

// Exact when the order is within exact_cap, numeric otherwise.
ZeroTest test_zero(const CyclotomicSum& s, std::int64_t exact_cap = CyclotomicSum::kDefaultOrderCap,
                   unsigned bits = kDefaultPrecisionBits);

namespace detail {
// Zero test by division through the full Phi_M without the radical splitting.
bool cyclo_is_zero_direct(const CyclotomicSum& s);
}  // namespace detail

}  // namespace lsp
