#include "lsp/cyclotomic.hpp"

#include "lsp/modular.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace lsp {

CyclotomicSum::CyclotomicSum(std::int64_t order_cap) : cap_(order_cap) {}

void CyclotomicSum::rescale(std::int64_t new_order) {
  if (new_order == order_) return;
  if (new_order > cap_) throw OrderOverflow("cyclotomic order " + std::to_string(new_order) + " exceeds cap");
  std::int64_t f = new_order / order_;
  order_ = new_order;
  auto terms = std::move(terms_);
  terms_.clear();
  for (auto [j, v] : terms) bump(j * f, v);
}

void CyclotomicSum::bump(std::int64_t j, std::int64_t v) {
  if (order_ % 2 == 0 && j >= order_ / 2) {
    j -= order_ / 2;
    v = -v;
  }
  auto it = terms_.emplace(j, 0).first;
  it->second += v;
  if (it->second == 0) terms_.erase(it);
}

void CyclotomicSum::add_phase(const Rational& half_turns, std::int64_t mult) {
  Rational turns = half_turns / 2;
  std::int64_t den = to_int64(BigInt(turns.get_den()));
  BigInt numz = turns.get_num() % BigInt(static_cast<long>(den));
  std::int64_t num = mod(to_int64(numz), den);
  rescale(lcm(order_, den));
  bump(num * (order_ / den), mult);
}

void CyclotomicSum::add(const CyclotomicSum& other, std::int64_t mult) {
  rescale(lcm(order_, other.order_));
  std::int64_t f = order_ / other.order_;
  for (auto [j, v] : other.terms_) bump(j * f, v * mult);
}

std::vector<std::int64_t> CyclotomicSum::coeffs() const {
  std::vector<std::int64_t> c(static_cast<std::size_t>(order_), 0);
  for (auto [j, v] : terms_) c[j] = v;
  return c;
}

std::int64_t CyclotomicSum::l1_norm() const {
  std::int64_t s = 0;
  for (auto [j, v] : terms_) s += v < 0 ? -v : v;
  return s;
}

bool CyclotomicSum::all_coeffs_zero() const { return terms_.empty(); }

CyclotomicSum cyclo_add_phase(CyclotomicSum acc, const Rational& half_turns) {
  acc.add_phase(half_turns);
  return acc;
}

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t m) {
  std::vector<std::int64_t> up, down;
  for (std::int64_t d = 1; d <= m; ++d) {
    if (m % d) continue;
    int mu = mobius(m / d);
    if (mu == 1) up.push_back(d);
    if (mu == -1) down.push_back(d);
  }
  std::vector<std::int64_t> poly{1};
  for (auto d : up) {
    std::vector<std::int64_t> next(poly.size() + d, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + d] += poly[i];
      next[i] -= poly[i];
    }
    poly = std::move(next);
  }
  for (auto d : down) {
    std::size_t n = poly.size() - d;
    std::vector<std::int64_t> q(n, 0);
    for (std::size_t i = 0; i < n; ++i) q[i] = (i >= static_cast<std::size_t>(d) ? q[i - d] : 0) - poly[i];
    poly = std::move(q);
  }
  return poly;
}

namespace {

// true iff the polynomial (low to high) is divisible by the monic phi
bool divisible(std::vector<BigInt> f, const std::vector<std::int64_t>& phi) {
  std::size_t deg = phi.size() - 1;
  while (!f.empty() && f.back() == 0) f.pop_back();
  for (std::size_t i = f.size(); i-- > deg;) {
    if (f[i] == 0) continue;
    BigInt c = f[i];
    for (std::size_t j = 0; j <= deg; ++j)
      if (phi[j] != 0) f[i - deg + j] -= c * static_cast<long>(phi[j]);
  }
  for (std::size_t i = 0; i < std::min(deg, f.size()); ++i)
    if (f[i] != 0) return false;
  return true;
}

std::mutex g_phi_mutex;
std::map<std::int64_t, std::vector<std::int64_t>> g_phi_cache;

const std::vector<std::int64_t>& cached_phi(std::int64_t m) {
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  auto it = g_phi_cache.find(m);
  if (it == g_phi_cache.end()) it = g_phi_cache.emplace(m, cyclotomic_polynomial(m)).first;
  return it->second;
}

}  // namespace

bool cyclo_is_zero(const CyclotomicSum& s) {
  if (s.all_coeffs_zero()) return true;
  std::int64_t m = s.order();
  std::int64_t rad = radical(m);
  std::int64_t t = m / rad;
  const auto& phi = cached_phi(rad);
  std::map<std::int64_t, std::vector<BigInt>> split;
  for (auto [j, v] : s.terms()) {
    auto& g = split[j % t];
    if (g.empty()) g.resize(static_cast<std::size_t>(rad));
    g[j / t] = static_cast<long>(v);
  }
  for (auto& [r, g] : split)
    if (!divisible(std::move(g), phi)) return false;
  return true;
}

ZeroTest test_zero(const CyclotomicSum& s, std::int64_t exact_cap, unsigned bits) {
  if (s.order() <= exact_cap) return {cyclo_is_zero(s), true};
  HPComplex z = cyclo_to_complex(s, bits);
  PrecisionScope scope(bits + kGuardBits);
  return {abs(z) < hp_pow2(-static_cast<long>(bits) / 2), false};
}

namespace detail {

bool cyclo_is_zero_direct(const CyclotomicSum& s) {
  std::vector<BigInt> f;
  for (auto v : s.coeffs()) f.emplace_back(static_cast<long>(v));
  return divisible(std::move(f), cyclotomic_polynomial(s.order()));
}

}  // namespace detail

namespace {

struct RootTable {
  std::int64_t step;
  std::vector<HPComplex> small;  // zeta^b, b < step
  std::vector<HPComplex> big;    // zeta^(a*step)
};

std::mutex g_root_mutex;
std::map<std::pair<std::int64_t, unsigned>, std::shared_ptr<const RootTable>> g_root_cache;

std::shared_ptr<const RootTable> root_table(std::int64_t m, unsigned bits) {
  std::lock_guard<std::mutex> lock(g_root_mutex);
  auto key = std::make_pair(m, bits);
  auto it = g_root_cache.find(key);
  if (it != g_root_cache.end()) return it->second;
  PrecisionScope scope(bits + kGuardBits);
  auto t = std::make_shared<RootTable>();
  t->step = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(m))));
  HPReal inv_m = HPReal(1) / HPReal(m);
  for (std::int64_t b = 0; b < t->step; ++b) t->small.push_back(unit_root(HPReal(b) * inv_m));
  for (std::int64_t a = 0; a * t->step < m; ++a) t->big.push_back(unit_root(HPReal(a * t->step) * inv_m));
  g_root_cache.emplace(key, t);
  return t;
}

}  // namespace

HPComplex cyclo_to_complex(const CyclotomicSum& s, unsigned bits) {
  auto table = root_table(s.order(), bits);
  PrecisionScope scope(bits + kGuardBits);
  HPComplex acc;
  for (auto [j, v] : s.terms()) {
    HPComplex z = table->small[j % table->step] * table->big[j / table->step];
    HPReal w(v);
    acc.re += w * z.re;
    acc.im += w * z.im;
  }
  return acc;
}

}  // namespace lsp
