#pragma once

// Truncated sequence spaces c_0 and l^infinity over Q_p, the unilateral
// shift S and backward shift T, the duality pairing, the degree-one
// annihilator construction, and the cyclic-vector machinery for T.
//
// A sequence of length L stands for the sequence whose entries past L-1 are
// exactly zero.  Shifts change L explicitly instead of padding.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "padic.hpp"

namespace nashift {

struct c0_space {
  static constexpr const char* name = "c0";
};
struct linf_space {
  static constexpr const char* name = "linf";
};

template <class Space>
class Sequence {
 public:
  explicit Sequence(const PrimeConfig& cfg) : cfg_(cfg) {}

  Sequence(const PrimeConfig& cfg, std::vector<PadicScalar> entries)
      : cfg_(cfg), entries_(std::move(entries)) {
    for (const auto& e : entries_)
      if (!(e.config() == cfg_)) throw ConfigError("sequence entries must share one PrimeConfig");
  }

  static Sequence zeros(const PrimeConfig& cfg, std::size_t length) {
    return Sequence(cfg, std::vector<PadicScalar>(length, PadicScalar::zero(cfg)));
  }

  /// e_n, stored with length n + 1.
  static Sequence unit_vector(const PrimeConfig& cfg, std::size_t n) {
    auto e = zeros(cfg, n + 1);
    e.entries_[n] = PadicScalar::one(cfg);
    return e;
  }

  static Sequence from_integers(const PrimeConfig& cfg, const std::vector<std::int64_t>& xs) {
    std::vector<PadicScalar> v;
    v.reserve(xs.size());
    for (auto x : xs) v.push_back(PadicScalar::from_integer(x, cfg));
    return Sequence(cfg, std::move(v));
  }

  const PrimeConfig& config() const { return cfg_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<PadicScalar>& entries() const { return entries_; }

  /// Entry n, or zero past the stored length.
  PadicScalar operator[](std::size_t n) const {
    return n < entries_.size() ? entries_[n] : PadicScalar::zero(cfg_);
  }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Sequence of length n holding this one's first n entries (zero-extended).
  Sequence resized(std::size_t n) const {
    std::vector<PadicScalar> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back((*this)[i]);
    return Sequence(cfg_, std::move(v));
  }

  friend Sequence operator+(const Sequence& a, const Sequence& b) {
    std::size_t n = std::max(a.size(), b.size());
    std::vector<PadicScalar> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(a[i] + b[i]);
    return Sequence(a.cfg_, std::move(v));
  }

  friend Sequence operator-(const Sequence& a, const Sequence& b) {
    std::size_t n = std::max(a.size(), b.size());
    std::vector<PadicScalar> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(a[i] - b[i]);
    return Sequence(a.cfg_, std::move(v));
  }

  friend Sequence operator*(const PadicScalar& c, const Sequence& a) {
    std::vector<PadicScalar> v;
    v.reserve(a.size());
    for (const auto& x : a.entries_) v.push_back(c * x);
    return Sequence(a.cfg_, std::move(v));
  }

  /// Entrywise congruence; the shorter operand is read with its zero tail.
  friend bool operator==(const Sequence& a, const Sequence& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
      if (!(a[i] == b[i])) return false;
    return true;
  }

 private:
  PrimeConfig cfg_;
  std::vector<PadicScalar> entries_;
};

using C0Vector = Sequence<c0_space>;
using BoundedVector = Sequence<linf_space>;

/// c_0 sits inside l^infinity.
inline BoundedVector to_bounded(const C0Vector& x) { return BoundedVector(x.config(), x.entries()); }

/// Reinterprets a finite l^infinity truncation as a c_0 element.
inline C0Vector to_c0(const BoundedVector& x) { return C0Vector(x.config(), x.entries()); }

template <class Space>
Norm sup_norm(const Sequence<Space>& x) {
  Norm n = Norm::zero();
  for (const auto& e : x) n = max(n, e.abs());
  return n;
}

/// S(x_0, x_1, ...) = (0, x_0, x_1, ...).
template <class Space>
Sequence<Space> shift_S(const Sequence<Space>& x) {
  std::vector<PadicScalar> v;
  v.reserve(x.size() + 1);
  v.push_back(PadicScalar::zero(x.config()));
  v.insert(v.end(), x.begin(), x.end());
  return Sequence<Space>(x.config(), std::move(v));
}

/// T(x_0, x_1, ...) = (x_1, x_2, ...).
template <class Space>
Sequence<Space> shift_T(const Sequence<Space>& x) {
  if (x.empty()) return x;
  return Sequence<Space>(x.config(), std::vector<PadicScalar>(x.begin() + 1, x.end()));
}

/// T applied k times.
template <class Space>
Sequence<Space> shift_T(const Sequence<Space>& x, std::size_t k) {
  if (k >= x.size()) return Sequence<Space>(x.config());
  return Sequence<Space>(x.config(), std::vector<PadicScalar>(x.begin() + static_cast<std::ptrdiff_t>(k), x.end()));
}

/// <x, y> = sum_n x_n y_n over the indices both truncations cover.
inline PadicScalar pairing(const BoundedVector& x, const C0Vector& y) {
  if (!(x.config() == y.config())) throw ConfigError("pairing: operands use different PrimeConfigs");
  PadicScalar s = PadicScalar::zero(x.config());
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) s += x.entries()[i] * y.entries()[i];
  return s;
}

/// (1, a, a^2, ..., a^(L-1)): the generator of the annihilator of the
/// S-invariant subspace closure{ S b - a b }, i.e. of (z - a) H in the power
/// series model.
inline BoundedVector annihilator_geometric(const PadicScalar& a, std::size_t length) {
  if (a.abs() > Norm::power(0))
    throw DomainError("annihilator_geometric: |a|_p > 1, (a^n) is unbounded");
  std::vector<PadicScalar> v;
  v.reserve(length);
  PadicScalar term = PadicScalar::one(a.config());
  for (std::size_t n = 0; n < length; ++n) {
    v.push_back(term);
    term *= a;
  }
  return BoundedVector(a.config(), std::move(v));
}

enum class CyclicKind { quadratic_gap, doubly_exponential };

inline const char* to_string(CyclicKind k) {
  return k == CyclicKind::quadratic_gap ? "quadratic" : "doubly-exponential";
}

/// Valuation of entry k of the cyclic vector (for k >= k0).
inline std::int64_t cyclic_valuation(CyclicKind kind, std::uint64_t p, std::int64_t k) {
  if (kind == CyclicKind::quadratic_gap) return k * (k + 1) / 2;
  std::int64_t v = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    if (v > std::numeric_limits<std::int64_t>::max() / static_cast<std::int64_t>(p))
      throw PrecisionError("cyclic_vector: p^k overflows the valuation range");
    v *= static_cast<std::int64_t>(p);
  }
  return v;
}

/// x with x_k = 1 for k < k0 and x_k = p^{v(k)} for k0 <= k < L, where the
/// valuation gaps v(k+1) - v(k) grow without bound.
inline C0Vector cyclic_vector(CyclicKind kind, std::size_t k0, std::size_t length,
                              const PrimeConfig& cfg) {
  if (length <= k0) throw DomainError("cyclic_vector: need len > k0");
  std::vector<PadicScalar> v;
  v.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    if (k < k0) {
      v.push_back(PadicScalar::one(cfg));
      continue;
    }
    std::int64_t val = cyclic_valuation(kind, cfg.p(), static_cast<std::int64_t>(k));
    if (val >= cfg.precision())
      throw PrecisionError("cyclic_vector: entry " + std::to_string(k) + " has valuation " +
                           std::to_string(val) + ", beyond precision " +
                           std::to_string(cfg.precision()));
    v.push_back(PadicScalar::power_of_p(val, cfg));
  }
  return C0Vector(cfg, std::move(v));
}

/// || x_k^{-1} (T^{k-n} x - sum_{i<n} x_{k-n+i} e_i) - e_n ||, the distance
/// by which the orbit of x approximates e_n at step k.  n = 0 is the plain
/// ||x_k^{-1} T^k x - e_0||.
inline Norm cyclic_error(const C0Vector& x, std::size_t k, std::size_t n = 0) {
  if (n > k) throw DomainError("cyclic_error: need n <= k");
  if (x[k].is_zero())
    throw PrecisionError("cyclic_error: x_" + std::to_string(k) + " is zero at precision");
  C0Vector y = shift_T(x, k - n);
  std::vector<PadicScalar> v = y.entries();
  for (std::size_t i = 0; i < n && i < v.size(); ++i) v[i] = PadicScalar::zero(x.config());
  const PadicScalar inv = x[k].inverse();
  for (auto& e : v) e = inv * e;
  C0Vector approx(x.config(), std::move(v));
  return sup_norm(approx - C0Vector::unit_vector(x.config(), n));
}

/// cyclic_error(x, k) for k = from .. x.size()-1.
inline std::vector<Norm> decay_profile(const C0Vector& x, std::size_t from) {
  std::vector<Norm> out;
  for (std::size_t k = from; k < x.size(); ++k) out.push_back(cyclic_error(x, k));
  return out;
}

/// True when cyclic_error(x, k) is strictly decreasing for k >= from.
inline bool passes_decay_check(const C0Vector& x, std::size_t from) {
  auto errs = decay_profile(x, from);
  if (errs.size() < 2) return false;
  for (std::size_t i = 1; i < errs.size(); ++i)
    if (!(errs[i] < errs[i - 1])) return false;
  return true;
}

struct DensifyResult {
  C0Vector vector;
  std::size_t k0;
};

/// y~ = (y_0, ..., y_{k0-1}, x_{k0}, x_{k0+1}, ...) within p^{-eps_exponent}
/// of y, whose tail x_j = p^{eps_exponent + 1 + (j-k0)(j-k0+1)/2} makes it a
/// cyclic vector.  k0 is the first index past which every |y_j|_p < eps.
/// The tail runs to max(len y, k0 + 2) entries, or the longest tail the
/// precision admits if that is shorter than what y needs.
inline DensifyResult densify_cyclic(const C0Vector& y, std::int64_t eps_exponent,
                                    std::size_t min_tail = 2) {
  const PrimeConfig& cfg = y.config();
  const Norm eps = Norm::power(eps_exponent);
  const std::int64_t base = eps_exponent + 1;
  if (base >= cfg.precision())
    throw PrecisionError("densify_cyclic: epsilon = p^-" + std::to_string(eps_exponent) +
                         " is not representable above precision " +
                         std::to_string(cfg.precision()));
  std::size_t k0 = y.size();
  while (k0 > 0 && y[k0 - 1].abs() < eps) --k0;

  // Largest tail whose valuations stay inside the precision.
  std::size_t max_tail = 0;
  while (base + static_cast<std::int64_t>(max_tail * (max_tail + 1) / 2) < cfg.precision())
    ++max_tail;
  std::size_t tail = std::max<std::size_t>(y.size() > k0 ? y.size() - k0 : 0, min_tail);
  tail = std::min(tail, max_tail);
  if (tail < min_tail)
    throw PrecisionError("densify_cyclic: precision too small for a cyclic tail below epsilon");

  std::vector<PadicScalar> v(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(k0));
  for (std::size_t i = 0; i < tail; ++i)
    v.push_back(PadicScalar::power_of_p(base + static_cast<std::int64_t>(i * (i + 1) / 2), cfg));
  return {C0Vector(cfg, std::move(v)), k0};
}

}  // namespace nashift
