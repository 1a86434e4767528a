#pragma once

// Capped-precision p-adic scalars.
//
// A nonzero PadicScalar is x = p^v * u with u a unit known modulo p^k, so x
// itself is known modulo p^(v + k).  Absolute precision is capped at the
// configured N, and the relative precision k never exceeds N, which keeps
// every residue below p^N and lets the kernels work in 64-bit words with
// 128-bit products.  A value that is congruent to zero at its precision is
// a distinct state ("zero at precision") that remembers how much is known.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nashift {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched or invalid prime/precision settings.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the mathematical input is violated (|z|_p > 1, b = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The working precision cannot represent the requested quantity.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Moduli are kept below 2^62 so that a + b never overflows a u64.
inline constexpr u64 kModulusLimit = u64{1} << 62;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return s >= m ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

/// p^e, or nullopt when it would exceed kModulusLimit.
inline std::optional<u64> checked_pow(u64 p, std::int64_t e) {
  u64 r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (r > kModulusLimit / p) return std::nullopt;
    r *= p;
  }
  return r;
}

/// Inverse of a unit modulo m by the extended Euclidean algorithm.
inline u64 invmod(u64 a, u64 m) {
  __int128 old_r = static_cast<__int128>(a % m), r = static_cast<__int128>(m);
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw DomainError("invmod: argument is not a unit");
  __int128 mm = static_cast<__int128>(m);
  old_s %= mm;
  if (old_s < 0) old_s += mm;
  return static_cast<u64>(old_s);
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

/// p-adic valuation: an integer or +infinity (the valuation of zero).
class Valuation {
 public:
  constexpr Valuation(std::int64_t v) : value_(v) {}  // NOLINT(implicit)
  static constexpr Valuation infinite() { return Valuation(); }

  constexpr bool is_infinite() const { return !finite_; }
  std::int64_t value() const {
    if (!finite_) throw DomainError("valuation is infinite");
    return value_;
  }

  friend constexpr bool operator==(Valuation a, Valuation b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b) {
    if (!a.finite_ || !b.finite_) return b.finite_ <=> a.finite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr Valuation operator+(Valuation a, Valuation b) {
    if (!a.finite_ || !b.finite_) return infinite();
    return Valuation(a.value_ + b.value_);
  }

 private:
  constexpr Valuation() : value_(0), finite_(false) {}
  std::int64_t value_;
  bool finite_ = true;
};

/// A value of the p-adic absolute value, p^(-exponent), or zero.
/// Ordered like the reals it stands for: a smaller exponent is a larger norm.
class Norm {
 public:
  constexpr Norm() : exponent_(Valuation::infinite()) {}
  static constexpr Norm zero() { return Norm(); }
  static constexpr Norm power(std::int64_t exponent) { return Norm(Valuation(exponent)); }
  static constexpr Norm from_valuation(Valuation v) { return Norm(v); }

  constexpr bool is_zero() const { return exponent_.is_infinite(); }
  /// e with norm = p^(-e); throws for the zero norm.
  std::int64_t exponent() const { return exponent_.value(); }
  constexpr Valuation as_valuation() const { return exponent_; }

  friend constexpr bool operator==(Norm a, Norm b) { return a.exponent_ == b.exponent_; }
  friend constexpr std::strong_ordering operator<=>(Norm a, Norm b) {
    return b.exponent_ <=> a.exponent_;
  }
  friend constexpr Norm operator*(Norm a, Norm b) { return Norm(a.exponent_ + b.exponent_); }
  /// a / b; b must be nonzero.
  friend Norm operator/(Norm a, Norm b) {
    if (b.is_zero()) throw DomainError("norm division by zero");
    if (a.is_zero()) return zero();
    return power(a.exponent() - b.exponent());
  }

  /// "0", "1", "p^-e" or "p^e".
  std::string to_string(std::uint64_t p) const {
    if (is_zero()) return "0";
    std::int64_t e = exponent_.value();
    if (e == 0) return "1";
    return std::to_string(p) + "^" + std::to_string(-e);
  }

 private:
  constexpr explicit Norm(Valuation e) : exponent_(e) {}
  Valuation exponent_;
};

inline Norm max(Norm a, Norm b) { return a < b ? b : a; }

/// Prime p and absolute precision N.  p must be prime and p^N < 2^62.
class PrimeConfig {
 public:
  PrimeConfig(std::uint64_t p, int precision) : p_(p), n_(precision) {
    if (!detail::is_prime(p)) throw ConfigError("p = " + std::to_string(p) + " is not prime");
    if (precision < 1) throw ConfigError("precision must be at least 1");
    if (!detail::checked_pow(p, precision))
      throw PrecisionError("precision budget exceeded: " + std::to_string(p) + "^" +
                           std::to_string(precision) + " does not fit the 62-bit kernel");
  }

  std::uint64_t p() const { return p_; }
  int precision() const { return n_; }

  /// p^k for 0 <= k <= N.
  std::uint64_t power(std::int64_t k) const {
    std::uint64_t r = 1;
    std::uint64_t b = p_;
    while (k > 0) {
      if (k & 1) r *= b;
      k >>= 1;
      if (k) b *= b;
    }
    return r;
  }

  friend bool operator==(const PrimeConfig&, const PrimeConfig&) = default;

 private:
  std::uint64_t p_;
  int n_;
};

/// Legendre's formula: the exponent of p in n!.
inline std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p) {
  std::uint64_t nu = 0;
  while (n > 0) {
    n /= p;
    nu += n;
  }
  return nu;
}

/// Sum of the base-p digits of n.
inline std::uint64_t digit_sum(std::uint64_t n, std::uint64_t p) {
  std::uint64_t s = 0;
  for (; n > 0; n /= p) s += n % p;
  return s;
}

class PadicScalar {
 public:
  /// Zero known modulo p^N.
  explicit PadicScalar(const PrimeConfig& cfg) : cfg_(cfg), abs_(cfg.precision()) {}

  static PadicScalar zero(const PrimeConfig& cfg) { return PadicScalar(cfg); }

  /// Zero known only modulo p^abs_prec (capped at N).
  static PadicScalar zero_at(const PrimeConfig& cfg, std::int64_t abs_prec) {
    PadicScalar z(cfg);
    z.abs_ = std::min<std::int64_t>(abs_prec, cfg.precision());
    return z;
  }

  static PadicScalar one(const PrimeConfig& cfg) { return from_integer(1, cfg); }

  static PadicScalar from_integer(std::int64_t a, const PrimeConfig& cfg) {
    return from_rational(a, 1, cfg);
  }

  /// The integer whose residue modulo p^N is r.
  static PadicScalar from_residue(std::uint64_t r, const PrimeConfig& cfg) {
    r %= cfg.power(cfg.precision());
    if (r == 0) return zero(cfg);
    std::int64_t v = 0;
    while (r % cfg.p() == 0) r /= cfg.p(), ++v;
    return make(cfg, v, r, cfg.precision() - v);
  }

  /// p^e exactly (unit 1).
  static PadicScalar power_of_p(std::int64_t e, const PrimeConfig& cfg) {
    return make(cfg, e, 1, default_rel(cfg, e));
  }

  /// a/b expanded to the working precision.
  static PadicScalar from_rational(std::int64_t a, std::int64_t b, const PrimeConfig& cfg) {
    if (b == 0) throw DomainError("from_rational: division by zero (denominator is 0)");
    if (a == 0) return zero(cfg);
    const std::uint64_t p = cfg.p();
    bool negative = (a < 0) != (b < 0);
    std::uint64_t ua = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
    std::uint64_t ub = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
    std::int64_t va = 0, vb = 0;
    while (ua % p == 0) ua /= p, ++va;
    while (ub % p == 0) ub /= p, ++vb;
    std::int64_t v = va - vb;
    std::int64_t k = default_rel(cfg, v);
    if (k <= 0) return zero(cfg);
    std::uint64_t m = cfg.power(k);
    std::uint64_t u = detail::mulmod(ua % m, detail::invmod(ub % m, m), m);
    if (negative) u = m - u;
    return make(cfg, v, u, k);
  }

  /// p^v * unit, with unit taken modulo p^rel.  unit must be prime to p.
  static PadicScalar from_unit(const PrimeConfig& cfg, std::int64_t v, std::uint64_t unit,
                               std::int64_t rel) {
    if (unit % cfg.p() == 0) throw DomainError("from_unit: unit is divisible by p");
    if (rel < 1 || rel > cfg.precision())
      throw PrecisionError("from_unit: relative precision out of range");
    std::int64_t k = std::min<std::int64_t>(rel, cfg.precision() - v);
    if (k <= 0) return zero(cfg);
    return make(cfg, v, unit % cfg.power(k), k);
  }

  /// Builds from little-endian unit digits; digits[0] must be nonzero.
  static PadicScalar from_digits(const PrimeConfig& cfg, std::int64_t v,
                                 const std::vector<std::uint64_t>& digits) {
    if (digits.empty()) return zero(cfg);
    if (static_cast<std::int64_t>(digits.size()) > cfg.precision())
      throw PrecisionError("from_digits: more digits than the precision allows");
    std::uint64_t u = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
      if (*it >= cfg.p()) throw DomainError("from_digits: digit out of range");
      u = u * cfg.p() + *it;
    }
    return from_unit(cfg, v, u, static_cast<std::int64_t>(digits.size()));
  }

  const PrimeConfig& config() const { return cfg_; }
  std::uint64_t prime() const { return cfg_.p(); }

  bool is_zero() const { return rel_ == 0; }
  Valuation valuation() const { return is_zero() ? Valuation::infinite() : Valuation(val_); }
  /// |x|_p.
  Norm abs() const { return Norm::from_valuation(valuation()); }
  /// Number of known unit digits (0 for zero at precision).
  std::int64_t relative_precision() const { return rel_; }
  /// x is known modulo p^absolute_precision().
  std::int64_t absolute_precision() const { return is_zero() ? abs_ : val_ + rel_; }
  /// Unit part as a residue modulo p^relative_precision().
  std::uint64_t unit() const { return unit_; }

  /// Base-p digits of the unit, little-endian, one per known position.
  std::vector<std::uint64_t> digits() const {
    std::vector<std::uint64_t> d;
    d.reserve(static_cast<std::size_t>(rel_));
    std::uint64_t u = unit_;
    for (std::int64_t i = 0; i < rel_; ++i) {
      d.push_back(u % cfg_.p());
      u /= cfg_.p();
    }
    return d;
  }

  /// The residue of x modulo p^N, for x with nonnegative valuation.
  std::uint64_t residue() const {
    if (is_zero()) return 0;
    if (val_ < 0) throw DomainError("residue: value is not integral");
    std::uint64_t m = cfg_.power(cfg_.precision());
    return detail::mulmod(cfg_.power(val_) % m, unit_, m);
  }

  PadicScalar operator-() const {
    if (is_zero()) return *this;
    PadicScalar r = *this;
    r.unit_ = cfg_.power(rel_) - unit_;
    return r;
  }

  friend PadicScalar operator+(const PadicScalar& x, const PadicScalar& y) {
    check_same(x, y);
    const PrimeConfig& cfg = x.cfg_;
    std::int64_t abs = std::min(x.absolute_precision(), y.absolute_precision());
    if (x.is_zero()) return y.truncated(abs);
    if (y.is_zero()) return x.truncated(abs);
    std::int64_t m = std::min(x.val_, y.val_);
    if (m >= abs) return zero_at(cfg, abs);
    std::int64_t width = abs - m;
    std::uint64_t mod = cfg.power(width);
    auto lift = [&](const PadicScalar& s) -> std::uint64_t {
      std::int64_t shift = s.val_ - m;
      if (shift >= width) return 0;
      return detail::mulmod(s.unit_ % mod, cfg.power(shift), mod);
    };
    return normalize(cfg, m, detail::addmod(lift(x), lift(y), mod), width, abs);
  }

  friend PadicScalar operator-(const PadicScalar& x, const PadicScalar& y) { return x + (-y); }

  friend PadicScalar operator*(const PadicScalar& x, const PadicScalar& y) {
    check_same(x, y);
    const PrimeConfig& cfg = x.cfg_;
    if (x.is_zero() || y.is_zero()) {
      std::int64_t abs;
      if (x.is_zero() && y.is_zero()) abs = x.abs_ + y.abs_;
      else if (x.is_zero()) abs = x.abs_ + y.val_;
      else abs = y.abs_ + x.val_;
      return zero_at(cfg, abs);
    }
    std::int64_t v = x.val_ + y.val_;
    std::int64_t k = std::min({x.rel_, y.rel_, cfg.precision() - v});
    if (k <= 0) return zero_at(cfg, v + std::min(x.rel_, y.rel_));
    std::uint64_t mod = cfg.power(k);
    return make(cfg, v, detail::mulmod(x.unit_ % mod, y.unit_ % mod, mod), k);
  }

  friend PadicScalar operator/(const PadicScalar& x, const PadicScalar& y) {
    check_same(x, y);
    const PrimeConfig& cfg = x.cfg_;
    if (y.is_zero())
      throw PrecisionError("division by a value that is zero at precision p^" +
                           std::to_string(y.abs_) +
                           " (true zero or insufficient precision)");
    if (x.is_zero()) return zero_at(cfg, x.abs_ - y.val_);
    std::int64_t v = x.val_ - y.val_;
    std::int64_t k = std::min({x.rel_, y.rel_, cfg.precision() - v});
    if (k <= 0) return zero_at(cfg, v + std::min(x.rel_, y.rel_));
    std::uint64_t mod = cfg.power(k);
    std::uint64_t inv = detail::invmod(y.unit_ % mod, mod);
    return make(cfg, v, detail::mulmod(x.unit_ % mod, inv, mod), k);
  }

  PadicScalar& operator+=(const PadicScalar& o) { return *this = *this + o; }
  PadicScalar& operator-=(const PadicScalar& o) { return *this = *this - o; }
  PadicScalar& operator*=(const PadicScalar& o) { return *this = *this * o; }
  PadicScalar& operator/=(const PadicScalar& o) { return *this = *this / o; }

  PadicScalar inverse() const { return one(cfg_) / *this; }

  PadicScalar pow(std::uint64_t n) const {
    PadicScalar result = one(cfg_);
    PadicScalar base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return result;
  }

  /// Congruence at the coarser of the two precisions.
  friend bool operator==(const PadicScalar& x, const PadicScalar& y) { return (x - y).is_zero(); }

  /// Same value and same precision bookkeeping.
  friend bool identical(const PadicScalar& x, const PadicScalar& y) {
    return x.cfg_ == y.cfg_ && x.rel_ == y.rel_ && x.unit_ == y.unit_ &&
           (x.is_zero() ? x.abs_ == y.abs_ : x.val_ == y.val_);
  }

 private:
  static std::int64_t default_rel(const PrimeConfig& cfg, std::int64_t v) {
    return std::min<std::int64_t>(cfg.precision(), cfg.precision() - v);
  }

  static PadicScalar make(const PrimeConfig& cfg, std::int64_t v, std::uint64_t unit,
                          std::int64_t k) {
    PadicScalar r(cfg);
    if (k <= 0) return r;
    r.val_ = v;
    r.rel_ = k;
    r.unit_ = unit;
    r.abs_ = v + k;
    return r;
  }

  // s is p^m * s modulo p^(m + width); strips the p-part of s.
  static PadicScalar normalize(const PrimeConfig& cfg, std::int64_t m, std::uint64_t s,
                               std::int64_t width, std::int64_t abs) {
    if (s == 0) return zero_at(cfg, abs);
    std::int64_t t = 0;
    while (s % cfg.p() == 0) s /= cfg.p(), ++t;
    return make(cfg, m + t, s, width - t);
  }

  // The same value seen modulo p^abs (abs no finer than the current precision).
  PadicScalar truncated(std::int64_t abs) const {
    if (is_zero()) return zero_at(cfg_, std::min(abs, abs_));
    if (abs >= val_ + rel_) return *this;
    if (val_ >= abs) return zero_at(cfg_, abs);
    std::int64_t k = abs - val_;
    return make(cfg_, val_, unit_ % cfg_.power(k), k);
  }

  static void check_same(const PadicScalar& x, const PadicScalar& y) {
    if (!(x.cfg_ == y.cfg_))
      throw ConfigError("operands use different prime/precision settings (p=" +
                        std::to_string(x.prime()) + " vs p=" + std::to_string(y.prime()) + ")");
  }

  PrimeConfig cfg_;
  std::int64_t val_ = 0;
  std::int64_t rel_ = 0;
  std::uint64_t unit_ = 0;
  std::int64_t abs_;
};

inline Valuation valuation(const PadicScalar& x) { return x.valuation(); }

/// The exponent e with |x|_p = p^(-e); infinite for zero at precision.
inline Valuation abs_exponent(const PadicScalar& x) { return x.valuation(); }

}  // namespace nashift
