#pragma once

// Continuous functions Z_p -> Q_p seen through their values on the grid
// {0, ..., M}: Mahler coefficients, the indefinite sum, the forward
// difference, the shifted convolution and the coherent states (1 + l)^x.
//
// Binomial coefficients are integers and are produced by Pascal's rule
// modulo p^N, so no step here divides by n! and the transform loses no
// precision.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "padic.hpp"
#include "sequence.hpp"

namespace nashift {

class GridFunction {
 public:
  GridFunction(const PrimeConfig& cfg, std::vector<PadicScalar> values)
      : cfg_(cfg), values_(std::move(values)) {
    if (values_.empty()) throw DomainError("GridFunction: needs at least the value at 0");
    for (const auto& v : values_)
      if (!(v.config() == cfg_)) throw ConfigError("GridFunction: values must share one PrimeConfig");
  }

  static GridFunction constant(const PrimeConfig& cfg, std::size_t grid_max, const PadicScalar& c) {
    return GridFunction(cfg, std::vector<PadicScalar>(grid_max + 1, c));
  }

  static GridFunction from_integers(const PrimeConfig& cfg, const std::vector<std::int64_t>& xs) {
    std::vector<PadicScalar> v;
    v.reserve(xs.size());
    for (auto x : xs) v.push_back(PadicScalar::from_integer(x, cfg));
    return GridFunction(cfg, std::move(v));
  }

  const PrimeConfig& config() const { return cfg_; }
  /// The grid is {0, ..., grid_max()}.
  std::size_t grid_max() const { return values_.size() - 1; }
  const std::vector<PadicScalar>& values() const { return values_; }
  const PadicScalar& operator()(std::size_t x) const { return values_.at(x); }

  friend bool operator==(const GridFunction& a, const GridFunction& b) {
    if (a.values_.size() != b.values_.size()) return false;
    for (std::size_t i = 0; i < a.values_.size(); ++i)
      if (!(a.values_[i] == b.values_[i])) return false;
    return true;
  }

 private:
  PrimeConfig cfg_;
  std::vector<PadicScalar> values_;
};

/// Supremum of |phi(x)|_p over the grid.
inline Norm grid_norm(const GridFunction& phi) {
  Norm n = Norm::zero();
  for (const auto& v : phi.values()) n = max(n, v.abs());
  return n;
}

/// phi(j) = 0 for every grid point j <= n (membership in X_n).
inline bool vanishes_through(const GridFunction& phi, std::size_t n) {
  for (std::size_t j = 0; j <= n && j <= phi.grid_max(); ++j)
    if (!phi(j).is_zero()) return false;
  return true;
}

struct MahlerCoeffs {
  C0Vector coeffs;
};

/// Rows 0..n_max of Pascal's triangle, residues modulo p^N.
class BinomialTable {
 public:
  BinomialTable(const PrimeConfig& cfg, std::size_t n_max) : cfg_(cfg), rows_(n_max + 1) {
    const std::uint64_t m = cfg.power(cfg.precision());
    for (std::size_t n = 0; n <= n_max; ++n) {
      rows_[n].assign(n + 1, 1 % m);
      for (std::size_t k = 1; k < n; ++k) rows_[n][k] = detail::addmod(rows_[n - 1][k - 1], rows_[n - 1][k], m);
    }
  }

  std::size_t n_max() const { return rows_.size() - 1; }

  /// C(n, k) as an element of Z_p (zero for k > n).
  PadicScalar operator()(std::size_t n, std::size_t k) const {
    if (k > n) return PadicScalar::zero(cfg_);
    return PadicScalar::from_residue(rows_.at(n)[k], cfg_);
  }

  std::uint64_t residue(std::size_t n, std::size_t k) const { return k > n ? 0 : rows_.at(n)[k]; }

 private:
  PrimeConfig cfg_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

/// P_n(x) = x(x-1)...(x-n+1)/n! = C(x, n) at a nonnegative integer x.
inline PadicScalar mahler_P(std::size_t n, std::size_t x, const PrimeConfig& cfg) {
  if (n > x) return PadicScalar::zero(cfg);
  // Row x of Pascal's triangle up to column n.
  const std::uint64_t m = cfg.power(cfg.precision());
  std::vector<std::uint64_t> row(n + 1, 0);
  row[0] = 1 % m;
  for (std::size_t r = 1; r <= x; ++r)
    for (std::size_t k = std::min(r, n); k >= 1; --k) row[k] = detail::addmod(row[k], row[k - 1], m);
  return PadicScalar::from_residue(row[n], cfg);
}

/// b_n = sum_{k<=n} (-1)^{n-k} C(n,k) phi(k) for n = 0..M.
inline MahlerCoeffs mahler_coeffs(const GridFunction& phi) {
  const PrimeConfig& cfg = phi.config();
  const std::size_t grid_max = phi.grid_max();
  BinomialTable binom(cfg, grid_max);
  std::vector<PadicScalar> b;
  b.reserve(grid_max + 1);
  for (std::size_t n = 0; n <= grid_max; ++n) {
    PadicScalar s = PadicScalar::zero(cfg);
    for (std::size_t k = 0; k <= n; ++k) {
      PadicScalar term = binom(n, k) * phi(k);
      if ((n - k) % 2 == 0) s += term;
      else s -= term;
    }
    b.push_back(s);
  }
  return {C0Vector(cfg, std::move(b))};
}

/// sum_n b_n C(x, n).
inline PadicScalar mahler_eval(const MahlerCoeffs& b, std::size_t x) {
  const PrimeConfig& cfg = b.coeffs.config();
  const std::uint64_t m = cfg.power(cfg.precision());
  const std::size_t top = std::min(x, b.coeffs.size() == 0 ? 0 : b.coeffs.size() - 1);
  PadicScalar s = PadicScalar::zero(cfg);
  if (b.coeffs.empty()) return s;
  // C(x, n) from C(x, n-1) needs a division; walk row x of Pascal instead.
  std::vector<std::uint64_t> row(top + 1, 0);
  row[0] = 1 % m;
  for (std::size_t r = 1; r <= x; ++r)
    for (std::size_t k = std::min(r, top); k >= 1; --k) row[k] = detail::addmod(row[k], row[k - 1], m);
  for (std::size_t n = 0; n <= top; ++n) s += b.coeffs[n] * PadicScalar::from_residue(row[n], cfg);
  return s;
}

/// Values of sum_n b_n P_n on the grid {0, ..., grid_max}.
inline GridFunction mahler_synthesize(const MahlerCoeffs& b, std::size_t grid_max) {
  std::vector<PadicScalar> v;
  v.reserve(grid_max + 1);
  for (std::size_t x = 0; x <= grid_max; ++x) v.push_back(mahler_eval(b, x));
  return GridFunction(b.coeffs.config(), std::move(v));
}

/// (S2 phi)(n) = sum_{j<n} phi(j) on the same grid.
inline GridFunction indefinite_sum(const GridFunction& phi) {
  if (phi.grid_max() < 1) throw DomainError("indefinite_sum: grid needs M >= 1");
  std::vector<PadicScalar> v;
  v.reserve(phi.grid_max() + 1);
  PadicScalar s = PadicScalar::zero(phi.config());
  for (std::size_t n = 0; n <= phi.grid_max(); ++n) {
    v.push_back(s);
    s += phi(n);
  }
  return GridFunction(phi.config(), std::move(v));
}

/// (T2 phi)(x) = phi(x+1) - phi(x) on {0, ..., M-1}.
inline GridFunction difference(const GridFunction& phi) {
  if (phi.grid_max() < 1) throw DomainError("difference: grid needs M >= 1");
  std::vector<PadicScalar> v;
  v.reserve(phi.grid_max());
  for (std::size_t x = 0; x < phi.grid_max(); ++x) v.push_back(phi(x + 1) - phi(x));
  return GridFunction(phi.config(), std::move(v));
}

/// (phi * psi)(n) = sum_{i+j=n-1} phi(i) psi(j) on {0, ..., min(M_phi, M_psi)}.
inline GridFunction shifted_convolution(const GridFunction& phi, const GridFunction& psi) {
  if (!(phi.config() == psi.config()))
    throw ConfigError("shifted_convolution: operands use different PrimeConfigs");
  const std::size_t grid_max = std::min(phi.grid_max(), psi.grid_max());
  std::vector<PadicScalar> v;
  v.reserve(grid_max + 1);
  v.push_back(PadicScalar::zero(phi.config()));
  for (std::size_t n = 1; n <= grid_max; ++n) {
    PadicScalar s = PadicScalar::zero(phi.config());
    for (std::size_t i = 0; i < n; ++i) s += phi(i) * psi(n - 1 - i);
    v.push_back(s);
  }
  return GridFunction(phi.config(), std::move(v));
}

/// phi_l(x) = (1 + l)^x on {0, ..., M}; an eigenfunction of the difference
/// operator with eigenvalue l.  Over Q_p the admissible l are those with
/// |l|_p <= 1/p.
inline GridFunction coherent_state(const PadicScalar& lambda, std::size_t grid_max) {
  if (lambda.abs() >= Norm::power(0))
    throw DomainError("coherent_state: |lambda|_p must be < 1 (lambda in pZ_p)");
  const PadicScalar base = PadicScalar::one(lambda.config()) + lambda;
  std::vector<PadicScalar> v;
  v.reserve(grid_max + 1);
  PadicScalar term = PadicScalar::one(lambda.config());
  for (std::size_t x = 0; x <= grid_max; ++x) {
    v.push_back(term);
    term *= base;
  }
  return GridFunction(lambda.config(), std::move(v));
}

}  // namespace nashift
