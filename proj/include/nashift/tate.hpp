#pragma once

// Truncated elements of the Tate algebra H(A_p) = { sum a_n z^n : a_n -> 0 }
// with the Gauss norm, the shift models S1 (multiplication by z) and T1,
// reduction modulo monic integral polynomials, ideal membership, the
// divisibility order on monic polynomials, and polynomial approximants of
// multiplication operators.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mahler.hpp"
#include "padic.hpp"
#include "sequence.hpp"

namespace nashift {

/// f(z) = sum_{n<L} a_n z^n plus an unknown remainder whose Gauss norm is at
/// most `tail`.  tail == 0 means f is exactly the polynomial shown.
struct TateSeries {
  C0Vector coeffs;
  Norm tail = Norm::zero();

  static TateSeries polynomial(C0Vector c) { return {std::move(c), Norm::zero()}; }
  static TateSeries one(const PrimeConfig& cfg) { return polynomial(C0Vector::unit_vector(cfg, 0)); }
  /// z^n.
  static TateSeries monomial(const PrimeConfig& cfg, std::size_t n) {
    return polynomial(C0Vector::unit_vector(cfg, n));
  }

  const PrimeConfig& config() const { return coeffs.config(); }
  bool is_polynomial() const { return tail.is_zero(); }

  /// Coefficientwise congruence (the tails are not compared).
  friend bool operator==(const TateSeries& f, const TateSeries& g) { return f.coeffs == g.coeffs; }
};

/// ||f|| = max_n |a_n|_p.
inline Norm gauss_norm(const TateSeries& f) { return sup_norm(f.coeffs); }

namespace detail {

inline C0Vector cauchy_product(const C0Vector& a, const C0Vector& b) {
  if (!(a.config() == b.config())) throw ConfigError("multiply: operands use different PrimeConfigs");
  if (a.empty() || b.empty()) return C0Vector(a.config());
  std::vector<PadicScalar> c(a.size() + b.size() - 1, PadicScalar::zero(a.config()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a.entries()[i] * b.entries()[j];
  return C0Vector(a.config(), std::move(c));
}

}  // namespace detail

/// Cauchy product.  Without a length the product of two polynomials is
/// returned in full.  Coefficients that an input's tail could reach are not
/// reported; they are folded, with anything cut by `length`, into the
/// result's tail bound.
inline TateSeries multiply(const TateSeries& f, const TateSeries& g,
                           std::optional<std::size_t> length = std::nullopt) {
  C0Vector full = detail::cauchy_product(f.coeffs, g.coeffs);
  std::size_t keep = full.size();
  if (!f.tail.is_zero()) keep = std::min(keep, f.coeffs.size());
  if (!g.tail.is_zero()) keep = std::min(keep, g.coeffs.size());
  if (length) keep = std::min(keep, *length);

  Norm dropped = Norm::zero();
  for (std::size_t i = keep; i < full.size(); ++i) dropped = max(dropped, full.entries()[i].abs());
  const Norm fn = max(gauss_norm(f), f.tail);
  const Norm gn = max(gauss_norm(g), g.tail);
  Norm tail = max(dropped, max(f.tail * gn, g.tail * fn));
  return {full.resized(keep), tail};
}

inline TateSeries add(const TateSeries& f, const TateSeries& g) {
  std::size_t keep = std::max(f.coeffs.size(), g.coeffs.size());
  if (!f.tail.is_zero()) keep = std::min(keep, f.coeffs.size());
  if (!g.tail.is_zero()) keep = std::min(keep, g.coeffs.size());
  C0Vector sum = f.coeffs + g.coeffs;
  Norm dropped = Norm::zero();
  for (std::size_t i = keep; i < sum.size(); ++i) dropped = max(dropped, sum.entries()[i].abs());
  return {sum.resized(keep), max(dropped, max(f.tail, g.tail))};
}

/// Horner evaluation of the stored coefficients at z with |z|_p <= 1.
inline PadicScalar evaluate(const TateSeries& f, const PadicScalar& z) {
  if (z.abs() > Norm::power(0)) throw DomainError("evaluate: |z|_p > 1, outside the closed unit ball");
  PadicScalar acc = PadicScalar::zero(f.config());
  const auto& a = f.coeffs.entries();
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
  return acc;
}

/// (S1 f)(z) = z f(z).
inline TateSeries S1_apply(const TateSeries& f) { return {shift_S(f.coeffs), f.tail}; }

/// (T1 f)(z) = (f(z) - f(0)) / z.
inline TateSeries T1_apply(const TateSeries& f) { return {shift_T(f.coeffs), f.tail}; }

/// z^d + c_{d-1} z^{d-1} + ... + c_0 with every |c_i|_p <= 1, so that all of
/// its roots lie in the closed unit ball.
class MonicPoly {
 public:
  MonicPoly(const PrimeConfig& cfg, std::vector<PadicScalar> lower)
      : cfg_(cfg), lower_(std::move(lower)) {
    if (lower_.empty()) throw DomainError("MonicPoly: degree must be at least 1");
    for (std::size_t i = 0; i < lower_.size(); ++i) {
      if (!(lower_[i].config() == cfg_)) throw ConfigError("MonicPoly: coefficients must share one PrimeConfig");
      if (lower_[i].abs() > Norm::power(0))
        throw DomainError("MonicPoly: coefficient c_" + std::to_string(i) +
                          " is not integral (|c|_p > 1)");
    }
  }

  /// prod_i (z - r_i).
  static MonicPoly from_roots(const PrimeConfig& cfg, const std::vector<PadicScalar>& roots) {
    if (roots.empty()) throw DomainError("MonicPoly::from_roots: need at least one root");
    std::vector<PadicScalar> c{PadicScalar::one(cfg)};  // full coefficients, low to high
    for (const auto& r : roots) {
      std::vector<PadicScalar> next(c.size() + 1, PadicScalar::zero(cfg));
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= r * c[i];
      }
      c = std::move(next);
    }
    c.pop_back();
    return MonicPoly(cfg, std::move(c));
  }

  const PrimeConfig& config() const { return cfg_; }
  std::size_t degree() const { return lower_.size(); }
  /// c_0 .. c_{d-1}.
  const std::vector<PadicScalar>& lower_coeffs() const { return lower_; }

  PadicScalar coefficient(std::size_t i) const {
    if (i < lower_.size()) return lower_[i];
    return i == lower_.size() ? PadicScalar::one(cfg_) : PadicScalar::zero(cfg_);
  }

  /// The polynomial as an (exact) Tate series.
  TateSeries as_series() const {
    std::vector<PadicScalar> c = lower_;
    c.push_back(PadicScalar::one(cfg_));
    return TateSeries::polynomial(C0Vector(cfg_, std::move(c)));
  }

  friend MonicPoly operator*(const MonicPoly& a, const MonicPoly& b) {
    TateSeries prod = multiply(a.as_series(), b.as_series());
    std::vector<PadicScalar> c = prod.coeffs.entries();
    c.pop_back();
    return MonicPoly(a.cfg_, std::move(c));
  }

 private:
  PrimeConfig cfg_;
  std::vector<PadicScalar> lower_;
};

struct Reduction {
  TateSeries quotient;
  /// r_0 .. r_{d-1}.
  C0Vector remainder;
};

/// f = q P + r with deg r < deg P, by rewriting each z^{d+k} through
/// z^d = (z^d - P) + P from the top coefficient down.  z^d - P is integral,
/// so no step raises the Gauss norm.
inline Reduction weierstrass_reduce(const TateSeries& f, const MonicPoly& P) {
  const PrimeConfig& cfg = f.config();
  if (!(cfg == P.config())) throw ConfigError("weierstrass_reduce: operands use different PrimeConfigs");
  const std::size_t d = P.degree();
  std::vector<PadicScalar> work = f.coeffs.entries();
  if (work.size() < d) work.resize(d, PadicScalar::zero(cfg));
  const std::size_t qlen = work.size() - d;
  std::vector<PadicScalar> q(qlen, PadicScalar::zero(cfg));
  for (std::size_t i = work.size(); i-- > d;) {
    const PadicScalar c = work[i];
    q[i - d] = c;
    for (std::size_t j = 0; j < d; ++j) work[i - d + j] -= c * P.lower_coeffs()[j];
    work[i] = PadicScalar::zero(cfg);
  }
  work.erase(work.begin() + static_cast<std::ptrdiff_t>(d), work.end());
  return {TateSeries{C0Vector(cfg, std::move(q)), f.tail}, C0Vector(cfg, std::move(work))};
}

struct Membership {
  bool member;
  C0Vector remainder;
  Norm remainder_norm;
  /// Bound on how far the remainder could move if g has an unknown tail.
  Norm uncertainty;
};

/// g in P H(A_p) at the working precision: the reduction of g modulo P
/// leaves a remainder that is zero at precision.  A nonzero remainder is
/// reported with its norm, however small.
inline Membership ideal_member(const TateSeries& g, const MonicPoly& P) {
  Reduction red = weierstrass_reduce(g, P);
  Norm rn = sup_norm(red.remainder);
  return {rn.is_zero(), std::move(red.remainder), rn, g.tail};
}

/// Root-side membership test for split P = prod (z - r_i): g vanishes to
/// order m at each root of multiplicity m, checked through the Hasse
/// derivatives sum_n C(n, j) a_n r^{n-j}, j < m.  Roots that are congruent at
/// precision count as the same root.
inline bool vanishes_at_roots(const TateSeries& g, const std::vector<PadicScalar>& roots) {
  std::vector<std::pair<PadicScalar, std::size_t>> distinct;
  for (const auto& r : roots) {
    auto it = std::find_if(distinct.begin(), distinct.end(), [&](const auto& e) { return e.first == r; });
    if (it == distinct.end()) distinct.emplace_back(r, 1);
    else ++it->second;
  }
  const auto& a = g.coeffs.entries();
  BinomialTable binom(g.config(), a.empty() ? 0 : a.size() - 1);
  for (const auto& [r, mult] : distinct) {
    for (std::size_t j = 0; j < mult; ++j) {
      PadicScalar s = PadicScalar::zero(g.config());
      for (std::size_t n = j; n < a.size(); ++n) s += binom(n, j) * a[n] * r.pow(n - j);
      if (!s.is_zero()) return false;
    }
  }
  return true;
}

/// outer divides inner, i.e. inner H(A_p) is contained in outer H(A_p).
inline bool divides(const MonicPoly& outer, const MonicPoly& inner) {
  if (outer.degree() > inner.degree()) return false;
  return sup_norm(weierstrass_reduce(inner.as_series(), outer).remainder).is_zero();
}

/// sum_n a_n S1^n as an operator on H(A_p).
struct OperatorPolynomial {
  C0Vector coeffs;

  TateSeries apply(const TateSeries& f) const {
    return multiply(TateSeries::polynomial(coeffs), f);
  }
};

/// f -> phi f.
struct MultiplicationOperator {
  TateSeries symbol;

  TateSeries apply(const TateSeries& f) const { return multiply(symbol, f); }
};

struct CommutantApprox {
  OperatorPolynomial approximant;
  /// ||M_phi - approximant||, equal to the Gauss norm of the dropped symbol part.
  Norm error;
};

/// The polynomial sum_{n<=cutoff} a_n S1^n approximating multiplication by
/// phi in operator norm.
inline CommutantApprox commutant_poly_approx(const TateSeries& phi, std::size_t cutoff) {
  if (cutoff >= phi.coeffs.size())
    throw DomainError("commutant_poly_approx: cutoff must be below the series length " +
                      std::to_string(phi.coeffs.size()));
  Norm err = phi.tail;
  for (std::size_t n = cutoff + 1; n < phi.coeffs.size(); ++n) err = max(err, phi.coeffs[n].abs());
  return {OperatorPolynomial{phi.coeffs.resized(cutoff + 1)}, err};
}

}  // namespace nashift
