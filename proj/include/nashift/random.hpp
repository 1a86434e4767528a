#pragma once

// Deterministic generators for randomized checks.  Draws are taken as
// rng() % n rather than through <random> distributions so that a fixed seed
// yields the same instances on every standard library.

#include <algorithm>
#include <cstdint>
#include <random>

#include "mahler.hpp"
#include "models.hpp"
#include "padic.hpp"
#include "sequence.hpp"
#include "tate.hpp"

namespace nashift {

using Rng = std::mt19937_64;

inline std::uint64_t draw(Rng& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

inline std::int64_t draw_between(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// A random element of p^min_val Z_p with valuation in [min_val, max_val],
/// known to full precision; zero with probability 1/(zero_odds).
inline PadicScalar random_scalar(Rng& rng, const PrimeConfig& cfg, std::int64_t min_val,
                                 std::int64_t max_val, std::uint64_t zero_odds = 8) {
  if (zero_odds != 0 && draw(rng, zero_odds) == 0) return PadicScalar::zero(cfg);
  std::int64_t v = draw_between(rng, min_val, max_val);
  std::int64_t k = std::min<std::int64_t>(cfg.precision(), cfg.precision() - v);
  if (k <= 0) return PadicScalar::zero(cfg);
  std::uint64_t m = cfg.power(k);
  std::uint64_t u = draw(rng, m);
  if (u % cfg.p() == 0) u += 1 + draw(rng, cfg.p() - 1);
  return PadicScalar::from_unit(cfg, v, u % m, k);
}

/// Random p-adic integer; valuations concentrated on small values.
inline PadicScalar random_integer(Rng& rng, const PrimeConfig& cfg, std::int64_t max_val = 6) {
  return random_scalar(rng, cfg, 0, max_val);
}

inline std::vector<PadicScalar> random_scalars(Rng& rng, const PrimeConfig& cfg, std::size_t n,
                                               std::int64_t max_val = 6) {
  std::vector<PadicScalar> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_integer(rng, cfg, max_val));
  return v;
}

template <class Space = c0_space>
Sequence<Space> random_sequence(Rng& rng, const PrimeConfig& cfg, std::size_t n,
                                std::int64_t max_val = 6) {
  return Sequence<Space>(cfg, random_scalars(rng, cfg, n, max_val));
}

inline GridFunction random_grid(Rng& rng, const PrimeConfig& cfg, std::size_t grid_max,
                                std::int64_t max_val = 6) {
  return GridFunction(cfg, random_scalars(rng, cfg, grid_max + 1, max_val));
}

inline TateSeries random_series(Rng& rng, const PrimeConfig& cfg, std::size_t n,
                                std::int64_t max_val = 6) {
  return TateSeries::polynomial(random_sequence(rng, cfg, n, max_val));
}

inline MonicPoly random_monic(Rng& rng, const PrimeConfig& cfg, std::size_t degree) {
  return MonicPoly(cfg, random_scalars(rng, cfg, degree));
}

/// Up to `count` roots in Z_p whose residues mod p are pairwise distinct.
/// Polynomials built from such a palette have a unit confluent Vandermonde
/// determinant, so root evaluation decides membership exactly at precision.
inline std::vector<PadicScalar> random_root_palette(Rng& rng, const PrimeConfig& cfg,
                                                    std::size_t count) {
  count = std::min<std::size_t>(count, cfg.p());
  std::vector<std::uint64_t> residues;
  while (residues.size() < count) {
    std::uint64_t r = draw(rng, cfg.p());
    if (std::find(residues.begin(), residues.end(), r) == residues.end()) residues.push_back(r);
  }
  std::vector<PadicScalar> roots;
  const PadicScalar p = PadicScalar::from_integer(static_cast<std::int64_t>(cfg.p()), cfg);
  for (auto r : residues)
    roots.push_back(PadicScalar::from_integer(static_cast<std::int64_t>(r), cfg) +
                    p * random_scalar(rng, cfg, 0, 4, 4));
  return roots;
}

inline std::vector<PadicScalar> draw_roots(Rng& rng, const std::vector<PadicScalar>& palette,
                                           std::size_t degree) {
  std::vector<PadicScalar> roots;
  for (std::size_t i = 0; i < degree; ++i) roots.push_back(palette[draw(rng, palette.size())]);
  return roots;
}

inline ContractionMatrix random_contraction(Rng& rng, const PrimeConfig& cfg, std::size_t d) {
  std::vector<std::vector<PadicScalar>> rows(d);
  for (auto& row : rows)
    for (std::size_t j = 0; j < d; ++j) row.push_back(random_scalar(rng, cfg, 1, 5));
  return ContractionMatrix(cfg, std::move(rows));
}

}  // namespace nashift
