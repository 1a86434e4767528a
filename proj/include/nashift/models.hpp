#pragma once

// Differentiation on factorial-weighted power series, and the universal
// model of a vanishing contraction on E = Q_p^d as the backward shift
// restricted to the range of u -> (u, Au, A^2 u, ...).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padic.hpp"
#include "sequence.hpp"

namespace nashift {

/// g(z) = sum_n b_n z^n / n!, carried by the coefficient list (b_n).  The
/// n! weights are never divided out.
struct FactorialSeries {
  C0Vector coeffs;
};

/// g' in the same representation: b_n z^n/n! differentiates to
/// b_n z^{n-1}/(n-1)!, so the coefficient list shifts left.
inline FactorialSeries T3_apply(const FactorialSeries& g) { return {shift_T(g.coeffs)}; }

/// ||g||_3 = max_n |b_n|_p.
inline Norm factorial_norm(const FactorialSeries& g) { return sup_norm(g.coeffs); }

/// n/(p-1) - nu(n) as the exact fraction num/(p-1).
struct FactorialDeficit {
  std::uint64_t numerator;
  std::uint64_t denominator;
};

inline FactorialDeficit factorial_deficit(std::uint64_t n, std::uint64_t p) {
  return {n - (p - 1) * factorial_valuation(n, p), p - 1};
}

/// |z^n / n!|_p <= 1 whenever |z|_p <= p^{-1/(p-1)}, for every n <= n_max;
/// equivalently n/(p-1) >= nu(n), compared as integers n >= (p-1) nu(n).
inline bool radius_check(std::uint64_t n_max, std::uint64_t p) {
  for (std::uint64_t n = 0; n <= n_max; ++n)
    if (n < (p - 1) * factorial_valuation(n, p)) return false;
  return true;
}

using EVector = std::vector<PadicScalar>;

inline Norm vector_norm(const EVector& u) {
  Norm n = Norm::zero();
  for (const auto& x : u) n = max(n, x.abs());
  return n;
}

inline bool congruent(const EVector& a, const EVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

/// d x d matrix whose entries all lie in pZ_p, hence ||Au|| <= p^{-1} ||u||
/// and A^n u -> 0 for every u.
class ContractionMatrix {
 public:
  ContractionMatrix(const PrimeConfig& cfg, std::vector<std::vector<PadicScalar>> rows)
      : cfg_(cfg), rows_(std::move(rows)) {
    if (rows_.empty()) throw DomainError("ContractionMatrix: dimension must be at least 1");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].size() != rows_.size())
        throw DomainError("ContractionMatrix: row " + std::to_string(i) + " has length " +
                          std::to_string(rows_[i].size()) + ", expected " +
                          std::to_string(rows_.size()));
      for (std::size_t j = 0; j < rows_.size(); ++j) {
        const auto& a = rows_[i][j];
        if (!(a.config() == cfg_)) throw ConfigError("ContractionMatrix: entries must share one PrimeConfig");
        if (a.abs() > Norm::power(1))
          throw DomainError("ContractionMatrix: entry (" + std::to_string(i) + "," +
                            std::to_string(j) + ") is not in pZ_p");
      }
    }
  }

  const PrimeConfig& config() const { return cfg_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<std::vector<PadicScalar>>& rows() const { return rows_; }

  EVector apply(const EVector& u) const {
    if (u.size() != rows_.size())
      throw DomainError("ContractionMatrix::apply: vector has dimension " + std::to_string(u.size()) +
                        ", matrix has " + std::to_string(rows_.size()));
    EVector out;
    out.reserve(u.size());
    for (const auto& row : rows_) {
      PadicScalar s = PadicScalar::zero(cfg_);
      for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * u[j];
      out.push_back(s);
    }
    return out;
  }

 private:
  PrimeConfig cfg_;
  std::vector<std::vector<PadicScalar>> rows_;
};

/// A truncated element (x_0, ..., x_{L-1}) of c_0(E), E = Q_p^d.
class EVectorSequence {
 public:
  EVectorSequence(const PrimeConfig& cfg, std::size_t dim, std::vector<EVector> blocks)
      : cfg_(cfg), dim_(dim), blocks_(std::move(blocks)) {
    for (const auto& b : blocks_) {
      if (b.size() != dim_) throw DomainError("EVectorSequence: block dimension mismatch");
      for (const auto& x : b)
        if (!(x.config() == cfg_)) throw ConfigError("EVectorSequence: entries must share one PrimeConfig");
    }
  }

  const PrimeConfig& config() const { return cfg_; }
  std::size_t dimension() const { return dim_; }
  std::size_t size() const { return blocks_.size(); }
  const std::vector<EVector>& blocks() const { return blocks_; }
  const EVector& operator[](std::size_t i) const { return blocks_.at(i); }

 private:
  PrimeConfig cfg_;
  std::size_t dim_;
  std::vector<EVector> blocks_;
};

/// sup_j ||x_j||.
inline Norm sequence_norm(const EVectorSequence& x) {
  Norm n = Norm::zero();
  for (const auto& b : x.blocks()) n = max(n, vector_norm(b));
  return n;
}

/// W u = (u, Au, ..., A^{L-1} u).
inline EVectorSequence embed_W(const ContractionMatrix& A, const EVector& u, std::size_t length) {
  if (u.size() != A.dimension())
    throw DomainError("embed_W: u has dimension " + std::to_string(u.size()) + ", A has " +
                      std::to_string(A.dimension()));
  std::vector<EVector> blocks;
  blocks.reserve(length);
  EVector cur = u;
  for (std::size_t k = 0; k < length; ++k) {
    blocks.push_back(cur);
    if (k + 1 < length) cur = A.apply(cur);
  }
  return EVectorSequence(A.config(), A.dimension(), std::move(blocks));
}

/// T_E (x_0, x_1, ...) = (x_1, x_2, ...).
inline EVectorSequence TE_apply(const EVectorSequence& x) {
  if (x.size() == 0) return x;
  return EVectorSequence(x.config(), x.dimension(),
                         std::vector<EVector>(x.blocks().begin() + 1, x.blocks().end()));
}

struct UniversalityReport {
  bool intertwines;                     // T_E W u == W A u blockwise
  std::optional<std::size_t> first_mismatch;
  bool stays_in_range;                  // block k of T_E W u is A^k (A u)
  bool isometric;                       // ||W u|| == ||u||
  std::size_t blocks_checked;

  bool ok() const { return intertwines && stays_in_range && isometric; }
};

/// Checks T_E W u = W A u on a truncation of length L, that the image
/// sequence is again of the form (v, Av, A^2 v, ...), and that W preserves
/// the norm of u.
inline UniversalityReport verify_universality(const ContractionMatrix& A, const EVector& u,
                                              std::size_t length) {
  if (length < 2) throw DomainError("verify_universality: need L >= 2");
  const EVectorSequence wu = embed_W(A, u, length);
  const EVectorSequence lhs = TE_apply(wu);
  const EVector au = A.apply(u);
  const EVectorSequence rhs = embed_W(A, au, length - 1);

  UniversalityReport rep{true, std::nullopt, true, sequence_norm(wu) == vector_norm(u), lhs.size()};
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    if (!congruent(lhs[k], rhs[k])) {
      rep.intertwines = false;
      rep.first_mismatch = k;
      break;
    }
  }
  EVector expect = lhs.size() > 0 ? lhs[0] : EVector{};
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    if (!congruent(lhs[k], expect)) {
      rep.stays_in_range = false;
      break;
    }
    expect = A.apply(expect);
  }
  return rep;
}

}  // namespace nashift
