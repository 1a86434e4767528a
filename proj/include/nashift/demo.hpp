#pragma once

// Canned randomized demonstrations of the shift-operator results.  Every
// demo is a pure function of its parameters and seed, and reports one line
// per property as "<property>: <passed>/<total> exact" (or "FAILED").

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mahler.hpp"
#include "models.hpp"
#include "padic.hpp"
#include "random.hpp"
#include "sequence.hpp"
#include "tate.hpp"

namespace nashift::demo {

struct Params {
  std::uint64_t p = 5;
  int prec = 24;
  std::size_t len = 16;
  std::size_t trials = 100;
  std::uint64_t seed = 20240611;
};

struct Check {
  std::string property;
  std::size_t passed = 0;
  std::size_t total = 0;

  void record(bool ok) {
    ++total;
    if (ok) ++passed;
  }
  bool ok() const { return passed == total && total > 0; }
  std::string summary() const {
    return property + ": " + std::to_string(passed) + "/" + std::to_string(total) +
           (ok() ? " exact" : " FAILED");
  }
};

struct Report {
  std::string name;
  Params params;
  std::vector<Check> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["demo"] = name;
    j["p"] = params.p;
    j["prec"] = params.prec;
    j["len"] = params.len;
    j["trials"] = params.trials;
    j["seed"] = params.seed;
    nlohmann::json lines = nlohmann::json::array();
    nlohmann::json checks_j = nlohmann::json::array();
    for (const auto& c : checks) {
      lines.push_back(c.summary());
      checks_j.push_back({{"property", c.property}, {"passed", c.passed}, {"total", c.total}, {"ok", c.ok()}});
    }
    j["report"] = lines;
    j["checks"] = checks_j;
    j["status"] = ok() ? "pass" : "fail";
    return j;
  }
};

/// Adjoint identities through the pairing, and the degree-one annihilator.
inline Report duality(const Params& prm) {
  const PrimeConfig cfg(prm.p, prm.prec);
  Rng rng(prm.seed);
  Check adjoint{"adjoint identities"}, annihilates{"annihilator pairing vanishes"},
      invariant{"annihilator is T-invariant"};
  for (std::size_t t = 0; t < prm.trials; ++t) {
    auto x = random_sequence<linf_space>(rng, cfg, prm.len);
    auto y = random_sequence(rng, cfg, prm.len);
    bool st = pairing(x, shift_S(y)) == pairing(shift_T(x), y);
    bool ts = pairing(x, shift_T(y)) == pairing(shift_S(x), y);
    adjoint.record(st && ts);

    PadicScalar a = random_integer(rng, cfg, 3);
    auto ann = annihilator_geometric(a, prm.len);
    auto b = random_sequence(rng, cfg, prm.len - 1);
    annihilates.record(pairing(ann, shift_S(b) - a * b).is_zero());
    invariant.record(shift_T(ann) == (a * ann).resized(prm.len - 1));
  }
  return {"duality", prm, {adjoint, annihilates, invariant}};
}

/// Invariant subspaces P H(A_p), the divisibility lattice and the commutant.
inline Report thm1(const Params& prm) {
  const PrimeConfig cfg(prm.p, prm.prec);
  Rng rng(prm.seed);
  Check member{"P*f lies in P H"}, roots{"membership agrees with root evaluation"},
      lattice{"divisibility matches ideal containment"}, s1inv{"P H is S1-invariant"},
      commute{"M_phi commutes with S1"}, approx{"commutant approximation error is the tail norm"};
  for (std::size_t t = 0; t < prm.trials; ++t) {
    const std::size_t d = 1 + draw(rng, 3);
    MonicPoly P = random_monic(rng, cfg, d);
    TateSeries f = random_series(rng, cfg, prm.len);
    TateSeries pf = multiply(P.as_series(), f);
    member.record(ideal_member(pf, P).member);
    s1inv.record(ideal_member(S1_apply(pf), P).member);

    auto palette = random_root_palette(rng, cfg, 3);
    auto rts = draw_roots(rng, palette, d);
    MonicPoly Q = MonicPoly::from_roots(cfg, rts);
    TateSeries g = multiply(Q.as_series(), random_series(rng, cfg, prm.len / 2));
    if (draw(rng, 2) == 0) g = add(g, random_series(rng, cfg, d));
    roots.record(ideal_member(g, Q).member == vanishes_at_roots(g, rts));

    auto outer_roots = draw_roots(rng, palette, 1 + draw(rng, 3));
    auto inner_roots = draw_roots(rng, palette, 1 + draw(rng, 3));
    MonicPoly outer = MonicPoly::from_roots(cfg, outer_roots);
    MonicPoly inner = MonicPoly::from_roots(cfg, inner_roots);
    lattice.record(divides(outer, inner) == ideal_member(inner.as_series(), outer).member);

    TateSeries phi = random_series(rng, cfg, prm.len);
    MultiplicationOperator M{phi};
    commute.record(M.apply(S1_apply(f)) == S1_apply(M.apply(f)));
    const std::size_t cutoff = draw(rng, prm.len);
    CommutantApprox ca = commutant_poly_approx(phi, cutoff);
    Norm tail = Norm::zero();
    for (std::size_t n = cutoff + 1; n < prm.len; ++n) tail = max(tail, phi.coeffs[n].abs());
    bool ok = ca.error == tail;
    for (std::size_t j = 0; j < 3; ++j) {
      TateSeries ej = TateSeries::monomial(cfg, j);
      ok = ok && gauss_norm({(M.apply(ej).coeffs - ca.approximant.apply(ej).coeffs), Norm::zero()}) == tail;
    }
    approx.record(ok);
  }
  return {"thm1", prm, {member, roots, lattice, s1inv, commute, approx}};
}

/// Cyclic vectors of the backward shift and their density.
inline Report thm2(const Params& prm) {
  const PrimeConfig cfg(prm.p, prm.prec);
  Rng rng(prm.seed);
  Check quad{"quadratic-gap error at step k is p^-(k+1)"}, basis{"orbit approximates e_0..e_4"},
      dense{"densified vector within epsilon"}, decay{"densified vector passes decay check"};
  // Longest quadratic-gap vector the precision holds.
  std::size_t len = 1;
  while (static_cast<std::int64_t>(len * (len + 1) / 2) < prm.prec) ++len;
  const C0Vector x = cyclic_vector(CyclicKind::quadratic_gap, 0, len, cfg);
  for (std::size_t k = 0; k + 1 < len; ++k) {
    quad.record(cyclic_error(x, k) == Norm::power(static_cast<std::int64_t>(k) + 1));
    for (std::size_t n = 0; n <= 4 && n <= k; ++n)
      basis.record(cyclic_error(x, k, n) == Norm::power(static_cast<std::int64_t>(k) + 1));
  }
  for (std::size_t t = 0; t < prm.trials; ++t) {
    const std::int64_t m = draw_between(rng, 0, prm.prec / 3);
    std::vector<PadicScalar> ys = random_scalars(rng, cfg, prm.len);
    // Let the entries tend to zero so that k0 falls inside the truncation.
    for (std::size_t i = 0; i < ys.size(); ++i)
      ys[i] *= PadicScalar::power_of_p(static_cast<std::int64_t>(i) * 2, cfg);
    C0Vector y(cfg, std::move(ys));
    DensifyResult r = densify_cyclic(y, m);
    dense.record(sup_norm(y - r.vector) < Norm::power(m));
    decay.record(passes_decay_check(r.vector, r.k0));
  }
  return {"thm2", prm, {quad, basis, dense, decay}};
}

/// Universal model T_E W = W A for contractions on Q_p^d.
inline Report thm3(const Params& prm) {
  const PrimeConfig cfg(prm.p, prm.prec);
  Rng rng(prm.seed);
  Check inter{"T_E W u = W A u"}, iso{"W is an isometry"}, range{"range of W is T_E-invariant"},
      contraction{"||A^n u|| <= p^-n ||u||"};
  for (std::size_t t = 0; t < prm.trials; ++t) {
    const std::size_t d = 1 + draw(rng, 3);
    ContractionMatrix A = random_contraction(rng, cfg, d);
    EVector u = random_scalars(rng, cfg, d);
    UniversalityReport rep = verify_universality(A, u, prm.len);
    inter.record(rep.intertwines);
    iso.record(rep.isometric);
    range.record(rep.stays_in_range);
    EVectorSequence wu = embed_W(A, u, prm.len);
    bool ok = true;
    for (std::size_t n = 0; n < wu.size(); ++n)
      ok = ok && vector_norm(wu[n]) <= Norm::power(static_cast<std::int64_t>(n)) * vector_norm(u);
    contraction.record(ok);
  }
  return {"thm3", prm, {inter, iso, range, contraction}};
}

}  // namespace nashift::demo
