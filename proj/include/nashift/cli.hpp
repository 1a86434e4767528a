#pragma once

// Command-line front end.  Every subcommand reads JSON (files or inline
// text), writes one JSON document, and exits with
//   0 success, 1 input parse error, 2 precondition violation,
//   3 precision exhaustion.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "demo.hpp"
#include "json_io.hpp"
#include "mahler.hpp"
#include "models.hpp"
#include "padic.hpp"
#include "sequence.hpp"
#include "tate.hpp"

namespace nashift::cli {

enum ExitCode : int { kOk = 0, kParseError = 1, kPrecondition = 2, kPrecision = 3 };

/// Which subcommand exposes each library operation.
struct OperationBinding {
  const char* operation;
  const char* subcommand;
};

inline const std::vector<OperationBinding>& operation_map() {
  static const std::vector<OperationBinding> map = {
      {"from_rational", "scalar parse"},
      {"add/sub/neg/mul/div", "scalar arith"},
      {"valuation/abs_exponent", "scalar val"},
      {"factorial_valuation", "scalar factval"},
      {"shift_S", "seq shift-s"},
      {"shift_T", "seq shift-t"},
      {"sup_norm", "seq norm"},
      {"pairing", "seq pair"},
      {"annihilator_geometric", "seq annihilator"},
      {"cyclic_vector/cyclic_error", "seq cyclic"},
      {"densify_cyclic", "seq densify"},
      {"mahler_P", "mahler basis"},
      {"mahler_coeffs", "mahler coeffs"},
      {"mahler_eval", "mahler eval"},
      {"indefinite_sum", "mahler sum"},
      {"difference", "mahler diff"},
      {"shifted_convolution", "mahler conv"},
      {"coherent_state", "mahler coherent"},
      {"gauss_norm", "tate norm"},
      {"multiply", "tate mul"},
      {"evaluate", "tate eval"},
      {"S1_apply", "tate s1"},
      {"T1_apply", "tate t1"},
      {"weierstrass_reduce", "tate reduce"},
      {"ideal_member", "tate member"},
      {"divides", "tate divides"},
      {"commutant_poly_approx", "tate commutant"},
      {"T3_apply", "model t3"},
      {"factorial_norm", "model fnorm"},
      {"radius_check", "model radius"},
      {"embed_W", "model embed"},
      {"TE_apply", "model te"},
      {"verify_universality", "model universal"},
      {"demo thm1", "demo thm1"},
      {"demo thm2", "demo thm2"},
      {"demo thm3", "demo thm3"},
      {"demo duality", "demo duality"},
  };
  return map;
}

namespace detail {

struct Options {
  std::uint64_t p = 5;
  int prec = 24;
  std::size_t len = 16;
  std::uint64_t seed = 20240611;
  std::size_t trials = 100;
  std::string out;

  // Inputs: file paths or inline JSON.
  std::string vec, x, y, grid, phi, psi, coeffs, f, g, poly, outer, inner, matrix, u, seq;
  // Scalars as "a/b" or scalar JSON.
  std::string value, xs, ys, a, lambda, z;
  std::string op = "add";
  std::string kind = "quadratic";
  std::int64_t n = 0, xpt = 0, k = -1, k0 = 0, eps_exp = 0, cutoff = 0, grid_max = 16;
  std::int64_t n_max = 10000;
  std::int64_t trunc = -1;
};

inline PrimeConfig flag_config(const Options& o) { return PrimeConfig(o.p, o.prec); }

inline PadicScalar scalar_arg(const std::string& text, const PrimeConfig& cfg, const std::string& field) {
  if (text.empty()) throw ParseError(field + ": missing value");
  if (text.front() == '{') return io::scalar_from_json(io::parse_text(text, field), cfg, field);
  return io::scalar_from_json(json(text), cfg, field);
}

inline std::size_t nonneg(std::int64_t v, const std::string& field) {
  if (v < 0) throw DomainError(field + ": must be nonnegative");
  return static_cast<std::size_t>(v);
}

inline json evector_sequence_to_json(const EVectorSequence& s) {
  json blocks = json::array();
  for (const auto& b : s.blocks()) blocks.push_back(io::scalars_to_json(b));
  return {{"p", s.config().p()}, {"prec", s.config().precision()}, {"d", s.dimension()}, {"blocks", blocks}};
}

inline EVectorSequence evector_sequence_from_json(const json& j, const std::string& field) {
  PrimeConfig cfg = io::config_from_json(j, field);
  const json& blocks = io::require(j, "blocks", field);
  if (!blocks.is_array()) throw ParseError(field + ".blocks: expected an array");
  std::vector<EVector> bs;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    bs.push_back(io::scalars_from_json(blocks[i], cfg, field + ".blocks[" + std::to_string(i) + "]"));
  std::size_t d = j.contains("d") ? j["d"].get<std::size_t>() : (bs.empty() ? 0 : bs[0].size());
  return EVectorSequence(cfg, d, std::move(bs));
}

inline json norm_json(Norm n, const PrimeConfig& cfg) { return io::norm_to_json(n, cfg.p()); }

inline json valuation_json(Valuation v) {
  if (v.is_infinite()) return nullptr;
  return v.value();
}

using Handler = std::function<json(const Options&)>;

struct Command {
  std::string group, name, help;
  Handler run;
  std::function<void(CLI::App&, Options&)> flags;
};

inline std::vector<Command> commands() {
  using O = Options;
  auto file = [](const char* flag, std::string O::*member, const char* help) {
    return [=](CLI::App& app, O& o) { app.add_option(flag, o.*member, help)->required(); };
  };
  auto both = [](auto f1, auto f2) {
    return [=](CLI::App& app, O& o) {
      f1(app, o);
      f2(app, o);
    };
  };
  auto none = [](CLI::App&, O&) {};

  std::vector<Command> cmds;

  // scalar
  cmds.push_back({"scalar", "parse", "expand a rational a/b to precision",
                  [](const O& o) {
                    auto cfg = flag_config(o);
                    PadicScalar x = scalar_arg(o.value, cfg, "--value");
                    json j = io::scalar_to_json(x);
                    j["abs"] = norm_json(x.abs(), cfg);
                    return j;
                  },
                  file("--value", &O::value, "rational a/b or scalar JSON")});
  cmds.push_back({"scalar", "arith", "add, sub, mul, div or neg",
                  [](const O& o) {
                    auto cfg = flag_config(o);
                    PadicScalar x = scalar_arg(o.xs, cfg, "--x");
                    if (o.op == "neg") return io::scalar_to_json(-x);
                    PadicScalar y = scalar_arg(o.ys, cfg, "--y");
                    if (o.op == "add") return io::scalar_to_json(x + y);
                    if (o.op == "sub") return io::scalar_to_json(x - y);
                    if (o.op == "mul") return io::scalar_to_json(x * y);
                    if (o.op == "div") return io::scalar_to_json(x / y);
                    throw ParseError("--op: expected add, sub, mul, div or neg");
                  },
                  [](CLI::App& app, O& o) {
                    app.add_option("--op", o.op, "add|sub|mul|div|neg");
                    app.add_option("--x", o.xs, "first operand")->required();
                    app.add_option("--y", o.ys, "second operand");
                  }});
  cmds.push_back({"scalar", "val", "valuation and absolute value",
                  [](const O& o) {
                    auto cfg = flag_config(o);
                    PadicScalar x = scalar_arg(o.value, cfg, "--value");
                    return json{{"valuation", valuation_json(valuation(x))},
                                {"abs_exponent", valuation_json(abs_exponent(x))},
                                {"abs", norm_json(x.abs(), cfg)}};
                  },
                  file("--value", &O::value, "rational a/b or scalar JSON")});
  cmds.push_back({"scalar", "factval", "exponent of p in n!",
                  [](const O& o) {
                    auto cfg = flag_config(o);
                    auto n = nonneg(o.n, "--n");
                    return json{{"n", n}, {"p", cfg.p()}, {"nu", factorial_valuation(n, cfg.p())},
                                {"digit_sum", digit_sum(n, cfg.p())}};
                  },
                  [](CLI::App& app, O& o) { app.add_option("--n", o.n, "n >= 0")->required(); }});

  // seq
  cmds.push_back({"seq", "shift-s", "unilateral shift S",
                  [](const O& o) {
                    return io::vector_to_json(shift_S(io::vector_from_json<c0_space>(io::load(o.vec, "--vec"), "--vec")));
                  },
                  file("--vec", &O::vec, "vector JSON")});
  cmds.push_back({"seq", "shift-t", "backward shift T",
                  [](const O& o) {
                    return io::vector_to_json(shift_T(io::vector_from_json<c0_space>(io::load(o.vec, "--vec"), "--vec")));
                  },
                  file("--vec", &O::vec, "vector JSON")});
  cmds.push_back({"seq", "norm", "sup norm",
                  [](const O& o) {
                    auto x = io::vector_from_json<c0_space>(io::load(o.vec, "--vec"), "--vec");
                    return json{{"norm", norm_json(sup_norm(x), x.config())}};
                  },
                  file("--vec", &O::vec, "vector JSON")});
  cmds.push_back({"seq", "pair", "duality pairing <x, y>, x in l^inf, y in c_0",
                  [](const O& o) {
                    auto x = io::vector_from_json<linf_space>(io::load(o.x, "--x"), "--x");
                    auto y = io::vector_from_json<c0_space>(io::load(o.y, "--y"), "--y");
                    return json{{"pairing", io::scalar_to_json(pairing(x, y))}};
                  },
                  both(file("--x", &O::x, "bounded vector JSON"), file("--y", &O::y, "c0 vector JSON"))});
  cmds.push_back({"seq", "annihilator", "(a^n), annihilator of (z - a)H",
                  [](const O& o) {
                    auto cfg = flag_config(o);
                    return io::vector_to_json(annihilator_geometric(scalar_arg(o.a, cfg, "--a"), o.len));
                  },
                  file("--a", &O::a, "a with |a|_p <= 1")});
  cmds.push_back({"seq", "cyclic", "cyclic vector of T and its approximation errors",
                  [](const O& o) {
                    auto cfg = flag_config(o);
                    CyclicKind kind;
                    if (o.kind == "quadratic" || o.kind == "quadratic-gap") kind = CyclicKind::quadratic_gap;
                    else if (o.kind == "doubly-exponential" || o.kind == "double") kind = CyclicKind::doubly_exponential;
                    else throw ParseError("--kind: expected quadratic or doubly-exponential");
                    std::size_t k0 = nonneg(o.k0, "--k0");
                    std::size_t len = o.len;
                    if (o.trunc < 0) {
                      // Longest vector the precision holds.
                      len = k0 + 1;
                      while (cyclic_valuation(kind, cfg.p(), static_cast<std::int64_t>(len)) < cfg.precision()) ++len;
                    }
                    C0Vector x = cyclic_vector(kind, k0, len, cfg);
                    json vals = json::array();
                    for (const auto& e : x) vals.push_back(valuation_json(e.valuation()));
                    json profile = json::array();
                    for (auto e : decay_profile(x, k0)) profile.push_back(norm_json(e, cfg));
                    json j{{"kind", to_string(kind)}, {"k0", k0}, {"len", len}, {"valuations", vals},
                           {"profile", profile}, {"vector", io::vector_to_json(x)}};
                    if (o.k >= 0) {
                      j["step"] = o.k;
                      j["error"] = norm_json(cyclic_error(x, static_cast<std::size_t>(o.k)), cfg);
                    }
                    return j;
                  },
                  [](CLI::App& app, O& o) {
                    app.add_option("--kind", o.kind, "quadratic|doubly-exponential");
                    app.add_option("--k", o.k, "report the error at this step");
                    app.add_option("--k0", o.k0, "first index of the decaying tail");
                  }});
  cmds.push_back({"seq", "densify", "cyclic vector within p^-m of the input",
                  [](const O& o) {
                    auto y = io::vector_from_json<c0_space>(io::load(o.vec, "--vec"), "--vec");
                    DensifyResult r = densify_cyclic(y, o.eps_exp);
                    json profile = json::array();
                    for (auto e : decay_profile(r.vector, r.k0)) profile.push_back(norm_json(e, y.config()));
                    return json{{"k0", r.k0},
                                {"vector", io::vector_to_json(r.vector)},
                                {"distance", norm_json(sup_norm(y - r.vector), y.config())},
                                {"profile", profile},
                                {"passes_decay_check", passes_decay_check(r.vector, r.k0)}};
                  },
                  [](CLI::App& app, O& o) {
                    app.add_option("--vec", o.vec, "vector JSON")->required();
                    app.add_option("--eps-exp", o.eps_exp, "epsilon = p^-m")->required();
                  }});

  // mahler
  cmds.push_back({"mahler", "basis", "P_n(x) = C(x, n)",
                  [](const O& o) {
                    auto cfg = flag_config(o);
                    return io::scalar_to_json(mahler_P(nonneg(o.n, "--n"), nonneg(o.xpt, "--x"), cfg));
                  },
                  [](CLI::App& app, O& o) {
                    app.add_option("--n", o.n, "degree")->required();
                    app.add_option("--x", o.xpt, "grid point")->required();
                  }});
  cmds.push_back({"mahler", "coeffs", "Mahler coefficients of a grid function",
                  [](const O& o) {
                    return io::vector_to_json(mahler_coeffs(io::grid_from_json(io::load(o.grid, "--grid"), "--grid")).coeffs);
                  },
                  file("--grid", &O::grid, "grid JSON")});
  cmds.push_back({"mahler", "eval", "sum b_n C(x, n)",
                  [](const O& o) {
                    MahlerCoeffs b{io::vector_from_json<c0_space>(io::load(o.coeffs, "--coeffs"), "--coeffs")};
                    return io::scalar_to_json(mahler_eval(b, nonneg(o.xpt, "--x")));
                  },
                  [](CLI::App& app, O& o) {
                    app.add_option("--coeffs", o.coeffs, "vector JSON of Mahler coefficients")->required();
                    app.add_option("--x", o.xpt, "grid point")->required();
                  }});
  cmds.push_back({"mahler", "sum", "indefinite sum S2",
                  [](const O& o) {
                    return io::grid_to_json(indefinite_sum(io::grid_from_json(io::load(o.grid, "--grid"), "--grid")));
                  },
                  file("--grid", &O::grid, "grid JSON")});
  cmds.push_back({"mahler", "diff", "forward difference T2",
                  [](const O& o) {
                    return io::grid_to_json(difference(io::grid_from_json(io::load(o.grid, "--grid"), "--grid")));
                  },
                  file("--grid", &O::grid, "grid JSON")});
  cmds.push_back({"mahler", "conv", "shifted convolution",
                  [](const O& o) {
                    return io::grid_to_json(shifted_convolution(io::grid_from_json(io::load(o.phi, "--phi"), "--phi"),
                                                                io::grid_from_json(io::load(o.psi, "--psi"), "--psi")));
                  },
                  both(file("--phi", &O::phi, "grid JSON"), file("--psi", &O::psi, "grid JSON"))});
  cmds.push_back({"mahler", "coherent", "coherent state (1 + lambda)^x",
                  [](const O& o) {
                    auto cfg = flag_config(o);
                    return io::grid_to_json(coherent_state(scalar_arg(o.lambda, cfg, "--lambda"), nonneg(o.grid_max, "--M")));
                  },
                  [](CLI::App& app, O& o) {
                    app.add_option("--lambda", o.lambda, "eigenvalue in pZ_p")->required();
                    app.add_option("--M", o.grid_max, "grid size");
                  }});

  // tate
  auto load_series = [](const std::string& s, const std::string& field) {
    return io::series_from_json(io::load(s, field), field);
  };
  cmds.push_back({"tate", "norm", "Gauss norm",
                  [=](const O& o) {
                    auto f = load_series(o.f, "--f");
                    return json{{"norm", norm_json(gauss_norm(f), f.config())}};
                  },
                  file("--f", &O::f, "series JSON")});
  cmds.push_back({"tate", "mul", "Cauchy product",
                  [=](const O& o) {
                    std::optional<std::size_t> L;
                    if (o.trunc >= 0) L = o.len;
                    return io::series_to_json(multiply(load_series(o.f, "--f"), load_series(o.g, "--g"), L));
                  },
                  both(file("--f", &O::f, "series JSON"), file("--g", &O::g, "series JSON"))});
  cmds.push_back({"tate", "eval", "f(z) for |z|_p <= 1",
                  [=](const O& o) {
                    auto f = load_series(o.f, "--f");
                    return io::scalar_to_json(evaluate(f, scalar_arg(o.z, f.config(), "--z")));
                  },
                  both(file("--f", &O::f, "series JSON"), file("--z", &O::z, "point"))});
  cmds.push_back({"tate", "s1", "multiplication by z",
                  [=](const O& o) { return io::series_to_json(S1_apply(load_series(o.f, "--f"))); },
                  file("--f", &O::f, "series JSON")});
  cmds.push_back({"tate", "t1", "(f - f(0)) / z",
                  [=](const O& o) { return io::series_to_json(T1_apply(load_series(o.f, "--f"))); },
                  file("--f", &O::f, "series JSON")});
  cmds.push_back({"tate", "reduce", "f = qP + r",
                  [=](const O& o) {
                    auto f = load_series(o.f, "--f");
                    auto P = io::poly_from_json(io::load(o.poly, "--poly"), "--poly", f.config());
                    Reduction r = weierstrass_reduce(f, P);
                    return json{{"quotient", io::series_to_json(r.quotient)},
                                {"remainder", io::vector_to_json(r.remainder)},
                                {"remainder_norm", norm_json(sup_norm(r.remainder), f.config())}};
                  },
                  both(file("--f", &O::f, "series JSON"), file("--poly", &O::poly, "poly JSON"))});
  cmds.push_back({"tate", "member", "g in P H(A_p)",
                  [=](const O& o) {
                    auto g = load_series(o.g, "--g");
                    auto P = io::poly_from_json(io::load(o.poly, "--poly"), "--poly", g.config());
                    Membership m = ideal_member(g, P);
                    return json{{"member", m.member}, {"remainder_norm", norm_json(m.remainder_norm, g.config())}};
                  },
                  both(file("--g", &O::g, "series JSON"), file("--poly", &O::poly, "poly JSON"))});
  cmds.push_back({"tate", "divides", "outer | inner",
                  [](const O& o) {
                    auto cfg_json = io::load(o.outer, "--outer");
                    std::optional<PrimeConfig> fallback;
                    if (!cfg_json.contains("p")) fallback = flag_config(o);
                    auto outer = io::poly_from_json(cfg_json, "--outer", fallback);
                    auto inner = io::poly_from_json(io::load(o.inner, "--inner"), "--inner", outer.config());
                    return json{{"divides", divides(outer, inner)}};
                  },
                  both(file("--outer", &O::outer, "poly JSON"), file("--inner", &O::inner, "poly JSON"))});
  cmds.push_back({"tate", "commutant", "polynomial in S1 approximating M_phi",
                  [=](const O& o) {
                    auto f = load_series(o.f, "--f");
                    CommutantApprox ca = commutant_poly_approx(f, nonneg(o.cutoff, "--cutoff"));
                    return json{{"operator_coeffs", io::vector_to_json(ca.approximant.coeffs)},
                                {"error", norm_json(ca.error, f.config())}};
                  },
                  [](CLI::App& app, O& o) {
                    app.add_option("--f", o.f, "series JSON (the symbol phi)")->required();
                    app.add_option("--cutoff", o.cutoff, "highest power of S1 kept")->required();
                  }});

  // model
  auto load_fact = [](const std::string& s) { return io::factorial_from_json(io::load(s, "--g"), "--g"); };
  cmds.push_back({"model", "t3", "differentiation on factorial series",
                  [=](const O& o) { return io::factorial_to_json(T3_apply(load_fact(o.g))); },
                  file("--g", &O::g, "factorial series JSON")});
  cmds.push_back({"model", "fnorm", "norm of a factorial series",
                  [=](const O& o) {
                    auto g = load_fact(o.g);
                    return json{{"norm", norm_json(factorial_norm(g), g.coeffs.config())}};
                  },
                  file("--g", &O::g, "factorial series JSON")});
  cmds.push_back({"model", "radius", "|z^n/n!| <= 1 on |z| <= p^(-1/(p-1)) for n <= n_max",
                  [](const O& o) {
                    auto cfg = flag_config(o);
                    auto n_max = nonneg(o.n_max, "--n-max");
                    return json{{"p", cfg.p()}, {"n_max", n_max}, {"holds", radius_check(n_max, cfg.p())}};
                  },
                  [](CLI::App& app, O& o) { app.add_option("--n-max", o.n_max, "largest n checked"); }});
  auto load_matrix_u = [](const O& o) {
    auto mj = io::load(o.matrix, "--matrix");
    std::optional<PrimeConfig> fallback;
    if (!mj.contains("p")) fallback = flag_config(o);
    ContractionMatrix A = io::matrix_from_json(mj, "--matrix", fallback);
    auto uj = io::load(o.u, "--u");
    EVector u = uj.is_array() ? io::scalars_from_json(uj, A.config(), "--u")
                              : io::scalars_from_json(io::require(uj, "entries", "--u"),
                                                      io::config_from_json(uj, "--u", A.config()), "--u.entries");
    return std::make_pair(A, u);
  };
  cmds.push_back({"model", "embed", "W u = (u, Au, A^2 u, ...)",
                  [=](const O& o) {
                    auto [A, u] = load_matrix_u(o);
                    EVectorSequence w = embed_W(A, u, o.len);
                    json j = evector_sequence_to_json(w);
                    j["norm"] = norm_json(sequence_norm(w), A.config());
                    j["u_norm"] = norm_json(vector_norm(u), A.config());
                    return j;
                  },
                  both(file("--matrix", &O::matrix, "matrix JSON"), file("--u", &O::u, "vector JSON or array"))});
  cmds.push_back({"model", "te", "backward shift on c_0(E)",
                  [](const O& o) {
                    return evector_sequence_to_json(TE_apply(evector_sequence_from_json(io::load(o.seq, "--seq"), "--seq")));
                  },
                  file("--seq", &O::seq, "E-sequence JSON")});
  cmds.push_back({"model", "universal", "check T_E W = W A",
                  [=](const O& o) {
                    auto [A, u] = load_matrix_u(o);
                    UniversalityReport r = verify_universality(A, u, o.len);
                    json j{{"intertwines", r.intertwines}, {"isometric", r.isometric},
                           {"stays_in_range", r.stays_in_range}, {"blocks_checked", r.blocks_checked},
                           {"ok", r.ok()}};
                    j["first_mismatch"] = r.first_mismatch ? json(*r.first_mismatch) : json(nullptr);
                    return j;
                  },
                  both(file("--matrix", &O::matrix, "matrix JSON"), file("--u", &O::u, "vector JSON or array"))});

  // demo
  auto demo_params = [](const O& o) {
    return demo::Params{o.p, o.prec, o.len, o.trials, o.seed};
  };
  cmds.push_back({"demo", "thm1", "invariant subspaces, lattice, commutant",
                  [=](const O& o) { return demo::thm1(demo_params(o)).to_json(); }, none});
  cmds.push_back({"demo", "thm2", "cyclic vectors of the backward shift",
                  [=](const O& o) { return demo::thm2(demo_params(o)).to_json(); }, none});
  cmds.push_back({"demo", "thm3", "universal model of vanishing contractions",
                  [=](const O& o) { return demo::thm3(demo_params(o)).to_json(); }, none});
  cmds.push_back({"demo", "duality", "adjoint identities and annihilators",
                  [=](const O& o) { return demo::duality(demo_params(o)).to_json(); }, none});
  return cmds;
}

}  // namespace detail

/// Runs one command line; argv[0] is the program name.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact p-adic shift operators and their functional models", "nashift"};
  app.require_subcommand(1);
  detail::Options opts;
  std::vector<detail::Command> cmds = detail::commands();
  std::map<std::string, CLI::App*> groups;
  std::vector<std::pair<CLI::App*, const detail::Command*>> leaves;
  std::int64_t len_flag = -1;
  for (const auto& c : cmds) {
    CLI::App*& grp = groups[c.group];
    if (!grp) {
      grp = app.add_subcommand(c.group, c.group + " operations");
      grp->require_subcommand(1);
    }
    CLI::App* leaf = grp->add_subcommand(c.name, c.help);
    leaf->add_option("--p", opts.p, "prime");
    leaf->add_option("--prec", opts.prec, "absolute precision N");
    leaf->add_option("--len", len_flag, "truncation length");
    leaf->add_option("--seed", opts.seed, "random seed");
    leaf->add_option("--trials", opts.trials, "number of random trials");
    leaf->add_option("--out", opts.out, "write the JSON result here instead of stdout");
    c.flags(*leaf, opts);
    leaves.emplace_back(leaf, &c);
  }

  std::vector<const char*> cargv;
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  if (len_flag >= 0) {
    opts.len = static_cast<std::size_t>(len_flag);
    opts.trunc = len_flag;
  }

  for (const auto& [leaf, cmd] : leaves) {
    if (!leaf->parsed()) continue;
    try {
      json result = cmd->run(opts);
      std::string text = result.dump(2) + "\n";
      if (opts.out.empty()) {
        out << text;
      } else {
        std::ofstream f(opts.out, std::ios::binary);
        if (!f) throw ParseError("--out: cannot write '" + opts.out + "'");
        f << text;
      }
      return kOk;
    } catch (const ParseError& e) {
      err << "error: " << e.what() << "\n";
      return kParseError;
    } catch (const json::exception& e) {
      err << "error: malformed input: " << e.what() << "\n";
      return kParseError;
    } catch (const PrecisionError& e) {
      err << "error: " << e.what() << "\n";
      return kPrecision;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kPrecondition;
    }
  }
  err << "error: no subcommand selected\n";
  return kParseError;
}

/// "group name" for every registered subcommand.
inline std::vector<std::string> subcommand_names() {
  std::vector<std::string> names;
  for (const auto& c : detail::commands()) names.push_back(c.group + " " + c.name);
  return names;
}

}  // namespace nashift::cli
