#pragma once

// JSON forms of scalars, vectors, grids, series, polynomials and matrices.
//
//   scalar    "a/b", an integer, or {"p":5,"prec":24,"val":2,"digits":[1,3,0]}
//             (digits base p, little-endian, one per known unit digit;
//             "val": null with empty digits is zero)
//   vector    {"p":..,"prec":..,"entries":[scalar,...]}
//   grid      {"p":..,"prec":..,"M":..,"values":[scalar x M+1]}
//   series    {"p":..,"prec":..,"coeffs":[...]}
//   poly      {"monic_degree":d,"coeffs":[c_0..c_{d-1}]}   (p/prec optional)
//   matrix    {"d":..,"rows":[[...],...]}                   (p/prec optional)
//   factorial {"p":..,"prec":..,"factorial_coeffs":[...]}

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mahler.hpp"
#include "models.hpp"
#include "padic.hpp"
#include "sequence.hpp"
#include "tate.hpp"

namespace nashift {

using json = nlohmann::json;

/// Malformed input; the message names the offending field or byte offset.
class ParseError : public Error {
 public:
  using Error::Error;
};

namespace io {

inline std::int64_t parse_int(std::string_view s, const std::string& field) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(field + ": '" + std::string(s) + "' is not a 64-bit integer");
  return v;
}

/// "a/b" or "a".
inline std::pair<std::int64_t, std::int64_t> parse_rational(std::string_view s,
                                                            const std::string& field) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return {parse_int(s, field), 1};
  std::int64_t b = parse_int(s.substr(slash + 1), field);
  if (b == 0) throw DomainError(field + ": denominator is zero");
  return {parse_int(s.substr(0, slash), field), b};
}

inline PrimeConfig config_from_json(const json& j, const std::string& field,
                                    const std::optional<PrimeConfig>& fallback = std::nullopt) {
  if (!j.is_object()) throw ParseError(field + ": expected a JSON object");
  const bool has_p = j.contains("p"), has_prec = j.contains("prec");
  if (!has_p && !has_prec && fallback) return *fallback;
  if (!has_p || !j["p"].is_number_unsigned())
    throw ParseError(field + ".p: expected a positive integer prime");
  if (!has_prec || !j["prec"].is_number_unsigned())
    throw ParseError(field + ".prec: expected a positive integer precision");
  return PrimeConfig(j["p"].get<std::uint64_t>(), j["prec"].get<int>());
}

inline PadicScalar scalar_from_json(const json& j, const PrimeConfig& cfg, const std::string& field) {
  if (j.is_string()) {
    auto [a, b] = parse_rational(j.get<std::string>(), field);
    return PadicScalar::from_rational(a, b, cfg);
  }
  if (j.is_number_integer()) return PadicScalar::from_integer(j.get<std::int64_t>(), cfg);
  if (j.is_object()) {
    PrimeConfig own = config_from_json(j, field, cfg);
    if (!(own == cfg))
      throw ConfigError(field + ": scalar uses p=" + std::to_string(own.p()) + ", prec=" +
                        std::to_string(own.precision()) + " but the context uses p=" +
                        std::to_string(cfg.p()) + ", prec=" + std::to_string(cfg.precision()));
    if (!j.contains("digits") || !j["digits"].is_array())
      throw ParseError(field + ".digits: expected an array of base-p digits");
    std::vector<std::uint64_t> digits;
    for (std::size_t i = 0; i < j["digits"].size(); ++i) {
      const auto& d = j["digits"][i];
      if (!d.is_number_unsigned() || d.get<std::uint64_t>() >= cfg.p())
        throw ParseError(field + ".digits[" + std::to_string(i) + "]: expected a digit in [0, p)");
      digits.push_back(d.get<std::uint64_t>());
    }
    if (!j.contains("val") || j["val"].is_null()) {
      if (!digits.empty()) throw ParseError(field + ".val: null valuation requires empty digits");
      return PadicScalar::zero(cfg);
    }
    if (!j["val"].is_number_integer()) throw ParseError(field + ".val: expected an integer or null");
    if (digits.empty() || digits[0] == 0)
      throw ParseError(field + ".digits[0]: leading digit must be nonzero");
    return PadicScalar::from_digits(cfg, j["val"].get<std::int64_t>(), digits);
  }
  throw ParseError(field + ": expected \"a/b\", an integer, or a scalar object");
}

inline json scalar_to_json(const PadicScalar& x) {
  json j;
  j["p"] = x.prime();
  j["prec"] = x.config().precision();
  if (x.is_zero()) {
    j["val"] = nullptr;
    j["digits"] = json::array();
  } else {
    j["val"] = x.valuation().value();
    j["digits"] = x.digits();
  }
  return j;
}

/// 0 for the zero norm, otherwise a string such as "2^-5", "1" or "5^3".
inline json norm_to_json(Norm n, std::uint64_t p) {
  if (n.is_zero()) return 0;
  return n.to_string(p);
}

inline std::vector<PadicScalar> scalars_from_json(const json& j, const PrimeConfig& cfg,
                                                  const std::string& field) {
  if (!j.is_array()) throw ParseError(field + ": expected an array");
  std::vector<PadicScalar> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(scalar_from_json(j[i], cfg, field + "[" + std::to_string(i) + "]"));
  return out;
}

inline json scalars_to_json(const std::vector<PadicScalar>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(scalar_to_json(x));
  return a;
}

inline const json& require(const json& j, const char* key, const std::string& field) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(field + ": missing key \"" + key + "\"");
  return j[key];
}

template <class Space>
Sequence<Space> vector_from_json(const json& j, const std::string& field) {
  PrimeConfig cfg = config_from_json(j, field);
  return Sequence<Space>(cfg, scalars_from_json(require(j, "entries", field), cfg, field + ".entries"));
}

template <class Space>
json vector_to_json(const Sequence<Space>& x) {
  return {{"p", x.config().p()}, {"prec", x.config().precision()}, {"entries", scalars_to_json(x.entries())}};
}

inline GridFunction grid_from_json(const json& j, const std::string& field) {
  PrimeConfig cfg = config_from_json(j, field);
  auto values = scalars_from_json(require(j, "values", field), cfg, field + ".values");
  if (j.contains("M")) {
    if (!j["M"].is_number_unsigned()) throw ParseError(field + ".M: expected a nonnegative integer");
    if (j["M"].get<std::size_t>() + 1 != values.size())
      throw ParseError(field + ".values: expected M+1 = " + std::to_string(j["M"].get<std::size_t>() + 1) +
                       " values, got " + std::to_string(values.size()));
  }
  if (values.empty()) throw ParseError(field + ".values: need at least one value");
  return GridFunction(cfg, std::move(values));
}

inline json grid_to_json(const GridFunction& g) {
  return {{"p", g.config().p()},
          {"prec", g.config().precision()},
          {"M", g.grid_max()},
          {"values", scalars_to_json(g.values())}};
}

inline TateSeries series_from_json(const json& j, const std::string& field) {
  PrimeConfig cfg = config_from_json(j, field);
  return TateSeries::polynomial(C0Vector(cfg, scalars_from_json(require(j, "coeffs", field), cfg, field + ".coeffs")));
}

inline json series_to_json(const TateSeries& f) {
  return {{"p", f.config().p()},
          {"prec", f.config().precision()},
          {"coeffs", scalars_to_json(f.coeffs.entries())},
          {"tail_norm", norm_to_json(f.tail, f.config().p())}};
}

inline MonicPoly poly_from_json(const json& j, const std::string& field,
                                const std::optional<PrimeConfig>& fallback) {
  PrimeConfig cfg = config_from_json(j, field, fallback);
  const json& deg = require(j, "monic_degree", field);
  if (!deg.is_number_unsigned()) throw ParseError(field + ".monic_degree: expected a positive integer");
  auto coeffs = scalars_from_json(require(j, "coeffs", field), cfg, field + ".coeffs");
  if (coeffs.size() != deg.get<std::size_t>())
    throw ParseError(field + ".coeffs: expected " + std::to_string(deg.get<std::size_t>()) +
                     " coefficients c_0..c_{d-1}, got " + std::to_string(coeffs.size()));
  return MonicPoly(cfg, std::move(coeffs));
}

inline json poly_to_json(const MonicPoly& P) {
  return {{"p", P.config().p()},
          {"prec", P.config().precision()},
          {"monic_degree", P.degree()},
          {"coeffs", scalars_to_json(P.lower_coeffs())}};
}

inline ContractionMatrix matrix_from_json(const json& j, const std::string& field,
                                          const std::optional<PrimeConfig>& fallback) {
  PrimeConfig cfg = config_from_json(j, field, fallback);
  const json& rows = require(j, "rows", field);
  if (!rows.is_array()) throw ParseError(field + ".rows: expected an array of rows");
  std::vector<std::vector<PadicScalar>> m;
  for (std::size_t i = 0; i < rows.size(); ++i)
    m.push_back(scalars_from_json(rows[i], cfg, field + ".rows[" + std::to_string(i) + "]"));
  if (j.contains("d") && (!j["d"].is_number_unsigned() || j["d"].get<std::size_t>() != m.size()))
    throw ParseError(field + ".d: does not match the number of rows");
  return ContractionMatrix(cfg, std::move(m));
}

inline FactorialSeries factorial_from_json(const json& j, const std::string& field) {
  PrimeConfig cfg = config_from_json(j, field);
  return {C0Vector(cfg, scalars_from_json(require(j, "factorial_coeffs", field), cfg,
                                          field + ".factorial_coeffs"))};
}

inline json factorial_to_json(const FactorialSeries& g) {
  return {{"p", g.coeffs.config().p()},
          {"prec", g.coeffs.config().precision()},
          {"factorial_coeffs", scalars_to_json(g.coeffs.entries())}};
}

/// Parses text, reporting syntax errors with their byte offset.
inline json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

/// Reads a file, or treats the argument as inline JSON when it starts with '{'.
inline json load(const std::string& path_or_json, const std::string& field) {
  if (!path_or_json.empty() && path_or_json.front() == '{') return parse_text(path_or_json, field);
  std::ifstream in(path_or_json);
  if (!in) throw ParseError(field + ": cannot open '" + path_or_json + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), field + " (" + path_or_json + ")");
}

}  // namespace io
}  // namespace nashift
