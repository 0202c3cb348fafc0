#pragma once

// JSON forms of the library types (nlohmann/json ADL hooks).
// Rationals are strings: "n" for integers, "n/d" otherwise.

#include "focal_sieve/extremes.hpp"
#include "focal_sieve/focal.hpp"
#include "focal_sieve/plane.hpp"
#include "focal_sieve/rational.hpp"
#include "focal_sieve/remainders.hpp"
#include "focal_sieve/render.hpp"
#include "focal_sieve/sieve.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace focal_sieve {

inline void to_json(nlohmann::json& j, const Rational& r) { j = r.str(); }
inline void from_json(const nlohmann::json& j, Rational& r) { r = Rational::parse(j.get<std::string>()); }

inline void to_json(nlohmann::json& j, const PlanePoint& pt) { j = {{"x", pt.x}, {"y", pt.y}}; }
inline void from_json(const nlohmann::json& j, PlanePoint& pt) {
  pt.x = j.at("x").get<Rational>();
  pt.y = j.at("y").get<Rational>();
}

inline void to_json(nlohmann::json& j, const StandardLine& l) {
  j = {{"a", l.a}, {"k", l.k}, {"slope", l.slope()}, {"xIntercept", l.x_intercept()}};
}
inline void to_json(nlohmann::json& j, const VerticalLine& l) { j = {{"zeroth", true}, {"x", l.x}}; }
inline void to_json(nlohmann::json& j, const FocalLine& l) {
  std::visit([&](const auto& v) { to_json(j, v); }, l);
}

inline void to_json(nlohmann::json& j, const FocalPoint& f) { j = {{"q", f.q}, {"k", f.k}, {"coords", f.coords}}; }

inline nlohmann::json sieve_json(const SieveResult& r, std::string_view method_label) {
  return {{"p", r.p}, {"method", method_label}, {"primeCount", r.primes.size()}, {"primes", r.primes}};
}

inline nlohmann::json extremes_json(const SieveContext& ctx) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& qp : quotient_points(ctx)) points.push_back({qp.a, qp.q});
  nlohmann::json ext = nlohmann::json::array();
  for (const auto& e : extremes(ctx)) ext.push_back({e.a, e.q});
  return {{"p", ctx.p()}, {"points", points}, {"extremes", ext}};
}

inline nlohmann::json quotient_class_json(const SieveContext& ctx, const QuotientClass& c) {
  nlohmann::json rems = nlohmann::json::array();
  for (const auto& [a, r] : c.remainders) rems.push_back({a, r});
  return {{"p", ctx.p()}, {"q", c.q},           {"aMin", c.a_min},
          {"aMax", c.a_max}, {"maxRem", c.max_rem}, {"remainders", rems}};
}

inline void from_json(const nlohmann::json& j, Palette& pal) {
  auto take = [&](const char* key, std::string& field) {
    if (j.contains(key)) field = j.at(key).get<std::string>();
  };
  take("uncrossed", pal.uncrossed);
  take("crossed", pal.crossed);
  take("outside", pal.outside);
  take("focalLine", pal.focal_line);
  take("curve", pal.curve);
  take("bisector", pal.bisector);
  take("axis", pal.axis);
  take("extreme", pal.extreme);
  take("quotient", pal.quotient);
  take("horizontal", pal.horizontal);
}

}  // namespace focal_sieve
