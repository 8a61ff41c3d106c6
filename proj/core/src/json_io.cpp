#include "bergman/json_io.hpp"

#include "bergman/errors.hpp"

#include <limits>

namespace bergman {
namespace {

// Integers that fit into 64 bits are written as JSON numbers, larger ones as
// decimal strings.
Json integer_to_json(const Integer& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() &&
      v >= std::numeric_limits<std::int64_t>::min()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Rational rational_from_string(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw ParseError("malformed rational '" + s + "'");
  }
}

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json point_to_json(const Point& p) {
  return Json::array({complex_to_json(p[0]), complex_to_json(p[1])});
}

// JSON has no NaN/Inf; those become null.
Json real_to_json(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

}  // namespace

Json to_json(const LaurentPoly2& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    out.push_back(Json::array({e.e1, e.e2, c.str()}));
  }
  return out;
}

LaurentPoly2 poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array");
  LaurentPoly2 p;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
        !t[1].is_number_integer() || !t[2].is_string()) {
      throw ParseError("malformed polynomial term " + t.dump());
    }
    p.add_term({t[0].get<std::int64_t>(), t[1].get<std::int64_t>()},
               rational_from_string(t[2].get<std::string>()));
  }
  return p;
}

Json to_json(const IntMatrix2& m) {
  return Json::array(
      {Json::array({integer_to_json(m(0, 0)), integer_to_json(m(0, 1))}),
       Json::array({integer_to_json(m(1, 0)), integer_to_json(m(1, 1))})});
}

IntMatrix2 matrix_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2) {
    throw ParseError("matrix must be [[a, b], [c, d]], got " + j.dump());
  }
  return {integer_from_json(j[0][0]), integer_from_json(j[0][1]),
          integer_from_json(j[1][0]), integer_from_json(j[1][1])};
}

Json to_json(const KernelFormula& f) {
  Json denom = Json::array();
  for (const DenominatorFactor& factor : f.denominator) {
    denom.push_back({{"terms", to_json(factor.base)}, {"power", factor.power}});
  }
  return {
      {"B", to_json(f.b)},
      {"A", to_json(f.a)},
      {"detA", integer_to_json(f.det_a)},
      {"scale",
       {{"num", 1}, {"den", integer_to_json(f.det_a)}, {"pi_exp", f.pi_exponent}}},
      {"numerator", to_json(f.numerator)},
      {"denominator", denom},
  };
}

KernelFormula kernel_formula_from_json(const Json& j) {
  try {
    KernelFormula f;
    f.b = matrix_from_json(j.at("B"));
    f.a = matrix_from_json(j.at("A"));
    f.det_a = integer_from_json(j.at("detA"));
    const Json& scale = j.at("scale");
    if (integer_from_json(scale.at("num")) != 1 ||
        integer_from_json(scale.at("den")) != f.det_a) {
      throw ParseError("scale must be 1/detA");
    }
    f.pi_exponent = scale.at("pi_exp").get<int>();
    f.numerator = poly_from_json(j.at("numerator"));
    for (const Json& factor : j.at("denominator")) {
      f.denominator.push_back(
          {poly_from_json(factor.at("terms")), factor.at("power").get<int>()});
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed kernel formula: ") + e.what());
  }
}

Json to_json(const VerificationReport& r) {
  Json points = Json::array();
  for (const VerificationEntry& e : r.entries) {
    Json p = {
        {"z", point_to_json(e.z)},
        {"w", point_to_json(e.w)},
        {"closed", complex_to_json(e.closed_form)},
        {"oracle", e.error ? Json(nullptr) : complex_to_json(e.oracle)},
        {"rel_err", real_to_json(e.rel_err)},
    };
    if (r.oracle_kind == OracleKind::kSeries) p["truncation"] = e.truncation;
    if (e.error) p["error"] = *e.error;
    points.push_back(std::move(p));
  }
  Json out = {
      {"matrix", to_json(r.matrix)},
      {"oracle", to_string(r.oracle_kind)},
      {"tol", r.tol},
      {"seed", r.seed},
      {"points", points},
      {"max_rel_err", real_to_json(r.max_rel_err)},
      {"passed", r.passed},
  };
  if (r.oracle_kind == OracleKind::kSeries) {
    out["truncation_used"] = r.truncation_used;
  }
  return out;
}

}  // namespace bergman
