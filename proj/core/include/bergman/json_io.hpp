#pragma once

#include "bergman/kernel.hpp"
#include "bergman/oracle.hpp"

#include <nlohmann/json.hpp>

namespace bergman {

using Json = nlohmann::json;

/// Array of [e1, e2, "num/den"] triples in lexicographic exponent order.
Json to_json(const LaurentPoly2& p);
LaurentPoly2 poly_from_json(const Json& j);

Json to_json(const IntMatrix2& m);
IntMatrix2 matrix_from_json(const Json& j);

/// {"B", "A", "detA", "scale": {"num", "den", "pi_exp"}, "numerator",
///  "denominator": [{"terms", "power"}, ...]}
Json to_json(const KernelFormula& f);
/// Inverse of to_json(KernelFormula). Throws ParseError on malformed input.
KernelFormula kernel_formula_from_json(const Json& j);

Json to_json(const VerificationReport& r);

}  // namespace bergman
