#pragma once

#include "nilorb/pipeline.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace nilorb {

inline constexpr const char* kEngineVersion = "1.0.0";

/// {"kind","g","n","coeffs":[ascending decimal strings],"degree"}; kind H
/// adds "den_coeffs" for the denominator.
nlohmann::json to_json(const CountingPolynomial& p);
/// Inverse of to_json; throws std::runtime_error on a malformed object.
CountingPolynomial counting_polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& r);

/// One row per (g, n, s): "kind,g,n,s,coeff". Only polynomial kinds.
std::string to_csv(const std::vector<CountingPolynomial>& polys);

/// Canonical text form: sorted keys, no whitespace.
std::string canonical_dump(const nlohmann::json& j);

} // namespace nilorb
