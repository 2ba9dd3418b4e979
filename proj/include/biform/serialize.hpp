#pragma once

// JSON schemas "biform-fe/1" for bases, double forms, reports and DoF tables.
// Rationals are written as strings "p" or "p/q".

#include <biform/mesh.hpp>
#include <biform/oracle.hpp>

#include <json.hpp>

#include <optional>

namespace biform {

inline constexpr const char* kSchema = "biform-fe/1";

nlohmann::json to_json(const BasisElement& e);
BasisElement basis_element_from_json(const nlohmann::json& j, int n);

/// Basis of degree r on T^n, or its traces on `face` when given.
nlohmann::json basis_to_json(int n, int r, const std::optional<IndexSet>& face);
std::vector<BasisElement> basis_from_json(const nlohmann::json& j);

/// {"n":N,"terms":[{"left":[0,1],"right":[2,3],"coeff":"1"}, ...]}.
nlohmann::json to_json(const DoubleForm22& omega);
/// Accepts string or integer coefficients; rejects floats.
DoubleForm22 double_form_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Splitting& s);
Splitting splitting_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Report& report);
nlohmann::json to_json(const DofTable& table);
nlohmann::json to_json(const ContinuityReport& report);

/// Dimension table for T^n at degree r.
nlohmann::json dims_to_json(int n, int r);

}  // namespace biform
