#pragma once

#include <string>

#include <json.hpp>

#include "reinhardt/profile.hpp"

namespace reinhardt::cli {

/// {"dim": n+1, "family": "sphere"|"ellipsoid"|"cylinder"|"polynomial", "params": {...}}
/// plus optional "derivative_mode" ("analytic" | "finite_difference"), "h_fd" and
/// "h_hess". Unknown keys are rejected.
///
///   sphere:     {"radius": R}
///   ellipsoid:  {"semiaxes": [a_1, ..., a_{n+1}]}
///   cylinder:   {"radius": R, "fixed_index": i}   (1-based, default 1)
///   polynomial: {"e1,...,e(n+1)": coefficient, ...}
RadialProfile profile_from_json(const nlohmann::json& doc);
RadialProfile profile_from_text(const std::string& text);
RadialProfile load_profile(const std::string& path);

/// Canonical document; profile_from_json(profile_to_json(p)) reproduces p.
nlohmann::json profile_to_json(const RadialProfile& profile);

/// FNV-1a 64-bit hash of the canonical document, as 16 hex digits.
std::string profile_hash(const RadialProfile& profile);

}  // namespace reinhardt::cli
