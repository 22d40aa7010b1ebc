#pragma once

#include <json.hpp>

#include "absynth/domain/element.hpp"

namespace absynth::domain {

nlohmann::json to_json(const AffineExpr& a);
AffineExpr affine_from_json(const nlohmann::json& j);

/// {domain, n, shapes:[{l,u} | {l,u,L:{c,coeffs},U:{c,coeffs}} | {center,generators}]}
nlohmann::json to_json(const AbstractElement& e);
AbstractElement element_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Constraint& c);

}  // namespace absynth::domain
