#pragma once

// Text and JSON round-tripping for polynomials and transfer functions.
//
// Text grammar (whitespace-insensitive):
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := ('-' | '+')* primary ('^' uint)?
//   primary:= number | param | 's' | '(' expr ')' | 'exp' '(' expr ')'
// Numbers are exact decimal literals (0.1088, 1e-6); parameters are
// identifiers. The exp() primary must reduce to a nonpositive constant
// times s and becomes a pure-delay factor.

#include <string>
#include <string_view>

#include <json.hpp>

#include "lctk/transfer_function.hpp"

namespace lctk {

TransferFunction tf_from_text(std::string_view text);

nlohmann::ordered_json param_poly_to_json(const ParamPoly& p);
ParamPoly param_poly_from_json(const nlohmann::json& j);

nlohmann::ordered_json spoly_to_json(const SPoly& p);
SPoly spoly_from_json(const nlohmann::json& j);

nlohmann::ordered_json tf_to_json(const TransferFunction& tf);
TransferFunction tf_from_json(const nlohmann::json& j);

}  // namespace lctk
