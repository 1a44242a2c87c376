#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toricwidth/divisor.hpp"
#include "toricwidth/fan.hpp"

namespace toric {

/// Input file: a JSON object with exactly the fields
///   "dim": integer, "rays": [[int, ...], ...], "max_cones": [[index, ...], ...],
///   optional "kappa": [number or "p/q" or "1.25", ...], optional "name": string.
/// Integers may also be written as strings. Non-integer JSON numbers are
/// rejected so that no value ever passes through floating point.
struct FanDocument {
  std::optional<std::string> name;
  Fan fan;
  std::optional<KaehlerClass> kappa;
};

/// Throws ParseError, BadNumber, RayNotPrimitive, DuplicateRay, InvalidCone,
/// ShapeMismatch.
FanDocument parse_fan_document(std::string_view text);
FanDocument load_fan_document(const std::string& path);

std::string serialize_fan_document(const FanDocument& doc);

}  // namespace toric
