#include "toricwidth/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "toricwidth/error.hpp"

namespace toric {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) { throw ToricError(ErrorCode::ParseError, what); }

Integer integer_field(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_float()) throw ToricError(ErrorCode::BadNumber, where + ": write non-integers as strings");
  parse_error(where + ": expected an integer");
}

std::size_t count_field(const json& j, const std::string& where) {
  const Integer v = integer_field(j, where);
  if (v < 0 || v > Integer(1'000'000)) parse_error(where + ": out of range");
  return v.convert_to<std::size_t>();
}

Rational rational_field(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(integer_field(j, where));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float()) {
    throw ToricError(ErrorCode::BadNumber, where + ": write fractional values as strings such as \"1/3\" or \"0.5\"");
  }
  throw ToricError(ErrorCode::BadNumber, where + ": expected a number");
}

const json& array_field(const json& j, const std::string& where) {
  if (!j.is_array()) parse_error(where + ": expected an array");
  return j;
}

}  // namespace

FanDocument parse_fan_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) parse_error("document must be a JSON object");

  static const std::set<std::string> known = {"name", "dim", "rays", "max_cones", "kappa"};
  for (const auto& [key, value] : root.items())
    if (!known.count(key)) parse_error("unknown field '" + key + "'");
  for (const char* required : {"dim", "rays", "max_cones"})
    if (!root.contains(required)) parse_error(std::string("missing field '") + required + "'");

  std::optional<std::string> name;
  if (root.contains("name")) {
    if (!root["name"].is_string()) parse_error("name: expected a string");
    name = root["name"].get<std::string>();
  }

  const std::size_t dim = count_field(root["dim"], "dim");
  std::vector<IntVector> rays;
  for (const auto& r : array_field(root["rays"], "rays")) {
    const std::string where = "rays[" + std::to_string(rays.size()) + "]";
    IntVector v;
    for (const auto& x : array_field(r, where)) v.push_back(integer_field(x, where));
    if (v.size() != dim) parse_error(where + ": expected " + std::to_string(dim) + " entries");
    rays.push_back(std::move(v));
  }
  std::vector<Cone> cones;
  for (const auto& c : array_field(root["max_cones"], "max_cones")) {
    const std::string where = "max_cones[" + std::to_string(cones.size()) + "]";
    Cone cone;
    for (const auto& x : array_field(c, where)) {
      const Integer idx = integer_field(x, where);
      if (idx < 0 || idx >= Integer(rays.size())) {
        throw ToricError(ErrorCode::InvalidCone, where + ": ray index " + to_string(idx) + " out of range");
      }
      cone.push_back(idx.convert_to<std::size_t>());
    }
    cones.push_back(std::move(cone));
  }

  std::optional<KaehlerClass> kappa;
  if (root.contains("kappa")) {
    KaehlerClass k;
    for (const auto& x : array_field(root["kappa"], "kappa"))
      k.kappa.push_back(rational_field(x, "kappa[" + std::to_string(k.kappa.size()) + "]"));
    if (k.size() != rays.size()) {
      throw ToricError(ErrorCode::ShapeMismatch, "kappa has " + std::to_string(k.size()) + " entries for " +
                                                     std::to_string(rays.size()) + " rays");
    }
    kappa = std::move(k);
  }

  return FanDocument{std::move(name), Fan(dim, std::move(rays), std::move(cones)), std::move(kappa)};
}

FanDocument load_fan_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_fan_document(buffer.str());
}

std::string serialize_fan_document(const FanDocument& doc) {
  nlohmann::ordered_json out;
  if (doc.name) out["name"] = *doc.name;
  out["dim"] = doc.fan.dim();
  out["rays"] = nlohmann::ordered_json::array();
  for (const auto& r : doc.fan.rays()) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& x : r) row.push_back(to_string(x));
    out["rays"].push_back(row);
  }
  out["max_cones"] = doc.fan.max_cones();
  if (doc.kappa) {
    out["kappa"] = nlohmann::ordered_json::array();
    for (const auto& k : doc.kappa->kappa) out["kappa"].push_back(to_string(k));
  }
  return out.dump(2) + "\n";
}

}  // namespace toric
