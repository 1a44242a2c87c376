#include "toricwidth/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "toricwidth/divisor.hpp"
#include "toricwidth/error.hpp"
#include "toricwidth/polytope.hpp"
#include "toricwidth/primcoll.hpp"
#include "toricwidth/relations.hpp"
#include "toricwidth/seshadri.hpp"

namespace toric {

namespace {

using ojson = nlohmann::ordered_json;

template <typename T>
ojson string_array(const std::vector<T>& values) {
  ojson out = ojson::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

template <typename T>
ojson string_matrix(const std::vector<std::vector<T>>& rows) {
  ojson out = ojson::array();
  for (const auto& r : rows) out.push_back(string_array(r));
  return out;
}

[[noreturn]] void schema_error(const std::string& what) {
  throw ToricError(ErrorCode::ParseError, "report: " + what);
}

const ojson& field(const ojson& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

bool read_bool(const ojson& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_boolean()) schema_error(std::string(key) + " must be a boolean");
  return v.get<bool>();
}

std::string read_string(const ojson& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) schema_error(std::string(key) + " must be a string");
  return v.get<std::string>();
}

Rational read_rational(const ojson& j, const char* key) { return parse_rational(read_string(j, key)); }
Integer read_integer(const ojson& j, const char* key) { return parse_integer(read_string(j, key)); }

std::vector<std::string> strings_of(const ojson& arr) {
  if (!arr.is_array()) schema_error("expected an array");
  std::vector<std::string> out;
  for (const auto& x : arr) {
    if (!x.is_string()) schema_error("expected an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

IntVector int_vector_of(const ojson& arr) {
  IntVector out;
  for (const auto& s : strings_of(arr)) out.push_back(parse_integer(s));
  return out;
}

RatVector rat_vector_of(const ojson& arr) {
  RatVector out;
  for (const auto& s : strings_of(arr)) out.push_back(parse_rational(s));
  return out;
}

Cone cone_of(const ojson& arr) {
  if (!arr.is_array()) schema_error("expected an index array");
  Cone out;
  for (const auto& x : arr) {
    if (!x.is_number_unsigned()) schema_error("expected nonnegative indices");
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

template <typename T, typename F>
std::vector<T> map_array(const ojson& arr, F&& f) {
  if (!arr.is_array()) schema_error("expected an array");
  std::vector<T> out;
  for (const auto& x : arr) out.push_back(f(x));
  return out;
}

}  // namespace

std::string format_vector(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

std::string format_vector(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

std::string format_cone(const Cone& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + std::to_string(c[i]);
  return s + "}";
}

BoundReport run_report(const FanDocument& doc, const ReportOptions& options) {
  const Fan& fan = doc.fan;
  BoundReport r;
  r.name = doc.name.value_or("");
  r.validation = validate_fan(fan);
  if (!r.validation.smooth_complete()) {
    throw ToricError(ErrorCode::NotSmoothComplete, std::string("fan is not ") +
                                                       (r.validation.smooth ? "complete" : "smooth"));
  }
  if (!doc.kappa) throw ToricError(ErrorCode::ShapeMismatch, "the document has no kappa");

  const KaehlerClass& input = *doc.kappa;
  r.kappa_input = input.kappa;
  if (!input.nonnegative() && !options.normalize) {
    throw ToricError(ErrorCode::NegativeKappa, "kappa has a negative entry; rerun with --normalize");
  }
  r.kappa_shift = normalizing_shift(fan, input);
  const KaehlerClass kappa = normalize_kappa(fan, input);
  r.kappa_used = kappa.kappa;
  r.ample = is_ample(fan, kappa);
  if (!r.ample) throw ToricError(ErrorCode::NotAmple, "kappa is not an ample (Kaehler) class");

  const ClassGroupDescription cg = class_group(fan);
  r.class_group_free_rank = cg.free_rank;
  r.class_group_torsion = cg.torsion;
  for (std::size_t i = 0; i < cg.presentation.rows(); ++i) r.class_group_presentation.push_back(cg.presentation.row(i));

  const auto prims = primitive_relations(fan);
  r.fano = true;
  for (const auto& p : prims) {
    r.primitive_relations.push_back({p.collection.indices, p.sigma, p.b, p.degree});
    r.fano = r.fano && p.degree > 0;
  }
  for (const auto& fam : minimal_curve_families(fan)) {
    IntVector indicator(fan.ray_count());
    for (RayIndex i : fam.collection.indices) indicator[i] = 1;
    r.minimal_curve_families.push_back({fam.collection.indices, fam.degree, intersect(kappa, Relation(indicator))});
  }

  const GammaResult g = gamma(fan, kappa);
  r.gamma = g.value;
  r.gamma_minimizer = g.minimizer.coefficients();
  r.gamma_attained_by_binary = g.attained_by_binary;
  r.lambda = lambda_bound(fan, kappa);

  const LatticePolytope poly = momentum_polytope(fan, kappa);
  r.polytope_vertices = vertices(poly);
  const LatticeWidth w = lattice_width(poly, options.search_bound, g.value);
  r.lattice_width = w.value;
  r.lattice_width_direction = w.direction;
  r.lattice_width_search_bound = w.search_bound;
  r.lattice_width_certified = w.certified;
  if (w.value != g.value) {
    throw ToricError(ErrorCode::InternalContradiction, "gamma " + to_string(g.value) +
                                                           " differs from the enumerated lattice width " +
                                                           to_string(w.value) + " (search bound " +
                                                           to_string(w.search_bound) + ")");
  }
  r.gromov_width_upper = g.value;

  const SeshadriBound s = seshadri_bound_toric(fan, kappa);
  r.seshadri_upper = s.upper;
  r.seshadri_caveat = s.caveat;

  if (std::any_of(r.kappa_shift.begin(), r.kappa_shift.end(), [](const Rational& x) { return x != 0; })) {
    r.warnings.push_back({"KAPPA_NORMALIZED", "kappa was replaced by the nonnegative representative " +
                                                  format_vector(r.kappa_used) + " (shift m = " +
                                                  format_vector(r.kappa_shift) + ")"});
  }
  for (const auto& rel : relations_beyond_lambda_cap(fan)) {
    r.warnings.push_back({"LAMBDA_DEGREE_CAP",
                          "minimal relation " + format_vector(rel.coefficients()) + " has total degree " +
                              to_string(rel.total_degree()) + " > dim + 1 = " + std::to_string(fan.dim() + 1) +
                              " and is outside the Lambda search set"});
  }
  if (!g.attained_by_binary) {
    r.warnings.push_back({"GAMMA_NOT_BINARY", "no minimizer of gamma has all entries in {0, 1}"});
  }
  r.warnings.push_back({"SESHADRI_EQUALITY_UNDECIDED",
                        "whether the Seshadri constant equals the Gromov width bound is not decidable by this tool"});
  return r;
}

std::string report_to_json(const BoundReport& r) {
  ojson j;
  j["name"] = r.name;
  j["validation"] = {{"simplicial", r.validation.simplicial},
                     {"smooth", r.validation.smooth},
                     {"complete", r.validation.complete},
                     {"pure", r.validation.pure}};
  j["class_group"] = {{"free_rank", r.class_group_free_rank},
                      {"torsion", string_array(r.class_group_torsion)},
                      {"presentation", string_matrix(r.class_group_presentation)}};
  j["fano"] = r.fano;
  j["primitive_relations"] = ojson::array();
  for (const auto& p : r.primitive_relations) {
    j["primitive_relations"].push_back(
        {{"collection", p.collection}, {"sigma", p.sigma}, {"b", string_array(p.b)}, {"degree", to_string(p.degree)}});
  }
  j["minimal_curve_families"] = ojson::array();
  for (const auto& f : r.minimal_curve_families) {
    j["minimal_curve_families"].push_back(
        {{"collection", f.collection}, {"degree", to_string(f.degree)}, {"area", to_string(f.area)}});
  }
  j["kappa"] = {{"input", string_array(r.kappa_input)},
                {"used", string_array(r.kappa_used)},
                {"shift", string_array(r.kappa_shift)}};
  j["ample"] = r.ample;
  j["gamma"] = {{"value", to_string(r.gamma)},
                {"minimizer", string_array(r.gamma_minimizer)},
                {"attained_by_binary", r.gamma_attained_by_binary}};
  j["lambda"] = to_string(r.lambda);
  j["polytope_vertices"] = string_matrix(r.polytope_vertices);
  j["lattice_width"] = {{"value", to_string(r.lattice_width)},
                        {"direction", string_array(r.lattice_width_direction)},
                        {"search_bound", to_string(r.lattice_width_search_bound)},
                        {"certified", r.lattice_width_certified}};
  j["gromov_width_upper"] = to_string(r.gromov_width_upper);
  j["seshadri_upper"] = to_string(r.seshadri_upper);
  j["seshadri_caveat"] = r.seshadri_caveat;
  j["warnings"] = ojson::array();
  for (const auto& w : r.warnings) j["warnings"].push_back({{"code", w.code}, {"text", w.text}});
  return j.dump(2) + "\n";
}

BoundReport report_from_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text.begin(), text.end());
  } catch (const ojson::parse_error& e) {
    schema_error(std::string("malformed JSON: ") + e.what());
  }
  BoundReport r;
  r.name = read_string(j, "name");
  const auto& v = field(j, "validation");
  r.validation = {read_bool(v, "simplicial"), read_bool(v, "smooth"), read_bool(v, "complete"), read_bool(v, "pure")};
  const auto& cg = field(j, "class_group");
  const auto& rank = field(cg, "free_rank");
  if (!rank.is_number_unsigned()) schema_error("free_rank must be a count");
  r.class_group_free_rank = rank.get<std::size_t>();
  r.class_group_torsion = int_vector_of(field(cg, "torsion"));
  r.class_group_presentation = map_array<IntVector>(field(cg, "presentation"), int_vector_of);
  r.fano = read_bool(j, "fano");
  r.primitive_relations = map_array<ReportPrimitiveRelation>(field(j, "primitive_relations"), [](const ojson& p) {
    return ReportPrimitiveRelation{cone_of(field(p, "collection")), cone_of(field(p, "sigma")),
                                   int_vector_of(field(p, "b")), read_integer(p, "degree")};
  });
  r.minimal_curve_families = map_array<ReportCurveFamily>(field(j, "minimal_curve_families"), [](const ojson& f) {
    return ReportCurveFamily{cone_of(field(f, "collection")), read_integer(f, "degree"), read_rational(f, "area")};
  });
  const auto& k = field(j, "kappa");
  r.kappa_input = rat_vector_of(field(k, "input"));
  r.kappa_used = rat_vector_of(field(k, "used"));
  r.kappa_shift = rat_vector_of(field(k, "shift"));
  r.ample = read_bool(j, "ample");
  const auto& g = field(j, "gamma");
  r.gamma = read_rational(g, "value");
  r.gamma_minimizer = int_vector_of(field(g, "minimizer"));
  r.gamma_attained_by_binary = read_bool(g, "attained_by_binary");
  r.lambda = read_rational(j, "lambda");
  r.polytope_vertices = map_array<RatVector>(field(j, "polytope_vertices"), rat_vector_of);
  const auto& w = field(j, "lattice_width");
  r.lattice_width = read_rational(w, "value");
  r.lattice_width_direction = int_vector_of(field(w, "direction"));
  r.lattice_width_search_bound = read_integer(w, "search_bound");
  r.lattice_width_certified = read_bool(w, "certified");
  r.gromov_width_upper = read_rational(j, "gromov_width_upper");
  r.seshadri_upper = read_rational(j, "seshadri_upper");
  r.seshadri_caveat = read_string(j, "seshadri_caveat");
  r.warnings = map_array<ReportWarning>(field(j, "warnings"), [](const ojson& x) {
    return ReportWarning{read_string(x, "code"), read_string(x, "text")};
  });
  return r;
}

std::string report_to_text(const BoundReport& r) {
  std::ostringstream out;
  out << "fan: " << (r.name.empty() ? "(unnamed)" : r.name) << "\n";
  out << "  simplicial=" << r.validation.simplicial << " smooth=" << r.validation.smooth
      << " complete=" << r.validation.complete << " pure=" << r.validation.pure << "\n";
  out << "class group: Z^" << r.class_group_free_rank;
  for (const auto& t : r.class_group_torsion) out << " + Z/" << to_string(t);
  out << "\n";
  out << "fano: " << (r.fano ? "yes" : "no") << "\n";
  out << "primitive relations:\n";
  for (const auto& p : r.primitive_relations) {
    out << "  " << format_cone(p.collection) << " -> ";
    if (p.sigma.empty()) out << "0";
    for (std::size_t i = 0; i < p.sigma.size(); ++i)
      out << (i ? " + " : "") << to_string(p.b[i]) << "*u" << p.sigma[i];
    out << "   degree " << to_string(p.degree) << "\n";
  }
  out << "minimal curve families:\n";
  for (const auto& f : r.minimal_curve_families)
    out << "  " << format_cone(f.collection) << "   degree " << to_string(f.degree) << "   area "
        << to_string(f.area) << "\n";
  out << "kappa used: " << format_vector(r.kappa_used) << (r.ample ? " (ample)" : "") << "\n";
  out << "gamma: " << to_string(r.gamma) << "   minimizer " << format_vector(r.gamma_minimizer)
      << (r.gamma_attained_by_binary ? "   (0/1 minimizer exists)" : "") << "\n";
  out << "lambda: " << to_string(r.lambda) << "\n";
  out << "polytope vertices:";
  for (const auto& v : r.polytope_vertices) out << " " << format_vector(v);
  out << "\n";
  out << "lattice width: " << to_string(r.lattice_width) << "   direction " << format_vector(r.lattice_width_direction)
      << (r.lattice_width_certified ? "   (certified)" : "") << "\n";
  out << "gromov width <= " << to_string(r.gromov_width_upper) << "\n";
  out << "seshadri constant <= " << to_string(r.seshadri_upper) << "   [" << r.seshadri_caveat << "]\n";
  for (const auto& w : r.warnings) out << "warning " << w.code << ": " << w.text << "\n";
  return out.str();
}

}  // namespace toric
