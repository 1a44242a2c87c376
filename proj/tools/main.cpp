#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "toricwidth/divisor.hpp"
#include "toricwidth/document.hpp"
#include "toricwidth/error.hpp"
#include "toricwidth/polytope.hpp"
#include "toricwidth/primcoll.hpp"
#include "toricwidth/relations.hpp"
#include "toricwidth/report.hpp"

namespace {

using namespace toric;
using ojson = nlohmann::ordered_json;

constexpr int kExitValidation = 2;
constexpr int kExitComputation = 3;

struct Options {
  std::string path;
  bool json = false;
  bool normalize = false;
  std::optional<long long> search_bound;
  std::string relation;
  std::string markers;
};

template <typename T>
ojson strings(const std::vector<T>& v) {
  ojson out = ojson::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

void require_smooth_complete(const Fan& fan) {
  const FanReport r = validate_fan(fan);
  if (!r.smooth_complete()) {
    throw ToricError(ErrorCode::NotSmoothComplete, std::string("fan is not ") + (r.smooth ? "complete" : "smooth"));
  }
}

KaehlerClass kappa_of(const FanDocument& doc, const Options& opt) {
  if (!doc.kappa) throw ToricError(ErrorCode::ShapeMismatch, "the document has no kappa");
  if (opt.normalize) return normalize_kappa(doc.fan, *doc.kappa);
  if (!doc.kappa->nonnegative()) {
    throw ToricError(ErrorCode::NegativeKappa, "kappa has a negative entry; rerun with --normalize");
  }
  return *doc.kappa;
}

void emit(const Options& opt, const ojson& j, const std::string& text) {
  if (opt.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_validate(const Options& opt) {
  const FanDocument doc = load_fan_document(opt.path);
  const FanReport r = validate_fan(doc.fan);
  ojson j = {{"simplicial", r.simplicial}, {"smooth", r.smooth}, {"complete", r.complete}, {"pure", r.pure}};
  std::ostringstream t;
  t << "simplicial=" << r.simplicial << " smooth=" << r.smooth << " complete=" << r.complete << " pure=" << r.pure
    << "\n";
  emit(opt, j, t.str());
  return r.smooth_complete() ? 0 : kExitValidation;
}

int cmd_report(const Options& opt) {
  const FanDocument doc = load_fan_document(opt.path);
  ReportOptions ro;
  ro.normalize = opt.normalize;
  if (opt.search_bound) ro.search_bound = Integer(*opt.search_bound);
  const BoundReport r = run_report(doc, ro);
  std::cout << (opt.json ? report_to_json(r) : report_to_text(r));
  return 0;
}

int cmd_gamma(const Options& opt) {
  const FanDocument doc = load_fan_document(opt.path);
  require_smooth_complete(doc.fan);
  const GammaResult g = gamma(doc.fan, kappa_of(doc, opt));
  ojson j = {{"value", to_string(g.value)},
             {"minimizer", strings(g.minimizer.coefficients())},
             {"attained_by_binary", g.attained_by_binary}};
  emit(opt, j,
       "gamma = " + to_string(g.value) + "   minimizer " + format_vector(g.minimizer.coefficients()) +
           (g.attained_by_binary ? "   (0/1 minimizer exists)\n" : "\n"));
  return 0;
}

int cmd_lambda(const Options& opt) {
  const FanDocument doc = load_fan_document(opt.path);
  require_smooth_complete(doc.fan);
  const Rational value = lambda_bound(doc.fan, kappa_of(doc, opt));
  ojson excluded = ojson::array();
  std::string text = "lambda = " + to_string(value) + "\n";
  for (const auto& r : relations_beyond_lambda_cap(doc.fan)) {
    excluded.push_back(strings(r.coefficients()));
    text += "warning LAMBDA_DEGREE_CAP: minimal relation " + format_vector(r.coefficients()) +
            " has total degree above dim + 1\n";
  }
  emit(opt, {{"value", to_string(value)}, {"excluded_minimal_relations", excluded}}, text);
  return 0;
}

int cmd_primcoll(const Options& opt) {
  const FanDocument doc = load_fan_document(opt.path);
  require_smooth_complete(doc.fan);
  ojson rels = ojson::array();
  std::string text = "primitive relations:\n";
  for (const auto& p : primitive_relations(doc.fan)) {
    rels.push_back({{"collection", p.collection.indices},
                    {"sigma", p.sigma},
                    {"b", strings(p.b)},
                    {"degree", to_string(p.degree)}});
    text += "  " + format_cone(p.collection.indices) + " -> " + format_cone(p.sigma) + " b=" + format_vector(p.b) +
            " degree " + to_string(p.degree) + "\n";
  }
  ojson fams = ojson::array();
  text += "minimal curve families:\n";
  for (const auto& f : minimal_curve_families(doc.fan)) {
    fams.push_back({{"collection", f.collection.indices}, {"degree", to_string(f.degree)}});
    text += "  " + format_cone(f.collection.indices) + " degree " + to_string(f.degree) + "\n";
  }
  emit(opt, {{"primitive_relations", rels}, {"minimal_curve_families", fams}}, text);
  return 0;
}

int cmd_fano(const Options& opt) {
  const FanDocument doc = load_fan_document(opt.path);
  require_smooth_complete(doc.fan);
  const bool fano = is_fano(doc.fan);
  emit(opt, {{"fano", fano}}, std::string("fano: ") + (fano ? "yes" : "no") + "\n");
  return 0;
}

int cmd_ample(const Options& opt) {
  const FanDocument doc = load_fan_document(opt.path);
  require_smooth_complete(doc.fan);
  const bool ample = is_ample(doc.fan, kappa_of(doc, opt));
  emit(opt, {{"ample", ample}}, std::string("ample: ") + (ample ? "yes" : "no") + "\n");
  return 0;
}

int cmd_polytope(const Options& opt) {
  const FanDocument doc = load_fan_document(opt.path);
  const auto verts = vertices(momentum_polytope(doc.fan, kappa_of(doc, opt)));
  ojson j = ojson::array();
  std::string text;
  for (const auto& v : verts) {
    j.push_back(strings(v));
    text += format_vector(v) + "\n";
  }
  emit(opt, {{"vertices", j}}, text);
  return 0;
}

int cmd_width(const Options& opt) {
  const FanDocument doc = load_fan_document(opt.path);
  const KaehlerClass kappa = kappa_of(doc, opt);
  std::optional<Rational> certificate;
  if (validate_fan(doc.fan).smooth_complete()) certificate = gamma(doc.fan, kappa).value;
  std::optional<Integer> bound;
  if (opt.search_bound) bound = Integer(*opt.search_bound);
  const LatticeWidth w = lattice_width(momentum_polytope(doc.fan, kappa), bound, certificate);
  emit(opt,
       {{"value", to_string(w.value)},
        {"direction", strings(w.direction)},
        {"search_bound", to_string(w.search_bound)},
        {"certified", w.certified}},
       "width = " + to_string(w.value) + "   direction " + format_vector(w.direction) + "   search bound " +
           to_string(w.search_bound) + (w.certified ? "   (certified)\n" : "\n"));
  return 0;
}

int cmd_class_group(const Options& opt) {
  const FanDocument doc = load_fan_document(opt.path);
  const ClassGroupDescription cg = class_group(doc.fan);
  ojson pres = ojson::array();
  std::string text = "Z^" + std::to_string(cg.free_rank);
  for (const auto& t : cg.torsion) text += " + Z/" + to_string(t);
  text += "\n";
  for (std::size_t i = 0; i < cg.presentation.rows(); ++i) {
    pres.push_back(strings(cg.presentation.row(i)));
    text += "  generator " + std::to_string(i) + ": " + format_vector(cg.presentation.row(i)) + "\n";
  }
  emit(opt, {{"free_rank", cg.free_rank}, {"torsion", strings(cg.torsion)}, {"presentation", pres}}, text);
  return 0;
}

int cmd_curve_cert(const Options& opt) {
  const FanDocument doc = load_fan_document(opt.path);
  require_smooth_complete(doc.fan);
  std::optional<KaehlerClass> kappa;
  if (doc.kappa) kappa = kappa_of(doc, opt);

  std::vector<Relation> rels;
  if (opt.relation.empty()) {
    rels = minimal_nonneg_relations(doc.fan);
  } else {
    IntVector a;
    for (const auto& s : split_csv(opt.relation)) a.push_back(parse_integer(s));
    rels.emplace_back(std::move(a));
  }
  std::optional<std::vector<Rational>> markers;
  if (!opt.markers.empty()) {
    markers.emplace();
    for (const auto& s : split_csv(opt.markers)) markers->push_back(parse_rational(s));
  }

  ojson out = ojson::array();
  std::string text;
  for (const auto& rel : rels) {
    const CurveCertificate c = free_curve_certificate(doc.fan, rel, kappa, markers);
    ojson m = ojson::object();
    for (const auto& [ray, marker] : c.markers) m[std::to_string(ray)] = to_string(marker);
    ojson ex = ojson::array();
    for (const auto& coord : c.exponents) {
      ojson row = ojson::array();
      for (const auto& e : coord) row.push_back({to_string(e.marker), to_string(e.exponent)});
      ex.push_back(row);
    }
    ojson cert = {{"relation", strings(rel.coefficients())}, {"markers", m}, {"exponents", ex}};
    cert["symplectic_area"] = c.symplectic_area ? ojson(to_string(*c.symplectic_area)) : ojson(nullptr);
    out.push_back(cert);

    text += "relation " + format_vector(rel.coefficients()) + ": ok";
    if (c.symplectic_area) text += ", area " + to_string(*c.symplectic_area);
    text += "\n";
    for (std::size_t i = 0; i < c.exponents.size(); ++i) {
      text += "  x" + std::to_string(i) + " =";
      for (const auto& e : c.exponents[i]) text += " (t-" + to_string(e.marker) + ")^" + to_string(e.exponent);
      text += "\n";
    }
  }
  emit(opt, {{"certificates", out}}, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toric invariants and Gromov width / Seshadri constant upper bounds"};
  app.require_subcommand(1);
  Options opt;

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Command commands[] = {
      {"validate", "check that the fan is simplicial, smooth and complete", cmd_validate},
      {"report", "full bound report", cmd_report},
      {"gamma", "minimal symplectic area over nonnegative relations", cmd_gamma},
      {"lambda", "Lambda bound over relations of degree at most dim + 1", cmd_lambda},
      {"primcoll", "primitive collections, relations and minimal curve families", cmd_primcoll},
      {"fano", "Fano test via primitive relation degrees", cmd_fano},
      {"width", "lattice width of the momentum polytope", cmd_width},
      {"polytope", "vertices of the momentum polytope", cmd_polytope},
      {"curve-cert", "rational curve certificates for nonnegative relations", cmd_curve_cert},
      {"class-group", "class group via the Smith normal form", cmd_class_group},
      {"ample", "ampleness of kappa by wall positivity", cmd_ample},
  };
  int (*selected)(const Options&) = nullptr;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("file", opt.path, "fan document (JSON)")->required();
    sub->add_flag("--json", opt.json, "machine-readable output");
    sub->add_flag("--normalize", opt.normalize, "replace kappa by a nonnegative representative first");
    sub->add_option("--search-bound", opt.search_bound, "sup-norm cap on lattice width directions")
        ->check(CLI::PositiveNumber);
    if (std::string(c.name) == "curve-cert") {
      sub->add_option("--relation", opt.relation, "comma-separated relation; default: every minimal relation");
      sub->add_option("--markers", opt.markers, "comma-separated distinct marker values");
    }
    sub->callback([&selected, run = c.run] { selected = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    return selected(opt);
  } catch (const ToricError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_validation_error(e.code()) ? kExitValidation : kExitComputation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
}
