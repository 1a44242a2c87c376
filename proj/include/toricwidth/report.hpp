#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricwidth/document.hpp"
#include "toricwidth/fan.hpp"
#include "toricwidth/relation.hpp"

namespace toric {

struct ReportWarning {
  std::string code;
  std::string text;
  bool operator==(const ReportWarning&) const = default;
};

struct ReportPrimitiveRelation {
  Cone collection;
  Cone sigma;
  std::vector<Integer> b;
  Integer degree;
  bool operator==(const ReportPrimitiveRelation&) const = default;
};

struct ReportCurveFamily {
  Cone collection;
  Integer degree;
  Rational area;  // L . C for the polarization in use
  bool operator==(const ReportCurveFamily&) const = default;
};

struct BoundReport {
  std::string name;
  FanReport validation;

  std::size_t class_group_free_rank = 0;
  std::vector<Integer> class_group_torsion;
  std::vector<IntVector> class_group_presentation;  // one row per generator

  bool fano = false;
  std::vector<ReportPrimitiveRelation> primitive_relations;
  std::vector<ReportCurveFamily> minimal_curve_families;

  RatVector kappa_input;
  RatVector kappa_used;
  RatVector kappa_shift;  // m with kappa_used = kappa_input + <m, eta>
  bool ample = false;

  Rational gamma;
  IntVector gamma_minimizer;
  bool gamma_attained_by_binary = false;
  Rational lambda;

  std::vector<RatVector> polytope_vertices;
  Rational lattice_width;
  IntVector lattice_width_direction;
  Integer lattice_width_search_bound;
  bool lattice_width_certified = false;

  Rational gromov_width_upper;
  Rational seshadri_upper;
  std::string seshadri_caveat;

  std::vector<ReportWarning> warnings;

  bool operator==(const BoundReport&) const = default;
};

struct ReportOptions {
  bool normalize = false;
  std::optional<Integer> search_bound;
};

/// Runs every computation on a smooth complete fan with an ample class.
/// Throws NotSmoothComplete, NegativeKappa (without normalize), NotAmple,
/// and InternalContradiction if gamma differs from the lattice width.
BoundReport run_report(const FanDocument& doc, const ReportOptions& options = {});

std::string report_to_json(const BoundReport& report);
/// Throws ParseError / BadNumber.
BoundReport report_from_json(std::string_view text);
std::string report_to_text(const BoundReport& report);

// Shared formatting helpers for the CLI.
std::string format_vector(const IntVector& v);
std::string format_vector(const RatVector& v);
std::string format_cone(const Cone& c);

}  // namespace toric
