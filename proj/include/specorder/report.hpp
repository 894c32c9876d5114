#pragma once

// Structured analysis reports. Every report converts to and from JSON
// losslessly and renders to a fixed human-readable text layout.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "specorder/document.hpp"

namespace specorder {

struct ComponentReport {
  std::vector<std::string> generic;
  std::vector<std::string> points;

  friend bool operator==(const ComponentReport&, const ComponentReport&) = default;
};

struct PointLengthReport {
  std::string point;
  std::size_t length = 0;

  friend bool operator==(const PointLengthReport&, const PointLengthReport&) = default;
};

struct SpaceReport {
  std::string name;
  std::vector<std::string> points;
  bool t0 = false;
  bool uip = false;
  bool uip_enumerated = false;
  std::vector<std::string> quotient_points;
  std::vector<ComponentReport> components;
  std::vector<std::string> generic_points;
  std::vector<std::string> final_points;
  std::vector<std::string> closed_points;
  std::size_t dim = 0;
  std::size_t length = 0;
  std::vector<std::string> presentation;
  std::vector<PointLengthReport> point_lengths;

  friend bool operator==(const SpaceReport&, const SpaceReport&) = default;
};

struct FlagReport {
  std::string flag;
  bool value = false;
  std::vector<std::string> witness;
  std::vector<std::string> witness_set;

  friend bool operator==(const FlagReport&, const FlagReport&) = default;
};

struct StatementReport {
  std::string statement;
  bool applicable = false;
  bool consistent = true;
  std::string detail;

  friend bool operator==(const StatementReport&, const StatementReport&) = default;
};

struct MorphismReport {
  std::string source;
  std::string target;
  bool specialization_preserving = false;
  std::vector<std::string> discontinuity;
  bool ip_preserving = false;
  bool ip_checked = false;
  /// Empty when the map is not specialization-preserving.
  std::string norm;
  std::vector<std::string> norm_witness;
  std::vector<FlagReport> flags;
  std::vector<StatementReport> statements;
  std::vector<std::string> notes;

  friend bool operator==(const MorphismReport&, const MorphismReport&) = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ComponentReport, generic, points)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PointLengthReport, point, length)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SpaceReport, name, points, t0, uip, uip_enumerated,
                                   quotient_points, components, generic_points, final_points,
                                   closed_points, dim, length, presentation, point_lengths)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FlagReport, flag, value, witness, witness_set)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(StatementReport, statement, applicable, consistent, detail)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(MorphismReport, source, target, specialization_preserving,
                                   discontinuity, ip_preserving, ip_checked, norm, norm_witness,
                                   flags, statements, notes)

SpaceReport analyze_space(const SpaceDocument& doc);

/// With `allow_discontinuous` a non-monotone map yields a report holding
/// only the preservation checks; otherwise NotSpecializationPreserving is
/// thrown.
MorphismReport analyze_morphism(const MorphismDocument& doc, bool allow_discontinuous = false);

std::string render_text(const SpaceReport& r);
std::string render_text(const MorphismReport& r);

}  // namespace specorder
