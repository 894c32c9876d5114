#pragma once

// JSON documents describing spaces and maps.
//
//   space:    {"name": "...", "points": [...], "specializations": [[from, to], ...]}
//   morphism: {"source": <space|path>, "target": <space|path>, "map": {"x": "y", ...}}
//
// Unknown keys are errors. Specializations are generating arrows; the
// preorder is their reflexive-transitive closure.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "specorder/morphism.hpp"

namespace specorder {

/// Malformed document. `location()` is a JSON pointer into the document
/// (prefixed with the file name when one is known).
class ParseError : public Error {
 public:
  ParseError(const std::string& location, const std::string& message)
      : Error(location + ": " + message), location_(location) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

struct SpaceDocument {
  std::string name;
  FiniteSpace space;
};

struct MorphismDocument {
  SpaceDocument source;
  SpaceDocument target;
  SpaceMap map;
};

/// Throws ParseError for schema problems (including arrows naming unknown
/// points) and InvalidSpace for duplicate or too many points.
SpaceDocument parse_space_document(const nlohmann::json& j, const std::string& where = "");

/// `base_dir` resolves relative source/target paths. Throws ParseError,
/// InvalidSpace, or PreconditionFailed for a non-total map.
MorphismDocument parse_morphism_document(const nlohmann::json& j,
                                         const std::filesystem::path& base_dir,
                                         const std::string& where = "");

SpaceDocument load_space_document(const std::filesystem::path& path);
MorphismDocument load_morphism_document(const std::filesystem::path& path);

/// Arrows are the cover relation between classes plus one cycle through the
/// members of every class with more than one point, which closes back to the
/// same preorder.
nlohmann::json to_json(const SpaceDocument& doc);
nlohmann::json to_json(const MorphismDocument& doc);

MorphismDocument make_morphism_document(std::string source_name, std::string target_name,
                                        const SpaceMap& map);

/// Two-space indentation with a trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace specorder
