#pragma once

// Verification campaigns: an exhaustive phase over all small spaces (and
// maps between them) followed by a randomized phase. Results depend only on
// the configuration.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace specorder {

enum class CheckId { lemma17, lemma21, thm33, thm37, cor38, rem36, prop42, rem23 };

std::string_view check_name(CheckId id);
std::optional<CheckId> parse_check(std::string_view name);
std::vector<CheckId> all_checks();

struct CampaignConfig {
  std::vector<CheckId> checks;
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  /// Upper bound on points per random space.
  std::size_t max_points = 8;
  /// Upper bound on points per space in the exhaustive phase. Map checks
  /// over all pairs of spaces cap this at 3, checks over irreducible pairs
  /// and subset checks at 4.
  std::size_t exhaustive_points = 5;
  std::size_t max_certificates = 5;
};

struct Tally {
  std::size_t instances = 0;
  std::size_t applicable = 0;
  std::size_t inapplicable = 0;
  std::size_t consistent = 0;
  std::size_t inconsistent = 0;
};

/// A replayable instance on which a statement failed. `document` is a space
/// or morphism document accepted by the CLI.
struct Certificate {
  CheckId check = CheckId::lemma21;
  std::string phase;
  std::uint64_t index = 0;
  std::string detail;
  bool is_morphism = false;
  nlohmann::json document;
};

struct CheckSummary {
  CheckId check = CheckId::lemma21;
  /// Exhaustive phase instances keyed by source space size.
  std::vector<std::pair<std::size_t, Tally>> exhaustive_by_size;
  Tally exhaustive;
  Tally random;
  std::vector<Certificate> certificates;
};

struct CampaignSummary {
  std::vector<CheckSummary> checks;

  bool consistent() const;
};

CampaignSummary run_campaign(const CampaignConfig& cfg);

std::string render_summary(const CampaignSummary& summary);

}  // namespace specorder
