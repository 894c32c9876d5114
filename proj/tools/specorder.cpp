// Command-line front end: analyze spaces and maps, export DOT pictures, run
// verification campaigns and build catalog fixtures.
//
// Exit codes: 1 usage, 2 parse error or unknown fixture, 3 invariant
// violation, 4 non-monotone map, 5 inconsistent campaign.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "specorder/campaign.hpp"
#include "specorder/catalog.hpp"
#include "specorder/document.hpp"
#include "specorder/dot.hpp"
#include "specorder/report.hpp"

namespace fs = std::filesystem;
using namespace specorder;

namespace {

enum Exit : int { ok = 0, usage = 1, parse = 2, invariant = 3, discontinuous = 4, inconsistent = 5 };

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<CheckId> parse_checks(const std::string& list) {
  std::vector<CheckId> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      for (CheckId id : all_checks()) out.push_back(id);
      continue;
    }
    auto id = parse_check(item);
    if (!id) throw CLI::ValidationError("--checks", "unknown check id '" + item + "'");
    out.push_back(*id);
  }
  if (out.empty()) throw CLI::ValidationError("--checks", "no checks given");
  return out;
}

std::string certificate_file_name(const Certificate& c, std::size_t ordinal) {
  return "certificate_" + std::string(check_name(c.check)) + "_" + c.phase + "_" + std::to_string(c.index) +
         "_" + std::to_string(ordinal) + ".json";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Specialization orders on finite spaces"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  bool as_json = false;
  bool allow_discontinuous = false;

  auto* analyze = app.add_subcommand("analyze", "Analyze a space document");
  analyze->add_option("space", input, "Space document (JSON)")->required();
  analyze->add_flag("--json", as_json, "Print the structured report");

  auto* analyze_map = app.add_subcommand("analyze-morphism", "Analyze a morphism document");
  analyze_map->add_option("morphism", input, "Morphism document (JSON)")->required();
  analyze_map->add_flag("--allow-discontinuous", allow_discontinuous,
                             "Report on maps that do not preserve specializations");
  analyze_map->add_flag("--json", as_json, "Print the structured report");

  auto* export_dot = app.add_subcommand("export-dot", "Write the DOT forest of a space");
  export_dot->add_option("space", input, "Space document (JSON)")->required();
  export_dot->add_option("-o,--out", output, "Output file (default stdout)");

  std::string checks = "all";
  CampaignConfig campaign;
  std::string cert_dir = ".";
  auto* fuzz = app.add_subcommand("fuzz", "Run exhaustive and randomized verification campaigns");
  fuzz->add_option("--checks", checks, "Comma-separated check ids, or 'all'");
  fuzz->add_option("--seed", campaign.seed, "Random seed");
  fuzz->add_option("--trials", campaign.trials, "Random trials per check");
  fuzz->add_option("--max-points", campaign.max_points, "Maximum points per random space")
      ->check(CLI::Range(std::size_t{1}, kMaxPoints));
  fuzz->add_option("--exhaustive-points", campaign.exhaustive_points, "Maximum points in the exhaustive phase")
      ->check(CLI::Range(std::size_t{0}, kMaxEnumeratedPoints));
  fuzz->add_option("--cert-dir", cert_dir, "Directory for counterexample certificates");

  auto* catalog = app.add_subcommand("catalog", "List or build named fixtures");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "List fixture ids");
  std::string fixture;
  auto* build = catalog->add_subcommand("build", "Write a fixture document");
  build->add_option("id", fixture, "Fixture id, e.g. spec_kst(1)")->required();
  build->add_option("-o,--out", output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Exit::ok : Exit::usage;
  }

  try {
    if (*analyze) {
      const SpaceReport r = analyze_space(load_space_document(input));
      std::cout << (as_json ? dump(nlohmann::json(r)) : render_text(r));
    } else if (*analyze_map) {
      const MorphismReport r = analyze_morphism(load_morphism_document(input), allow_discontinuous);
      std::cout << (as_json ? dump(nlohmann::json(r)) : render_text(r));
    } else if (*export_dot) {
      write_output(to_dot(load_space_document(input)), output);
    } else if (*fuzz) {
      try {
        campaign.checks = parse_checks(checks);
      } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return Exit::usage;
      }
      const CampaignSummary summary = run_campaign(campaign);
      std::cout << render_summary(summary);
      if (!summary.consistent()) {
        fs::create_directories(cert_dir);
        std::size_t ordinal = 0;
        for (const auto& c : summary.checks) {
          for (const auto& cert : c.certificates) {
            const fs::path path = fs::path(cert_dir) / certificate_file_name(cert, ordinal++);
            write_output(dump(cert.document), path.string());
            std::cout << "certificate: " << path.string() << "\n";
          }
        }
        return Exit::inconsistent;
      }
    } else if (*catalog) {
      if (!fixture.empty()) {
        FixtureId id;
        Fixture fx;
        try {
          id = FixtureId::parse(fixture);
          fx = build_fixture(id);
        } catch (const PreconditionFailed& e) {
          std::cerr << "error: " << e.what() << "\n";
          return Exit::parse;
        }
        nlohmann::json doc;
        if (const auto* space = std::get_if<FiniteSpace>(&fx)) {
          doc = to_json(SpaceDocument{fixture_name(id), *space});
        } else {
          const auto& map = std::get<SpaceMap>(fx);
          const auto [source, target] = map_fixture_endpoints(id);
          doc = to_json(make_morphism_document(source, target, map));
        }
        write_output(dump(doc), output);
      } else {
        for (const auto& info : list_fixtures()) std::cout << info.id << "  " << info.description << "\n";
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return Exit::parse;
  } catch (const NotSpecializationPreserving& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Exit::discontinuous;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Exit::invariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Exit::usage;
  }
  return Exit::ok;
}
