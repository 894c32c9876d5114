#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "specorder/campaign.hpp"
#include "specorder/catalog.hpp"
#include "specorder/checks.hpp"
#include "specorder/document.hpp"
#include "specorder/dot.hpp"
#include "specorder/report.hpp"

using namespace specorder;
namespace fs = std::filesystem;

namespace {

const fs::path kData = fs::path(SPECORDER_TEST_DIR) / "data";
const fs::path kGolden = fs::path(SPECORDER_TEST_DIR) / "golden";

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run cli(const std::string& args) {
  const fs::path dir = fs::temp_directory_path() / "specorder_cli_test";
  fs::create_directories(dir);
  const fs::path out = dir / "stdout.txt";
  const fs::path err = dir / "stderr.txt";
  const std::string cmd = std::string("\"") + SPECORDER_CLI + "\" " + args + " >\"" + out.string() + "\" 2>\"" +
                          err.string() + "\"";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string data(const std::string& name) { return "\"" + (kData / name).string() + "\""; }

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("documents") {
  TEST_CASE("space documents parse") {
    const SpaceDocument d = load_space_document(kData / "kst.json");
    CHECK(d.name == "KST");
    CHECK(d.space == fixtures::kst());
  }

  TEST_CASE("malformed documents report a location") {
    try {
      load_space_document(kData / "malformed.json");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.location().find("/specializations/1/1") != std::string::npos);
    }
    CHECK_THROWS_AS(load_space_document(kData / "unknown_key.json"), ParseError);
    CHECK_THROWS_AS(load_space_document(kData / "not_json.json"), ParseError);
    CHECK_THROWS_AS(load_space_document(kData / "missing.json"), ParseError);
    CHECK_THROWS_AS(load_space_document(kData / "duplicate.json"), InvalidSpace);
    CHECK_THROWS_AS(parse_space_document(nlohmann::json::parse(R"({"name": "x", "points": "a"})")), ParseError);
    CHECK_THROWS_AS(parse_space_document(nlohmann::json::parse(R"({"name": "x", "points": []})")), ParseError);
  }

  TEST_CASE("morphism documents resolve relative paths") {
    const MorphismDocument m = load_morphism_document(kData / "proj.json");
    CHECK(m.source.name == "KST");
    CHECK(m.target.name == "KT");
    CHECK(m.map.image() == fixtures::proj().image());
    CHECK_THROWS_AS(load_morphism_document(kData / "partial.json"), PreconditionFailed);
  }

  TEST_CASE("round trip on random documents") {
    for (std::uint64_t i = 0; i < 100; ++i) {
      Rng rng(derive_seed(2024, i));
      GeneratorConfig g;
      g.seed = rng.next();
      g.num_points = rng.below(13);
      g.edge_probability = Ratio(1 + static_cast<std::int64_t>(rng.below(3)), 4);
      g.require_t0 = rng.below(2) == 0;
      const SpaceDocument doc{"random-" + std::to_string(i), random_space(g)};
      const std::string text = dump(to_json(doc));
      const SpaceDocument back = parse_space_document(nlohmann::json::parse(text));
      CHECK(back.name == doc.name);
      CHECK(back.space == doc.space);
      CHECK(dump(to_json(back)) == text);

      if (!doc.space.empty()) {
        const SpaceMap f = random_monotone_map(doc.space, doc.space, rng);
        const MorphismDocument md = make_morphism_document(doc.name, doc.name, f);
        const MorphismDocument mback = parse_morphism_document(nlohmann::json::parse(dump(to_json(md))), ".");
        CHECK(mback.map.image() == f.image());
        CHECK(mback.source.space == doc.space);
      }
    }
  }
}

TEST_SUITE("reports") {
  TEST_CASE("space report for KST") {
    const SpaceReport r = analyze_space(load_space_document(kData / "kst.json"));
    REQUIRE(r.components.size() == 1);
    CHECK(r.components[0].generic == std::vector<std::string>{"e2"});
    CHECK(r.closed_points == std::vector<std::string>{"m"});
    CHECK(r.dim == 2);
    CHECK(r.length == 2);
    CHECK(r.presentation == std::vector<std::string>{"e2", "ht", "m"});
  }

  TEST_CASE("space report for A3") {
    const SpaceReport r = analyze_space(load_space_document(kData / "a3.json"));
    CHECK(r.components.size() == 3);
    CHECK(r.length == 0);
  }

  TEST_CASE("non-T0 spaces are reported with their quotient") {
    const SpaceReport r = analyze_space(load_space_document(kData / "nont0.json"));
    CHECK_FALSE(r.t0);
    CHECK_FALSE(r.uip);
    CHECK(r.quotient_points == std::vector<std::string>{"x"});
  }

  TEST_CASE("morphism reports") {
    const MorphismReport p = analyze_morphism(load_morphism_document(kData / "proj.json"), false);
    CHECK(p.norm == "1");
    const auto flag = [&](const MorphismReport& r, const std::string& key) {
      return *std::find_if(r.flags.begin(), r.flags.end(), [&](const FlagReport& f) { return f.flag == key; });
    };
    CHECK_FALSE(flag(p, "length_preserving").value);
    CHECK(flag(p, "length_preserving").witness == std::vector<std::string>{"e2", "m"});
    CHECK(flag(p, "condition_star").value);
    const auto thm33 = std::find_if(p.statements.begin(), p.statements.end(),
                                    [](const StatementReport& s) { return s.statement.rfind("thm33", 0) == 0; });
    REQUIRE(thm33 != p.statements.end());
    CHECK(thm33->applicable);
    CHECK(thm33->consistent);

    const MorphismReport c = analyze_morphism(load_morphism_document(kData / "const.json"), false);
    CHECK(c.norm == "0");
    CHECK(flag(c, "null").value);

    CHECK_THROWS_AS(analyze_morphism(load_morphism_document(kData / "ch2_a3.json"), false),
                    NotSpecializationPreserving);
    const MorphismReport d = analyze_morphism(load_morphism_document(kData / "ch2_a3.json"), true);
    CHECK_FALSE(d.specialization_preserving);
    CHECK(d.discontinuity == std::vector<std::string>{"x0", "x1"});
    CHECK(d.norm.empty());
  }

  TEST_CASE("reports round-trip through JSON") {
    for (const char* f : {"a3.json", "ch2.json", "kst.json", "nont0.json"}) {
      const SpaceReport r = analyze_space(load_space_document(kData / f));
      CHECK(nlohmann::json::parse(dump(nlohmann::json(r))).get<SpaceReport>() == r);
    }
    for (const char* f : {"proj.json", "const.json"}) {
      const MorphismReport r = analyze_morphism(load_morphism_document(kData / f), false);
      CHECK(nlohmann::json::parse(dump(nlohmann::json(r))).get<MorphismReport>() == r);
    }
  }

  TEST_CASE("the embedding fixture carries its caveat") {
    const auto m = std::get<SpaceMap>(build_fixture(FixtureId::parse("embed_kt_zt")));
    const MorphismReport r = analyze_morphism(make_morphism_document("spec_kt(1)", "spec_zt(2,1)", m), false);
    CHECK(r.norm == "1");
    REQUIRE(r.notes.size() == 1);
    CHECK(r.notes[0].find("norm 2") != std::string::npos);
  }
}

TEST_SUITE("dot") {
  TEST_CASE("chain") {
    const std::string d = to_dot(load_space_document(kData / "ch2.json"));
    CHECK(count(d, "[level=") == 3);
    CHECK(count(d, " -> ") == 2);
    CHECK(d.find("\"x0\" [level=0]") != std::string::npos);
    CHECK(d.find("\"x1\" [level=1]") != std::string::npos);
    CHECK(d.find("\"x2\" [level=2]") != std::string::npos);
  }

  TEST_CASE("square keeps only cover edges") {
    const std::string d = to_dot(load_space_document(kData / "kst.json"));
    CHECK(count(d, "subgraph cluster_") == 1);
    CHECK(count(d, "[level=") == 4);
    CHECK(count(d, " -> ") == 4);
    for (const char* e : {"\"e2\" -> \"ht\"", "\"e2\" -> \"hs\"", "\"ht\" -> \"m\"", "\"hs\" -> \"m\""}) {
      CHECK(d.find(e) != std::string::npos);
    }
    CHECK(d.find("\"e2\" -> \"m\"") == std::string::npos);
  }

  TEST_CASE("antichain has one cluster per point") {
    const std::string d = to_dot(load_space_document(kData / "a3.json"));
    CHECK(count(d, "subgraph cluster_") == 3);
    CHECK(count(d, " -> ") == 0);
  }

  TEST_CASE("output depends only on the document") {
    const SpaceDocument doc = load_space_document(kData / "kst.json");
    CHECK(to_dot(doc) == to_dot(parse_space_document(to_json(doc))));
  }
}

TEST_SUITE("campaign") {
  TEST_CASE("exhaustive length check covers 219 posets on four points") {
    CampaignConfig cfg;
    cfg.checks = {CheckId::lemma21};
    cfg.trials = 0;
    cfg.exhaustive_points = 4;
    const CampaignSummary s = run_campaign(cfg);
    REQUIRE(s.checks.size() == 1);
    const auto& by_size = s.checks[0].exhaustive_by_size;
    const auto four = std::find_if(by_size.begin(), by_size.end(), [](const auto& e) { return e.first == 4; });
    REQUIRE(four != by_size.end());
    CHECK(four->second.instances == 219);
    CHECK(four->second.inconsistent == 0);
    CHECK(s.consistent());
  }

  TEST_CASE("campaigns are reproducible") {
    CampaignConfig cfg;
    cfg.checks = {CheckId::lemma17, CheckId::rem23, CheckId::prop42};
    cfg.seed = 7;
    cfg.trials = 200;
    cfg.exhaustive_points = 3;
    CHECK(render_summary(run_campaign(cfg)) == render_summary(run_campaign(cfg)));

    const auto random_details = [](const CampaignConfig& c) {
      std::vector<std::string> out;
      const CampaignSummary summary = run_campaign(c);
      for (const auto& cert : summary.checks.front().certificates) {
        if (cert.phase == "random") out.push_back(cert.detail);
      }
      return out;
    };
    CampaignConfig thm;
    thm.checks = {CheckId::thm37};
    thm.trials = 400;
    thm.exhaustive_points = 1;
    thm.max_certificates = 50;
    thm.seed = 7;
    const auto first = random_details(thm);
    thm.seed = 8;
    const auto second = random_details(thm);
    CHECK_FALSE(first.empty());
    CHECK(first != second);
  }

  TEST_CASE("check ids") {
    for (CheckId id : all_checks()) CHECK(parse_check(check_name(id)) == id);
    CHECK_FALSE(parse_check("thm99"));
    CHECK(all_checks().size() == 8);
  }

  TEST_CASE("injectivity criterion on the projection is not contradicted") {
    const InjectivityResult r = injectivity_criterion(fixtures::proj());
    CHECK((!r.applicable || r.consistent));
  }
}

TEST_SUITE("cli") {
  TEST_CASE("golden outputs") {
    for (const char* name : {"a3", "ch2", "kst"}) {
      CAPTURE(name);
      const std::string doc = data(std::string(name) + ".json");
      const Run text = cli("analyze " + doc);
      CHECK(text.code == 0);
      CHECK(text.out == slurp(kGolden / (std::string(name) + ".analyze.txt")));
      const Run json = cli("analyze --json " + doc);
      CHECK(json.code == 0);
      CHECK(json.out == slurp(kGolden / (std::string(name) + ".analyze.json")));
      const Run dot = cli("export-dot " + doc);
      CHECK(dot.code == 0);
      CHECK(dot.out == slurp(kGolden / (std::string(name) + ".dot")));
    }
  }

  TEST_CASE("export-dot writes to a file") {
    const fs::path out = fs::temp_directory_path() / "specorder_cli_test" / "kst.dot";
    fs::remove(out);
    const Run r = cli("export-dot " + data("kst.json") + " -o \"" + out.string() + "\"");
    CHECK(r.code == 0);
    CHECK(slurp(out) == slurp(kGolden / "kst.dot"));
  }

  TEST_CASE("exit codes") {
    const Run malformed = cli("analyze " + data("malformed.json"));
    CHECK(malformed.code == 2);
    CHECK(malformed.err.find("/specializations/1/1") != std::string::npos);
    CHECK(cli("analyze " + data("missing.json")).code == 2);
    CHECK(cli("analyze " + data("duplicate.json")).code == 3);
    CHECK(cli("analyze " + data("nont0.json")).code == 0);
    CHECK(cli("analyze-morphism " + data("partial.json")).code == 3);
    const Run disc = cli("analyze-morphism " + data("ch2_a3.json"));
    CHECK(disc.code == 4);
    CHECK(disc.err.find("x0 -> x1") != std::string::npos);
    CHECK(cli("analyze-morphism --allow-discontinuous " + data("ch2_a3.json")).code == 0);
    CHECK(cli("catalog build bogus").code == 2);
    CHECK(cli("catalog build \"spec_z(99)\"").code == 2);
    CHECK(cli("frobnicate").code == 1);
    CHECK(cli("fuzz --checks thm99").code == 1);
  }

  TEST_CASE("morphism analysis") {
    const Run p = cli("analyze-morphism " + data("proj.json"));
    CHECK(p.code == 0);
    CHECK(p.out.find("norm: 1") != std::string::npos);
    CHECK(p.out.find("length_preserving: no [e2, m]") != std::string::npos);
    CHECK(p.out.find("condition_star: yes") != std::string::npos);
    CHECK(p.out.find("thm33: norm <= 1 under Condition (*): consistent") != std::string::npos);
    const Run c = cli("analyze-morphism " + data("const.json"));
    CHECK(c.out.find("norm: 0") != std::string::npos);
    CHECK(c.out.find("null: yes") != std::string::npos);
    const Run j = cli("analyze-morphism --json " + data("proj.json"));
    CHECK(nlohmann::json::parse(j.out).at("norm") == "1");
  }

  TEST_CASE("catalog") {
    const Run list = cli("catalog list");
    CHECK(list.code == 0);
    CHECK(list.out.find("proj_kst_kt") != std::string::npos);
    CHECK(list.out.find("Example 3.2(ii)") != std::string::npos);

    const fs::path out = fs::temp_directory_path() / "specorder_cli_test" / "a3_built.json";
    CHECK(cli("catalog build \"antichain(3)\" -o \"" + out.string() + "\"").code == 0);
    CHECK(load_space_document(out).space == fixtures::a3());

    const fs::path embed = fs::temp_directory_path() / "specorder_cli_test" / "embed.json";
    CHECK(cli("catalog build embed_kt_zt -o \"" + embed.string() + "\"").code == 0);
    const Run e = cli("analyze-morphism \"" + embed.string() + "\"");
    CHECK(e.code == 0);
    CHECK(e.out.find("norm: 1") != std::string::npos);
    CHECK(e.out.find("note: ") != std::string::npos);
  }

  TEST_CASE("fuzz") {
    const Run ok = cli("fuzz --checks lemma21,rem23 --seed 3 --trials 50 --max-points 6 --exhaustive-points 4");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("exhaustive n=4: 219 instances") != std::string::npos);
    CHECK(ok.out.find("result: consistent") != std::string::npos);

    const fs::path certs = fs::temp_directory_path() / "specorder_cli_test" / "certs";
    fs::remove_all(certs);
    const Run bad = cli("fuzz --checks thm33 --seed 7 --trials 10 --exhaustive-points 3 --cert-dir \"" +
                        certs.string() + "\"");
    CHECK(bad.code == 5);
    const auto pos = bad.out.find("certificate: ");
    REQUIRE(pos != std::string::npos);
    const std::string path = bad.out.substr(pos + 13, bad.out.find('\n', pos) - pos - 13);
    CHECK(fs::exists(path));
    const Run replay = cli("analyze-morphism \"" + path + "\"");
    CHECK(replay.code == 0);
    CHECK(replay.out.find("thm33: norm <= 1 under Condition (*): INCONSISTENT") != std::string::npos);
  }
}
