#include "specorder/campaign.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "specorder/catalog.hpp"
#include "specorder/checks.hpp"
#include "specorder/document.hpp"

namespace specorder {

namespace {

constexpr std::array<std::pair<CheckId, std::string_view>, 8> kNames = {{
    {CheckId::lemma17, "lemma17"},
    {CheckId::lemma21, "lemma21"},
    {CheckId::thm33, "thm33"},
    {CheckId::thm37, "thm37"},
    {CheckId::cor38, "cor38"},
    {CheckId::rem36, "rem36"},
    {CheckId::prop42, "prop42"},
    {CheckId::rem23, "rem23"},
}};

bool needs_irreducible(CheckId id) { return id == CheckId::thm37 || id == CheckId::prop42; }

CheckResult evaluate(CheckId id, const SpaceMap& f) {
  switch (id) {
    case CheckId::lemma17: return check_ip_equivalence(f);
    case CheckId::thm33: return check_norm_bound(f);
    case CheckId::thm37: return injectivity_criterion(f);
    case CheckId::cor38: return check_injective_norm(f);
    case CheckId::prop42: return dim_equality_check(f);
    case CheckId::rem36: {
      const CheckResult a = check_length_preserving_norm(f);
      const CheckResult b = check_surjective_norm(f);
      CheckResult r;
      r.applicable = a.applicable || b.applicable;
      r.consistent = a.consistent && b.consistent;
      r.detail = !a.consistent ? a.detail : (!b.consistent ? b.detail : "");
      return r;
    }
    default: break;
  }
  throw PreconditionFailed("not a map check");
}

class Recorder {
 public:
  Recorder(CheckSummary& summary, std::size_t max_certificates)
      : summary_(summary), max_certificates_(max_certificates) {}

  void record(Tally& tally, const CheckResult& r, const std::string& phase, std::uint64_t index,
              const std::function<nlohmann::json()>& document, bool is_morphism) {
    ++tally.instances;
    if (!r.applicable) {
      ++tally.inapplicable;
      return;
    }
    ++tally.applicable;
    if (r.consistent) {
      ++tally.consistent;
      return;
    }
    ++tally.inconsistent;
    if (summary_.certificates.size() < max_certificates_) {
      summary_.certificates.push_back({summary_.check, phase, index, r.detail, is_morphism, document()});
    }
  }

 private:
  CheckSummary& summary_;
  std::size_t max_certificates_;
};

Tally& tally_for(std::vector<std::pair<std::size_t, Tally>>& by_size, std::size_t n) {
  auto it = std::find_if(by_size.begin(), by_size.end(), [&](const auto& e) { return e.first == n; });
  if (it != by_size.end()) return it->second;
  by_size.emplace_back(n, Tally{});
  return by_size.back().second;
}

void add(Tally& into, const Tally& t) {
  into.instances += t.instances;
  into.applicable += t.applicable;
  into.inapplicable += t.inapplicable;
  into.consistent += t.consistent;
  into.inconsistent += t.inconsistent;
}

std::vector<FiniteSpace> small_spaces(std::size_t max_n, bool irreducible_only) {
  std::vector<FiniteSpace> out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    for_each_space(n, true, [&](const FiniteSpace& s) {
      if (!irreducible_only || (!s.empty() && is_irreducible(s, s.whole()))) out.push_back(s);
    });
  }
  return out;
}

nlohmann::json space_doc(const FiniteSpace& s) { return to_json(SpaceDocument{"instance", s}); }

nlohmann::json map_doc(const SpaceMap& f) {
  return to_json(make_morphism_document("source", "target", f));
}

void run_exhaustive(const CampaignConfig& cfg, CheckSummary& summary, Recorder& rec) {
  const CheckId id = summary.check;
  std::uint64_t index = 0;
  std::vector<std::pair<std::size_t, Tally>> by_size;

  if (id == CheckId::lemma21) {
    for (std::size_t n = 0; n <= std::min(cfg.exhaustive_points, kMaxEnumeratedPoints); ++n) {
      Tally& t = tally_for(by_size, n);
      for_each_space(n, true, [&](const FiniteSpace& s) {
        rec.record(t, check_length_equals_dim(s), "exhaustive", index++, [&] { return space_doc(s); }, false);
      });
    }
  } else if (id == CheckId::rem23) {
    for (std::size_t n = 0; n <= std::min<std::size_t>(cfg.exhaustive_points, 4); ++n) {
      Tally& t = tally_for(by_size, n);
      for_each_space(n, true, [&](const FiniteSpace& s) {
        for (Mask m = 0; m <= full_mask(n); ++m) {
          CheckResult r = check_subset_length_bound(s, PointSet(n, m));
          if (!r.consistent) r.detail += " for subset {" + [&] {
            std::string out;
            for (const auto& p : s.names_of(PointSet(n, m))) out += (out.empty() ? "" : ",") + p;
            return out;
          }() + "}";
          rec.record(t, r, "exhaustive", index++, [&] { return space_doc(s); }, false);
        }
      });
    }
  } else {
    const std::size_t cap = needs_irreducible(id) ? 4 : 3;
    const auto spaces = small_spaces(std::min(cfg.exhaustive_points, cap), needs_irreducible(id));
    for (const FiniteSpace& src : spaces) {
      Tally& t = tally_for(by_size, src.size());
      for (const FiniteSpace& tgt : spaces) {
        auto visit = [&](const SpaceMap& f) {
          rec.record(t, evaluate(id, f), "exhaustive", index++, [&] { return map_doc(f); }, true);
        };
        if (id == CheckId::lemma17) {
          for_each_total_map(src, tgt, visit);
        } else {
          for_each_monotone_map(src, tgt, visit);
        }
      }
    }
  }
  std::sort(by_size.begin(), by_size.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [n, t] : by_size) add(summary.exhaustive, t);
  summary.exhaustive_by_size = std::move(by_size);
}

void run_random(const CampaignConfig& cfg, CheckSummary& summary, Recorder& rec) {
  const CheckId id = summary.check;
  const std::array<Ratio, 3> probabilities = {Ratio(1, 4), Ratio(1, 3), Ratio(1, 2)};
  const std::size_t max_points = std::min(cfg.max_points, id == CheckId::lemma17 ? std::size_t{8} : kMaxPoints);
  const std::uint64_t check_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(id) + 1000);

  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng(derive_seed(check_seed, trial));
    auto make_space = [&](bool irreducible) {
      GeneratorConfig g;
      g.seed = rng.next();
      g.num_points = 1 + rng.below(std::max<std::size_t>(max_points, 1));
      g.edge_probability = probabilities[rng.below(probabilities.size())];
      if (irreducible) g.edge_probability = Ratio(1, 2);
      g.require_irreducible = irreducible;
      return random_space(g);
    };

    if (id == CheckId::lemma21) {
      const FiniteSpace s = make_space(false);
      rec.record(summary.random, check_length_equals_dim(s), "random", trial, [&] { return space_doc(s); }, false);
    } else if (id == CheckId::rem23) {
      const FiniteSpace s = make_space(false);
      const PointSet subset(s.size(), rng.next() & full_mask(s.size()));
      rec.record(summary.random, check_subset_length_bound(s, subset), "random", trial,
                 [&] { return space_doc(s); }, false);
    } else {
      const bool irreducible = needs_irreducible(id);
      const FiniteSpace src = make_space(irreducible);
      const FiniteSpace tgt = make_space(irreducible);
      const bool monotone = id != CheckId::lemma17 || rng.below(2) == 0;
      const SpaceMap f = monotone ? random_monotone_map(src, tgt, rng) : random_total_map(src, tgt, rng);
      rec.record(summary.random, evaluate(id, f), "random", trial, [&] { return map_doc(f); }, true);
    }
  }
}

void print_tally(std::ostream& out, const Tally& t) {
  out << t.instances << " instances, " << t.applicable << " applicable, " << t.consistent
      << " consistent, " << t.inapplicable << " inapplicable, " << t.inconsistent << " inconsistent";
}

}  // namespace

std::string_view check_name(CheckId id) {
  for (const auto& [k, name] : kNames) {
    if (k == id) return name;
  }
  return "?";
}

std::optional<CheckId> parse_check(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::vector<CheckId> all_checks() {
  std::vector<CheckId> out;
  for (const auto& [k, name] : kNames) out.push_back(k);
  return out;
}

bool CampaignSummary::consistent() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckSummary& c) {
    return c.exhaustive.inconsistent == 0 && c.random.inconsistent == 0;
  });
}

CampaignSummary run_campaign(const CampaignConfig& cfg) {
  CampaignSummary summary;
  for (CheckId id : cfg.checks) {
    CheckSummary cs;
    cs.check = id;
    Recorder rec(cs, cfg.max_certificates);
    run_exhaustive(cfg, cs, rec);
    run_random(cfg, cs, rec);
    summary.checks.push_back(std::move(cs));
  }
  return summary;
}

std::string render_summary(const CampaignSummary& summary) {
  std::ostringstream out;
  for (const auto& c : summary.checks) {
    out << check_name(c.check) << "\n";
    for (const auto& [n, t] : c.exhaustive_by_size) {
      out << "  exhaustive n=" << n << ": ";
      print_tally(out, t);
      out << "\n";
    }
    out << "  exhaustive total: ";
    print_tally(out, c.exhaustive);
    out << "\n  random: ";
    print_tally(out, c.random);
    out << "\n";
    for (const auto& cert : c.certificates) {
      out << "  counterexample (" << cert.phase << " #" << cert.index << "): " << cert.detail << "\n";
    }
  }
  out << (summary.consistent() ? "result: consistent\n" : "result: INCONSISTENT\n");
  return out.str();
}

}  // namespace specorder
