#include "specorder/report.hpp"

#include <sstream>

#include "specorder/checks.hpp"

namespace specorder {

namespace {

std::vector<std::string> names(const FiniteSpace& s, const std::vector<PointIndex>& pts) {
  std::vector<std::string> out;
  for (PointIndex p : pts) out.push_back(s.name(p));
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

// "label: a b c" without a trailing blank for empty lists.
std::string list_line(const std::string& label, const std::vector<std::string>& v) {
  return v.empty() ? label + ":\n" : label + ": " + join(v, " ") + "\n";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

StatementReport statement(std::string name, const CheckResult& r) {
  return {std::move(name), r.applicable, r.consistent, r.detail};
}

}  // namespace

SpaceReport analyze_space(const SpaceDocument& doc) {
  const FiniteSpace& s = doc.space;
  SpaceReport r;
  r.name = doc.name;
  r.points = s.points();
  r.t0 = is_t0(s);
  const UipVerdict uip = has_uip(s);
  r.uip = uip.holds;
  r.uip_enumerated = uip.enumerated;
  if (!r.t0) r.quotient_points = t0_quotient(s).space.points();
  for (const PointSet& c : irreducible_components(s)) {
    r.components.push_back({s.names_of(initial_points(s, c)), s.names_of(c)});
  }
  r.generic_points = s.names_of(initial_points(s, s.whole()));
  r.final_points = s.names_of(final_points(s, s.whole()));
  r.closed_points = s.names_of(closed_points(s));
  r.dim = dim_space(s);
  const LengthTable table(s);
  const LengthReport l = length_of_space(s, table);
  r.length = l.value;
  r.presentation = names(s, l.witness.chain);
  for (PointIndex x = 0; x < s.size(); ++x) r.point_lengths.push_back({s.name(x), table.of_point(x)});
  return r;
}

MorphismReport analyze_morphism(const MorphismDocument& doc, bool allow_discontinuous) {
  const SpaceMap& f = doc.map;
  const FiniteSpace& src = f.source();
  const FiniteSpace& tgt = f.target();
  MorphismReport r;
  r.source = doc.source.name;
  r.target = doc.target.name;

  const Verdict pres = is_specialization_preserving(f);
  r.specialization_preserving = pres.holds;
  if (!pres.holds) r.discontinuity = names(src, pres.witness.points);
  if (src.size() <= kDefaultEnumerationLimit) {
    r.ip_checked = true;
    r.ip_preserving = is_ip_preserving(f).holds;
    r.statements.push_back(statement("lemma17: specialization-preserving iff IP-preserving",
                                     check_ip_equivalence(f)));
  }
  if (!pres.holds) {
    if (allow_discontinuous) return r;
    throw NotSpecializationPreserving(
        "map is not specialization-preserving: " + r.discontinuity[0] + " -> " + r.discontinuity[1] +
            " but not " + tgt.name(f(pres.witness.points[0])) + " -> " +
            tgt.name(f(pres.witness.points[1])),
        pres.witness.points[0], pres.witness.points[1]);
  }

  const ClassificationReport c = classify(f);
  r.norm = to_string(c.norm.value);
  if (c.norm.witness_pair) r.norm_witness = {src.name(c.norm.witness_pair->first), src.name(c.norm.witness_pair->second)};

  auto flag = [&](const std::string& key, bool value, bool target_points = false) {
    FlagReport fr{key, value, {}, {}};
    if (auto it = c.counterexamples.find(key); it != c.counterexamples.end()) {
      fr.witness = names(target_points ? tgt : src, it->second.points);
      if (it->second.set) fr.witness_set = src.names_of(*it->second.set);
    }
    r.flags.push_back(std::move(fr));
  };
  flag("condition_star", c.condition_star);
  flag("length_preserving", c.length_preserving);
  flag("asymptotic", c.asymptotic);
  flag("null", c.null);
  flag("level_separated", c.level_separated);
  flag("level_reduced", c.level_reduced);
  flag("level_mixed", c.level_mixed);
  flag("injective", c.injective);
  flag("chain_lifting", c.chain_lifting, true);
  flag("image_chain_lifting", c.image_chain_lifting, true);

  const NormBoundResult bound = check_norm_bound(f);
  r.statements.push_back(statement("thm33: norm <= 1 under Condition (*)", bound));
  r.statements.push_back(statement("thm37: injective iff length-preserving and level-separated",
                                   injectivity_criterion(f)));
  r.statements.push_back(statement("cor38: injective with Condition (*) has norm 1", check_injective_norm(f)));
  r.statements.push_back(statement("rem36: length-preserving has norm 1", check_length_preserving_norm(f)));
  r.statements.push_back(statement("rem36: surjective between equal dimensions has norm >= 1",
                                   check_surjective_norm(f)));
  r.statements.push_back(statement("prop42: length-preserving and chain-lifting give equal dimensions",
                                   dim_equality_check(f)));

  if (doc.source.name.rfind("spec_kt(", 0) == 0 && doc.target.name.rfind("spec_zt(", 0) == 0) {
    r.notes.push_back("Spec Q[t] -> Spec Z[t] is published with norm 2; this truncation computes " +
                      r.norm + " because closed points of Spec Q[t] contract to height-one primes");
  }
  return r;
}

std::string render_text(const SpaceReport& r) {
  std::ostringstream out;
  out << "space: " << r.name << "\n";
  out << list_line("points", r.points);
  out << "T0: " << yes_no(r.t0) << "\n";
  if (!r.t0) out << "T0 quotient: " << join(r.quotient_points, " ") << "\n";
  out << "UIP: " << yes_no(r.uip) << (r.uip_enumerated ? " (enumerated)" : " (T0 criterion)") << "\n";
  out << "components: " << r.components.size() << "\n";
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    out << "  [" << i << "] generic " << join(r.components[i].generic, ",") << ": "
        << join(r.components[i].points, " ") << "\n";
  }
  out << list_line("generic points", r.generic_points);
  out << list_line("final points", r.final_points);
  out << list_line("closed points", r.closed_points);
  out << "dim: " << r.dim << "\n";
  out << "length: " << r.length << "\n";
  out << "presentation: " << join(r.presentation, " -> ") << "\n";
  out << "point lengths:\n";
  for (const auto& p : r.point_lengths) out << "  " << p.point << " " << p.length << "\n";
  return out.str();
}

std::string render_text(const MorphismReport& r) {
  std::ostringstream out;
  out << "morphism: " << r.source << " -> " << r.target << "\n";
  out << "specialization-preserving: " << yes_no(r.specialization_preserving);
  if (!r.specialization_preserving) out << " (fails at " << join(r.discontinuity, " -> ") << ")";
  out << "\n";
  if (r.ip_checked) out << "IP-preserving: " << yes_no(r.ip_preserving) << "\n";
  if (!r.norm.empty()) {
    out << "norm: " << r.norm;
    if (!r.norm_witness.empty()) out << " (attained at " << join(r.norm_witness, " -> ") << ")";
    out << "\n";
  }
  for (const auto& f : r.flags) {
    out << f.flag << ": " << yes_no(f.value);
    if (!f.witness.empty()) out << " [" << join(f.witness, ", ") << "]";
    if (!f.witness_set.empty()) out << " in {" << join(f.witness_set, ", ") << "}";
    out << "\n";
  }
  for (const auto& s : r.statements) {
    out << s.statement << ": ";
    if (!s.applicable) {
      out << "inapplicable";
    } else {
      out << (s.consistent ? "consistent" : "INCONSISTENT");
    }
    if (!s.detail.empty()) out << " (" << s.detail << ")";
    out << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace specorder
