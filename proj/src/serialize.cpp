#include "ctxlab/serialize.hpp"

#include <iomanip>
#include <sstream>

namespace ctxlab {

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  std::ostringstream out;
  out << std::setprecision(12) << x;
  return out.str();
}

namespace {

Json rationals(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json pairs(const std::vector<std::pair<AtomId, AtomId>>& ps) {
  Json out = Json::array();
  for (const auto& [a, b] : ps) out.push_back({a, b});
  return out;
}

}  // namespace

Json to_json(const Logic& logic) {
  Json contexts = Json::array();
  for (std::size_t c = 0; c < logic.context_count(); ++c) contexts.push_back(logic.context_atoms(c));
  Json out{{"name", logic.name()}, {"atoms", logic.atoms()}, {"contexts", contexts}};
  if (logic.max_intertwine()) out["max_intertwine"] = *logic.max_intertwine();
  return out;
}

Json to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"rule", to_string(v.rule)}, {"message", v.message}, {"atoms", v.atoms}, {"contexts", v.contexts}});
  }
  return {{"ok", report.ok()}, {"violations", violations}};
}

Json to_json(const Logic& logic, const StateList& states) {
  Json rows = Json::array();
  for (const auto& s : states) {
    Json row = Json::array();
    for (auto b : s.bits) row.push_back(static_cast<int>(b));
    rows.push_back(std::move(row));
  }
  return {{"atoms", logic.atoms()}, {"count", states.size()}, {"states", rows}};
}

Json to_json(const StateSpaceReport& report) {
  return {{"count", report.count},
          {"unital", report.unital},
          {"non_unital_atoms", report.non_unital_atoms},
          {"separating", report.separating},
          {"inseparable_pairs", pairs(report.inseparable_pairs)}};
}

Json to_json(const ProbabilityAssignment& p) {
  Json probs = Json::object();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.is_exact()) {
      probs[p.atoms()[i]] = to_string(p.exact_value(i));
    } else {
      probs[p.atoms()[i]] = p.value(i);
    }
  }
  return {{"mode", p.is_exact() ? "exact" : "float"}, {"probabilities", probs}};
}

Json to_json(const MeasureReport& report) {
  Json sums = Json::array();
  for (const auto& [c, s] : report.context_sums) sums.push_back({{"context", c + 1}, {"sum", s}});
  return {{"ok", report.ok()},
          {"a1_nonnegative", report.a1_nonnegative},
          {"a2_additive", report.a2_additive},
          {"a3_normalized", report.a3_normalized},
          {"negative_atoms", report.negative_atoms},
          {"context_sums", sums}};
}

Json to_json(const Inequality& ineq) {
  return {{"coordinates", ineq.coordinates},
          {"coeffs", rationals(ineq.coeffs)},
          {"bound", to_string(ineq.bound)},
          {"text", to_string(ineq)}};
}

Json to_json(const Polytope& polytope) {
  Json vertices = Json::array();
  for (const auto& v : polytope.vertices) vertices.push_back(rationals(v));
  Json facets = Json::array();
  for (const auto& f : polytope.facets) facets.push_back(to_json(f));
  Json equations = Json::array();
  for (const auto& e : polytope.equations) {
    equations.push_back({{"coeffs", rationals(e.coeffs)}, {"rhs", to_string(e.rhs)}, {"text", to_string(e)}});
  }
  return {{"coordinates", polytope.coordinates},
          {"affine_dim", polytope.affine_dim},
          {"vertices", vertices},
          {"facets", facets},
          {"equations", equations}};
}

Json to_json(const MembershipResult& result) {
  if (const auto* in = std::get_if<Inside>(&result)) {
    return {{"result", "inside"}, {"weights", rationals(in->weights.values())}};
  }
  const auto& out = std::get<Outside>(result);
  return {{"result", "outside"},
          {"separator", to_json(out.separator)},
          {"value_at_point", to_string(out.value_at_point)},
          {"max_over_vertices", to_string(out.max_over_vertices)}};
}

Json to_json(const RealizationReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.context_failures) {
    failures.push_back({{"context", f.context + 1}, {"atoms", {f.first, f.second}}, {"value", f.value}});
  }
  Json collinear = Json::array();
  for (const auto& c : report.collinear_pairs) collinear.push_back({{"atoms", {c.first, c.second}}, {"overlap", c.overlap}});
  Json short_contexts = Json::array();
  for (auto c : report.short_contexts) short_contexts.push_back(c + 1);
  return {{"ok", report.ok()},
          {"context_failures", failures},
          {"collinear_pairs", collinear},
          {"short_contexts", short_contexts},
          {"unassigned_atoms", report.unassigned_atoms}};
}

Json to_json(const ViolationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"inequality", to_string(c.inequality)}, {"value", c.value}, {"satisfied", c.satisfied}});
  }
  return {{"assignment", to_json(report.assignment)}, {"checks", checks}, {"violated", report.violated.size()}};
}

Json to_json(const PartitionRepresentation& rep) {
  Json sets = Json::object();
  for (std::size_t a = 0; a < rep.atoms.size(); ++a) {
    Json s = Json::array();
    for (auto i : rep.atom_sets[a]) s.push_back(i + 1);
    sets[rep.atoms[a]] = s;
  }
  return {{"state_count", rep.state_count},
          {"faithful", rep.faithful},
          {"contexts_partition", rep.contexts_partition},
          {"atom_sets", sets}};
}

Json to_json(const UrnResult& result) {
  Json freq = Json::object();
  for (std::size_t k = 0; k < result.atoms.size(); ++k) {
    freq[result.atoms[k]] = {{"count", result.counts[k]}, {"frequency", to_string(result.frequencies[k])}};
  }
  return {{"rng", result.rng},
          {"seed", result.seed},
          {"draws", result.draws},
          {"context", result.context + 1},
          {"frequencies", freq}};
}

Json to_json(const IndefinitenessCertificate& cert) {
  return {{"antecedent", cert.antecedent},
          {"target", cert.target},
          {"sub1", cert.sub1.name()},
          {"sub2", cert.sub2.name()},
          {"pasted", to_json(cert.pasted)},
          {"pasted_state_count", cert.pasted_state_count},
          {"pasted_states_with_antecedent_true", cert.pasted_states_with_antecedent_true}};
}

Json to_json(const CatalogEntry& entry) {
  Json out{{"name", entry.name}};
  if (entry.logic) {
    out["atoms"] = entry.logic->atom_count();
    out["contexts"] = entry.logic->context_count();
  }
  if (entry.expected) {
    const auto& e = *entry.expected;
    Json special = Json::array();
    for (const auto& s : e.special_pairs) special.push_back({s.antecedent, s.target, to_string(s.property)});
    out["expected"] = {{"state_count", e.state_count},
                       {"separating", e.separating},
                       {"unital", e.unital},
                       {"non_unital_atoms", e.non_unital_atoms},
                       {"inseparable_pairs", pairs(e.inseparable_pairs)},
                       {"special_pairs", special}};
  }
  if (entry.realization) {
    out["realization"] = {{"dimension", entry.realization->dimension},
                          {"atoms", entry.realization->atoms},
                          {"partial", entry.partial_realization}};
  }
  if (entry.angle_constraints) {
    out["angle_constraints"] = {{"tifs_min_angle", entry.angle_constraints->tifs_min_angle},
                                {"tits_max_angle", entry.angle_constraints->tits_max_angle},
                                {"feasible", entry.angle_constraints->feasible}};
  }
  out["notes"] = entry.notes;
  return out;
}

std::string truth_table(const Logic& logic, const StateList& states) {
  std::vector<std::size_t> width;
  for (const auto& a : logic.atoms()) width.push_back(std::max<std::size_t>(a.size(), 1));
  const std::size_t index_width = std::max<std::size_t>(std::to_string(states.size()).size(), 1);
  std::ostringstream out;
  out << std::string(index_width, ' ');
  for (std::size_t a = 0; a < logic.atom_count(); ++a) out << ' ' << std::setw(static_cast<int>(width[a])) << logic.atoms()[a];
  out << '\n';
  for (std::size_t s = 0; s < states.size(); ++s) {
    out << std::setw(static_cast<int>(index_width)) << s + 1;
    for (std::size_t a = 0; a < logic.atom_count(); ++a) {
      out << ' ' << std::setw(static_cast<int>(width[a])) << static_cast<int>(states[s].bits[a]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ctxlab
