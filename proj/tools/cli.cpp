#include "cli.hpp"

#include "ctxlab/catalog.hpp"
#include "ctxlab/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace ctxlab::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A domain result that is not an error of the library (an unmet --expect,
// an invalid logic); the message has already been reported.
struct Failure {};

struct Options {
  std::string catalog;
  std::string logic_file;
  std::string other_catalog;
  std::string other_logic_file;
  std::string vectors_file;
  std::string psi;
  std::string weights_file;
  std::string project;
  std::string context;
  std::string expect;
  std::string point;
  std::string polytope_file;
  std::string given;
  std::string target;
  std::string atom;
  std::vector<std::string> inequalities;
  std::optional<std::uint64_t> seed;
  std::uint64_t draws = 100000;
  bool count = false;
  bool json = false;
  bool allow_large = false;
  bool partial = false;
  bool orthogonal_closure = false;
};

constexpr int kHullDimensionLimit = 10;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Logic load_logic(const std::string& catalog, const std::string& file, const char* what) {
  if (!catalog.empty()) {
    auto entry = catalog_get(catalog);
    if (!entry.logic) throw Error(ErrorKind::InvalidArgument, "catalog entry '" + catalog + "' has no logic");
    return *entry.logic;
  }
  if (!file.empty()) return parse_logic(read_file(file));
  throw UsageError(std::string(what) + " is required");
}

Logic load_logic(const Options& o) { return load_logic(o.catalog, o.logic_file, "--catalog or --logic"); }

Logic load_other_logic(const Options& o) {
  return load_logic(o.other_catalog, o.other_logic_file, "--other-catalog or --other-logic");
}

struct LoadedRealization {
  Realization realization;
  bool partial = false;
};

LoadedRealization load_realization(const Options& o) {
  if (!o.vectors_file.empty()) return {parse_vectors(read_file(o.vectors_file)), o.partial};
  if (!o.catalog.empty()) {
    auto entry = catalog_get(o.catalog);
    if (entry.realization) return {*entry.realization, entry.partial_realization || o.partial};
    throw UsageError("catalog entry '" + o.catalog + "' ships no vectors; pass --vectors");
  }
  throw UsageError("--vectors is required");
}

RationalVector parse_rational_list(const std::string& text) {
  RationalVector out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    for (std::string tok; ls >> tok;) out.push_back(parse_rational(tok));
  }
  return out;
}

MixtureWeights load_weights(const Options& o, std::size_t state_count) {
  if (o.weights_file.empty()) return MixtureWeights::uniform(state_count);
  auto w = parse_rational_list(read_file(o.weights_file));
  if (w.size() != state_count) {
    throw Error(ErrorKind::WeightCountMismatch,
                std::to_string(w.size()) + " weights for " + std::to_string(state_count) + " states");
  }
  return MixtureWeights(std::move(w));
}

Vector parse_psi(const Options& o, const Realization& r) {
  if (o.psi.empty()) throw UsageError("--psi is required");
  if (const auto* v = r.find(o.psi)) return *v;
  auto parts = split(o.psi, ',');
  Vector psi(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) psi[static_cast<Eigen::Index>(i)] = parse_component(parts[i]);
  return psi;
}

std::optional<std::vector<AtomId>> parse_projection(const Options& o) {
  if (o.project.empty()) return std::nullopt;
  return split(o.project, ',');
}

std::size_t parse_context(const Options& o, const Logic& logic) {
  if (o.context.empty()) throw UsageError("--context is required");
  if (std::all_of(o.context.begin(), o.context.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    auto k = std::stoull(o.context);
    if (k == 0 || k > logic.context_count()) {
      throw Error(ErrorKind::UnknownContext, "no context " + o.context + "; the logic has " +
                                                 std::to_string(logic.context_count()));
    }
    return k - 1;
  }
  std::vector<AtomIndex> want;
  for (const auto& id : split(o.context, ',')) want.push_back(logic.index_of(id));
  std::sort(want.begin(), want.end());
  for (std::size_t c = 0; c < logic.context_count(); ++c) {
    if (logic.contexts()[c].sorted() == want) return c;
  }
  throw Error(ErrorKind::UnknownContext, "no context {" + o.context + "}");
}

// "a=1/2,b=0" inline, or a file of "atom value" lines. Unlisted atoms are 0.
ProbabilityAssignment load_point(const Options& o, const std::vector<AtomId>& coordinates) {
  std::map<AtomId, Rational> given;
  if (o.point.find('=') != std::string::npos) {
    for (const auto& item : split(o.point, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("bad --point item '" + item + "'");
      given[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
    }
  } else {
    std::istringstream in(read_file(o.point));
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream ls(line);
      std::string id, value;
      if (!(ls >> id)) continue;
      if (!(ls >> value)) throw UsageError("point line for '" + id + "' has no value");
      given[id] = parse_rational(value);
    }
  }
  for (const auto& [id, v] : given) {
    if (std::find(coordinates.begin(), coordinates.end(), id) == coordinates.end()) {
      throw Error(ErrorKind::DimensionMismatch, "'" + id + "' is not a coordinate of the polytope");
    }
  }
  RationalVector values;
  for (const auto& id : coordinates) {
    auto it = given.find(id);
    values.push_back(it == given.end() ? Rational(0) : it->second);
  }
  return ProbabilityAssignment::exact(coordinates, std::move(values));
}

std::vector<Inequality> load_inequalities(const Options& o) {
  std::vector<Inequality> out;
  for (const auto& text : o.inequalities) out.push_back(parse_inequality(text));
  return out;
}

void expect_one_of(const Options& o, std::initializer_list<const char*> allowed) {
  if (o.expect.empty()) return;
  for (const char* a : allowed) {
    if (o.expect == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw UsageError("--expect must be one of: " + list);
}

// Reports an unmet --expect as a domain failure.
void check_expect(const Options& o, const std::string& actual, std::ostream& err) {
  if (!o.expect.empty() && o.expect != actual) {
    err << "expected " << o.expect << ", got " << actual << "\n";
    throw Failure{};
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<AtomId>& ids, const char* sep = " ") {
  std::string out;
  for (const auto& id : ids) out += (out.empty() ? "" : sep) + id;
  return out;
}

void emit(std::ostream& out, const char* command, Json body) {
  Json doc{{"command", command}};
  for (auto& [k, v] : body.items()) doc[k] = v;
  out << doc.dump(2) << "\n";
}

// ---- commands ----

int cmd_validate(const Options& o, std::ostream& out) {
  auto logic = load_logic(o);
  auto report = validate_logic(logic);
  if (o.json) {
    emit(out, "validate", to_json(report));
  } else if (report.ok()) {
    out << "ok\n";
  } else {
    for (const auto& v : report.violations) out << to_string(v.rule) << ": " << v.message << "\n";
  }
  return report.ok() ? kExitOk : kExitFailure;
}

int cmd_states(const Options& o, std::ostream& out) {
  auto logic = load_logic(o);
  auto states = enumerate_states(logic);
  if (o.json) {
    emit(out, "states", o.count ? Json{{"count", states.size()}} : to_json(logic, states));
  } else if (o.count) {
    out << states.size() << "\n";
  } else {
    out << truth_table(logic, states);
  }
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  auto logic = load_logic(o);
  auto report = classify_states(logic, enumerate_states(logic));
  if (o.json) {
    emit(out, "classify", to_json(report));
    return kExitOk;
  }
  std::string pairs;
  for (const auto& [a, b] : report.inseparable_pairs) pairs += (pairs.empty() ? "" : " ") + a + "/" + b;
  out << "states: " << report.count << "\n"
      << "unital: " << yes_no(report.unital) << "\n"
      << "non_unital_atoms: " << join(report.non_unital_atoms) << "\n"
      << "separating: " << yes_no(report.separating) << "\n"
      << "inseparable_pairs: " << pairs << "\n";
  return kExitOk;
}

int cmd_property(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.given.empty() || o.target.empty()) throw UsageError("--given and --target are required");
  expect_one_of(o, {"TrueImpliesFalse", "TrueImpliesTrue", "AntecedentNeverTrue", "Unconstrained"});
  auto logic = load_logic(o);
  auto p = pair_property(logic, o.given, o.target);
  if (o.json) {
    emit(out, "property", {{"antecedent", o.given}, {"target", o.target}, {"property", to_string(p)}});
  } else {
    out << to_string(p) << "\n";
  }
  check_expect(o, to_string(p), err);
  return kExitOk;
}

int cmd_mixture(const Options& o, std::ostream& out) {
  auto logic = load_logic(o);
  auto states = enumerate_states(logic);
  auto weights = load_weights(o, states.size());
  auto p = convex_mixture(logic, states, weights);
  auto measure = check_measure(logic, p, 0.0);
  if (o.json) {
    emit(out, "mixture", {{"assignment", to_json(p)}, {"measure", to_json(measure)}});
    return kExitOk;
  }
  for (std::size_t i = 0; i < p.size(); ++i) out << p.atoms()[i] << " " << to_string(p.exact_value(i)) << "\n";
  out << "axioms: " << (measure.ok() ? "ok" : "violated") << "\n";
  return kExitOk;
}

VertexSet vertices_for(const Options& o, const Logic& logic) {
  return vertices_from_states(logic, enumerate_states(logic), parse_projection(o));
}

Polytope hull_of(const Options& o, const VertexSet& vs) {
  const int dim = affine_rank(vs.vertices);
  if (dim > kHullDimensionLimit && !o.allow_large) {
    throw Error(ErrorKind::TooLarge, "affine dimension " + std::to_string(dim) + " exceeds " +
                                         std::to_string(kHullDimensionLimit) + "; use --project or --allow-large");
  }
  return facet_enumeration(vs);
}

int cmd_hull(const Options& o, std::ostream& out) {
  auto logic = load_logic(o);
  auto poly = hull_of(o, vertices_for(o, logic));
  if (o.json) {
    emit(out, "hull", to_json(poly));
  } else {
    out << write_polytope_text(poly);
  }
  return kExitOk;
}

int cmd_member(const Options& o, std::ostream& out, std::ostream& err) {
  expect_one_of(o, {"inside", "outside"});
  auto logic = load_logic(o);
  auto states = enumerate_states(logic);
  auto vs = vertices_from_states(logic, states, parse_projection(o));
  ProbabilityAssignment point;
  if (!o.point.empty()) {
    point = load_point(o, vs.coordinates);
  } else if (!o.weights_file.empty()) {
    point = convex_mixture(logic, states, load_weights(o, states.size()));
  } else {
    throw UsageError("--point or --weights is required");
  }
  auto result = membership(point, vs);
  const bool inside = std::holds_alternative<Inside>(result);
  if (o.json) {
    emit(out, "member", to_json(result));
  } else if (inside) {
    out << "inside\nweights:";
    for (const auto& w : std::get<Inside>(result).weights.values()) out << " " << to_string(w);
    out << "\n";
  } else {
    const auto& r = std::get<Outside>(result);
    out << "outside\n"
        << "separator: " << to_string(r.separator) << "\n"
        << "value_at_point: " << to_string(r.value_at_point) << "\n"
        << "max_over_vertices: " << to_string(r.max_over_vertices) << "\n";
  }
  check_expect(o, inside ? "inside" : "outside", err);
  return kExitOk;
}

int cmd_axiom_check(const Options& o, std::ostream& out, std::ostream& err) {
  expect_one_of(o, {"implied", "not-implied"});
  auto logic = load_logic(o);
  std::vector<Inequality> ineqs = load_inequalities(o);
  if (!o.polytope_file.empty()) {
    auto poly = read_polytope_text(read_file(o.polytope_file));
    ineqs.insert(ineqs.end(), poly.facets.begin(), poly.facets.end());
  }
  if (ineqs.empty()) ineqs = hull_of(o, vertices_for(o, logic)).facets;
  Json rows = Json::array();
  bool all = true, none = true;
  for (const auto& ineq : ineqs) {
    const bool implied =
        axiom_implied(logic, ineq, o.orthogonal_closure ? AxiomRegion::OrthogonalClosure : AxiomRegion::Contexts);
    (implied ? none : all) = false;
    if (o.json) {
      rows.push_back({{"inequality", to_string(ineq)}, {"implied", implied}});
    } else {
      out << (implied ? "implied: " : "not implied: ") << to_string(ineq) << "\n";
    }
  }
  if (o.json) {
    emit(out, "axiom-check", {{"checks", rows}, {"all_implied", all}});
  } else {
    out << "all implied: " << yes_no(all) << "\n";
  }
  if (o.expect == "implied") check_expect(o, all ? "implied" : "not-implied", err);
  if (o.expect == "not-implied") check_expect(o, none ? "not-implied" : "implied", err);
  return kExitOk;
}

int cmd_realization_check(const Options& o, std::ostream& out) {
  auto logic = load_logic(o);
  auto [r, partial] = load_realization(o);
  auto report = check_realization(logic, r, partial);
  if (o.json) {
    emit(out, "realization-check", to_json(report));
  } else {
    out << (report.ok() ? "ok" : "failed") << "\n";
    for (const auto& f : report.context_failures) {
      if (f.first == f.second) {
        out << "context " << f.context + 1 << ": |" << f.first << "| = " << format_double(f.value) << "\n";
      } else {
        out << "context " << f.context + 1 << ": |<" << f.first << "|" << f.second << ">| = " << format_double(f.value)
            << "\n";
      }
    }
    for (const auto& c : report.collinear_pairs) out << "collinear: " << c.first << " " << c.second << "\n";
    if (!report.unassigned_atoms.empty()) out << "unassigned: " << join(report.unassigned_atoms) << "\n";
  }
  return report.ok() ? kExitOk : kExitFailure;
}

int cmd_born(const Options& o, std::ostream& out) {
  auto logic = load_logic(o);
  auto [r, partial] = load_realization(o);
  auto psi = parse_psi(o, r);
  auto report = quantum_vs_classical(logic, r, psi, {});
  const auto& p = report.assignment;
  if (!o.atom.empty()) {
    logic.index_of(o.atom);
    const double v = p.at(o.atom);
    if (o.json) {
      emit(out, "born", {{"atom", o.atom}, {"probability", v}});
    } else {
      out << format_double(v) << "\n";
    }
    return kExitOk;
  }
  if (o.json) {
    emit(out, "born", to_json(p));
  } else {
    for (std::size_t i = 0; i < p.size(); ++i) out << p.atoms()[i] << " " << format_double(p.value(i)) << "\n";
  }
  return kExitOk;
}

int cmd_violate(const Options& o, std::ostream& out, std::ostream& err) {
  expect_one_of(o, {"violated", "satisfied"});
  auto ineqs = load_inequalities(o);
  if (ineqs.empty()) throw UsageError("at least one --ineq is required");
  auto logic = load_logic(o);
  auto [r, partial] = load_realization(o);
  auto report = quantum_vs_classical(logic, r, parse_psi(o, r), ineqs);
  if (o.json) {
    emit(out, "violate", to_json(report));
  } else {
    for (const auto& c : report.checks) {
      out << (c.satisfied ? "satisfied" : "VIOLATED") << " " << format_double(c.value) << " : "
          << to_string(c.inequality) << "\n";
    }
  }
  check_expect(o, report.violated.empty() ? "satisfied" : "violated", err);
  return kExitOk;
}

int cmd_paste(const Options& o, std::ostream& out, std::ostream& err) {
  auto first = load_logic(o);
  auto second = load_other_logic(o);
  try {
    auto pasted = paste_logics(first, second);
    if (o.json) {
      emit(out, "paste", to_json(pasted));
    } else {
      out << serialize_logic(pasted);
    }
  } catch (const PasteError& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& v : e.report().violations) err << "  " << to_string(v.rule) << ": " << v.message << "\n";
    throw Failure{};
  }
  return kExitOk;
}

int cmd_certify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.given.empty() || o.target.empty()) throw UsageError("--given and --target are required");
  auto sub1 = load_logic(o);
  auto sub2 = load_other_logic(o);
  try {
    auto cert = certify_value_indefiniteness(sub1, sub2, o.given, o.target);
    if (o.json) {
      emit(out, "certify-vi", to_json(cert));
    } else {
      out << "certified: " << cert.antecedent << " true leaves " << cert.target << " value indefinite\n"
          << "pasted: " << cert.pasted.atom_count() << " atoms, " << cert.pasted.context_count() << " contexts, "
          << cert.pasted_state_count << " states, " << cert.pasted_states_with_antecedent_true << " with "
          << cert.antecedent << " true\n";
    }
  } catch (const ConditionFailed& e) {
    err << "condition failed: " << to_string(e.which()) << ": " << e.what() << "\n";
    throw Failure{};
  }
  return kExitOk;
}

int cmd_urn(const Options& o, std::ostream& out) {
  if (!o.seed) throw UsageError("--seed is required");
  auto logic = load_logic(o);
  auto states = enumerate_states(logic);
  auto weights = load_weights(o, states.size());
  auto result = urn_simulate(logic, states, weights, parse_context(o, logic), o.draws, *o.seed);
  if (o.json) {
    emit(out, "urn", to_json(result));
    return kExitOk;
  }
  out << "rng " << result.rng << " seed " << result.seed << " draws " << result.draws << " context "
      << result.context + 1 << "\n";
  for (std::size_t k = 0; k < result.atoms.size(); ++k) {
    out << result.atoms[k] << " " << result.counts[k] << " " << to_string(result.frequencies[k]) << "\n";
  }
  return kExitOk;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  if (o.catalog.empty()) {
    if (o.json) {
      emit(out, "catalog", {{"entries", catalog_list()}});
    } else {
      for (const auto& n : catalog_list()) out << n << "\n";
    }
    return kExitOk;
  }
  auto entry = catalog_get(o.catalog);
  if (o.json) {
    emit(out, "catalog", {{"entry", to_json(entry)}});
    return kExitOk;
  }
  out << "name: " << entry.name << "\n";
  if (entry.logic) out << "atoms: " << entry.logic->atom_count() << "\ncontexts: " << entry.logic->context_count() << "\n";
  if (entry.expected) out << "states: " << entry.expected->state_count << "\n";
  if (entry.realization) {
    out << "vectors: " << entry.realization->atoms.size() << " in dimension " << entry.realization->dimension
        << (entry.partial_realization ? " (partial)" : "") << "\n";
  }
  if (entry.angle_constraints) {
    out << "angle bounds: " << format_double(entry.angle_constraints->tifs_min_angle) << " <= angle <= "
        << format_double(entry.angle_constraints->tits_max_angle)
        << (entry.angle_constraints->feasible ? " (feasible)" : " (infeasible)") << "\n";
  }
  for (const auto& n : entry.notes) out << "note: " << n << "\n";
  return kExitOk;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  out << export_greechie_dot(load_logic(o));
  return kExitOk;
}

void check_threads_env() {
  const char* v = std::getenv("CTXLAB_THREADS");
  if (!v) return;
  std::string s(v);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || std::stoul(s) == 0) {
    throw UsageError("CTXLAB_THREADS must be a positive integer");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite quantum logics: two-valued states, correlation polytopes, Born rule checks", "ctxlab"};
  app.require_subcommand(1);

  auto input = [&](CLI::App* sub) {
    auto* c = sub->add_option("--catalog", o.catalog, "catalog entry name");
    auto* l = sub->add_option("--logic", o.logic_file, "logic description file");
    c->excludes(l);
  };
  auto other = [&](CLI::App* sub) {
    auto* c = sub->add_option("--other-catalog", o.other_catalog, "second logic, from the catalog");
    auto* l = sub->add_option("--other-logic", o.other_logic_file, "second logic, from a file");
    c->excludes(l);
  };
  auto json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "JSON output"); };
  auto vectors = [&](CLI::App* sub) {
    sub->add_option("--vectors", o.vectors_file, "vector realization file");
    sub->add_flag("--partial", o.partial, "accept vectors for only some atoms");
  };
  auto psi = [&](CLI::App* sub) { sub->add_option("--psi", o.psi, "state: an atom name or comma-separated components"); };
  auto weights = [&](CLI::App* sub) { sub->add_option("--weights", o.weights_file, "file of rational weights, one per state"); };
  auto project = [&](CLI::App* sub) { sub->add_option("--project", o.project, "comma-separated coordinate atoms"); };
  auto pair = [&](CLI::App* sub) {
    sub->add_option("--given", o.given, "antecedent atom");
    sub->add_option("--target", o.target, "target atom");
  };
  auto expect = [&](CLI::App* sub) { sub->add_option("--expect", o.expect, "expected outcome; mismatch exits 1"); };
  auto ineq = [&](CLI::App* sub) { sub->add_option("--ineq", o.inequalities, "inequality such as 'a + b <= 1'"); };
  auto large = [&](CLI::App* sub) {
    sub->add_flag("--allow-large", o.allow_large, "allow facet enumeration above affine dimension 10");
  };

  std::map<CLI::App*, std::function<int()>> handlers;
  auto command = [&](const char* name, const char* help, std::function<int()> fn) {
    auto* sub = app.add_subcommand(name, help);
    handlers[sub] = std::move(fn);
    return sub;
  };

  auto* s = command("validate", "check the structural invariants of a logic", [&] { return cmd_validate(o, out); });
  input(s), json(s);
  s = command("states", "enumerate two-valued states", [&] { return cmd_states(o, out); });
  input(s), json(s);
  s->add_flag("--count", o.count, "print only the number of states");
  s = command("classify", "unital / separating analysis of the states", [&] { return cmd_classify(o, out); });
  input(s), json(s);
  s = command("property", "true-implies-false / true-implies-true between two atoms",
              [&] { return cmd_property(o, out, err); });
  input(s), json(s), pair(s), expect(s);
  s = command("mixture", "convex mixture of the states (uniform by default)", [&] { return cmd_mixture(o, out); });
  input(s), json(s), weights(s);
  s = command("hull", "facets of the correlation polytope", [&] { return cmd_hull(o, out); });
  input(s), json(s), project(s), large(s);
  s = command("member", "decide whether a point lies in the correlation polytope",
              [&] { return cmd_member(o, out, err); });
  input(s), json(s), project(s), weights(s), expect(s);
  s->add_option("--point", o.point, "'atom=value,...' or a file of 'atom value' lines; unlisted atoms are 0");
  s = command("axiom-check", "decide whether inequalities follow from the probability axioms",
              [&] { return cmd_axiom_check(o, out, err); });
  input(s), json(s), ineq(s), project(s), large(s), expect(s);
  s->add_option("--polytope", o.polytope_file, "polytope text file whose facets are checked");
  s->add_flag("--orthogonal-closure", o.orthogonal_closure,
              "also bound every set of pairwise orthogonal atoms outside a single context by 1");
  s = command("realization-check", "verify a vector realization", [&] { return cmd_realization_check(o, out); });
  input(s), json(s), vectors(s);
  s = command("born", "Born-rule probabilities", [&] { return cmd_born(o, out); });
  input(s), json(s), vectors(s), psi(s);
  s->add_option("--atom", o.atom, "print only this atom's probability");
  s = command("violate", "evaluate inequalities on Born-rule probabilities", [&] { return cmd_violate(o, out, err); });
  input(s), json(s), vectors(s), psi(s), ineq(s), expect(s);
  s = command("paste", "paste two logics along equally named atoms", [&] { return cmd_paste(o, out, err); });
  input(s), other(s), json(s);
  s = command("certify-vi", "certify value indefiniteness from a TIFS and a TITS logic",
              [&] { return cmd_certify(o, out, err); });
  input(s), other(s), json(s), pair(s);
  s = command("urn", "simulate a generalized urn model on one context", [&] { return cmd_urn(o, out); });
  input(s), json(s), weights(s);
  s->add_option("--context", o.context, "1-based context index or comma-separated atoms");
  s->add_option("--draws", o.draws, "number of draws")->check(CLI::PositiveNumber);
  s->add_option("--seed", o.seed, "random seed (required)");
  s = command("catalog", "list catalog entries, or describe one", [&] { return cmd_catalog(o, out); });
  json(s);
  s->add_option("--catalog", o.catalog, "entry to describe");
  s = command("export-dot", "Greechie diagram as Graphviz text", [&] { return cmd_export_dot(o, out); });
  input(s);

  std::vector<const char*> argv{"ctxlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    check_threads_env();
    for (auto* sub : app.get_subcommands()) return handlers.at(sub)();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Failure&) {
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace ctxlab::cli
