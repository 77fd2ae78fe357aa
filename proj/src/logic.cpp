#include "ctxlab/logic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace ctxlab {

bool is_valid_atom_id(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

std::vector<AtomIndex> Context::sorted() const {
  auto s = atoms;
  std::sort(s.begin(), s.end());
  return s;
}

bool Context::contains(AtomIndex a) const {
  return std::find(atoms.begin(), atoms.end(), a) != atoms.end();
}

std::optional<AtomIndex> Logic::find(std::string_view id) const {
  auto it = std::find(atoms_.begin(), atoms_.end(), id);
  if (it == atoms_.end()) return std::nullopt;
  return static_cast<AtomIndex>(it - atoms_.begin());
}

AtomIndex Logic::index_of(std::string_view id) const {
  if (auto a = find(id)) return *a;
  throw Error(ErrorKind::UnknownAtom, "unknown atom '" + std::string(id) + "'");
}

AtomIndex Logic::add_atom(const AtomId& id) {
  if (auto a = find(id)) return *a;
  atoms_.push_back(id);
  labels_.emplace_back();
  return atoms_.size() - 1;
}

void Logic::add_context(Context context) { contexts_.push_back(std::move(context)); }

void Logic::add_context(const std::vector<AtomId>& ids) {
  Context c;
  for (const auto& id : ids) c.atoms.push_back(add_atom(id));
  contexts_.push_back(std::move(c));
}

std::vector<AtomId> Logic::context_atoms(std::size_t c) const {
  std::vector<AtomId> out;
  for (auto a : contexts_.at(c).atoms) out.push_back(atoms_.at(a));
  return out;
}

const char* to_string(Rule rule) {
  switch (rule) {
    case Rule::InvalidAtomId: return "InvalidAtomId";
    case Rule::DuplicateAtom: return "DuplicateAtom";
    case Rule::ShortContext: return "ShortContext";
    case Rule::DuplicateAtomInContext: return "DuplicateAtomInContext";
    case Rule::UnknownAtomInContext: return "UnknownAtomInContext";
    case Rule::UncoveredAtom: return "UncoveredAtom";
    case Rule::SubsetContext: return "SubsetContext";
    case Rule::IntertwineExceeded: return "IntertwineExceeded";
  }
  return "Unknown";
}

bool ValidationReport::has(Rule rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [rule](const Violation& v) { return v.rule == rule; });
}

PasteError::PasteError(ValidationReport report)
    : Error(ErrorKind::PasteInvalid,
            "pasted logic is invalid: " +
                (report.violations.empty() ? std::string("?") : report.violations.front().message)),
      report_(std::move(report)) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    tokens.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return tokens;
}

std::string context_text(const Logic& logic, std::size_t c) {
  std::string s = "{";
  for (const auto& id : logic.context_atoms(c)) {
    if (s.size() > 1) s += ",";
    s += id;
  }
  return s + "}";
}

}  // namespace

Logic parse_logic(std::string_view text) {
  Logic logic;
  std::set<std::string> declared;
  std::set<std::vector<AtomIndex>> seen_contexts;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = end + 1;

    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const auto& keyword = tokens[0].text;
    if (keyword == "logic") {
      if (tokens.size() < 2) throw ParseError(ErrorKind::Syntax, line_no, tokens[0].column, "'logic' needs a name");
      std::string name;
      for (std::size_t i = 1; i < tokens.size(); ++i) name += (i > 1 ? " " : "") + tokens[i].text;
      logic.set_name(name);
    } else if (keyword == "max_intertwine") {
      if (tokens.size() != 2) {
        throw ParseError(ErrorKind::Syntax, line_no, tokens[0].column, "'max_intertwine' takes one integer");
      }
      const auto& t = tokens[1];
      bool digits = !t.text.empty() && std::all_of(t.text.begin(), t.text.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      });
      if (!digits || t.text.size() > 9 || std::stoi(t.text) < 1) {
        throw ParseError(ErrorKind::Syntax, line_no, t.column, "expected a positive integer, got '" + t.text + "'");
      }
      logic.set_max_intertwine(std::stoi(t.text));
    } else if (keyword == "atom") {
      if (tokens.size() < 2) throw ParseError(ErrorKind::Syntax, line_no, tokens[0].column, "'atom' needs an id");
      const auto& t = tokens[1];
      if (!is_valid_atom_id(t.text)) {
        throw ParseError(ErrorKind::Syntax, line_no, t.column, "invalid atom id '" + t.text + "'");
      }
      if (!declared.insert(t.text).second) {
        throw ParseError(ErrorKind::Syntax, line_no, t.column, "atom '" + t.text + "' declared twice");
      }
      auto a = logic.add_atom(t.text);
      std::string label;
      for (std::size_t i = 2; i < tokens.size(); ++i) label += (i > 2 ? " " : "") + tokens[i].text;
      if (!label.empty()) logic.set_label(a, label);
    } else if (keyword == "context") {
      if (tokens.size() < 2) {
        throw ParseError(ErrorKind::Syntax, line_no, tokens[0].column, "'context' needs at least one atom");
      }
      Context c;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto& t = tokens[i];
        if (!is_valid_atom_id(t.text)) {
          throw ParseError(ErrorKind::Syntax, line_no, t.column, "invalid atom id '" + t.text + "'");
        }
        auto a = logic.add_atom(t.text);
        if (c.contains(a)) {
          throw ParseError(ErrorKind::DuplicateAtomInContext, line_no, t.column,
                           "atom '" + t.text + "' appears twice in one context");
        }
        c.atoms.push_back(a);
      }
      if (!seen_contexts.insert(c.sorted()).second) {
        throw ParseError(ErrorKind::DuplicateContext, line_no, tokens[0].column, "context declared twice");
      }
      logic.add_context(std::move(c));
    } else {
      throw ParseError(ErrorKind::Syntax, line_no, tokens[0].column, "unknown directive '" + keyword + "'");
    }
  }
  return logic;
}

std::string serialize_logic(const Logic& logic) {
  std::ostringstream out;
  if (!logic.name().empty()) out << "logic " << logic.name() << "\n";
  if (logic.max_intertwine()) out << "max_intertwine " << *logic.max_intertwine() << "\n";
  for (AtomIndex a = 0; a < logic.atom_count(); ++a) {
    out << "atom " << logic.atom(a);
    if (!logic.label(a).empty()) out << " " << logic.label(a);
    out << "\n";
  }
  for (std::size_t c = 0; c < logic.context_count(); ++c) {
    out << "context";
    for (const auto& id : logic.context_atoms(c)) out << " " << id;
    out << "\n";
  }
  return out.str();
}

ValidationReport validate_logic(const Logic& logic) {
  ValidationReport report;
  auto add = [&](Rule rule, std::string message, std::vector<AtomId> atoms, std::vector<std::size_t> contexts) {
    report.violations.push_back({rule, std::move(message), std::move(atoms), std::move(contexts)});
  };
  const auto n = logic.atom_count();

  std::set<AtomId> names;
  for (const auto& id : logic.atoms()) {
    if (!is_valid_atom_id(id)) add(Rule::InvalidAtomId, "invalid atom id '" + id + "'", {id}, {});
    if (!names.insert(id).second) add(Rule::DuplicateAtom, "atom '" + id + "' listed twice", {id}, {});
  }

  std::vector<bool> covered(n, false);
  std::vector<std::set<AtomIndex>> sets;
  bool structurally_sound = true;
  for (std::size_t c = 0; c < logic.context_count(); ++c) {
    const auto& ctx = logic.contexts()[c];
    std::set<AtomIndex> s;
    bool sound = true;
    for (auto a : ctx.atoms) {
      if (a >= n) {
        add(Rule::UnknownAtomInContext, "context " + std::to_string(c + 1) + " references atom index " +
                                            std::to_string(a) + " outside the atom list",
            {}, {c});
        sound = false;
        continue;
      }
      covered[a] = true;
      if (!s.insert(a).second) {
        add(Rule::DuplicateAtomInContext, "atom '" + logic.atom(a) + "' appears twice in context " +
                                              std::to_string(c + 1),
            {logic.atom(a)}, {c});
      }
    }
    if (!sound) structurally_sound = false;
    if (ctx.atoms.size() < 2) {
      add(Rule::ShortContext, "context " + std::to_string(c + 1) + " has fewer than two atoms", {}, {c});
    }
    sets.push_back(std::move(s));
  }
  for (AtomIndex a = 0; a < n; ++a) {
    if (!covered[a]) add(Rule::UncoveredAtom, "atom '" + logic.atom(a) + "' belongs to no context", {logic.atom(a)}, {});
  }
  if (!structurally_sound) return report;

  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j) continue;
      const bool equal = sets[i] == sets[j];
      if (equal && j < i) continue;  // reported once for the pair
      if (std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end())) {
        add(Rule::SubsetContext,
            "context " + context_text(logic, i) + (equal ? " duplicates " : " is a subset of ") +
                context_text(logic, j),
            {}, {i, j});
      }
    }
  }
  if (auto bound = logic.max_intertwine()) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        std::vector<AtomIndex> common;
        std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                              std::back_inserter(common));
        if (static_cast<int>(common.size()) > *bound) {
          std::vector<AtomId> ids;
          for (auto a : common) ids.push_back(logic.atom(a));
          add(Rule::IntertwineExceeded,
              "contexts " + context_text(logic, i) + " and " + context_text(logic, j) + " share " +
                  std::to_string(common.size()) + " atoms (max_intertwine " + std::to_string(*bound) + ")",
              std::move(ids), {i, j});
        }
      }
    }
  }
  return report;
}

Logic canonical(const Logic& logic) {
  Logic out(logic.name());
  out.set_max_intertwine(logic.max_intertwine());
  for (AtomIndex a = 0; a < logic.atom_count(); ++a) {
    out.add_atom(logic.atom(a));
    out.set_label(a, logic.label(a));
  }
  std::vector<std::pair<std::vector<AtomIndex>, Context>> keyed;
  std::set<std::vector<AtomIndex>> seen;
  for (const auto& c : logic.contexts()) {
    auto key = c.sorted();
    if (seen.insert(key).second) keyed.emplace_back(std::move(key), c);
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [key, c] : keyed) out.add_context(std::move(c));
  return out;
}

Logic paste_logics(const Logic& first, const Logic& second) {
  std::string name;
  if (first.name() == second.name() || second.name().empty()) {
    name = first.name();
  } else if (first.name().empty()) {
    name = second.name();
  } else {
    name = first.name() + "+" + second.name();
  }
  Logic merged(name);
  auto bound_a = first.max_intertwine();
  auto bound_b = second.max_intertwine();
  if (bound_a && bound_b) {
    merged.set_max_intertwine(std::min(*bound_a, *bound_b));
  } else {
    merged.set_max_intertwine(bound_a ? bound_a : bound_b);
  }

  for (const Logic* part : {&first, &second}) {
    std::vector<AtomIndex> remap(part->atom_count());
    for (AtomIndex a = 0; a < part->atom_count(); ++a) {
      remap[a] = merged.add_atom(part->atom(a));
      if (merged.label(remap[a]).empty()) merged.set_label(remap[a], part->label(a));
    }
    for (const auto& c : part->contexts()) {
      Context mapped;
      for (auto a : c.atoms) mapped.atoms.push_back(a < remap.size() ? remap[a] : a + merged.atom_count());
      merged.add_context(std::move(mapped));
    }
  }
  Logic result = canonical(merged);
  auto report = validate_logic(result);
  if (!report.ok()) throw PasteError(std::move(report));
  return result;
}

bool equivalent(const Logic& a, const Logic& b) {
  std::set<AtomId> atoms_a(a.atoms().begin(), a.atoms().end());
  std::set<AtomId> atoms_b(b.atoms().begin(), b.atoms().end());
  if (atoms_a != atoms_b) return false;
  auto context_set = [](const Logic& l) {
    std::set<std::set<AtomId>> out;
    for (std::size_t c = 0; c < l.context_count(); ++c) {
      auto ids = l.context_atoms(c);
      out.emplace(ids.begin(), ids.end());
    }
    return out;
  };
  return context_set(a) == context_set(b);
}

namespace {

constexpr const char* kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                    "#ff7f00", "#a65628", "#f781bf", "#999999"};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_greechie_dot(const Logic& logic) {
  std::ostringstream out;
  out << "graph " << quoted(logic.name().empty() ? "logic" : logic.name()) << " {\n";
  out << "  node [shape=circle];\n";
  for (AtomIndex a = 0; a < logic.atom_count(); ++a) {
    out << "  " << quoted(logic.atom(a));
    if (!logic.label(a).empty()) out << " [label=" << quoted(logic.atom(a) + ": " + logic.label(a)) << "]";
    out << ";\n";
  }
  constexpr std::size_t palette_size = sizeof(kPalette) / sizeof(kPalette[0]);
  for (std::size_t c = 0; c < logic.context_count(); ++c) {
    const auto ids = logic.context_atoms(c);
    out << "  // context " << (c + 1) << "\n";
    out << "  edge [color=" << quoted(kPalette[c % palette_size]) << "];\n";
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        out << "  " << quoted(ids[i]) << " -- " << quoted(ids[j]) << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace ctxlab
