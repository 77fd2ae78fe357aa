#pragma once

#include "ctxlab/error.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ctxlab {

using AtomId = std::string;
using AtomIndex = std::size_t;

// True iff the token is non-empty and uses only [A-Za-z0-9_'].
bool is_valid_atom_id(std::string_view token);

// A context lists atom indices into the owning Logic in declared order.
struct Context {
  std::vector<AtomIndex> atoms;

  std::vector<AtomIndex> sorted() const;
  bool contains(AtomIndex a) const;
  friend bool operator==(const Context&, const Context&) = default;
};

// A finite pasting of contexts (a Greechie diagram). Instances are plain
// values; structural invariants are checked by validate_logic, not enforced
// on construction, so that invalid inputs can be reported.
class Logic {
 public:
  Logic() = default;
  explicit Logic(std::string name) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const std::vector<AtomId>& atoms() const noexcept { return atoms_; }
  const std::vector<Context>& contexts() const noexcept { return contexts_; }
  std::size_t atom_count() const noexcept { return atoms_.size(); }
  std::size_t context_count() const noexcept { return contexts_.size(); }

  const std::optional<int>& max_intertwine() const noexcept { return max_intertwine_; }
  void set_max_intertwine(std::optional<int> bound) { max_intertwine_ = bound; }

  // Empty string when the atom has no label.
  const std::string& label(AtomIndex a) const { return labels_[a]; }
  void set_label(AtomIndex a, std::string label) { labels_[a] = std::move(label); }

  std::optional<AtomIndex> find(std::string_view id) const;
  // Throws Error(UnknownAtom).
  AtomIndex index_of(std::string_view id) const;
  const AtomId& atom(AtomIndex a) const { return atoms_[a]; }

  // Returns the index of an existing atom or appends a new one.
  AtomIndex add_atom(const AtomId& id);
  // Appends a context over existing atom indices; no checks.
  void add_context(Context context);
  // Appends a context by atom names, creating missing atoms in order.
  void add_context(const std::vector<AtomId>& ids);

  std::vector<AtomId> context_atoms(std::size_t c) const;

  friend bool operator==(const Logic&, const Logic&) = default;

 private:
  std::string name_;
  std::vector<AtomId> atoms_;
  std::vector<std::string> labels_;
  std::vector<Context> contexts_;
  std::optional<int> max_intertwine_;
};

enum class Rule {
  InvalidAtomId,
  DuplicateAtom,
  ShortContext,
  DuplicateAtomInContext,
  UnknownAtomInContext,
  UncoveredAtom,
  SubsetContext,
  IntertwineExceeded,
};

const char* to_string(Rule rule);

struct Violation {
  Rule rule;
  std::string message;
  std::vector<AtomId> atoms;
  std::vector<std::size_t> contexts;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  bool has(Rule rule) const;
};

class PasteError : public Error {
 public:
  explicit PasteError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

// Grammar, line oriented, '#' starts a comment:
//   logic <name>
//   max_intertwine <n>
//   atom <id> [label...]
//   context <id> <id> ...
// Atoms first seen inside a context are appended in first-occurrence order.
// Throws ParseError (Syntax, DuplicateContext, DuplicateAtomInContext).
Logic parse_logic(std::string_view text);

// Inverse of parse_logic: parse_logic(serialize_logic(l)) == l.
std::string serialize_logic(const Logic& logic);

ValidationReport validate_logic(const Logic& logic);

// Same atom order, duplicate contexts (as sets) removed, contexts sorted by
// their sorted atom-index tuples.
Logic canonical(const Logic& logic);

// Identifies atoms by id. Atoms are ordered by (first logic, declaration
// index); contexts are deduplicated as sets and sorted canonically.
// Throws PasteError (kind PasteInvalid) when the result does not validate.
Logic paste_logics(const Logic& first, const Logic& second);

// Same atom set and same set of contexts (each as an unordered set).
bool equivalent(const Logic& a, const Logic& b);

// Graphviz text: one node per atom, one colored clique per context.
std::string export_greechie_dot(const Logic& logic);

}  // namespace ctxlab
