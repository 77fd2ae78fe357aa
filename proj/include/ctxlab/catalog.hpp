#pragma once

#include "ctxlab/logic.hpp"
#include "ctxlab/realization.hpp"
#include "ctxlab/states.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ctxlab {

struct SpecialPair {
  AtomId antecedent;
  AtomId target;
  PairProperty property;
};

// What the states module must reproduce on the entry's logic.
struct ExpectedFacts {
  std::size_t state_count = 0;
  bool separating = true;
  bool unital = true;
  std::vector<AtomId> non_unital_atoms;
  std::vector<std::pair<AtomId, AtomId>> inseparable_pairs;
  std::vector<SpecialPair> special_pairs;
};

struct CatalogEntry {
  std::string name;
  // Absent for a record that is only a set of angle constraints.
  std::optional<Logic> logic;
  std::optional<ExpectedFacts> expected;
  std::optional<Realization> realization;
  bool partial_realization = false;
  std::optional<BugPastingBounds> angle_constraints;
  std::vector<std::string> notes;
};

// The ten entry names in fixed order.
const std::vector<std::string>& catalog_list();

// Throws Error(UnknownEntry).
CatalogEntry catalog_get(std::string_view name);

// Raw fixture text as shipped under catalog/; nullopt if the entry has no
// such file.
std::optional<std::string> catalog_logic_text(std::string_view name);
std::optional<std::string> catalog_vector_text(std::string_view name);

}  // namespace ctxlab
