#include "ctxlab/catalog.hpp"

#include <algorithm>
#include <map>

namespace ctxlab {

namespace {

struct Fixture {
  const char* file;
  const char* text;
};

// Generated at configure time from catalog/*.logic and catalog/*.vec.
constexpr Fixture kFixtures[] = {
#include "ctxlab/catalog_data.inc"
};

std::optional<std::string> fixture(const std::string& file) {
  for (const auto& f : kFixtures) {
    if (file == f.file) return std::string(f.text);
  }
  return std::nullopt;
}

using Pairs = std::vector<std::pair<AtomId, AtomId>>;

Pairs all_pairs(const std::vector<AtomId>& atoms) {
  Pairs out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) out.emplace_back(atoms[i], atoms[j]);
  }
  return out;
}

ExpectedFacts facts(std::size_t count, std::vector<AtomId> non_unital, Pairs inseparable,
                    std::vector<SpecialPair> special) {
  ExpectedFacts f;
  f.state_count = count;
  f.unital = non_unital.empty();
  f.separating = inseparable.empty();
  f.non_unital_atoms = std::move(non_unital);
  f.inseparable_pairs = std::move(inseparable);
  f.special_pairs = std::move(special);
  return f;
}

}  // namespace

const std::vector<std::string>& catalog_list() {
  static const std::vector<std::string> names = {
      "triangle4d",  "square4d",   "pentagon",   "specker_bug",      "specker_bug_extended",
      "specker_bug_combo", "tifs_fig5a", "tits_fig5b", "indefinite_fig5c", "impossible_fig6",
  };
  return names;
}

std::optional<std::string> catalog_logic_text(std::string_view name) {
  return fixture(std::string(name) + ".logic");
}

std::optional<std::string> catalog_vector_text(std::string_view name) {
  return fixture(std::string(name) + ".vec");
}

CatalogEntry catalog_get(std::string_view name) {
  const auto& names = catalog_list();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw Error(ErrorKind::UnknownEntry, "no catalog entry '" + std::string(name) + "'");
  }
  CatalogEntry e;
  e.name = std::string(name);
  if (auto text = catalog_logic_text(name)) e.logic = parse_logic(*text);
  if (auto text = catalog_vector_text(name)) e.realization = parse_vectors(*text);

  using P = PairProperty;
  const std::vector<AtomId> fig5c_non_unital = {"a", "2", "13", "15", "16", "17", "25", "27"};
  // Atoms 15/27 and 17/25 carry identical probability formulas in both gadgets.
  const Pairs gadget_pairs = {{"15", "27"}, {"17", "25"}};

  if (name == "triangle4d") {
    e.expected = facts(14, {}, {}, {});
    e.notes = {"Three 4-dimensional contexts pasted in a triangle.",
               "The facet p1 + p4 + p7 <= 1 does not follow from the three contexts alone; it does once the "
               "mutually orthogonal atoms 1, 4, 7 are also bounded as a partial context.",
               "Vectors: a 4-dimensional orthonormal realization."};
  } else if (name == "square4d") {
    e.expected = facts(34, {}, {}, {});
    e.notes = {"Four 4-dimensional contexts pasted in a square; every facet follows from the probability axioms.",
               "Vectors: a 4-dimensional orthonormal realization."};
  } else if (name == "pentagon") {
    e.expected = facts(11, {}, {}, {{"1", "5", P::Unconstrained}});
    e.notes = {"Five 3-element contexts in a cycle; classical bound p1+p3+p5+p7+p9 <= 2.",
               "The measure 1/2 on 1,3,5,7,9 obeys the axioms but lies outside the polytope.",
               "A quantum value sqrt(5) is known, but no realizing vectors ship with this entry."};
  } else if (name == "specker_bug") {
    e.expected = facts(14, {}, {}, {{"a", "b", P::TrueImpliesFalse}});
    e.partial_realization = true;
    e.notes = {"a true forces b false; hence p_a + p_b <= 1 for every classical mixture.",
               "Vectors only for a and b, with |<a|b>| = 1/3: prepared in a, b is found with probability 1/9."};
  } else if (name == "specker_bug_extended") {
    e.expected = facts(22, {}, {}, {{"a", "a'", P::TrueImpliesTrue}});
    e.notes = {"Bug plus contexts {a,c,b'} and {b,c,a'}: a true forces a' true."};
  } else if (name == "specker_bug_combo") {
    e.expected = facts(82, {}, {{"a", "a'"}, {"b", "b'"}}, {});
    e.notes = {"Extended bug pasted with a primed bug; 9 states make a true and 9 make b true.",
               "Not separating, so no partition logic reproduces it faithfully.",
               "No reference state list is stored; the count is checked by enumeration."};
  } else if (name == "tifs_fig5a") {
    e.expected = facts(13, {"16"}, gadget_pairs, {{"a", "b", P::TrueImpliesFalse}});
    e.notes = {"True-implies-false gadget: exactly one state makes a true, and it makes b false.",
               "Non-unital on 16; the inseparable pairs 15/27 and 17/25 come from enumeration."};
  } else if (name == "tits_fig5b") {
    e.expected = facts(13, {"16"}, gadget_pairs, {{"a", "b", P::TrueImpliesTrue}});
    e.notes = {"True-implies-true gadget: exactly one state makes a true, and it makes b true.",
               "Non-separating on 15/27, and on 17/25 as well."};
  } else if (name == "indefinite_fig5c") {
    e.expected = facts(8, fig5c_non_unital, all_pairs(fig5c_non_unital), {{"a", "b", P::AntecedentNeverTrue}});
    e.notes = {"Pasting of the two gadgets: a can never be true, so given a true, b is value indefinite.",
               "A 3-dimensional realization exists in the literature; its vectors are not reproduced here."};
  } else if (name == "impossible_fig6") {
    e.angle_constraints = bug_pasting_feasibility();
    e.notes = {"Pasting a true-implies-false and a true-implies-true bug at a and b in R^3 would need "
               "arccos(1/3) <= angle(a,b) <= arcsin(1/3), which is empty.",
               "Recorded by its angle constraints only; no context list is given."};
  }
  return e;
}

}  // namespace ctxlab
