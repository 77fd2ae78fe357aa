#include "support.hpp"

#include "ctxlab/realization.hpp"

#include <gtest/gtest.h>

namespace ctxlab {
namespace {

TEST(Catalog, ListIsFixed) {
  const auto& names = catalog_list();
  ASSERT_EQ(names.size(), 10u);
  EXPECT_EQ(names.front(), "triangle4d");
  EXPECT_EQ(names.back(), "impossible_fig6");
  for (const auto& n : names) EXPECT_EQ(catalog_get(n).name, n);
}

TEST(Catalog, UnknownEntry) {
  try {
    catalog_get("nosuch");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownEntry);
  }
  EXPECT_FALSE(catalog_logic_text("nosuch"));
}

TEST(Catalog, SpeckerBugShape) {
  auto e = catalog_get("specker_bug");
  ASSERT_TRUE(e.logic);
  EXPECT_EQ(e.logic->atom_count(), 13u);
  EXPECT_EQ(e.logic->context_count(), 7u);
  EXPECT_EQ(e.expected->state_count, 14u);
  EXPECT_TRUE(e.partial_realization);
  EXPECT_EQ(catalog_get("square4d").expected->state_count, 34u);
}

TEST(Catalog, FixturesAreValidAndParseBack) {
  for (const auto& n : catalog_list()) {
    auto e = catalog_get(n);
    if (!e.logic) {
      EXPECT_TRUE(e.angle_constraints);
      EXPECT_FALSE(e.angle_constraints->feasible);
      continue;
    }
    EXPECT_TRUE(validate_logic(*e.logic).ok()) << n;
    EXPECT_EQ(e.logic->name(), n);
    auto text = catalog_logic_text(n);
    ASSERT_TRUE(text) << n;
    EXPECT_EQ(parse_logic(*text), *e.logic);
  }
}

TEST(Catalog, ExpectedFactsHold) {
  for (const auto& n : catalog_list()) {
    auto e = catalog_get(n);
    if (!e.logic) continue;
    const auto& l = *e.logic;
    auto states = enumerate_states(l);
    auto report = classify_states(l, states);
    const auto& x = *e.expected;
    EXPECT_EQ(report.count, x.state_count) << n;
    EXPECT_EQ(report.separating, x.separating) << n;
    EXPECT_EQ(report.unital, x.unital) << n;
    EXPECT_EQ(report.non_unital_atoms, x.non_unital_atoms) << n;
    EXPECT_EQ(report.inseparable_pairs, x.inseparable_pairs) << n;
    for (const auto& sp : x.special_pairs) {
      EXPECT_EQ(pair_property(l, states, sp.antecedent, sp.target), sp.property) << n << " " << sp.antecedent;
    }
  }
}

TEST(Catalog, RealizationsCheck) {
  std::size_t with_vectors = 0;
  for (const auto& n : catalog_list()) {
    auto e = catalog_get(n);
    if (!e.realization) continue;
    ++with_vectors;
    ASSERT_TRUE(e.logic);
    EXPECT_DOUBLE_EQ(e.realization->tolerance, 1e-9);
    EXPECT_TRUE(check_realization(*e.logic, *e.realization, e.partial_realization).ok()) << n;
    EXPECT_TRUE(catalog_vector_text(n));
  }
  EXPECT_EQ(with_vectors, 3u);
}

}  // namespace
}  // namespace ctxlab
