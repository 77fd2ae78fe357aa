#include "ctxlab/catalog.hpp"
#include "ctxlab/logic.hpp"

#include <gtest/gtest.h>

namespace ctxlab {
namespace {

TEST(Parse, AtomsInFirstOccurrenceOrder) {
  auto l = parse_logic("logic tiny\ncontext x y\ncontext y z w\n");
  EXPECT_EQ(l.name(), "tiny");
  EXPECT_EQ(l.atoms(), (std::vector<AtomId>{"x", "y", "z", "w"}));
  ASSERT_EQ(l.context_count(), 2u);
  EXPECT_EQ(l.context_atoms(1), (std::vector<AtomId>{"y", "z", "w"}));
}

TEST(Parse, ExplicitAtomsFixOrderAndLabels) {
  auto l = parse_logic("atom b\natom a spin up\ncontext a b\n");
  EXPECT_EQ(l.atoms(), (std::vector<AtomId>{"b", "a"}));
  EXPECT_EQ(l.label(1), "spin up");
}

TEST(Parse, CommentsAndPrimes) {
  auto l = parse_logic("# header\ncontext a' b_2 # trailing\n\n");
  EXPECT_EQ(l.atoms(), (std::vector<AtomId>{"a'", "b_2"}));
}

TEST(Parse, SyntaxErrorsCarryPosition) {
  try {
    parse_logic("context a b\ncontext a $\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Syntax);
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 11u);
  }
  EXPECT_THROW(parse_logic("frobnicate x\n"), ParseError);
  EXPECT_THROW(parse_logic("atom a\natom a\n"), ParseError);
  EXPECT_THROW(parse_logic("max_intertwine zero\n"), ParseError);
}

TEST(Parse, DuplicateAtomInContext) {
  try {
    parse_logic("context a b a\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateAtomInContext);
  }
}

TEST(Parse, DuplicateContextAsSet) {
  try {
    parse_logic("context a b c\ncontext c b a\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateContext);
  }
}

TEST(Serialize, RoundTripsEveryCatalogLogic) {
  for (const auto& name : catalog_list()) {
    auto entry = catalog_get(name);
    if (!entry.logic) continue;
    EXPECT_EQ(parse_logic(serialize_logic(*entry.logic)), *entry.logic) << name;
  }
  Logic l("with bound");
  l.set_max_intertwine(1);
  l.add_context(std::vector<AtomId>{"x", "y"});
  l.set_label(0, "first");
  EXPECT_EQ(parse_logic(serialize_logic(l)), l);
}

TEST(Validate, CatalogLogicsAreValid) {
  for (const auto& name : catalog_list()) {
    auto entry = catalog_get(name);
    if (!entry.logic) continue;
    EXPECT_TRUE(validate_logic(*entry.logic).ok()) << name;
  }
}

TEST(Validate, ReportsEveryViolation) {
  Logic l;
  l.add_atom("lonely");
  l.add_atom("bad id");
  l.add_context(std::vector<AtomId>{"x", "y", "z"});
  l.add_context(std::vector<AtomId>{"x", "y"});
  l.add_context(std::vector<AtomId>{"w"});
  auto r = validate_logic(l);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.has(Rule::UncoveredAtom));
  EXPECT_TRUE(r.has(Rule::InvalidAtomId));
  EXPECT_TRUE(r.has(Rule::SubsetContext));
  EXPECT_TRUE(r.has(Rule::ShortContext));
}

TEST(Validate, EqualContextsReportedOnce) {
  Logic l;
  l.add_context(std::vector<AtomId>{"x", "y"});
  l.add_context(std::vector<AtomId>{"y", "x"});
  auto r = validate_logic(l);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].rule, Rule::SubsetContext);
}

TEST(Validate, MaxIntertwine) {
  auto triangle = catalog_get("triangle4d").logic.value();
  triangle.set_max_intertwine(1);
  EXPECT_TRUE(validate_logic(triangle).ok());
  auto l = parse_logic("max_intertwine 1\ncontext a b c d\ncontext a b e f\n");
  EXPECT_TRUE(validate_logic(l).has(Rule::IntertwineExceeded));
}

TEST(Paste, IdempotentUpToCanonicalForm) {
  for (const auto& name : {"pentagon", "specker_bug", "triangle4d"}) {
    auto l = catalog_get(name).logic.value();
    EXPECT_EQ(paste_logics(l, l), canonical(l)) << name;
  }
}

TEST(Paste, GadgetsReproduceCombinedLogic) {
  auto pasted = paste_logics(catalog_get("tifs_fig5a").logic.value(), catalog_get("tits_fig5b").logic.value());
  EXPECT_EQ(pasted.atom_count(), 37u);
  EXPECT_EQ(pasted.context_count(), 26u);
  EXPECT_TRUE(equivalent(pasted, catalog_get("indefinite_fig5c").logic.value()));
}

TEST(Paste, InvalidResultThrows) {
  auto a = parse_logic("context x y z\n");
  auto b = parse_logic("context x y\n");
  try {
    paste_logics(a, b);
    FAIL();
  } catch (const PasteError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PasteInvalid);
    EXPECT_TRUE(e.report().has(Rule::SubsetContext));
  }
}

TEST(Dot, SingleContext) {
  auto dot = export_greechie_dot(parse_logic("context x y\n"));
  EXPECT_NE(dot.find("\"x\";"), std::string::npos);
  EXPECT_NE(dot.find("\"y\";"), std::string::npos);
  EXPECT_NE(dot.find("\"x\" -- \"y\";"), std::string::npos);
}

TEST(Dot, PentagonNodesAndCliques) {
  auto dot = export_greechie_dot(catalog_get("pentagon").logic.value());
  std::size_t nodes = 0, edges = 0, contexts = 0;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) {
    if (line.find(" -- ") != std::string::npos) {
      ++edges;
    } else if (line.find("// context") != std::string::npos) {
      ++contexts;
    } else if (line.rfind("  \"", 0) == 0) {
      ++nodes;
    }
  }
  EXPECT_EQ(nodes, 10u);
  EXPECT_EQ(contexts, 5u);
  EXPECT_EQ(edges, 15u);
}

}  // namespace
}  // namespace ctxlab
