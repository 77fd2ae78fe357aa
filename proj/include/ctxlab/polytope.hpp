#pragma once

#include "ctxlab/logic.hpp"
#include "ctxlab/rational.hpp"
#include "ctxlab/states.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ctxlab {

// Correlation-polytope vertices over named coordinates. Projected states
// that coincide are merged; `sources` keeps the state indices per vertex.
struct VertexSet {
  std::vector<AtomId> coordinates;
  std::vector<RationalVector> vertices;
  std::vector<std::vector<std::size_t>> sources;

  std::size_t multiplicity(std::size_t v) const { return sources[v].size(); }
};

// Throws Error(UnknownAtom) for projection atoms outside the logic.
VertexSet vertices_from_states(const Logic& logic, const StateList& states,
                               const std::optional<std::vector<AtomId>>& projection = std::nullopt);

// coeffs . x <= bound over named coordinates.
struct Inequality {
  std::vector<AtomId> coordinates;
  RationalVector coeffs;
  Rational bound;

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

// coeffs . x == rhs.
struct Equation {
  std::vector<AtomId> coordinates;
  RationalVector coeffs;
  Rational rhs;

  friend bool operator==(const Equation&, const Equation&) = default;
};

// Integer coprime coefficients (bound included).
Inequality canonicalize(Inequality ineq);
// Integer coprime, first non-zero coefficient positive.
Equation canonicalize(Equation eq);

// Parses "a + 2*b - 1/2*c <= 1" (or ">="); coordinates in order of appearance.
Inequality parse_inequality(std::string_view text);
std::string to_string(const Inequality& ineq);
std::string to_string(const Equation& eq);

struct Polytope {
  std::vector<AtomId> coordinates;
  std::vector<RationalVector> vertices;
  std::vector<Inequality> facets;   // canonical, sorted
  std::vector<Equation> equations;  // affine hull, canonical, sorted
  int affine_dim = -1;
};

// Exact double description inside the affine hull of the vertices.
// Throws Error(InvalidArgument) for an empty vertex list.
Polytope facet_enumeration(const VertexSet& vertices);
Polytope facet_enumeration(std::vector<AtomId> coordinates, std::vector<RationalVector> vertices);

struct AffineHull {
  int dimension = -1;
  std::vector<std::size_t> free_coordinates;  // coordinates parametrizing the hull
  std::vector<Equation> equations;
};

AffineHull affine_hull(const std::vector<AtomId>& coordinates, const std::vector<RationalVector>& points);

// Rank of the differences to the first point; -1 when empty.
int affine_rank(const std::vector<RationalVector>& points);

struct Evaluation {
  bool exact = true;
  Rational exact_value;
  double value = 0.0;
  bool satisfied = true;
};

// Coordinates with non-zero coefficient must be present in p
// (Error(MissingCoordinate)). Floating point values are compared within
// kDefaultTolerance.
Evaluation evaluate_inequality(const Inequality& ineq, const ProbabilityAssignment& p);

struct Inside {
  MixtureWeights weights;  // one per vertex of the VertexSet
};

struct Outside {
  Inequality separator;
  Rational value_at_point;
  Rational max_over_vertices;
};

using MembershipResult = std::variant<Inside, Outside>;

// Exact LP membership. Inside carries weights maximizing the smallest weight;
// Outside carries a separator valid on every vertex and violated by the point.
// Throws Error(DimensionMismatch) if the point lacks a coordinate.
MembershipResult membership(const ProbabilityAssignment& point, const VertexSet& vertices);

enum class AxiomRegion {
  Contexts,           // p >= 0 and every context sums to 1
  OrthogonalClosure,  // additionally, every set of pairwise orthogonal atoms sums to at most 1
};

// Maximal sets of pairwise orthogonal atoms (each pair shares a context) that
// lie in no single context, e.g. {1,4,7} in the triangle logic. In Hilbert
// space such a set extends to a basis, so its probabilities sum to at most 1.
std::vector<std::vector<AtomIndex>> orthogonal_cliques_outside_contexts(const Logic& logic);

// max{coeffs . p : p in region} <= bound.
// Throws Error(UnknownAtom) for coordinates outside the logic.
bool axiom_implied(const Logic& logic, const Inequality& ineq, AxiomRegion region = AxiomRegion::Contexts);

// Text interchange: COORDINATES / VERTICES / FACETS / EQUATIONS blocks.
std::string write_polytope_text(const Polytope& polytope);
// Reads the same format; FACETS and EQUATIONS are optional.
Polytope read_polytope_text(std::string_view text);

}  // namespace ctxlab
