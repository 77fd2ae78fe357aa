#pragma once

#include "ctxlab/logic.hpp"
#include "ctxlab/polytope.hpp"
#include "ctxlab/states.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ctxlab {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Operator = Eigen::MatrixXcd;

// Algebraic identities on catalog data are asserted at this tolerance.
inline constexpr double kIdentityTolerance = 1e-12;

// Per-atom vectors in a D-dimensional space. Atom order is file order.
struct Realization {
  int dimension = 0;
  std::vector<AtomId> atoms;
  std::vector<Vector> vectors;
  double tolerance = kDefaultTolerance;

  const Vector* find(const AtomId& id) const;
  // Throws Error(MissingAtom).
  const Vector& at(const AtomId& id) const;
};

// One component: [sign] (int | decimal | sqrt(int)) [/ (int | sqrt(int))],
// or "(re,im)" with two such reals.
Complex parse_component(std::string_view token);

// Lines `dim D` (optional) and `vec <atom> c1 .. cD`; `#` comments. When
// `dimension` is absent it comes from the `dim` line or the first vector.
// No normalization is applied. Throws ParseError(Syntax) and
// Error(DimensionMismatch).
Realization parse_vectors(std::string_view text, std::optional<int> dimension = std::nullopt);

std::string serialize_vectors(const Realization& r);

struct ContextFailure {
  std::size_t context;
  AtomId first;
  AtomId second;  // equal to `first` for a norm failure; value is then the norm
  double value;
};

struct CollinearPair {
  AtomId first;
  AtomId second;
  double overlap;  // |<u,v>|
};

struct RealizationReport {
  std::vector<ContextFailure> context_failures;
  std::vector<CollinearPair> collinear_pairs;
  // Informational: contexts with fewer than D atoms, and atoms without a
  // vector when a partial realization was accepted.
  std::vector<std::size_t> short_contexts;
  std::vector<AtomId> unassigned_atoms;

  bool ok() const noexcept { return context_failures.empty() && collinear_pairs.empty(); }
};

// Checks unit norms and in-context orthogonality at r.tolerance, and flags
// collinear distinct atoms. Throws Error(MissingAtom) for an atom without a
// vector unless `allow_partial`, in which case only available pairs are
// checked.
RealizationReport check_realization(const Logic& logic, const Realization& r, bool allow_partial = false);

// |<e_a|psi>|^2 for every atom of the logic (Error(MissingAtom) if one lacks
// a vector), or for every atom of the realization.
ProbabilityAssignment born_probabilities(const Logic& logic, const Realization& r, const Vector& psi);
ProbabilityAssignment born_probabilities(const Realization& r, const Vector& psi);

// v v^dagger. Throws Error(NonUnitVector).
Operator projector(const Vector& v);

// sum_i lambda_i e_i e_i^dagger over a complete orthonormal context.
// Throws Error(RepeatedEigenvalue), Error(NonOrthonormalContext).
Operator maximal_operator(const std::vector<Vector>& context, const std::vector<double>& eigenvalues);

// E_i = f_i(A) with the Lagrange polynomials f_i(lambda_j) = delta_ij.
// Throws Error(RepeatedEigenvalue).
std::vector<Operator> recover_projectors(const Operator& a, const std::vector<double>& eigenvalues);

// Angle between rays: arccos |<u,v>|. Throws Error(NonUnitVector).
double angle(const Vector& u, const Vector& v);

// The two constraints a joint 3-D realization of a true-implies-false and a
// true-implies-true bug would impose on the angle between a and b.
struct BugPastingBounds {
  double tifs_min_angle;  // arccos(1/3)
  double tits_max_angle;  // arcsin(1/3)
  bool feasible;
};

BugPastingBounds bug_pasting_feasibility();

struct InequalityCheck {
  Inequality inequality;
  double value;
  bool satisfied;
};

struct ViolationReport {
  ProbabilityAssignment assignment;
  std::vector<InequalityCheck> checks;
  std::vector<std::size_t> violated;  // indices into checks
};

// Born assignment over the logic's atoms that carry vectors, evaluated on
// every inequality.
ViolationReport quantum_vs_classical(const Logic& logic, const Realization& r, const Vector& psi,
                                     const std::vector<Inequality>& inequalities);

}  // namespace ctxlab
