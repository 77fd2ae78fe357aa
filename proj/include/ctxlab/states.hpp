#pragma once

#include "ctxlab/logic.hpp"
#include "ctxlab/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ctxlab {

// A two-valued {0,1} assignment in the atom order of its Logic.
struct TwoValuedState {
  std::vector<std::uint8_t> bits;

  bool value(AtomIndex a) const { return bits[a] != 0; }
  friend auto operator<=>(const TwoValuedState&, const TwoValuedState&) = default;
};

using StateList = std::vector<TwoValuedState>;

// Exactly one true atom in every context.
bool is_admissible(const Logic& logic, const TwoValuedState& state);

// Depth-first over contexts in declaration order with propagation; the result
// is sorted lexicographically by bit string.
StateList enumerate_states(const Logic& logic);

inline constexpr std::size_t kBruteForceAtomLimit = 24;

// Exhaustive filter over all 2^n bit vectors. Throws Error(TooLarge) above
// kBruteForceAtomLimit atoms.
StateList brute_force_states(const Logic& logic);

struct StateSpaceReport {
  std::size_t count = 0;
  bool unital = false;
  std::vector<AtomId> non_unital_atoms;
  bool separating = true;
  std::vector<std::pair<AtomId, AtomId>> inseparable_pairs;
};

StateSpaceReport classify_states(const Logic& logic, const StateList& states);

enum class PairProperty { TrueImpliesFalse, TrueImpliesTrue, AntecedentNeverTrue, Unconstrained };

const char* to_string(PairProperty p);

// Throws Error(UnknownAtom) or Error(InvalidArgument) when antecedent == target.
PairProperty pair_property(const Logic& logic, const StateList& states, const AtomId& antecedent,
                           const AtomId& target);
PairProperty pair_property(const Logic& logic, const AtomId& antecedent, const AtomId& target);

// Convex weights over a state list; validated on construction
// (Error(WeightsNotNormalized) unless all >= 0 and summing to 1).
class MixtureWeights {
 public:
  explicit MixtureWeights(RationalVector weights);
  static MixtureWeights uniform(std::size_t n);
  static MixtureWeights indicator(std::size_t n, std::size_t k);

  const RationalVector& values() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }

 private:
  RationalVector weights_;
};

// Per-atom probabilities, either exact rationals or floating point values.
class ProbabilityAssignment {
 public:
  ProbabilityAssignment() = default;
  static ProbabilityAssignment exact(std::vector<AtomId> atoms, RationalVector values);
  static ProbabilityAssignment floating(std::vector<AtomId> atoms, std::vector<double> values);

  bool is_exact() const noexcept { return exact_; }
  const std::vector<AtomId>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  std::optional<std::size_t> find(const AtomId& id) const;

  const Rational& exact_value(std::size_t i) const { return exact_values_.at(i); }
  double value(std::size_t i) const;
  // Convenience lookups by atom id; throw Error(MissingAtom).
  const Rational& exact_at(const AtomId& id) const;
  double at(const AtomId& id) const;

 private:
  bool exact_ = true;
  std::vector<AtomId> atoms_;
  RationalVector exact_values_;
  std::vector<double> float_values_;
};

// probs(a) = sum_i w_i v_i(a), exactly. Throws WeightCountMismatch.
ProbabilityAssignment convex_mixture(const Logic& logic, const StateList& states, const MixtureWeights& weights);

struct MeasureReport {
  bool a1_nonnegative = true;
  bool a2_additive = true;  // holds by construction for per-atom assignments
  bool a3_normalized = true;
  std::vector<AtomId> negative_atoms;
  // (context index, sum over the context) for every context violating A3.
  std::vector<std::pair<std::size_t, std::string>> context_sums;
  bool ok() const noexcept { return a1_nonnegative && a2_additive && a3_normalized; }
};

inline constexpr double kDefaultTolerance = 1e-9;

// Exact assignments are checked exactly (tolerance ignored); floating point
// ones within `tolerance`. Throws Error(MissingAtom).
MeasureReport check_measure(const Logic& logic, const ProbabilityAssignment& p,
                            double tolerance = kDefaultTolerance);

struct IndefinitenessCertificate {
  Logic sub1;  // true-implies-false witness
  Logic sub2;  // true-implies-true witness
  Logic pasted;
  AtomId antecedent;
  AtomId target;
  std::size_t pasted_state_count = 0;
  std::size_t pasted_states_with_antecedent_true = 0;
};

enum class CertificateCondition { TrueImpliesFalse, TrueImpliesTrue, AntecedentFalseInPasting };

const char* to_string(CertificateCondition c);

class ConditionFailed : public Error {
 public:
  ConditionFailed(CertificateCondition which, std::optional<TwoValuedState> witness, const std::string& message)
      : Error(ErrorKind::ConditionFailed, message), which_(which), witness_(std::move(witness)) {}

  CertificateCondition which() const noexcept { return which_; }
  const std::optional<TwoValuedState>& witness() const noexcept { return witness_; }

 private:
  CertificateCondition which_;
  std::optional<TwoValuedState> witness_;
};

IndefinitenessCertificate certify_value_indefiniteness(const Logic& sub1, const Logic& sub2,
                                                       const AtomId& antecedent, const AtomId& target);

}  // namespace ctxlab
