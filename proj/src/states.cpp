#include "ctxlab/states.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

namespace ctxlab {

bool is_admissible(const Logic& logic, const TwoValuedState& state) {
  if (state.bits.size() != logic.atom_count()) return false;
  for (const auto& c : logic.contexts()) {
    int trues = 0;
    for (auto a : c.atoms) trues += state.bits[a];
    if (trues != 1) return false;
  }
  return true;
}

namespace {

constexpr std::int8_t kUnset = -1;

class StateSearch {
 public:
  explicit StateSearch(const Logic& logic) : logic_(logic), contexts_of_(logic.atom_count()) {
    for (std::size_t c = 0; c < logic.context_count(); ++c) {
      for (auto a : logic.contexts()[c].atoms) contexts_of_[a].push_back(c);
    }
  }

  StateList run() {
    std::vector<std::int8_t> values(logic_.atom_count(), kUnset);
    descend(0, values);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  // Assigns and propagates: a true atom falsifies its context mates; a
  // context left with a single open atom and no true one forces that atom.
  bool assign(std::vector<std::int8_t>& values, AtomIndex atom, std::int8_t value) const {
    std::vector<std::pair<AtomIndex, std::int8_t>> pending{{atom, value}};
    while (!pending.empty()) {
      auto [a, v] = pending.back();
      pending.pop_back();
      if (values[a] != kUnset) {
        if (values[a] != v) return false;
        continue;
      }
      values[a] = v;
      for (auto c : contexts_of_[a]) {
        const auto& members = logic_.contexts()[c].atoms;
        if (v == 1) {
          for (auto b : members) {
            if (b == a) continue;
            if (values[b] == 1) return false;
            if (values[b] == kUnset) pending.emplace_back(b, 0);
          }
        } else {
          int open = 0;
          bool has_true = false;
          AtomIndex last_open = 0;
          for (auto b : members) {
            if (values[b] == 1) has_true = true;
            if (values[b] == kUnset) {
              ++open;
              last_open = b;
            }
          }
          if (!has_true) {
            if (open == 0) return false;
            if (open == 1) pending.emplace_back(last_open, 1);
          }
        }
      }
    }
    return true;
  }

  void descend(std::size_t c, std::vector<std::int8_t>& values) {
    if (c == logic_.context_count()) {
      finish(0, values);
      return;
    }
    const auto& members = logic_.contexts()[c].atoms;
    if (std::any_of(members.begin(), members.end(), [&](AtomIndex a) { return values[a] == 1; })) {
      descend(c + 1, values);
      return;
    }
    for (auto t : members) {
      if (values[t] != kUnset) continue;
      auto trial = values;
      if (assign(trial, t, 1)) descend(c + 1, trial);
    }
  }

  // Atoms outside every context are unconstrained.
  void finish(AtomIndex from, std::vector<std::int8_t>& values) {
    for (AtomIndex a = from; a < values.size(); ++a) {
      if (values[a] == kUnset) {
        for (std::int8_t v : {0, 1}) {
          auto trial = values;
          trial[a] = v;
          finish(a + 1, trial);
        }
        return;
      }
    }
    TwoValuedState s;
    s.bits.assign(values.begin(), values.end());
    found_.push_back(std::move(s));
  }

  const Logic& logic_;
  std::vector<std::vector<std::size_t>> contexts_of_;
  StateList found_;
};

}  // namespace

StateList enumerate_states(const Logic& logic) { return StateSearch(logic).run(); }

StateList brute_force_states(const Logic& logic) {
  const std::size_t n = logic.atom_count();
  if (n > kBruteForceAtomLimit) {
    throw Error(ErrorKind::TooLarge, "brute force enumeration is limited to " +
                                         std::to_string(kBruteForceAtomLimit) + " atoms, logic has " +
                                         std::to_string(n));
  }
  // Atom i maps to bit (n - 1 - i), so ascending integers are ascending bit strings.
  std::vector<std::uint32_t> masks;
  for (const auto& c : logic.contexts()) {
    std::uint32_t m = 0;
    for (auto a : c.atoms) m |= std::uint32_t{1} << (n - 1 - a);
    masks.push_back(m);
  }
  StateList out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < limit; ++x) {
    const auto word = static_cast<std::uint32_t>(x);
    bool ok = true;
    for (auto m : masks) {
      if (std::popcount(word & m) != 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    TwoValuedState s;
    s.bits.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.bits[i] = (word >> (n - 1 - i)) & 1U;
    out.push_back(std::move(s));
  }
  return out;
}

StateSpaceReport classify_states(const Logic& logic, const StateList& states) {
  StateSpaceReport r;
  r.count = states.size();
  const auto n = logic.atom_count();
  for (AtomIndex a = 0; a < n; ++a) {
    bool ever_true = std::any_of(states.begin(), states.end(), [a](const auto& s) { return s.value(a); });
    if (!ever_true) r.non_unital_atoms.push_back(logic.atom(a));
  }
  r.unital = r.non_unital_atoms.empty();
  if (!states.empty()) {
    for (AtomIndex x = 0; x < n; ++x) {
      for (AtomIndex y = x + 1; y < n; ++y) {
        bool same = std::all_of(states.begin(), states.end(),
                                [x, y](const auto& s) { return s.bits[x] == s.bits[y]; });
        if (same) r.inseparable_pairs.emplace_back(logic.atom(x), logic.atom(y));
      }
    }
  }
  r.separating = r.inseparable_pairs.empty();
  return r;
}

const char* to_string(PairProperty p) {
  switch (p) {
    case PairProperty::TrueImpliesFalse: return "TrueImpliesFalse";
    case PairProperty::TrueImpliesTrue: return "TrueImpliesTrue";
    case PairProperty::AntecedentNeverTrue: return "AntecedentNeverTrue";
    case PairProperty::Unconstrained: return "Unconstrained";
  }
  return "Unknown";
}

PairProperty pair_property(const Logic& logic, const StateList& states, const AtomId& antecedent,
                           const AtomId& target) {
  const auto a = logic.index_of(antecedent);
  const auto b = logic.index_of(target);
  if (a == b) throw Error(ErrorKind::InvalidArgument, "antecedent and target must differ");
  bool any = false, all_false = true, all_true = true;
  for (const auto& s : states) {
    if (!s.value(a)) continue;
    any = true;
    if (s.value(b)) {
      all_false = false;
    } else {
      all_true = false;
    }
  }
  if (!any) return PairProperty::AntecedentNeverTrue;
  if (all_false) return PairProperty::TrueImpliesFalse;
  if (all_true) return PairProperty::TrueImpliesTrue;
  return PairProperty::Unconstrained;
}

PairProperty pair_property(const Logic& logic, const AtomId& antecedent, const AtomId& target) {
  return pair_property(logic, enumerate_states(logic), antecedent, target);
}

MixtureWeights::MixtureWeights(RationalVector weights) : weights_(std::move(weights)) {
  Rational total = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 0) {
      throw Error(ErrorKind::WeightsNotNormalized, "weight " + std::to_string(i + 1) + " is negative");
    }
    total += weights_[i];
  }
  if (total != 1) {
    throw Error(ErrorKind::WeightsNotNormalized, "weights sum to " + to_string(total) + ", not 1");
  }
}

MixtureWeights MixtureWeights::uniform(std::size_t n) {
  return MixtureWeights(RationalVector(n, Rational(1, static_cast<long>(n))));
}

MixtureWeights MixtureWeights::indicator(std::size_t n, std::size_t k) {
  RationalVector w(n, Rational(0));
  w.at(k) = 1;
  return MixtureWeights(std::move(w));
}

ProbabilityAssignment ProbabilityAssignment::exact(std::vector<AtomId> atoms, RationalVector values) {
  if (atoms.size() != values.size()) throw Error(ErrorKind::DimensionMismatch, "atom/value count mismatch");
  ProbabilityAssignment p;
  p.exact_ = true;
  p.atoms_ = std::move(atoms);
  p.exact_values_ = std::move(values);
  return p;
}

ProbabilityAssignment ProbabilityAssignment::floating(std::vector<AtomId> atoms, std::vector<double> values) {
  if (atoms.size() != values.size()) throw Error(ErrorKind::DimensionMismatch, "atom/value count mismatch");
  ProbabilityAssignment p;
  p.exact_ = false;
  p.atoms_ = std::move(atoms);
  p.float_values_ = std::move(values);
  return p;
}

std::optional<std::size_t> ProbabilityAssignment::find(const AtomId& id) const {
  auto it = std::find(atoms_.begin(), atoms_.end(), id);
  if (it == atoms_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_.begin());
}

double ProbabilityAssignment::value(std::size_t i) const {
  return exact_ ? to_double(exact_values_.at(i)) : float_values_.at(i);
}

const Rational& ProbabilityAssignment::exact_at(const AtomId& id) const {
  auto i = find(id);
  if (!i) throw Error(ErrorKind::MissingAtom, "no probability for atom '" + id + "'");
  if (!exact_) throw Error(ErrorKind::InvalidArgument, "assignment is not exact");
  return exact_values_[*i];
}

double ProbabilityAssignment::at(const AtomId& id) const {
  auto i = find(id);
  if (!i) throw Error(ErrorKind::MissingAtom, "no probability for atom '" + id + "'");
  return value(*i);
}

ProbabilityAssignment convex_mixture(const Logic& logic, const StateList& states, const MixtureWeights& weights) {
  if (weights.size() != states.size()) {
    throw Error(ErrorKind::WeightCountMismatch, std::to_string(weights.size()) + " weights for " +
                                                    std::to_string(states.size()) + " states");
  }
  RationalVector probs(logic.atom_count(), Rational(0));
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (weights[i] == 0) continue;
    for (AtomIndex a = 0; a < logic.atom_count(); ++a) {
      if (states[i].value(a)) probs[a] += weights[i];
    }
  }
  return ProbabilityAssignment::exact(logic.atoms(), std::move(probs));
}

MeasureReport check_measure(const Logic& logic, const ProbabilityAssignment& p, double tolerance) {
  std::vector<std::size_t> slot(logic.atom_count());
  for (AtomIndex a = 0; a < logic.atom_count(); ++a) {
    auto i = p.find(logic.atom(a));
    if (!i) throw Error(ErrorKind::MissingAtom, "no probability for atom '" + logic.atom(a) + "'");
    slot[a] = *i;
  }
  MeasureReport r;
  for (AtomIndex a = 0; a < logic.atom_count(); ++a) {
    bool negative = p.is_exact() ? p.exact_value(slot[a]) < 0 : p.value(slot[a]) < -tolerance;
    if (negative) r.negative_atoms.push_back(logic.atom(a));
  }
  r.a1_nonnegative = r.negative_atoms.empty();
  for (std::size_t c = 0; c < logic.context_count(); ++c) {
    const auto& members = logic.contexts()[c].atoms;
    if (p.is_exact()) {
      Rational sum = 0;
      for (auto a : members) sum += p.exact_value(slot[a]);
      if (sum != 1) r.context_sums.emplace_back(c, to_string(sum));
    } else {
      double sum = 0;
      for (auto a : members) sum += p.value(slot[a]);
      if (std::abs(sum - 1.0) > tolerance) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", sum);
        r.context_sums.emplace_back(c, buf);
      }
    }
  }
  r.a3_normalized = r.context_sums.empty();
  return r;
}

const char* to_string(CertificateCondition c) {
  switch (c) {
    case CertificateCondition::TrueImpliesFalse: return "TrueImpliesFalse";
    case CertificateCondition::TrueImpliesTrue: return "TrueImpliesTrue";
    case CertificateCondition::AntecedentFalseInPasting: return "AntecedentFalseInPasting";
  }
  return "Unknown";
}

namespace {

std::optional<TwoValuedState> first_state_where(const StateList& states, AtomIndex a, std::optional<AtomIndex> b,
                                                bool b_value) {
  for (const auto& s : states) {
    if (s.value(a) && (!b || s.value(*b) == b_value)) return s;
  }
  return std::nullopt;
}

}  // namespace

IndefinitenessCertificate certify_value_indefiniteness(const Logic& sub1, const Logic& sub2,
                                                       const AtomId& antecedent, const AtomId& target) {
  const auto states1 = enumerate_states(sub1);
  auto p1 = pair_property(sub1, states1, antecedent, target);
  if (p1 != PairProperty::TrueImpliesFalse) {
    throw ConditionFailed(
        CertificateCondition::TrueImpliesFalse,
        first_state_where(states1, sub1.index_of(antecedent), sub1.index_of(target), true),
        "first logic is " + std::string(to_string(p1)) + " on (" + antecedent + ", " + target +
            "), expected TrueImpliesFalse");
  }
  const auto states2 = enumerate_states(sub2);
  auto p2 = pair_property(sub2, states2, antecedent, target);
  if (p2 != PairProperty::TrueImpliesTrue) {
    throw ConditionFailed(
        CertificateCondition::TrueImpliesTrue,
        first_state_where(states2, sub2.index_of(antecedent), sub2.index_of(target), false),
        "second logic is " + std::string(to_string(p2)) + " on (" + antecedent + ", " + target +
            "), expected TrueImpliesTrue");
  }
  IndefinitenessCertificate cert{sub1, sub2, paste_logics(sub1, sub2), antecedent, target};
  const auto pasted_states = enumerate_states(cert.pasted);
  const auto a = cert.pasted.index_of(antecedent);
  cert.pasted_state_count = pasted_states.size();
  cert.pasted_states_with_antecedent_true = static_cast<std::size_t>(
      std::count_if(pasted_states.begin(), pasted_states.end(), [a](const auto& s) { return s.value(a); }));
  if (cert.pasted_states_with_antecedent_true != 0) {
    throw ConditionFailed(CertificateCondition::AntecedentFalseInPasting,
                          first_state_where(pasted_states, a, std::nullopt, false),
                          "pasted logic admits " + std::to_string(cert.pasted_states_with_antecedent_true) +
                              " states with '" + antecedent + "' true");
  }
  return cert;
}

}  // namespace ctxlab
