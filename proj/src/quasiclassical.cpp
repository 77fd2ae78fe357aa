#include "ctxlab/quasiclassical.hpp"

#include <algorithm>
#include <random>

namespace ctxlab {

PartitionRepresentation partition_representation(const Logic& logic, const StateList& states) {
  PartitionRepresentation rep;
  rep.atoms = logic.atoms();
  rep.state_count = states.size();
  rep.atom_sets.resize(logic.atom_count());
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (AtomIndex a = 0; a < logic.atom_count(); ++a) {
      if (states[s].value(a)) rep.atom_sets[a].push_back(s);
    }
  }
  const auto report = classify_states(logic, states);
  rep.faithful = report.separating && report.unital;
  rep.contexts_partition = true;
  for (const auto& c : logic.contexts()) {
    std::vector<int> hits(states.size(), 0);
    for (auto a : c.atoms) {
      for (auto s : rep.atom_sets[a]) ++hits[s];
    }
    if (!std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; })) rep.contexts_partition = false;
  }
  return rep;
}

UrnResult urn_simulate(const Logic& logic, const StateList& states, const MixtureWeights& weights,
                       std::size_t context, std::uint64_t draws, std::uint64_t seed) {
  if (context >= logic.context_count()) {
    throw Error(ErrorKind::UnknownContext, "context " + std::to_string(context + 1) + " does not exist; the logic has " +
                                               std::to_string(logic.context_count()));
  }
  if (weights.size() != states.size()) {
    throw Error(ErrorKind::WeightCountMismatch,
                std::to_string(weights.size()) + " weights for " + std::to_string(states.size()) + " states");
  }
  if (draws == 0) throw Error(ErrorKind::InvalidArgument, "at least one draw is required");

  // Exact cumulative thresholds ceil(cum * 2^64) against a 64-bit variate:
  // u < T_i selects the first such i, so P(i) = (T_i - T_{i-1}) / 2^64.
  using u128 = unsigned __int128;
  const Integer two64 = Integer(1) << 64;
  std::vector<u128> thresholds;
  Rational cum = 0;
  for (const auto& w : weights.values()) {
    cum += w;
    Rational scaled = cum * Rational(two64);
    Integer t = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
    if (Rational(t) != scaled) t += 1;
    u128 v = static_cast<u128>(static_cast<std::uint64_t>(t >> 64)) << 64;
    v |= static_cast<std::uint64_t>(t & Integer(~std::uint64_t{0}));
    thresholds.push_back(v);
  }

  const auto& members = logic.contexts()[context].atoms;
  UrnResult out;
  out.context = context;
  out.draws = draws;
  out.seed = seed;
  out.counts.assign(members.size(), 0);
  for (auto a : members) out.atoms.push_back(logic.atoms()[a]);

  std::mt19937_64 rng(seed);
  for (std::uint64_t n = 0; n < draws; ++n) {
    const u128 u = rng();
    auto it = std::upper_bound(thresholds.begin(), thresholds.end(), u);
    const auto& state = states[static_cast<std::size_t>(it - thresholds.begin())];
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (state.value(members[k])) ++out.counts[k];
    }
  }
  for (auto c : out.counts) out.frequencies.emplace_back(Integer(c), Integer(draws));
  return out;
}

}  // namespace ctxlab
