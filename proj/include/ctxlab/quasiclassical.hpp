#pragma once

#include "ctxlab/logic.hpp"
#include "ctxlab/states.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ctxlab {

// Atoms as sets of ball types. Ball type i is the i-th state (0-based here;
// printed 1-based as lambda indices).
struct PartitionRepresentation {
  std::vector<AtomId> atoms;
  std::vector<std::vector<std::size_t>> atom_sets;  // parallel to atoms, ascending
  std::size_t state_count = 0;
  bool faithful = false;            // separating and unital
  bool contexts_partition = false;  // every context's sets partition all ball types
};

PartitionRepresentation partition_representation(const Logic& logic, const StateList& states);

inline constexpr const char* kUrnRngId = "mt19937_64";

struct UrnResult {
  std::size_t context = 0;
  std::vector<AtomId> atoms;  // the context's atoms, in context order
  std::vector<std::uint64_t> counts;
  RationalVector frequencies;  // counts / draws, exact
  std::uint64_t draws = 0;
  std::uint64_t seed = 0;
  std::string rng = kUrnRngId;
};

// Draws ball types with probability lambda_i and tallies which atom of the
// context each drawn state makes true. Throws Error(UnknownContext),
// Error(WeightCountMismatch), Error(InvalidArgument) for zero draws.
UrnResult urn_simulate(const Logic& logic, const StateList& states, const MixtureWeights& weights,
                       std::size_t context, std::uint64_t draws, std::uint64_t seed);

}  // namespace ctxlab
