#pragma once

#include "ctxlab/catalog.hpp"
#include "ctxlab/logic.hpp"
#include "ctxlab/polytope.hpp"
#include "ctxlab/quasiclassical.hpp"
#include "ctxlab/realization.hpp"
#include "ctxlab/states.hpp"

#include <json.hpp>

#include <string>

namespace ctxlab {

using Json = nlohmann::ordered_json;

// Exact rationals travel as "p/q" strings; doubles as numbers.
std::string format_double(double x);  // 12 significant digits

Json to_json(const Logic& logic);
Json to_json(const ValidationReport& report);
Json to_json(const Logic& logic, const StateList& states);
Json to_json(const StateSpaceReport& report);
Json to_json(const ProbabilityAssignment& p);
Json to_json(const MeasureReport& report);
Json to_json(const Inequality& ineq);
Json to_json(const Polytope& polytope);
Json to_json(const MembershipResult& result);
Json to_json(const RealizationReport& report);
Json to_json(const ViolationReport& report);
Json to_json(const PartitionRepresentation& rep);
Json to_json(const UrnResult& result);
Json to_json(const IndefinitenessCertificate& cert);
Json to_json(const CatalogEntry& entry);

// Atoms as columns, states as rows; first column is the 1-based state index.
std::string truth_table(const Logic& logic, const StateList& states);

}  // namespace ctxlab
