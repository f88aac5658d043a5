#pragma once

#include <string>

#include "pimfhe/pimsim.hpp"

namespace pimfhe {

// Full estimate bundle for one pipeline build, in a stable JSON shape
// (documented by docs/report.schema.json).
std::string report_json(const PipelineModel& m, int indent = 2);

// The same bundle as a human-readable table.
std::string report_text(const PipelineModel& m);

// Per-stage breakdown: label, cycles, blocks, replication, scope.
std::string explain_text(const PipelineModel& m);

std::string budget_json(const PipelineModel& m, const BudgetReport& r, int indent = 2);
std::string circuit_json(const PipelineModel& m, const CircuitEstimate& e, int indent = 2);
std::string workload_json(const PipelineModel& m, const WorkloadReport& w, int indent = 2);
std::string client_json(const ParamSet& p, const ClientReport& c, int indent = 2);

} // namespace pimfhe
