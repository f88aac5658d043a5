#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pimfhe/bootstrap.hpp"
#include "pimfhe/params.hpp"

namespace pimfhe {

enum class OptTarget { Throughput, Area };

// In-memory row/column operation costs in cycles, as polynomials in the word
// width b: cycles = c2*b^2 + c1*b + c0. Every named op can be overridden.
class CostModel {
  public:
    CostModel();

    [[nodiscard]] double cycles(const std::string& op, double b) const;
    void set(const std::string& op, std::array<double, 3> coeffs); // {c2, c1, c0}
    [[nodiscard]] const std::map<std::string, std::array<double, 3>>& table() const {
        return coeffs_;
    }

    // Compositions used by the explain output and the energy work model.
    [[nodiscard]] double montgomery_mul(double b) const; // 2 mul + 2 add
    [[nodiscard]] double barrett_step(double b) const;   // mul + add + compare

  private:
    std::map<std::string, std::array<double, 3>> coeffs_;
};

struct PimConfig {
    OptTarget opt = OptTarget::Throughput;
    BootstrapMode mode = BootstrapMode::GINX;
    double cycle_ns = 1.1;
    uint32_t block_rows = 1024;
    uint32_t block_cols = 1024;
    // Measured-behavior constants (calibrations, documented in the README):
    double area_stage_factor = 2.2;    // area-mode stage period / mul(b)
    double area_latency_factor = 1.75; // area-mode latency / throughput-mode latency
    double acc_overlap_periods = 6.0;  // dependent-step turnaround, in stage periods
    uint32_t keyswitch_fanin = 0;      // 0 = auto: fit fanin subtract+compares in one period
    CostModel cost;
};

// One modeled pipeline stage (per accumulator unit unless global).
struct StageInfo {
    std::string label;
    double cycles = 0;       // latency of one pass through the stage
    uint64_t blocks = 0;     // memory blocks backing it
    uint64_t replication = 1; // instances per accumulator unit
    bool global = false;     // shared by the whole pipeline, not per unit
};

struct PipelineModel {
    ParamSet params;
    PimConfig config;

    uint64_t units = 0;        // accumulator units: n*d_r (AP) or 2n (GINX)
    uint32_t pipes = 0;        // decomposition lanes per unit: 2*d_g
    uint32_t ntt_stages = 0;   // log2 N
    uint32_t interleave = 0;   // row interleave factor: max(1, 2048/N)
    double stage_period_ns = 0;
    double bottleneck_cycles = 0;
    std::string bottleneck_op;

    uint64_t unit_compute_blocks = 0; // per unit, before mode multiplier
    uint64_t unit_key_blocks = 0;     // refresh-key slice resident in the unit
    uint64_t unit_blocks = 0;         // final per-unit total for this opt mode
    uint64_t tree_blocks = 0;         // key-switch subtraction tree
    uint32_t tree_fanin = 0;
    uint32_t tree_stages = 0;
    uint64_t ek_s_bytes = 0;

    std::vector<StageInfo> stages; // explain/report detail
};

struct ThroughputReport {
    double inputs_per_ms = 0;
    double stage_period_ns = 0;
    double bottleneck_cycles = 0;
    std::string bottleneck_op;
};

struct LatencyReport {
    double ms = 0;
    double accumulate_ms = 0;
    double tail_ms = 0;
    double mode_factor = 1.0;
};

// Refresh-key bytes under the three packings that appear in practice. The
// model_bytes packing (log2Q-bit packed, 2*d_g polynomials per element) is the
// one the pipeline totals use; file_bytes is what the serializer writes.
struct KeySizeReport {
    uint64_t ek_s_bytes = 0;
    uint64_t ek_b_model_bytes = 0;
    uint64_t ek_b_file_bytes = 0;
};

struct MemoryReport {
    uint64_t total_bytes = 0;
    uint64_t unit_bytes = 0;
    uint64_t units_total_bytes = 0;
    uint64_t ek_s_bytes = 0;
    uint64_t tree_bytes = 0;
    uint64_t total_blocks = 0;
    KeySizeReport keys;
};

struct BudgetReport {
    bool feasible = false;
    std::string error;
    double budget_gb = 0;
    double floor_gb = 0;        // resident key material, the hard minimum
    double per_pipeline_gb = 0; // one full pipeline
    uint32_t pipelines = 0;
    double scale = 1.0; // <1 when a single pipeline is squeezed below full size
    double inputs_per_ms = 0;
};

struct ClientReport {
    double cycles = 0;
    double latency_us = 0;
    double dot_fraction = 0;     // share of cycles in the <a, s> dot product
    double enc_per_us_at_k1 = 0; // single-engine encryption rate
};

struct EnergyReport {
    double mj_per_input = 0;
    double work_cycles = 0;
    double pj_per_cycle = 0;
    bool calibration_point = false; // true when this set anchors the constant
};

struct CircuitEstimate {
    uint32_t depth = 0;
    uint64_t bootstrap_count = 0;
    uint32_t instances = 1;
    double single_ms = 0;
    double batch_ms = 0;
    double amortization = 0; // batch_ms / single_ms: batch cost in units of one instance
    double per_instance_ms = 0;
};

struct WorkloadReport {
    std::string name;
    double gate_ops = 0;
    double seconds = 0;
    double inputs_per_ms = 0;
};

PipelineModel build_server_pipeline(const ParamSet& params, const PimConfig& config);

ThroughputReport estimate_throughput(const PipelineModel& m);
LatencyReport estimate_latency(const PipelineModel& m);
MemoryReport estimate_memory(const PipelineModel& m);
KeySizeReport estimate_key_sizes(const ParamSet& params, BootstrapMode mode);
BudgetReport scale_to_budget(const PipelineModel& m, double budget_gb);
ClientReport estimate_client(const ParamSet& params, const PimConfig& config);
EnergyReport estimate_energy(const PipelineModel& m);

struct CircuitMeta {
    uint32_t depth = 0;
    uint64_t bootstrap_count = 0;
};
CircuitEstimate estimate_circuit(const PipelineModel& m, const CircuitMeta& meta,
                                 uint32_t instances);

// Named workload gate-op totals; throws on unknown name.
const std::map<std::string, double>& workload_table();
WorkloadReport estimate_workload(const PipelineModel& m, const std::string& name);

// Cycle count of one encryption on the client block layout (n rows by word
// columns): one row-parallel multiply, a column-parallel reduction tree, then
// transpose and bit-serial additions.
double client_cycles(const ParamSet& params, const CostModel& cost);

// Total modeled work per input in cycles (energy proxy).
double work_cycles_per_input(const PipelineModel& m);

} // namespace pimfhe
