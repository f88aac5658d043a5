#include "pimfhe/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace pimfhe {

namespace {

using nlohmann::json;

json params_json(const ParamSet& p) {
    return json{{"name", p.name},
                {"n", p.n},
                {"q", p.q},
                {"N", p.N},
                {"log2_Q", p.log2_Q},
                {"Q", p.Q},
                {"B_s", p.B_s},
                {"B_g", p.B_g},
                {"B_r", p.B_r},
                {"d_s", p.d_s},
                {"d_g", p.d_g},
                {"d_r", p.d_r}};
}

json model_json(const PipelineModel& m) {
    ThroughputReport tp = estimate_throughput(m);
    LatencyReport lat = estimate_latency(m);
    MemoryReport mem = estimate_memory(m);
    EnergyReport en = estimate_energy(m);

    json j;
    j["params"] = params_json(m.params);
    j["config"] = {
        {"optimize", m.config.opt == OptTarget::Area ? "area" : "throughput"},
        {"mode", m.config.mode == BootstrapMode::AP ? "ap" : "ginx"},
        {"cycle_ns", m.config.cycle_ns},
        {"block_rows", m.config.block_rows},
        {"block_cols", m.config.block_cols},
        {"area_stage_factor", m.config.area_stage_factor},
        {"area_latency_factor", m.config.area_latency_factor},
        {"acc_overlap_periods", m.config.acc_overlap_periods},
        {"keyswitch_fanin", m.tree_fanin},
    };
    j["pipeline"] = {
        {"accumulator_units", m.units},
        {"decomposition_lanes", m.pipes},
        {"ntt_stages", m.ntt_stages},
        {"interleave", m.interleave},
        {"bottleneck_op", m.bottleneck_op},
        {"bottleneck_cycles", m.bottleneck_cycles},
        {"stage_period_ns", m.stage_period_ns},
        {"keyswitch_tree_stages", m.tree_stages},
    };
    j["throughput"] = {
        {"inputs_per_ms", tp.inputs_per_ms},
    };
    j["latency"] = {
        {"ms_per_input", lat.ms},
        {"accumulate_ms", lat.accumulate_ms},
        {"tail_ms", lat.tail_ms},
        {"mode_factor", lat.mode_factor},
    };
    j["memory"] = {
        {"total_bytes", mem.total_bytes},
        {"total_gb", mem.total_bytes / 1e9},
        {"unit_bytes", mem.unit_bytes},
        {"units_total_bytes", mem.units_total_bytes},
        {"ek_s_bytes", mem.ek_s_bytes},
        {"tree_bytes", mem.tree_bytes},
        {"total_blocks", mem.total_blocks},
        {"keys",
         {{"ek_s_bytes", mem.keys.ek_s_bytes},
          {"ek_b_model_bytes", mem.keys.ek_b_model_bytes},
          {"ek_b_file_bytes", mem.keys.ek_b_file_bytes}}},
    };
    j["energy"] = {
        {"mj_per_input", en.mj_per_input},
        {"work_cycles", en.work_cycles},
        {"pj_per_cycle", en.pj_per_cycle},
        {"calibration_point", en.calibration_point},
    };
    return j;
}

} // namespace

std::string report_json(const PipelineModel& m, int indent) { return model_json(m).dump(indent); }

std::string report_text(const PipelineModel& m) {
    ThroughputReport tp = estimate_throughput(m);
    LatencyReport lat = estimate_latency(m);
    MemoryReport mem = estimate_memory(m);
    EnergyReport en = estimate_energy(m);

    std::ostringstream os;
    os << std::fixed;
    os << "pipeline " << m.params.name << " ("
       << (m.config.mode == BootstrapMode::AP ? "ap" : "ginx") << ", "
       << (m.config.opt == OptTarget::Area ? "area" : "throughput") << ")\n";
    os << "  accumulator units  " << m.units << " (lanes " << m.pipes << ", ntt stages "
       << m.ntt_stages << ", interleave " << m.interleave << ")\n";
    os << std::setprecision(1);
    os << "  stage period       " << m.stage_period_ns << " ns (" << m.bottleneck_op << ", "
       << m.bottleneck_cycles << " cycles)\n";
    os << std::setprecision(2);
    os << "  throughput         " << tp.inputs_per_ms << " inputs/ms\n";
    os << "  latency            " << lat.ms << " ms/input\n";
    os << "  memory             " << mem.total_bytes / 1e9 << " GB (" << mem.total_blocks
       << " blocks)\n";
    os << "  refresh key        " << mem.keys.ek_b_model_bytes / 1e6 << " MB packed, "
       << mem.keys.ek_b_file_bytes / 1e6 << " MB file\n";
    os << "  switch key         " << mem.keys.ek_s_bytes / 1e6 << " MB\n";
    os << "  energy             " << en.mj_per_input << " mJ/input"
       << (en.calibration_point ? " (calibration point)" : "") << "\n";
    return os.str();
}

std::string explain_text(const PipelineModel& m) {
    std::ostringstream os;
    os << "stage breakdown for " << m.params.name << " ("
       << (m.config.mode == BootstrapMode::AP ? "ap" : "ginx") << ", "
       << (m.config.opt == OptTarget::Area ? "area" : "throughput") << ")\n";
    os << "  units: " << m.units << ", per-unit blocks: " << m.unit_blocks
       << " (compute " << m.unit_compute_blocks << ", key slice " << m.unit_key_blocks << ")\n";
    os << std::left;
    os << "  " << std::setw(18) << "stage" << std::setw(12) << "cycles" << std::setw(10)
       << "blocks" << std::setw(8) << "x" << "scope\n";
    for (const auto& s : m.stages) {
        os << "  " << std::setw(18) << s.label << std::setw(12) << s.cycles << std::setw(10)
           << s.blocks << std::setw(8) << s.replication << (s.global ? "pipeline" : "unit")
           << "\n";
    }
    os << "  stage period: " << m.stage_period_ns << " ns; every per-unit stage is paced by the "
       << m.bottleneck_op << " bottleneck\n";
    return os.str();
}

std::string budget_json(const PipelineModel& m, const BudgetReport& r, int indent) {
    json j;
    j["params"] = m.params.name;
    j["budget_gb"] = r.budget_gb;
    j["floor_gb"] = r.floor_gb;
    j["per_pipeline_gb"] = r.per_pipeline_gb;
    j["feasible"] = r.feasible;
    if (!r.feasible) {
        j["error"] = r.error;
    } else {
        j["pipelines"] = r.pipelines;
        j["scale"] = r.scale;
        j["inputs_per_ms"] = r.inputs_per_ms;
    }
    return j.dump(indent);
}

std::string circuit_json(const PipelineModel& m, const CircuitEstimate& e, int indent) {
    json j;
    j["params"] = m.params.name;
    j["depth"] = e.depth;
    j["bootstraps"] = e.bootstrap_count;
    j["instances"] = e.instances;
    j["single_ms"] = e.single_ms;
    j["batch_ms"] = e.batch_ms;
    j["per_instance_ms"] = e.per_instance_ms;
    j["amortization"] = e.amortization;
    return j.dump(indent);
}

std::string workload_json(const PipelineModel& m, const WorkloadReport& w, int indent) {
    json j;
    j["params"] = m.params.name;
    j["workload"] = w.name;
    j["gate_ops"] = w.gate_ops;
    j["inputs_per_ms"] = w.inputs_per_ms;
    j["seconds"] = w.seconds;
    return j.dump(indent);
}

std::string client_json(const ParamSet& p, const ClientReport& c, int indent) {
    json j;
    j["params"] = p.name;
    j["cycles"] = c.cycles;
    j["latency_us"] = c.latency_us;
    j["dot_fraction"] = c.dot_fraction;
    j["enc_per_us_at_k1"] = c.enc_per_us_at_k1;
    return j.dump(indent);
}

} // namespace pimfhe
