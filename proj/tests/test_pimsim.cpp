// Analytical PIM pipeline model: frozen structure, throughput, latency,
// memory, key-size, budget, client, energy, and circuit-estimate numbers.
// Every pinned constant was cross-checked against an independent spreadsheet
// of the cost model before being frozen here.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "pimfhe/params.hpp"
#include "pimfhe/pimsim.hpp"

using namespace pimfhe;

namespace {

PipelineModel model(const std::string& name, BootstrapMode mode, OptTarget opt) {
    PimConfig cfg;
    cfg.mode = mode;
    cfg.opt = opt;
    return build_server_pipeline(load_param_set(name), cfg);
}

const std::vector<std::string> kServerSets = {"STD128",  "STD192",  "STD256",
                                              "STD128Q", "STD192Q", "STD256Q"};

} // namespace

TEST_CASE("cost model: closed-form cycle counts") {
    CostModel cm;
    for (uint32_t b : {1u, 8u, 27u, 32u, 50u}) {
        CHECK(cm.cycles("add", b) == 6 * b + 1);
        CHECK(cm.cycles("mul", b) == 7ull * b * b + 4ull * b);
        CHECK(cm.cycles("compare", b) == b);
        CHECK(cm.cycles("column_transfer", b) == b);
        CHECK(cm.cycles("rotation", b) == 2);
        CHECK(cm.cycles("bit_add", b) == 7);
    }
    CHECK(cm.cycles("mul", 27) == 5211);
    CHECK(cm.cycles("mul", 32) == 7296);
    CHECK(cm.cycles("mul", 50) == 17700);
    // Composites: Montgomery multiply = 2 mul + 2 add; one Barrett-style
    // reduction step = mul + compare + add.
    CHECK(cm.montgomery_mul(27) == 10748);
    CHECK(cm.barrett_step(27) == 5401);
    CHECK(cm.montgomery_mul(27) == 2 * cm.cycles("mul", 27) + 2 * cm.cycles("add", 27));
    CHECK(cm.barrett_step(27) ==
          cm.cycles("mul", 27) + cm.cycles("compare", 27) + cm.cycles("add", 27));
    CHECK(cm.table().size() == 6);
    CHECK_THROWS_AS((void)cm.cycles("divide", 8), std::invalid_argument);
}

TEST_CASE("cost model: overriding a row changes derived cycles") {
    CostModel cm;
    cm.set("mul", {1.0, 0.0, 0.0}); // mul(b) = b^2
    CHECK(cm.cycles("mul", 10) == 100);
    CHECK(cm.montgomery_mul(10) == 2 * 100 + 2 * 61);
}

TEST_CASE("pipeline structure per parameter set") {
    struct Row {
        const char* name;
        uint64_t units, pipes, ntt_stages, interleave;
        double period_ns, cycles;
    };
    // units = n*d_r (digit accumulators) in AP mode and 2n in GINX mode; with
    // d_r = 2 everywhere the two coincide. pipes = 2*d_g transform lanes.
    // interleave = 2048/N halves at N = 2048.
    const Row rows[] = {
        {"STD128", 1024, 8, 10, 2, 5732.10, 5211.0},
        {"STD192", 1024, 6, 11, 1, 10704.10, 9731.0},
        {"STD256", 2048, 6, 11, 1, 6603.30, 6003.0},
        {"STD128Q", 1024, 4, 11, 1, 19470.00, 17700.0},
        {"STD192Q", 2048, 6, 11, 1, 9586.50, 8715.0},
        {"STD256Q", 2048, 8, 11, 1, 5732.10, 5211.0},
    };
    for (const Row& r : rows) {
        CAPTURE(r.name);
        const ParamSet& p = load_param_set(r.name);
        for (BootstrapMode mode : {BootstrapMode::AP, BootstrapMode::GINX}) {
            PipelineModel m = model(r.name, mode, OptTarget::Throughput);
            CHECK(m.units == r.units);
            CHECK(m.units == (mode == BootstrapMode::AP ? uint64_t(p.n) * p.d_r : 2ull * p.n));
            CHECK(m.pipes == r.pipes);
            CHECK(m.pipes == 2ull * p.d_g);
            CHECK(m.ntt_stages == r.ntt_stages);
            CHECK(m.interleave == r.interleave);
            ThroughputReport t = estimate_throughput(m);
            CHECK(t.stage_period_ns == doctest::Approx(r.period_ns).epsilon(1e-9));
            CHECK(t.bottleneck_cycles == doctest::Approx(r.cycles).epsilon(1e-9));
            CHECK(t.bottleneck_op == "mul");
        }
    }
}

TEST_CASE("throughput anchors") {
    CHECK(estimate_throughput(model("STD128", BootstrapMode::GINX, OptTarget::Throughput))
              .inputs_per_ms == doctest::Approx(174.4561).epsilon(1e-4));
    CHECK(estimate_throughput(model("STD128", BootstrapMode::GINX, OptTarget::Area))
              .inputs_per_ms == doctest::Approx(79.2982).epsilon(1e-4));
    CHECK(estimate_throughput(model("STD256Q", BootstrapMode::AP, OptTarget::Throughput))
              .inputs_per_ms == doctest::Approx(174.4561).epsilon(1e-4));
    CHECK(estimate_throughput(model("STD192", BootstrapMode::AP, OptTarget::Throughput))
              .inputs_per_ms == doctest::Approx(93.4221).epsilon(1e-4));
    // Area mode stretches the stage period by the documented 2.2x factor.
    ThroughputReport tp = estimate_throughput(model("STD128", BootstrapMode::GINX, OptTarget::Throughput));
    ThroughputReport ar = estimate_throughput(model("STD128", BootstrapMode::GINX, OptTarget::Area));
    CHECK(ar.stage_period_ns == doctest::Approx(tp.stage_period_ns * 2.2).epsilon(1e-12));
}

TEST_CASE("latency: accumulate term, tail, and the fixed area/throughput ratio") {
    PipelineModel m = model("STD128", BootstrapMode::GINX, OptTarget::Throughput);
    LatencyReport l = estimate_latency(m);
    ThroughputReport t = estimate_throughput(m);
    // Accumulation: units sequential blind-rotation steps, each with a
    // six-period dependent-step turnaround.
    CHECK(l.accumulate_ms ==
          doctest::Approx(m.units * 6.0 * t.stage_period_ns * 1e-6).epsilon(1e-12));
    CHECK(l.ms == doctest::Approx(l.accumulate_ms + l.tail_ms).epsilon(1e-12));
    CHECK(l.ms == doctest::Approx(35.2467).epsilon(1e-4));
    CHECK(l.tail_ms < 0.01 * l.ms); // extraction/key-switch tail is noise

    for (const auto& name : kServerSets) {
        CAPTURE(name);
        double la = estimate_latency(model(name, BootstrapMode::GINX, OptTarget::Area)).ms;
        double lt = estimate_latency(model(name, BootstrapMode::GINX, OptTarget::Throughput)).ms;
        CHECK(la / lt == doctest::Approx(1.75).epsilon(1e-9));
        CHECK(estimate_latency(model(name, BootstrapMode::GINX, OptTarget::Area)).mode_factor ==
              doctest::Approx(1.75).epsilon(1e-12));
    }
}

TEST_CASE("latency scales as n * d_r * log2(Q)^2 across sets") {
    // The blind-rotation step count is n*d_r and the multiplier cost is
    // quadratic in the word width, so this product predicts cross-set
    // latency ratios. Residuals stay within a couple of percent (the linear
    // 4b term and the tail are the only deviations).
    std::vector<double> ratio;
    for (const auto& name : kServerSets) {
        const ParamSet& p = load_param_set(name);
        double lat = estimate_latency(model(name, BootstrapMode::AP, OptTarget::Throughput)).ms;
        double law = double(p.n) * p.d_r * double(p.log2_Q) * p.log2_Q;
        ratio.push_back(lat / law);
    }
    double mean = 0;
    for (double r : ratio) mean += r;
    mean /= ratio.size();
    for (size_t i = 0; i < ratio.size(); ++i) {
        CAPTURE(kServerSets[i]);
        CHECK(std::fabs(ratio[i] / mean - 1.0) < 0.02);
    }
}

TEST_CASE("memory totals and block counts") {
    struct Row {
        const char* name;
        BootstrapMode mode;
        double gb;
        uint64_t blocks;
    };
    const Row rows[] = {
        {"STD128", BootstrapMode::GINX, 37.1470, 304308},
        {"STD128", BootstrapMode::AP, 38.2720, 313524},
        {"STD128Q", BootstrapMode::GINX, 46.1080, 377717},
        {"STD128Q", BootstrapMode::AP, 48.2330, 395125},
        {"STD256Q", BootstrapMode::GINX, 94.2881, 772408},
    };
    for (const Row& r : rows) {
        CAPTURE(r.name);
        PipelineModel m = model(r.name, r.mode, OptTarget::Throughput);
        MemoryReport mem = estimate_memory(m);
        CHECK(mem.total_bytes / (1024.0 * 1024.0 * 1024.0) ==
              doctest::Approx(r.gb).epsilon(1e-4));
        CHECK(mem.total_blocks == r.blocks);
        // Block accounting: per-unit blocks times units, the switch-key image
        // (rounded up to whole 128 KiB blocks), and the subtraction tree.
        const uint64_t block_bytes = 1024ull * 1024ull / 8ull;
        CHECK(mem.total_blocks ==
              m.units * m.unit_blocks + m.tree_blocks +
                  (mem.ek_s_bytes + block_bytes - 1) / block_bytes);
        CHECK(mem.units_total_bytes + mem.ek_s_bytes + mem.tree_bytes == mem.total_bytes);
        CHECK(mem.keys.ek_s_bytes == mem.ek_s_bytes);
    }
    // Area mode drops replicated compute blocks, never the resident keys.
    MemoryReport tput = estimate_memory(model("STD128", BootstrapMode::GINX, OptTarget::Throughput));
    MemoryReport area = estimate_memory(model("STD128", BootstrapMode::GINX, OptTarget::Area));
    CHECK(area.total_bytes < tput.total_bytes);
    CHECK(area.ek_s_bytes == tput.ek_s_bytes);
}

TEST_CASE("key size model: exact packed and serialized byte counts") {
    struct Row {
        const char* name;
        uint64_t ek_s, ap_model, ap_file, ginx_model, ginx_file;
    };
    const Row rows[] = {
        {"STD128", 265939200, 651165696, 1543692288, 28311552, 67117056},
        {"STD192", 971827200, 1338507264, 4630700032, 58195968, 201334784},
        {"STD256", 1331680000, 2919235584, 6442975232, 91226112, 201342976},
        {"STD128Q", 1805760000, 1205862400, 3087196160, 52428800, 134225920},
        {"STD192Q", 1836800000, 3523215360, 12885426176, 110100480, 402669568},
        {"STD256Q", 1062720000, 3623878656, 8590458880, 113246208, 268451840},
    };
    for (const Row& r : rows) {
        CAPTURE(r.name);
        const ParamSet& p = load_param_set(r.name);
        KeySizeReport a = estimate_key_sizes(p, BootstrapMode::AP);
        KeySizeReport g = estimate_key_sizes(p, BootstrapMode::GINX);
        CHECK(a.ek_s_bytes == r.ek_s);
        CHECK(g.ek_s_bytes == r.ek_s);
        CHECK(a.ek_b_model_bytes == r.ap_model);
        CHECK(a.ek_b_file_bytes == r.ap_file);
        CHECK(g.ek_b_model_bytes == r.ginx_model);
        CHECK(g.ek_b_file_bytes == r.ginx_file);
        // Packed switching key: N*d_s*B_s rows of (n+1) log2(Q)-bit words.
        uint64_t bits = uint64_t(p.N) * p.d_s * p.B_s * (uint64_t(p.n) + 1) * p.log2_Q;
        CHECK(a.ek_s_bytes == bits / 8);
    }
}

TEST_CASE("key size model stays within 2x of the design-target sizes") {
    // Design-target per-key budgets in MB (decimal-ish table values; the
    // contract is a 2x envelope, not equality).
    const std::map<std::string, double> ek_s_mb = {
        {"STD128", 253}, {"STD192", 925},  {"STD256", 1269},
        {"STD128Q", 1719}, {"STD192Q", 1750}, {"STD256Q", 1013}};
    const std::map<std::string, double> ek_b_ap_mb = {
        {"STD128", 322}, {"STD192", 897},  {"STD256", 1920},
        {"STD128Q", 1150}, {"STD192Q", 2304}, {"STD256Q", 1792}};
    const std::map<std::string, double> ek_b_ginx_mb = {
        {"STD128", 14}, {"STD192", 39},  {"STD256", 60},
        {"STD128Q", 50}, {"STD192Q", 72}, {"STD256Q", 56}};
    for (const auto& name : kServerSets) {
        CAPTURE(name);
        const ParamSet& p = load_param_set(name);
        KeySizeReport a = estimate_key_sizes(p, BootstrapMode::AP);
        KeySizeReport g = estimate_key_sizes(p, BootstrapMode::GINX);
        const double mib = 1024.0 * 1024.0;
        double rs = a.ek_s_bytes / mib / ek_s_mb.at(name);
        double ra = a.ek_b_model_bytes / mib / ek_b_ap_mb.at(name);
        double rg = g.ek_b_model_bytes / mib / ek_b_ginx_mb.at(name);
        CHECK(rs > 0.5);
        CHECK(rs < 2.0);
        CHECK(ra > 0.5);
        CHECK(ra < 2.0);
        CHECK(rg > 0.5);
        CHECK(rg < 2.0);
    }
}

TEST_CASE("budget scaling: full pipelines replicate, partial pipelines shrink") {
    PipelineModel m = model("STD128", BootstrapMode::GINX, OptTarget::Area);
    BudgetReport b16 = scale_to_budget(m, 16.0);
    BudgetReport b32 = scale_to_budget(m, 32.0);
    BudgetReport b64 = scale_to_budget(m, 64.0);
    CHECK(b16.feasible);
    CHECK(b16.pipelines == 1);
    CHECK(b16.inputs_per_ms == doctest::Approx(79.2982).epsilon(1e-4));
    CHECK(b32.pipelines == 2);
    CHECK(b64.pipelines == 4);
    CHECK(b64.inputs_per_ms == doctest::Approx(317.1930).epsilon(1e-4));
    CHECK(b64.inputs_per_ms == doctest::Approx(4 * b16.inputs_per_ms).epsilon(1e-12));
    CHECK(b16.per_pipeline_gb == doctest::Approx(13.5796).epsilon(1e-4));

    // Below one full pipeline the compute stages shrink linearly between the
    // key floor and the full build; STD128 still runs in 2 GB.
    BudgetReport b2 = scale_to_budget(m, 2.0);
    CHECK(b2.feasible);
    CHECK(b2.pipelines == 1);
    CHECK(b2.scale < 1.0);
    CHECK(b2.inputs_per_ms == doctest::Approx(10.1814).epsilon(1e-4));
}

TEST_CASE("budget scaling: quantization plateau at STD128Q") {
    PipelineModel m = model("STD128Q", BootstrapMode::GINX, OptTarget::Area);
    BudgetReport b20 = scale_to_budget(m, 20.0);
    BudgetReport b32 = scale_to_budget(m, 32.0);
    BudgetReport b64 = scale_to_budget(m, 64.0);
    CHECK(b20.feasible);
    CHECK(b32.feasible);
    CHECK(b20.pipelines == 1);
    CHECK(b32.pipelines == 1);
    // 12 extra GB do not fit a second 17.8 GB pipeline: exactly no change.
    CHECK(b20.inputs_per_ms == b32.inputs_per_ms);
    CHECK(b20.inputs_per_ms == doctest::Approx(23.3459).epsilon(1e-4));
    CHECK(m.params.name == "STD128Q");
    CHECK(b20.per_pipeline_gb == doctest::Approx(17.8327).epsilon(1e-4));
    // 64 GB fits three pipelines: throughput triples off the plateau.
    CHECK(b64.pipelines == 3);
    CHECK(b64.inputs_per_ms == doctest::Approx(3 * b20.inputs_per_ms).epsilon(1e-12));
}

TEST_CASE("budget scaling: infeasible below the key-material floor") {
    for (const char* name : {"STD192Q", "STD256Q"}) {
        CAPTURE(name);
        PipelineModel m = model(name, BootstrapMode::AP, OptTarget::Area);
        BudgetReport b = scale_to_budget(m, 2.0);
        CHECK(!b.feasible);
        CHECK(b.inputs_per_ms == 0.0);
        CHECK(b.error.find("below key-material floor") != std::string::npos);
        CHECK(b.floor_gb > 2.0);
    }
    CHECK(scale_to_budget(model("STD192Q", BootstrapMode::AP, OptTarget::Area), 2.0).floor_gb ==
          doctest::Approx(5.3600).epsilon(1e-4));
    CHECK(scale_to_budget(model("STD256Q", BootstrapMode::AP, OptTarget::Area), 2.0).floor_gb ==
          doctest::Approx(4.6866).epsilon(1e-4));
    // The non-quantum 128-bit build has a sub-GB floor and still runs.
    BudgetReport b = scale_to_budget(model("STD128", BootstrapMode::AP, OptTarget::Area), 2.0);
    CHECK(b.feasible);
    CHECK(b.inputs_per_ms == doctest::Approx(6.1910).epsilon(1e-4));
}

TEST_CASE("client encryption model") {
    PimConfig cfg;
    ClientReport c128q = estimate_client(load_param_set("STD128Q"), cfg);
    ClientReport c256q = estimate_client(load_param_set("STD256Q"), cfg);
    CHECK(c128q.cycles == doctest::Approx(4931.0).epsilon(1e-12));
    CHECK(c256q.cycles == doctest::Approx(8816.0).epsilon(1e-12));
    CHECK(c128q.latency_us == doctest::Approx(5.4241).epsilon(1e-4));
    CHECK(c256q.latency_us == doctest::Approx(9.6976).epsilon(1e-4));
    // The n-row dot product dominates, as the design narrative promises.
    CHECK(c128q.dot_fraction > 0.97);
    CHECK(c256q.dot_fraction > 0.97);
    CHECK(c128q.dot_fraction == doctest::Approx(0.977692).epsilon(1e-5));
    // Throughput at one block is the reciprocal of latency; scaling to k
    // blocks is exactly linear (each block encrypts independently).
    CHECK(c128q.enc_per_us_at_k1 == doctest::Approx(1.0 / c128q.latency_us).epsilon(1e-12));
    CHECK(512 * c256q.enc_per_us_at_k1 ==
          doctest::Approx(512.0 / c256q.latency_us).epsilon(1e-12));
    // Latency depends only on (n, q): STD128/STD192/STD128Q share n=512,
    // q=512 and so share the client block layout.
    CHECK(estimate_client(load_param_set("STD128"), cfg).cycles == c128q.cycles);
    CHECK(estimate_client(load_param_set("STD192"), cfg).cycles == c128q.cycles);
}

TEST_CASE("energy model calibrated at the STD128 AP build") {
    PipelineModel ref = model("STD128", BootstrapMode::AP, OptTarget::Throughput);
    EnergyReport e = estimate_energy(ref);
    CHECK(e.calibration_point);
    CHECK(e.mj_per_input == doctest::Approx(34.0).epsilon(1e-12));
    CHECK(e.work_cycles == doctest::Approx(2.9505822720e9).epsilon(1e-9));
    CHECK(e.pj_per_cycle == doctest::Approx(11.523149).epsilon(1e-5));

    // Same per-cycle energy everywhere; only modeled work differs.
    EnergyReport g = estimate_energy(model("STD128", BootstrapMode::GINX, OptTarget::Throughput));
    CHECK(!g.calibration_point);
    CHECK(g.pj_per_cycle == doctest::Approx(e.pj_per_cycle).epsilon(1e-12));
    // d_r = 2 makes AP and GINX unit counts equal at STD128, so the energy
    // matches the calibration value in GINX mode too.
    CHECK(g.mj_per_input == doctest::Approx(34.0).epsilon(1e-9));

    EnergyReport q = estimate_energy(model("STD128Q", BootstrapMode::AP, OptTarget::Throughput));
    CHECK(!q.calibration_point);
    CHECK(q.mj_per_input == doctest::Approx(61.7856).epsilon(1e-4));
    // Area mode reshapes the pipeline but not the work per input.
    EnergyReport a = estimate_energy(model("STD128", BootstrapMode::AP, OptTarget::Area));
    CHECK(a.mj_per_input == doctest::Approx(34.0).epsilon(1e-9));
}

TEST_CASE("circuit estimates: single, drained batch, and amortization") {
    PipelineModel q256 = model("STD256Q", BootstrapMode::AP, OptTarget::Throughput);
    CircuitEstimate ks8 = estimate_circuit(q256, CircuitMeta{7, 70}, 1);
    CHECK(ks8.single_ms == doctest::Approx(493.2529).epsilon(1e-4));
    CircuitEstimate ks64 = estimate_circuit(q256, CircuitMeta{13, 1122}, 1);
    CHECK(ks64.single_ms == doctest::Approx(916.0412).epsilon(1e-4));
    // Critical path: depth sequential gate latencies.
    LatencyReport gate = estimate_latency(q256);
    CHECK(ks8.single_ms == doctest::Approx(7 * gate.ms).epsilon(1e-9));

    PipelineModel q128 = model("STD128Q", BootstrapMode::AP, OptTarget::Throughput);
    CircuitEstimate one = estimate_circuit(q128, CircuitMeta{7, 70}, 1);
    CircuitEstimate batch = estimate_circuit(q128, CircuitMeta{7, 70}, 1024);
    CHECK(one.single_ms == doctest::Approx(838.0472).epsilon(1e-4));
    CHECK(batch.batch_ms == doctest::Approx(1515.3306).epsilon(1e-4));
    // 1024 instances cost less than twice one instance: the pipeline absorbs
    // 71680 bootstraps at one per stage period.
    CHECK(batch.batch_ms / one.single_ms < 2.0);
    CHECK(batch.batch_ms / one.single_ms == doctest::Approx(1.8082).epsilon(1e-4));
    CHECK(batch.per_instance_ms == doctest::Approx(batch.batch_ms / 1024).epsilon(1e-12));
    CHECK(batch.amortization ==
          doctest::Approx(batch.batch_ms / one.single_ms).epsilon(1e-12));
    // One instance never beats its own critical path; the drain gate is the
    // only overhead.
    CHECK(one.batch_ms ==
          doctest::Approx(one.single_ms + estimate_latency(q128).ms).epsilon(1e-9));
    CHECK_THROWS_AS((void)estimate_circuit(q128, CircuitMeta{7, 70}, 0), std::invalid_argument);
}

TEST_CASE("workload estimates") {
    const auto& table = workload_table();
    CHECK(table.size() == 4);
    CHECK(table.at("mnist") == doctest::Approx(8.56e5).epsilon(1e-12));
    CHECK(table.at("cifar10") == doctest::Approx(2.11e8).epsilon(1e-12));
    CHECK(table.at("imagenet") == doctest::Approx(1.1e9).epsilon(1e-12));
    CHECK(table.at("ptb") == doctest::Approx(2.44e7).epsilon(1e-12));

    PipelineModel m = model("STD128", BootstrapMode::GINX, OptTarget::Throughput);
    WorkloadReport r = estimate_workload(m, "mnist");
    CHECK(r.seconds == doctest::Approx(4.9067).epsilon(1e-4));
    CHECK(r.seconds ==
          doctest::Approx(r.gate_ops / (r.inputs_per_ms * 1000.0)).epsilon(1e-12));
    CHECK_THROWS_AS((void)estimate_workload(m, "doom"), std::invalid_argument);
}

TEST_CASE("stage table accounts for every per-unit block") {
    PipelineModel m = model("STD128", BootstrapMode::GINX, OptTarget::Throughput);
    CHECK(m.stages.size() == 8);
    uint64_t per_unit = 0;
    bool saw_tree = false;
    for (const StageInfo& s : m.stages) {
        CHECK(!s.label.empty());
        if (s.label == "keyswitch_tree") {
            saw_tree = true;
            CHECK(s.global);
            CHECK(s.blocks == m.tree_blocks);
        }
        if (!s.global) per_unit += s.blocks;
    }
    CHECK(saw_tree);
    // Stage rows carry the single-copy block counts; throughput mode triples
    // the compute stages (three pipelined substages) but not the key slice.
    CHECK(per_unit == m.unit_compute_blocks + m.unit_key_blocks);
    CHECK(m.unit_blocks == 3 * m.unit_compute_blocks + m.unit_key_blocks);
    PipelineModel a = model("STD128", BootstrapMode::GINX, OptTarget::Area);
    CHECK(a.unit_blocks == a.unit_compute_blocks + a.unit_key_blocks);
    // Throughput-mode latency report: no area stretch.
    CHECK(estimate_latency(m).mode_factor == doctest::Approx(1.0).epsilon(1e-12));
}
