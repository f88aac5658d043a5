#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pimfhe/circuit.hpp"
#include "pimfhe/gates.hpp"
#include "pimfhe/report.hpp"
#include "pimfhe/serialize.hpp"

namespace {

using namespace pimfhe;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitCapacity = 4;

BootstrapMode parse_mode(const std::string& s) {
    if (s == "ap") return BootstrapMode::AP;
    if (s == "ginx") return BootstrapMode::GINX;
    throw CLI::ValidationError("--mode", "must be ap or ginx");
}

OptTarget parse_opt(const std::string& s) {
    if (s == "area") return OptTarget::Area;
    if (s == "throughput" || s == "tput") return OptTarget::Throughput;
    throw CLI::ValidationError("--optimize", "must be throughput or area");
}

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw SerializeError("cannot open " + path);
    return f;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw SerializeError("cannot write " + path);
    return f;
}

BootstrapKeys load_keys(const std::string& dir, BootstrapMode mode) {
    BootstrapKeys keys;
    if (mode == BootstrapMode::AP) {
        auto f = open_in(dir + "/rk_ap.key");
        keys.ap = load_refresh_ap(f);
    } else {
        auto f = open_in(dir + "/rk_ginx.key");
        keys.ginx = load_refresh_ginx(f);
    }
    auto f = open_in(dir + "/ksk.key");
    keys.ksk = load_keyswitch_key(f);
    return keys;
}

uint64_t file_size(const std::string& path) {
    std::error_code ec;
    auto sz = std::filesystem::file_size(path, ec);
    return ec ? 0 : static_cast<uint64_t>(sz);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"boolean-gate FHE toolkit with an in-memory hardware estimator"};
    app.require_subcommand(1);

    std::string set_name = "STD128";
    std::string mode_str = "ginx";
    std::string opt_str = "throughput";
    uint64_t seed = 1;
    bool as_json = false;

    auto add_set = [&](CLI::App* cmd) {
        cmd->add_option("--set", set_name, "parameter set name")->envname("PIMFHE_PARAMS");
    };

    // params
    auto* c_params = app.add_subcommand("params", "show a parameter set");
    add_set(c_params);
    c_params->add_flag("--json", as_json, "JSON output");

    // keygen
    auto* c_keygen = app.add_subcommand("keygen", "generate secret, refresh, and switch keys");
    std::string out_dir = ".";
    add_set(c_keygen);
    c_keygen->add_option("--mode", mode_str, "bootstrap mode: ap or ginx");
    c_keygen->add_option("--seed", seed, "deterministic seed");
    c_keygen->add_option("--out-dir", out_dir, "output directory");

    // encrypt
    auto* c_encrypt = app.add_subcommand("encrypt", "encrypt one bit");
    std::string key_path, ct_path;
    uint32_t bit = 0;
    c_encrypt->add_option("--key", key_path, "secret key file")->required();
    c_encrypt->add_option("--bit", bit, "plaintext bit")->required()->check(CLI::Range(0u, 1u));
    c_encrypt->add_option("--out", ct_path, "ciphertext file")->required();
    c_encrypt->add_option("--seed", seed, "deterministic seed");

    // decrypt
    auto* c_decrypt = app.add_subcommand("decrypt", "decrypt one bit");
    std::string ct_in;
    c_decrypt->add_option("--key", key_path, "secret key file")->required();
    c_decrypt->add_option("--in", ct_in, "ciphertext file")->required();

    // gate
    auto* c_gate = app.add_subcommand("gate", "evaluate one gate on two ciphertexts");
    std::string gate_op = "AND", key_dir = ".", in1, in2, gout;
    c_gate->add_option("--op", gate_op, "gate name");
    c_gate->add_option("--key-dir", key_dir, "directory with keygen output");
    c_gate->add_option("--mode", mode_str, "bootstrap mode: ap or ginx");
    c_gate->add_option("--in1", in1)->required();
    c_gate->add_option("--in2", in2);
    c_gate->add_option("--out", gout, "output ciphertext file")->required();

    // circuit
    auto* c_circuit = app.add_subcommand("circuit", "evaluate a netlist");
    std::string netlist_path, assigns;
    c_circuit->add_option("--netlist", netlist_path, "netlist file")->required();
    c_circuit->add_option("--key-dir", key_dir, "directory with keygen output");
    c_circuit->add_option("--mode", mode_str, "bootstrap mode: ap or ginx");
    c_circuit->add_option("--inputs", assigns, "comma list wire=bit")->required();
    c_circuit->add_option("--seed", seed, "deterministic seed");

    // adder / multiplier netlist emitters
    auto* c_adder = app.add_subcommand("adder", "emit a Kogge-Stone adder netlist");
    uint32_t width = 8;
    c_adder->add_option("--width", width, "operand bits");
    auto* c_mult = app.add_subcommand("multiplier", "emit a multiplier netlist");
    c_mult->add_option("--width", width, "operand bits");

    // simulate
    auto* c_sim = app.add_subcommand("simulate", "estimate the hardware pipeline");
    bool explain = false;
    add_set(c_sim);
    c_sim->add_option("--mode", mode_str, "bootstrap mode: ap or ginx");
    c_sim->add_option("--optimize", opt_str, "throughput or area");
    c_sim->add_flag("--json", as_json, "JSON output");
    c_sim->add_flag("--explain", explain, "per-stage breakdown");

    // budget
    auto* c_budget = app.add_subcommand("budget", "fit pipelines into a memory budget");
    double budget_gb = 0;
    add_set(c_budget);
    c_budget->add_option("--gb", budget_gb, "memory budget in GB")->required();
    c_budget->add_option("--mode", mode_str, "bootstrap mode: ap or ginx");
    c_budget->add_option("--optimize", opt_str, "throughput or area");
    c_budget->add_flag("--json", as_json, "JSON output");

    // client
    auto* c_client = app.add_subcommand("client", "estimate client-side encryption");
    add_set(c_client);
    c_client->add_flag("--json", as_json, "JSON output");

    // workload
    auto* c_work = app.add_subcommand("workload", "estimate a named workload");
    std::string workload_name = "mnist";
    add_set(c_work);
    c_work->add_option("--name", workload_name, "mnist, cifar10, imagenet, or ptb");
    c_work->add_option("--mode", mode_str, "bootstrap mode: ap or ginx");
    c_work->add_option("--optimize", opt_str, "throughput or area");
    c_work->add_flag("--json", as_json, "JSON output");

    // circuit-estimate
    auto* c_cest = app.add_subcommand("circuit-estimate", "estimate a circuit on the pipeline");
    uint32_t instances = 1, adder_w = 0, mult_w = 0;
    std::string cest_netlist;
    add_set(c_cest);
    c_cest->add_option("--adder", adder_w, "Kogge-Stone adder width");
    c_cest->add_option("--multiplier", mult_w, "multiplier width");
    c_cest->add_option("--netlist", cest_netlist, "netlist file");
    c_cest->add_option("--instances", instances, "batched instance count");
    c_cest->add_option("--mode", mode_str, "bootstrap mode: ap or ginx");
    c_cest->add_option("--optimize", opt_str, "throughput or area");
    c_cest->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*c_params) {
            const ParamSet& p = load_param_set(set_name);
            if (as_json) {
                nlohmann::json j{{"name", p.name},   {"security_bits", p.security_bits},
                                 {"quantum_safe", p.quantum_safe},
                                 {"n", p.n},         {"q", p.q},
                                 {"N", p.N},         {"log2_Q", p.log2_Q},
                                 {"Q", p.Q},         {"B_s", p.B_s},
                                 {"B_g", p.B_g},     {"B_r", p.B_r},
                                 {"d_s", p.d_s},     {"d_g", p.d_g},
                                 {"d_r", p.d_r},     {"t", p.t},
                                 {"error_stddev", p.error_stddev}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << p.name << ": n=" << p.n << " q=" << p.q << " N=" << p.N
                          << " log2Q=" << p.log2_Q << " Q=" << p.Q << " B_s=" << p.B_s
                          << " B_g=" << p.B_g << " B_r=" << p.B_r << " d_s=" << p.d_s
                          << " d_g=" << p.d_g << " d_r=" << p.d_r << "\n";
            }
            return kExitOk;
        }

        if (*c_keygen) {
            const ParamSet& p = load_param_set(set_name);
            BootstrapMode mode = parse_mode(mode_str);
            Rng rng(seed);
            // Refresh keys default to the distribution that fits the mode.
            SecretDist dist = mode == BootstrapMode::AP ? SecretDist::Ternary : SecretDist::Binary;
            LweSecretKey sk = lwe_keygen(p, dist, rng);
            RlweSecret z = rlwe_keygen(p, dist, rng);
            BootstrapKeys keys = refresh_keygen(p, mode, z, sk, rng);

            std::filesystem::create_directories(out_dir);
            {
                auto f = open_out(out_dir + "/sk.key");
                save_secret_key(f, sk);
            }
            {
                auto f = open_out(out_dir + "/z.key");
                save_rlwe_secret(f, z);
            }
            std::string rk_path;
            if (mode == BootstrapMode::AP) {
                rk_path = out_dir + "/rk_ap.key";
                auto f = open_out(rk_path);
                save_refresh_ap(f, *keys.ap);
            } else {
                rk_path = out_dir + "/rk_ginx.key";
                auto f = open_out(rk_path);
                save_refresh_ginx(f, *keys.ginx);
            }
            {
                auto f = open_out(out_dir + "/ksk.key");
                save_keyswitch_key(f, keys.ksk);
            }
            KeySizeReport ks = estimate_key_sizes(p, mode);
            std::cout << "wrote " << out_dir << "/{sk,z,"
                      << (mode == BootstrapMode::AP ? "rk_ap" : "rk_ginx") << ",ksk}.key\n";
            std::cout << "refresh key: " << file_size(rk_path) / 1e6 << " MB file, "
                      << ks.ek_b_model_bytes / 1e6 << " MB packed model\n";
            std::cout << "switch key:  " << file_size(out_dir + "/ksk.key") / 1e6 << " MB file, "
                      << ks.ek_s_bytes / 1e6 << " MB packed model\n";
            return kExitOk;
        }

        if (*c_encrypt) {
            auto f = open_in(key_path);
            LweSecretKey sk = load_secret_key(f);
            Rng rng(seed);
            LweCiphertext ct = encrypt_bit(sk, bit, rng);
            auto o = open_out(ct_path);
            save_lwe_ct(o, sk.params, ct);
            return kExitOk;
        }

        if (*c_decrypt) {
            auto f = open_in(key_path);
            LweSecretKey sk = load_secret_key(f);
            auto c = open_in(ct_in);
            LweCiphertext ct = load_lwe_ct(c);
            std::cout << decrypt_bit(ct, sk) << "\n";
            return kExitOk;
        }

        if (*c_gate) {
            const GateSpec& spec = gate_spec(gate_op);
            BootstrapMode mode = parse_mode(mode_str);
            BootstrapKeys keys = load_keys(key_dir, mode);
            const ParamSet& p =
                mode == BootstrapMode::AP ? keys.ap->params : keys.ginx->params;
            auto f1 = open_in(in1);
            LweCiphertext a = load_lwe_ct(f1);
            LweCiphertext b;
            if (!spec.unary) {
                if (in2.empty()) throw CLI::ValidationError("--in2", gate_op + " needs two inputs");
                auto f2 = open_in(in2);
                b = load_lwe_ct(f2);
            }
            TwiddleTable tw(p.N, p.Q);
            EvalContext ctx{&p, &tw, &keys, mode};
            LweCiphertext out = spec.unary ? eval_not(p, a) : eval_gate(ctx, spec, a, b);
            auto o = open_out(gout);
            save_lwe_ct(o, p, out);
            return kExitOk;
        }

        if (*c_circuit) {
            BootstrapMode mode = parse_mode(mode_str);
            BootstrapKeys keys = load_keys(key_dir, mode);
            const ParamSet& p =
                mode == BootstrapMode::AP ? keys.ap->params : keys.ginx->params;
            std::ifstream nf(netlist_path);
            if (!nf) throw SerializeError("cannot open " + netlist_path);
            std::stringstream buf;
            buf << nf.rdbuf();
            Circuit circ = parse_netlist(buf.str());

            auto kf = open_in(key_dir + "/sk.key");
            LweSecretKey sk = load_secret_key(kf);
            Rng rng(seed);
            std::map<std::string, LweCiphertext> values;
            std::stringstream as(assigns);
            std::string tok;
            while (std::getline(as, tok, ',')) {
                size_t eq = tok.find('=');
                if (eq == std::string::npos)
                    throw CLI::ValidationError("--inputs", "expected wire=bit");
                values[tok.substr(0, eq)] =
                    encrypt_bit(sk, static_cast<uint32_t>(std::stoul(tok.substr(eq + 1))), rng);
            }
            TwiddleTable tw(p.N, p.Q);
            EvalContext ctx{&p, &tw, &keys, mode};
            auto outs = eval_circuit(ctx, circ, values);
            for (const auto& w : circ.outputs)
                std::cout << w << " = " << decrypt_bit(outs.at(w), sk) << "\n";
            return kExitOk;
        }

        if (*c_adder) {
            std::cout << to_netlist(build_kogge_stone_adder(width));
            return kExitOk;
        }
        if (*c_mult) {
            std::cout << to_netlist(build_multiplier(width));
            return kExitOk;
        }

        if (*c_sim || *c_budget || *c_work || *c_cest) {
            const ParamSet& p = load_param_set(set_name);
            PimConfig cfg;
            cfg.mode = parse_mode(mode_str);
            cfg.opt = parse_opt(opt_str);
            PipelineModel m = build_server_pipeline(p, cfg);

            if (*c_sim) {
                if (explain)
                    std::cout << explain_text(m);
                else if (as_json)
                    std::cout << report_json(m) << "\n";
                else
                    std::cout << report_text(m);
                return kExitOk;
            }
            if (*c_budget) {
                BudgetReport r = scale_to_budget(m, budget_gb);
                if (as_json)
                    std::cout << budget_json(m, r) << "\n";
                else if (r.feasible)
                    std::cout << r.pipelines << " pipeline(s), " << r.inputs_per_ms
                              << " inputs/ms (floor " << r.floor_gb << " GB, pipeline "
                              << r.per_pipeline_gb << " GB)\n";
                if (!r.feasible) {
                    if (!as_json) std::cerr << "error: " << r.error << "\n";
                    return kExitCapacity;
                }
                return kExitOk;
            }
            if (*c_work) {
                WorkloadReport w = estimate_workload(m, workload_name);
                if (as_json)
                    std::cout << workload_json(m, w) << "\n";
                else
                    std::cout << w.name << ": " << w.gate_ops << " gate ops, " << w.seconds
                              << " s at " << w.inputs_per_ms << " inputs/ms\n";
                return kExitOk;
            }
            // circuit-estimate
            CircuitMeta meta;
            if ((adder_w != 0) + (mult_w != 0) + (!cest_netlist.empty()) != 1)
                throw CLI::ValidationError("circuit-estimate",
                                           "give exactly one of --adder, --multiplier, --netlist");
            Circuit circ;
            if (adder_w)
                circ = build_kogge_stone_adder(adder_w);
            else if (mult_w)
                circ = build_multiplier(mult_w);
            else {
                std::ifstream nf(cest_netlist);
                if (!nf) throw SerializeError("cannot open " + cest_netlist);
                std::stringstream buf;
                buf << nf.rdbuf();
                circ = parse_netlist(buf.str());
            }
            meta.depth = circ.depth;
            meta.bootstrap_count = circ.bootstrap_count;
            CircuitEstimate e = estimate_circuit(m, meta, instances);
            if (as_json)
                std::cout << circuit_json(m, e) << "\n";
            else
                std::cout << "depth " << e.depth << ", " << e.bootstrap_count << " bootstraps: "
                          << e.single_ms << " ms single, " << e.batch_ms << " ms for "
                          << e.instances << " instance(s), amortization " << e.amortization
                          << "\n";
            return kExitOk;
        }

        if (*c_client) {
            const ParamSet& p = load_param_set(set_name);
            PimConfig cfg;
            ClientReport r = estimate_client(p, cfg);
            if (as_json)
                std::cout << client_json(p, r) << "\n";
            else
                std::cout << p.name << " client: " << r.latency_us << " us/encryption, dot share "
                          << r.dot_fraction * 100 << "%\n";
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SerializeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
