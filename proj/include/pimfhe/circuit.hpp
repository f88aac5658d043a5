#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pimfhe/gates.hpp"

namespace pimfhe {

// Gate-level netlist. Text form, one statement per line:
//   INPUT a
//   OUTPUT s0
//   w3 = AND(a, b)
//   w4 = NOT(w3)
// Wires must be defined before use and defined exactly once; cycles are
// impossible by construction of that rule.
struct CircuitGate {
    std::string op;
    std::string out;
    std::string in1;
    std::string in2; // empty for NOT
};

struct Circuit {
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::vector<CircuitGate> gates;

    // Derived structure, filled by analyze(): level of a gate = 1 + max level
    // of its fanin (inputs are level 0). NOT is free and keeps its fanin level.
    uint32_t depth = 0;               // bootstrap depth (NOT excluded)
    uint64_t bootstrap_count = 0;     // gates that bootstrap
    std::vector<uint64_t> level_width; // bootstrapped gates per level
};

Circuit parse_netlist(const std::string& text);
void analyze(Circuit& c);
std::string to_netlist(const Circuit& c);

// w-bit Kogge-Stone adder: inputs a0..a{w-1}, b0..b{w-1}, outputs s0..s{w-1}, cout.
// Bootstrap depth 1 + 2*ceil(log2 w): the generate/propagate level, two levels
// per prefix stage on the critical path, with the final sum XOR absorbed.
Circuit build_kogge_stone_adder(uint32_t width);
// w-bit multiplier: AND partial products + a tree of Kogge-Stone adders,
// outputs p0..p{2w-1}.
Circuit build_multiplier(uint32_t width);

// Evaluates the circuit in ready-waves; `values` maps input wire -> ciphertext.
// `parallelism` is the declared evaluation width: gates within a wave are
// mutually independent, so any width yields identical logical results (the
// width only changes the order the wave is walked in).
std::map<std::string, LweCiphertext> eval_circuit(const EvalContext& ctx, const Circuit& c,
                                                  const std::map<std::string, LweCiphertext>& values,
                                                  uint32_t parallelism = 1);

// Plaintext reference evaluation for verification.
std::map<std::string, uint32_t> eval_circuit_plain(const Circuit& c,
                                                   const std::map<std::string, uint32_t>& values);

} // namespace pimfhe
