#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pimfhe/bootstrap.hpp"
#include "pimfhe/lwe.hpp"

namespace pimfhe {

// Homomorphic gate recipe: combine inputs linearly as c1*ct1 + c2*ct2 + c0,
// then (unless linear_only) bootstrap against `window`, key-switch, and
// modulus-switch back to (n, q). XOR/XNOR use doubled coefficients so a single
// bootstrap separates the even/odd sum; they still count as one bootstrap.
struct GateSpec {
    std::string name;
    int32_t c1 = 1;
    int32_t c2 = 1;
    uint32_t c0_num = 0, c0_den = 1; // constant term as a fraction of q
    Window window;                   // endpoints as eighths of q, filled at eval
    uint32_t lb8 = 0, ub8 = 0;       // window endpoints in units of q/8
    bool linear_only = false;        // NOT: negate and add q/4, no bootstrap
    bool unary = false;
};

const std::vector<GateSpec>& gate_table();
const GateSpec& gate_spec(const std::string& name);

struct EvalContext {
    const ParamSet* params = nullptr;
    const TwiddleTable* tw = nullptr;
    const BootstrapKeys* keys = nullptr;
    BootstrapMode mode = BootstrapMode::GINX;
};

// Encode/encrypt/decrypt helpers for single bits at the default t = 2.
LweCiphertext encrypt_bit(const LweSecretKey& sk, uint32_t bit, Rng& rng);
uint32_t decrypt_bit(const LweCiphertext& ct, const LweSecretKey& sk);

LweCiphertext eval_gate(const EvalContext& ctx, const GateSpec& gate, const LweCiphertext& ct1,
                        const LweCiphertext& ct2);
LweCiphertext eval_not(const ParamSet& params, const LweCiphertext& ct);

} // namespace pimfhe
