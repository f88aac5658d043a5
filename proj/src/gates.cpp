#include "pimfhe/gates.hpp"

#include <stdexcept>

namespace pimfhe {

namespace {

// Window endpoints in eighths of q. Every bootstrapped gate keeps width 4/8:
// the test polynomial is only consistent for antisymmetric windows.
// XOR/XNOR double the combination so one bootstrap separates parity.
const std::vector<GateSpec> kGates = {
    {"AND", 1, 1, 0, 1, {}, 3, 7, false, false},
    {"NAND", 1, 1, 0, 1, {}, 7, 3, false, false},
    {"OR", 1, 1, 0, 1, {}, 1, 5, false, false},
    {"NOR", 1, 1, 0, 1, {}, 5, 1, false, false},
    {"XOR", 2, -2, 0, 1, {}, 3, 7, false, false},
    {"XNOR", 2, -2, 0, 1, {}, 7, 3, false, false},
    {"NOT", -1, 0, 1, 4, {}, 0, 0, true, true},
};

uint64_t apply_coeff(int32_t c, uint64_t x, uint64_t q) {
    uint64_t cc = static_cast<uint64_t>((static_cast<int64_t>(c) % static_cast<int64_t>(q) +
                                         static_cast<int64_t>(q)) %
                                        static_cast<int64_t>(q));
    return static_cast<uint64_t>(static_cast<u128>(cc) * (x % q) % q);
}

} // namespace

const std::vector<GateSpec>& gate_table() { return kGates; }

const GateSpec& gate_spec(const std::string& name) {
    for (const auto& g : kGates)
        if (g.name == name) return g;
    throw std::invalid_argument("unknown gate: " + name);
}

LweCiphertext encrypt_bit(const LweSecretKey& sk, uint32_t bit, Rng& rng) {
    const ParamSet& p = sk.params;
    return lwe_encrypt(sk, encode(bit, p.t, p.q), p.q, p.error_stddev, rng);
}

uint32_t decrypt_bit(const LweCiphertext& ct, const LweSecretKey& sk) {
    // Quadrants 1 and 2 are nearer q/4 than 0 on the circle.
    uint64_t v = lwe_decrypt(ct, sk);
    return (v == 1 || v == 2) ? 1 : 0;
}

LweCiphertext eval_not(const ParamSet& params, const LweCiphertext& ct) {
    if (ct.modulus != params.q) throw std::invalid_argument("NOT expects a mod-q ciphertext");
    const uint64_t q = params.q;
    LweCiphertext out;
    out.modulus = q;
    out.a.resize(ct.dim());
    for (size_t i = 0; i < ct.dim(); ++i) out.a[i] = ct.a[i] == 0 ? 0 : q - ct.a[i];
    // phase' = q/4 - phase: swaps the two bit encodings, noise unchanged.
    out.b = (q / 4 + q - ct.b % q) % q;
    return out;
}

LweCiphertext eval_gate(const EvalContext& ctx, const GateSpec& gate, const LweCiphertext& ct1,
                        const LweCiphertext& ct2) {
    const ParamSet& p = *ctx.params;
    const uint64_t q = p.q;
    if (gate.linear_only) return eval_not(p, ct1);
    if (ct1.modulus != q || ct2.modulus != q)
        throw std::invalid_argument("gate inputs must be mod q");
    if (ct1.dim() != p.n || ct2.dim() != p.n)
        throw std::invalid_argument("gate inputs must have dimension n");

    LweCiphertext combined;
    combined.modulus = q;
    combined.a.resize(p.n);
    for (uint32_t i = 0; i < p.n; ++i) {
        uint64_t v = apply_coeff(gate.c1, ct1.a[i], q) + apply_coeff(gate.c2, ct2.a[i], q);
        combined.a[i] = v % q;
    }
    uint64_t c0 = (uint64_t{q} * gate.c0_num) / gate.c0_den % q;
    combined.b = (apply_coeff(gate.c1, ct1.b, q) + apply_coeff(gate.c2, ct2.b, q) + c0) % q;

    Window w{static_cast<uint32_t>(gate.lb8 * (p.q / 8) % q),
             static_cast<uint32_t>(gate.ub8 * (p.q / 8) % q)};
    LweCiphertext refreshed = bootstrap(*ctx.tw, *ctx.keys, ctx.mode, combined, w);
    LweCiphertext switched = key_switch(ctx.keys->ksk, refreshed);
    return modulus_switch(switched, q);
}

} // namespace pimfhe
