#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pimfhe {

enum class SecretDist { Binary, Ternary };

// One named parameter set. Invariants (checked at registry construction):
//   q and N are powers of two, q <= 2N, B_g is a power of two,
//   Q is prime, Q == 1 (mod 2N), 2^(log2_Q-1) < Q < 2^log2_Q,
//   digit counts are minimal: B_s^d_s >= Q, B_g^d_g >= Q, B_r^d_r >= q.
struct ParamSet {
    std::string name;
    uint32_t security_bits = 0; // 0 marks the toy set
    bool quantum_safe = false;

    uint32_t n = 0;      // LWE dimension
    uint32_t q = 0;      // LWE modulus
    uint32_t N = 0;      // ring degree
    uint32_t log2_Q = 0; // ring modulus bit size
    uint64_t Q = 0;      // NTT-friendly prime
    uint32_t B_s = 0;    // key-switch digit base
    uint32_t B_g = 0;    // gadget base
    uint32_t B_r = 0;    // blind-rotation digit base
    uint32_t d_s = 0;
    uint32_t d_g = 0;
    uint32_t d_r = 0;

    uint32_t t = 2;             // message modulus for encode()
    double error_stddev = 3.19; // rounded-Gaussian width for fresh noise
    SecretDist secret_dist = SecretDist::Binary;

    // Scale from Z_q rotations to Z_2N ring exponents.
    [[nodiscard]] uint32_t delta() const { return 2 * N / q; }
    // Q/8 rounded to nearest; the test polynomial amplitude.
    [[nodiscard]] uint64_t q8() const { return (Q + 4) / 8; }
};

struct DigitCounts {
    uint32_t d_s;
    uint32_t d_g;
    uint32_t d_r;
};

// Names in registry order: STD128, STD192, STD256, STD128Q, STD192Q, STD256Q, TOY.
std::vector<std::string> param_set_names();

// Throws std::invalid_argument for an unknown name.
const ParamSet& load_param_set(const std::string& name);

// Largest prime Q with 2^(log2_Q-1) < Q < 2^log2_Q and Q == 1 (mod 2N).
// Throws std::invalid_argument if the range contains none.
uint64_t select_modulus(uint32_t log2_Q, uint32_t N);

// Minimal digit counts for the three decompositions.
DigitCounts derive_digit_counts(uint64_t Q, uint32_t q, uint32_t B_s, uint32_t B_g, uint32_t B_r);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(uint64_t x);

} // namespace pimfhe
