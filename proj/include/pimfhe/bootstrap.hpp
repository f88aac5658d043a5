#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pimfhe/lwe.hpp"
#include "pimfhe/params.hpp"
#include "pimfhe/ring.hpp"
#include "pimfhe/rng.hpp"
#include "pimfhe/storage.hpp"

namespace pimfhe {

enum class BootstrapMode { AP, GINX };

// Ring secret z with small signed coefficients, kept alongside its signed view
// because key generation needs exact dot products mod Q.
struct RlweSecret {
    ParamSet params;
    SecretDist dist = SecretDist::Ternary;
    std::vector<int8_t> z;
};

// 2*d_g rows of (a, b) ring-element pairs, all NTT domain, Montgomery form.
// Rows 0..d_g-1 add B_g^k * mu to the a component; rows d_g..2d_g-1 add it to
// b. The external product pairs row k with the k-th digit of the matching
// accumulator component.
struct RgswCiphertext {
    uint32_t N = 0;
    uint64_t Q = 0;
    uint32_t d_g = 0;
    FlatWords words; // [row][component][slot], row-major

    [[nodiscard]] size_t rows() const { return 2 * size_t{d_g}; }
    [[nodiscard]] uint64_t at(size_t row, size_t comp, size_t slot) const {
        return words.get((row * 2 + comp) * N + slot);
    }
};

// Monomial plaintext for RGSW encryption: c * X^exp with c in {0, 1} (zero
// encryptions are how GINX represents an absent key bit) or X^exp negated.
struct MonomialPlain {
    bool zero = false;
    bool negate = false;
    uint32_t exp = 0; // in [0, 2N)
};

// Blind-rotation key, AP layout: entry (i, j, v) encrypts
// X^(v * B_r^j * delta * s_i), flattened [(i*d_r + j)*B_r + v].
struct RefreshKeyAP {
    ParamSet params;
    std::vector<RgswCiphertext> ek;
};

// Blind-rotation key, GINX layout: n rows by two columns. Binary secrets put
// Enc(s_i) in column 0 and Enc(0) in column 1; ternary secrets split into the
// positive and negative parts s = s+ - s-.
struct RefreshKeyGINX {
    ParamSet params;
    SecretDist dist = SecretDist::Binary;
    std::vector<RgswCiphertext> ek; // [i*2 + column]
};

// RLWE accumulator (a, b), coefficient domain between external products.
struct Accumulator {
    RingElement a;
    RingElement b;
};

// Half-open cyclic window [lb, ub) in Z_q. Wrapped means lb > ub.
struct Window {
    uint32_t lb = 0;
    uint32_t ub = 0;

    [[nodiscard]] bool contains(uint64_t x, uint32_t q) const {
        uint64_t v = x % q;
        return lb <= ub ? (v >= lb && v < ub) : (v >= lb || v < ub);
    }
};

RlweSecret rlwe_keygen(const ParamSet& params, SecretDist dist, Rng& rng);

// RGSW encryption of a monomial under z. Rows are built in the coefficient
// domain, transformed, then stored in Montgomery form.
RgswCiphertext rgsw_encrypt(const TwiddleTable& tw, const RlweSecret& z, const MonomialPlain& mu,
                            double stddev, Rng& rng);

// Signed digits of a centered lift: digits lie in [-B_g/2, B_g/2), except the
// most significant, which absorbs the remainder and may reach +B_g/2 when
// B_g^d_g barely exceeds Q. All are stored mod Q, and
// sum(digit_k * B_g^k) == value (mod Q) holds exactly for every residue.
std::vector<RingElement> signed_digit_decompose(const ParamSet& params, const RingElement& a);

// ACC' = sum over digits of dec_k(ACC) * row_k: dims (a digits, then b digits).
Accumulator external_product(const TwiddleTable& tw, const ParamSet& params,
                             const Accumulator& acc, const RgswCiphertext& rgsw);

// Builds the test-polynomial accumulator for a mod-q ciphertext: coefficient k
// of T holds the window indicator value the rotation will expose, and the
// initial rotation is by delta * b.
Accumulator acc_initialize(const ParamSet& params, const LweCiphertext& ct, const Window& window);

// Per-index rotation schedule derived from the masks.
struct RotationSchedule {
    std::vector<uint32_t> ap_digits; // [i*d_r + j], digit of (-a_i mod q) base B_r
    std::vector<uint32_t> ginx_exp;  // [i*2 + c], exponent delta*(-a_i) for col sign
};
RotationSchedule prepare_rotations(const ParamSet& params, const LweCiphertext& ct,
                                   BootstrapMode mode);

// n*d_r sequential external products; v == 0 entries are processed like any other.
void ap_accumulate(const TwiddleTable& tw, const RefreshKeyAP& rk, const RotationSchedule& rot,
                   Accumulator& acc);
// 2n steps of ACC += (X^m - 1) * (ACC ⋄ EK[i][c]).
void ginx_accumulate(const TwiddleTable& tw, const RefreshKeyGINX& rk,
                     const RotationSchedule& rot, Accumulator& acc);

// Constant-coefficient extraction: dimension-N mod-Q LWE ciphertext whose
// phase is acc_b[0] - <acc_a-derived mask, z> + Q/8.
LweCiphertext extract(const ParamSet& params, const Accumulator& acc);

struct BootstrapKeys {
    std::optional<RefreshKeyAP> ap;
    std::optional<RefreshKeyGINX> ginx;
    KeySwitchKey ksk;
};

// Generates the refresh key for `mode` plus the key-switch key, both under z.
BootstrapKeys refresh_keygen(const ParamSet& params, BootstrapMode mode, const RlweSecret& z,
                             const LweSecretKey& sk, Rng& rng);

// acc_initialize -> accumulate -> extract. Output is dimension N, modulus Q;
// its phase sits near +Q/4 when phase(ct) falls in the window and near 0
// otherwise (the +Q/8 shift folds the +-Q/8 test values to {Q/4, 0}).
LweCiphertext bootstrap(const TwiddleTable& tw, const BootstrapKeys& keys, BootstrapMode mode,
                        const LweCiphertext& ct, const Window& window);

// External-product counter for hardware-model cross-checks.
struct BootstrapInstrumentation {
    uint64_t external_products = 0;
    uint64_t bootstraps = 0;
};
BootstrapInstrumentation& bootstrap_instrumentation();
void reset_bootstrap_instrumentation();

} // namespace pimfhe
