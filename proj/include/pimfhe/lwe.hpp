#pragma once

#include <cstdint>
#include <vector>

#include "pimfhe/params.hpp"
#include "pimfhe/rng.hpp"
#include "pimfhe/storage.hpp"

namespace pimfhe {

// Secret key entries are binary {0,1} or ternary {-1,0,1}; stored signed, read
// through entry_mod() as residues of whatever modulus the caller works in.
struct LweSecretKey {
    ParamSet params;
    SecretDist dist = SecretDist::Binary;
    std::vector<int8_t> s;

    [[nodiscard]] uint64_t entry_mod(size_t i, uint64_t modulus) const {
        int8_t v = s[i];
        return v < 0 ? modulus - 1 : static_cast<uint64_t>(v);
    }
};

// (a, b) with b = <a, s> + e + m' (mod modulus). dim == a.size().
struct LweCiphertext {
    std::vector<uint64_t> a;
    uint64_t b = 0;
    uint64_t modulus = 0;

    [[nodiscard]] size_t dim() const { return a.size(); }
};

// Switches dimension-N mod-Q ciphertexts under a ring secret z down to the
// base secret s. entries[(i*d_s + j)*B_s + v] is an n-dimensional mod-Q
// encryption of v * z_i * B_s^j. v = 0 rows are genuine encryptions of zero
// and the switching loop subtracts every row it selects, keeping it uniform.
struct KeySwitchKey {
    ParamSet params;
    uint32_t dim_from = 0; // N
    FlatWords words;       // rows of (n+1) words: a_0..a_{n-1}, b

    [[nodiscard]] size_t row_words() const { return params.n + 1; }
    [[nodiscard]] size_t rows() const { return words.size() / row_words(); }
};

// m in Z_t -> m * q/(2t). Requires q divisible by 2t.
uint64_t encode(uint64_t m, uint32_t t, uint32_t q);

// b = <a, s> + e + m_encoded at the key's native (n, modulus). `modulus`
// selects the ring: q for client ciphertexts, Q for key-switch inputs.
LweCiphertext lwe_encrypt(const LweSecretKey& sk, uint64_t m_encoded, uint64_t modulus,
                          double stddev, Rng& rng);
// Test hook: fixed mask and noise instead of sampled ones.
LweCiphertext lwe_encrypt_explicit(const LweSecretKey& sk, uint64_t m_encoded, uint64_t modulus,
                                   std::vector<uint64_t> a, uint64_t e);

// phi = b - <a, s> (mod modulus).
uint64_t lwe_phase(const LweCiphertext& ct, const LweSecretKey& sk);

// round(4*phi/modulus) mod 4: the fixed Z_4 decoder. Encodings under t divide
// evenly into it (t = 2 gives {0, 2} -> bits {0, 1} via /2 at the caller).
uint64_t lwe_decrypt(const LweCiphertext& ct, const LweSecretKey& sk);

LweSecretKey lwe_keygen(const ParamSet& params, SecretDist dist, Rng& rng);

// Key for N-dim mod-Q -> n-dim mod-Q switching; z given as signed entries.
KeySwitchKey keyswitch_keygen(const ParamSet& params, const std::vector<int8_t>& z,
                              const LweSecretKey& sk, Rng& rng);

// Digit-decomposes each a_i base B_s and subtracts the matching key rows.
LweCiphertext key_switch(const KeySwitchKey& ksk, const LweCiphertext& ct);

// Round each word to the target modulus: floor((2*x*q_to + Q)/(2*Q)) mod q_to.
LweCiphertext modulus_switch(const LweCiphertext& ct, uint64_t q_to);

} // namespace pimfhe
