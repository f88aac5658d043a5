#include "pimfhe/lwe.hpp"

#include <stdexcept>

#include "pimfhe/modmath.hpp"

namespace pimfhe {

uint64_t encode(uint64_t m, uint32_t t, uint32_t q) {
    if (t == 0 || q % (2 * uint64_t{t}) != 0)
        throw std::invalid_argument("message modulus must satisfy 2t | q");
    return (m % t) * (q / (2 * uint64_t{t}));
}

LweCiphertext lwe_encrypt(const LweSecretKey& sk, uint64_t m_encoded, uint64_t modulus,
                          double stddev, Rng& rng) {
    LweCiphertext ct;
    ct.modulus = modulus;
    ct.a.resize(sk.s.size());
    u128 acc = 0;
    for (size_t i = 0; i < sk.s.size(); ++i) {
        ct.a[i] = rng.uniform(modulus);
        acc += static_cast<u128>(ct.a[i]) * sk.entry_mod(i, modulus);
    }
    uint64_t e = rng.gaussian_mod(stddev, modulus);
    ct.b = static_cast<uint64_t>((acc + e + m_encoded % modulus) % modulus);
    return ct;
}

LweCiphertext lwe_encrypt_explicit(const LweSecretKey& sk, uint64_t m_encoded, uint64_t modulus,
                                   std::vector<uint64_t> a, uint64_t e) {
    if (a.size() != sk.s.size()) throw std::invalid_argument("mask dimension mismatch");
    LweCiphertext ct;
    ct.modulus = modulus;
    ct.a = std::move(a);
    u128 acc = 0;
    for (size_t i = 0; i < ct.a.size(); ++i)
        acc += static_cast<u128>(ct.a[i] % modulus) * sk.entry_mod(i, modulus);
    ct.b = static_cast<uint64_t>((acc + e % modulus + m_encoded % modulus) % modulus);
    return ct;
}

uint64_t lwe_phase(const LweCiphertext& ct, const LweSecretKey& sk) {
    if (ct.dim() != sk.s.size()) throw std::invalid_argument("key dimension mismatch");
    u128 acc = 0;
    for (size_t i = 0; i < ct.a.size(); ++i)
        acc += static_cast<u128>(ct.a[i]) * sk.entry_mod(i, ct.modulus);
    uint64_t dot = static_cast<uint64_t>(acc % ct.modulus);
    return ct.b >= dot ? ct.b - dot : ct.b + ct.modulus - dot;
}

uint64_t lwe_decrypt(const LweCiphertext& ct, const LweSecretKey& sk) {
    uint64_t phi = lwe_phase(ct, sk);
    // round(4*phi/modulus) mod 4, round half up.
    u128 num = u128{8} * phi + ct.modulus;
    return static_cast<uint64_t>(num / (2 * static_cast<u128>(ct.modulus))) % 4;
}

LweSecretKey lwe_keygen(const ParamSet& params, SecretDist dist, Rng& rng) {
    LweSecretKey sk;
    sk.params = params;
    sk.dist = dist;
    sk.s.resize(params.n);
    for (auto& v : sk.s) {
        if (dist == SecretDist::Binary)
            v = static_cast<int8_t>(rng.uniform(2));
        else
            v = static_cast<int8_t>(static_cast<int64_t>(rng.uniform(3)) - 1);
    }
    return sk;
}

KeySwitchKey keyswitch_keygen(const ParamSet& params, const std::vector<int8_t>& z,
                              const LweSecretKey& sk, Rng& rng) {
    if (z.size() != params.N) throw std::invalid_argument("ring secret dimension mismatch");
    const uint64_t Q = params.Q;
    const uint32_t n = params.n;
    KeySwitchKey k;
    k.params = params;
    k.dim_from = params.N;
    const size_t rows = size_t{params.N} * params.d_s * params.B_s;
    const size_t rw = size_t{n} + 1;
    k.words = FlatWords(rows * rw, Q);

    ModContext mod(Q);
    uint64_t pw = 1; // B_s^j mod Q, advanced in the j loop
    std::vector<uint64_t> pows(params.d_s);
    for (uint32_t j = 0; j < params.d_s; ++j) {
        pows[j] = pw;
        pw = mod.mul(pw, params.B_s);
    }

    std::vector<uint64_t> a(n);
    for (uint32_t i = 0; i < params.N; ++i) {
        uint64_t zi = z[i] < 0 ? Q - 1 : static_cast<uint64_t>(z[i]);
        for (uint32_t j = 0; j < params.d_s; ++j) {
            for (uint32_t v = 0; v < params.B_s; ++v) {
                // Row encrypts v * z_i * B_s^j; v = 0 rows are real encryptions
                // of zero so the switch loop never branches on the digit.
                uint64_t m = mod.mul(mod.mul(v, pows[j]), zi);
                u128 acc = 0;
                for (uint32_t c = 0; c < n; ++c) {
                    a[c] = rng.uniform(Q);
                    acc += static_cast<u128>(a[c]) * sk.entry_mod(c, Q);
                }
                uint64_t b =
                    static_cast<uint64_t>((acc + rng.gaussian_mod(params.error_stddev, Q) + m) % Q);
                size_t base = ((size_t{i} * params.d_s + j) * params.B_s + v) * rw;
                for (uint32_t c = 0; c < n; ++c) k.words.set(base + c, a[c]);
                k.words.set(base + n, b);
            }
        }
    }
    return k;
}

LweCiphertext key_switch(const KeySwitchKey& k, const LweCiphertext& ct) {
    const ParamSet& p = k.params;
    if (ct.dim() != k.dim_from) throw std::invalid_argument("ciphertext dimension mismatch");
    if (ct.modulus != p.Q) throw std::invalid_argument("ciphertext modulus mismatch");

    const uint32_t n = p.n;
    const size_t rw = k.row_words();
    // ct' = (0, b) - sum of the selected key rows, reduced as it accumulates.
    std::vector<uint64_t> acc_a(n, 0);
    uint64_t acc_b = ct.b;
    ModContext mod(p.Q);

    for (uint32_t i = 0; i < k.dim_from; ++i) {
        uint64_t x = ct.a[i];
        for (uint32_t j = 0; j < p.d_s; ++j) {
            uint64_t v = x % p.B_s;
            x /= p.B_s;
            size_t base = ((size_t{i} * p.d_s + j) * p.B_s + v) * rw;
            for (uint32_t c = 0; c < n; ++c)
                acc_a[c] = mod.sub(acc_a[c], k.words.get(base + c));
            acc_b = mod.sub(acc_b, k.words.get(base + n));
        }
    }

    LweCiphertext out;
    out.modulus = p.Q;
    out.b = acc_b;
    out.a = std::move(acc_a); // (0, b) - sum(rows): the mask is -sum(rows.a)
    return out;
}

LweCiphertext modulus_switch(const LweCiphertext& ct, uint64_t q_to) {
    if (q_to == 0 || q_to > ct.modulus) throw std::invalid_argument("target modulus out of range");
    LweCiphertext out;
    out.modulus = q_to;
    out.a.resize(ct.dim());
    auto sw = [&](uint64_t x) {
        u128 num = u128{2} * x * q_to + ct.modulus;
        return static_cast<uint64_t>(num / (2 * static_cast<u128>(ct.modulus))) % q_to;
    };
    for (size_t i = 0; i < ct.dim(); ++i) out.a[i] = sw(ct.a[i]);
    out.b = sw(ct.b);
    return out;
}

} // namespace pimfhe
