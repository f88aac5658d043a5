#pragma once

#include <cstdint>

namespace pimfhe {

using u128 = unsigned __int128;

// Precomputed arithmetic context for one odd modulus Q < 2^63.
// Montgomery radix is R = 2^64 throughout.
struct ModContext {
    uint64_t Q = 0;
    uint64_t neg_q_inv = 0; // -Q^{-1} mod 2^64
    uint64_t r1 = 0;        // R   mod Q (Montgomery form of 1)
    uint64_t r2 = 0;        // R^2 mod Q (to_mont multiplier)

    explicit ModContext(uint64_t modulus);

    [[nodiscard]] uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= Q ? s - Q : s;
    }
    [[nodiscard]] uint64_t sub(uint64_t a, uint64_t b) const {
        return a >= b ? a - b : a + Q - b;
    }
    [[nodiscard]] uint64_t neg(uint64_t a) const { return a == 0 ? 0 : Q - a; }

    // t < Q*2^64 required; returns t * R^{-1} mod Q.
    [[nodiscard]] uint64_t mont_reduce(u128 t) const {
        uint64_t m = static_cast<uint64_t>(t) * neg_q_inv;
        u128 u = (t + static_cast<u128>(m) * Q) >> 64;
        uint64_t r = static_cast<uint64_t>(u);
        return r >= Q ? r - Q : r;
    }
    [[nodiscard]] uint64_t to_mont(uint64_t a) const {
        return mont_reduce(static_cast<u128>(a) * r2);
    }
    [[nodiscard]] uint64_t from_mont(uint64_t a) const {
        return mont_reduce(static_cast<u128>(a));
    }
    // Plain a*b mod Q.
    [[nodiscard]] uint64_t mul(uint64_t a, uint64_t b) const {
        return mont_reduce(static_cast<u128>(mont_reduce(static_cast<u128>(a) * b)) * r2);
    }
    [[nodiscard]] uint64_t pow(uint64_t base, uint64_t e) const;
    // Inverse via Fermat; Q must be prime and a nonzero.
    [[nodiscard]] uint64_t inv(uint64_t a) const;
};

// x in [0, 2Q) -> x mod Q. The reduction step used by the butterfly adders.
inline uint64_t barrett_reduce(uint64_t x, uint64_t Q) { return x >= Q ? x - Q : x; }

// Standalone Montgomery multiply (builds a context; for one-off use and tests).
uint64_t montgomery_mul(uint64_t a, uint64_t b, uint64_t Q);

// Smallest generator of Z_Q^* for prime Q.
uint64_t find_primitive_root(uint64_t Q);

} // namespace pimfhe
