#include "pimfhe/modmath.hpp"

#include <stdexcept>
#include <vector>

#include "pimfhe/params.hpp"

namespace pimfhe {

ModContext::ModContext(uint64_t modulus) : Q(modulus) {
    if (Q == 0 || (Q & 1) == 0) throw std::invalid_argument("modulus must be odd and nonzero");
    if (Q >= (uint64_t{1} << 63)) throw std::invalid_argument("modulus too large");
    // Newton iteration doubles correct low bits each round: 6 rounds cover 64.
    uint64_t inv = Q;
    for (int i = 0; i < 5; ++i) inv *= 2 - Q * inv;
    neg_q_inv = ~inv + 1;
    u128 r = (u128{1} << 64) % Q;
    r1 = static_cast<uint64_t>(r);
    r2 = static_cast<uint64_t>(r * r % Q);
}

uint64_t ModContext::pow(uint64_t base, uint64_t e) const {
    uint64_t acc = r1; // 1 in Montgomery form
    uint64_t b = to_mont(base % Q);
    while (e) {
        if (e & 1) acc = mont_reduce(static_cast<u128>(acc) * b);
        b = mont_reduce(static_cast<u128>(b) * b);
        e >>= 1;
    }
    return from_mont(acc);
}

uint64_t ModContext::inv(uint64_t a) const {
    if (a % Q == 0) throw std::invalid_argument("no inverse of 0");
    return pow(a, Q - 2);
}

uint64_t montgomery_mul(uint64_t a, uint64_t b, uint64_t Q) {
    ModContext m(Q);
    return m.mul(a % Q, b % Q);
}

uint64_t find_primitive_root(uint64_t Q) {
    if (!is_prime_u64(Q)) throw std::invalid_argument("modulus must be prime");
    // Factor Q-1 by trial division; moduli here are < 2^62 so this is cheap
    // relative to key generation, and it only runs once per table build.
    uint64_t phi = Q - 1;
    std::vector<uint64_t> factors;
    uint64_t m = phi;
    for (uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            factors.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) factors.push_back(m);
    ModContext ctx(Q);
    for (uint64_t g = 2; g < Q; ++g) {
        bool ok = true;
        for (uint64_t f : factors)
            if (ctx.pow(g, phi / f) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no generator found");
}

} // namespace pimfhe
