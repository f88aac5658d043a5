#include "pimfhe/params.hpp"

#include <cmath>
#include <stdexcept>

#include "pimfhe/modmath.hpp"

namespace pimfhe {

namespace {

bool is_pow2(uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

// Base entries; Q and digit counts are derived once at registry construction.
struct BaseEntry {
    const char* name;
    uint32_t security_bits;
    bool quantum_safe;
    uint32_t n, q, N, log2_Q, B_s, B_g, B_r;
    SecretDist dist;
};

constexpr BaseEntry kBase[] = {
    {"STD128", 128, false, 512, 512, 1024, 27, 25, 1u << 7, 23, SecretDist::Binary},
    {"STD192", 192, false, 512, 512, 2048, 37, 25, 1u << 13, 23, SecretDist::Binary},
    {"STD256", 256, false, 1024, 1024, 2048, 29, 25, 1u << 10, 32, SecretDist::Binary},
    {"STD128Q", 128, true, 512, 512, 2048, 50, 25, 1u << 25, 23, SecretDist::Binary},
    {"STD192Q", 192, true, 1024, 1024, 2048, 35, 25, 1u << 12, 32, SecretDist::Binary},
    {"STD256Q", 256, true, 1024, 1024, 2048, 27, 25, 1u << 7, 32, SecretDist::Binary},
    {"TOY", 0, false, 4, 16, 16, 7, 4, 4, 4, SecretDist::Binary},
};

void validate(const ParamSet& p) {
    if (!is_pow2(p.q) || !is_pow2(p.N)) throw std::logic_error(p.name + ": q, N must be powers of two");
    if (p.q > 2 * p.N) throw std::logic_error(p.name + ": q exceeds 2N");
    if (!is_pow2(p.B_g)) throw std::logic_error(p.name + ": B_g must be a power of two");
    if (!is_prime_u64(p.Q)) throw std::logic_error(p.name + ": Q not prime");
    if (p.Q % (2 * uint64_t{p.N}) != 1) throw std::logic_error(p.name + ": Q != 1 mod 2N");
    if (p.log2_Q < 64 && (p.Q >> (p.log2_Q - 1)) != 1)
        throw std::logic_error(p.name + ": Q outside (2^(L-1), 2^L)");
    if (p.q % (2 * p.t) != 0) throw std::logic_error(p.name + ": q not divisible by 2t");
}

std::vector<ParamSet> build_registry() {
    std::vector<ParamSet> out;
    out.reserve(std::size(kBase));
    for (const auto& b : kBase) {
        ParamSet p;
        p.name = b.name;
        p.security_bits = b.security_bits;
        p.quantum_safe = b.quantum_safe;
        p.n = b.n;
        p.q = b.q;
        p.N = b.N;
        p.log2_Q = b.log2_Q;
        p.B_s = b.B_s;
        p.B_g = b.B_g;
        p.B_r = b.B_r;
        p.secret_dist = b.dist;
        p.Q = select_modulus(p.log2_Q, p.N);
        DigitCounts d = derive_digit_counts(p.Q, p.q, p.B_s, p.B_g, p.B_r);
        p.d_s = d.d_s;
        p.d_g = d.d_g;
        p.d_r = d.d_r;
        validate(p);
        out.push_back(std::move(p));
    }
    return out;
}

const std::vector<ParamSet>& registry() {
    static const std::vector<ParamSet> r = build_registry();
    return r;
}

} // namespace

std::vector<std::string> param_set_names() {
    std::vector<std::string> names;
    for (const auto& p : registry()) names.push_back(p.name);
    return names;
}

const ParamSet& load_param_set(const std::string& name) {
    for (const auto& p : registry())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown parameter set: " + name);
}

bool is_prime_u64(uint64_t x) {
    if (x < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (x == p) return true;
        if (x % p == 0) return false;
    }
    uint64_t d = x - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    auto mulmod = [&](uint64_t a, uint64_t b) {
        return static_cast<uint64_t>(static_cast<u128>(a) * b % x);
    };
    auto powmod = [&](uint64_t a, uint64_t e) {
        uint64_t acc = 1;
        a %= x;
        while (e) {
            if (e & 1) acc = mulmod(acc, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return acc;
    };
    // This witness set is deterministic for all 64-bit inputs.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t v = powmod(a, d);
        if (v == 1 || v == x - 1) continue;
        bool witness = true;
        for (int i = 1; i < r && witness; ++i) {
            v = mulmod(v, v);
            if (v == x - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

uint64_t select_modulus(uint32_t log2_Q, uint32_t N) {
    if (log2_Q < 2 || log2_Q > 62) throw std::invalid_argument("modulus bit size out of range");
    uint64_t step = 2 * uint64_t{N};
    uint64_t hi = uint64_t{1} << log2_Q;
    uint64_t lo = uint64_t{1} << (log2_Q - 1);
    // Largest candidate below hi that is 1 mod 2N, stepping down by 2N.
    uint64_t c = hi - ((hi - 1) % step);
    if (c >= hi) c -= step;
    for (; c > lo; c -= step)
        if (is_prime_u64(c)) return c;
    throw std::invalid_argument("no prime Q = 1 mod " + std::to_string(step) + " in (2^" +
                                std::to_string(log2_Q - 1) + ", 2^" + std::to_string(log2_Q) + ")");
}

DigitCounts derive_digit_counts(uint64_t Q, uint32_t q, uint32_t B_s, uint32_t B_g, uint32_t B_r) {
    auto count = [](u128 target, uint64_t base) {
        uint32_t d = 1;
        u128 acc = base;
        while (acc < target) {
            acc *= base;
            ++d;
        }
        return d;
    };
    return DigitCounts{count(Q, B_s), count(Q, B_g), count(q, B_r)};
}

} // namespace pimfhe
