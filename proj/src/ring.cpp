#include "pimfhe/ring.hpp"

#include <bit>
#include <stdexcept>

namespace pimfhe {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void require_compatible(const RingElement& a, const RingElement& b) {
    require(a.N == b.N && a.Q == b.Q, "ring element shape mismatch");
    require(a.domain == b.domain, "ring element domain mismatch");
}

} // namespace

RingInstrumentation& ring_instrumentation() {
    static RingInstrumentation inst;
    return inst;
}

void reset_ring_instrumentation() { ring_instrumentation() = RingInstrumentation{}; }

TwiddleTable::TwiddleTable(uint32_t n, uint64_t q) : N(n), mod(q) {
    require(N >= 2 && (N & (N - 1)) == 0, "ring degree must be a power of two");
    require(q % (2 * uint64_t{N}) == 1, "modulus must be 1 mod 2N");
    log2_N = static_cast<uint32_t>(std::countr_zero(N));

    // psi: primitive 2N-th root of unity, so psi^N = -1 and slot j of the
    // forward transform evaluates at psi^(2j+1).
    uint64_t g = find_primitive_root(q);
    psi = mod.pow(g, (q - 1) / (2 * uint64_t{N}));
    if (mod.pow(psi, N) != q - 1) throw std::logic_error("psi^N != -1");
    uint64_t omega = mod.mul(psi, psi);
    uint64_t omega_inv = mod.inv(omega);

    w_fwd.assign(log2_N, std::vector<uint64_t>(N / 2));
    w_inv.assign(log2_N, std::vector<uint64_t>(N / 2));
    for (uint32_t s = 0; s < log2_N; ++s) {
        uint32_t shift = log2_N - 1 - s;
        for (uint32_t i = 0; i < N / 2; ++i) {
            uint64_t e = (uint64_t{i} >> shift) << shift;
            w_fwd[s][i] = mod.to_mont(mod.pow(omega, e));
            w_inv[s][i] = mod.to_mont(mod.pow(omega_inv, e));
        }
    }

    uint64_t n_inv = mod.inv(N);
    uint64_t psi_inv = mod.inv(psi);
    twist.resize(N);
    untwist.resize(N);
    uint64_t t = 1, u = n_inv;
    for (uint32_t k = 0; k < N; ++k) {
        twist[k] = mod.to_mont(t);
        untwist[k] = mod.to_mont(u);
        t = mod.mul(t, psi);
        u = mod.mul(u, psi_inv);
    }

    bitrev.resize(N);
    for (uint32_t i = 0; i < N; ++i) {
        uint32_t r = 0;
        for (uint32_t bitpos = 0; bitpos < log2_N; ++bitpos)
            if (i & (1u << bitpos)) r |= 1u << (log2_N - 1 - bitpos);
        bitrev[i] = r;
    }
}

namespace {

// One constant-geometry pass: every stage reads pairs (2i, 2i+1) and writes
// (i, i+N/2); only the twiddle vector differs between stages.
void run_stages(const TwiddleTable& tw, const std::vector<std::vector<uint64_t>>& sched,
                std::vector<uint64_t>& cur, std::vector<uint64_t>& nxt) {
    const uint32_t N = tw.N;
    const ModContext& mod = tw.mod;
    for (uint32_t s = 0; s < tw.log2_N; ++s) {
        const std::vector<uint64_t>& w = sched[s];
        for (uint32_t i = 0; i < N / 2; ++i) {
            uint64_t a = cur[stage_in_even(i)];
            uint64_t b = mod.mont_reduce(static_cast<u128>(cur[stage_in_odd(i)]) * w[i]);
            uint64_t sum = a + b;
            nxt[i] = barrett_reduce(sum, mod.Q);
            nxt[stage_out_hi(N, i)] = mod.sub(a, b);
        }
        cur.swap(nxt);
        ring_instrumentation().stage_executions++;
    }
}

} // namespace

RingElement ntt_forward(const TwiddleTable& tw, const RingElement& a) {
    require(a.N == tw.N && a.Q == tw.mod.Q, "element does not match twiddle table");
    require(a.domain == Domain::Coefficient, "ntt_forward expects coefficient domain");

    std::vector<uint64_t> cur(tw.N), nxt(tw.N);
    // Twist by psi^k (negacyclic embedding), loaded in bit-reversed order so
    // the fixed-geometry stages emit natural order.
    for (uint32_t i = 0; i < tw.N; ++i) {
        uint32_t r = tw.bitrev[i];
        cur[i] = tw.mod.mont_reduce(static_cast<u128>(a.c[r]) * tw.twist[r]);
    }
    run_stages(tw, tw.w_fwd, cur, nxt);

    RingElement out(tw.N, tw.mod.Q, Domain::Ntt);
    out.c = std::move(cur);
    ring_instrumentation().forward_transforms++;
    return out;
}

RingElement ntt_inverse(const TwiddleTable& tw, const RingElement& a) {
    require(a.N == tw.N && a.Q == tw.mod.Q, "element does not match twiddle table");
    require(a.domain == Domain::Ntt, "ntt_inverse expects NTT domain");

    std::vector<uint64_t> cur(tw.N), nxt(tw.N);
    for (uint32_t i = 0; i < tw.N; ++i) cur[i] = a.c[tw.bitrev[i]];
    run_stages(tw, tw.w_inv, cur, nxt);

    RingElement out(tw.N, tw.mod.Q, Domain::Coefficient);
    out.c.resize(tw.N);
    // The inverse network computes N * a_k; fold N^{-1} into the psi^{-k} untwist.
    for (uint32_t k = 0; k < tw.N; ++k)
        out.c[k] = tw.mod.mont_reduce(static_cast<u128>(cur[k]) * tw.untwist[k]);
    ring_instrumentation().inverse_transforms++;
    return out;
}

RingElement poly_add(const RingElement& a, const RingElement& b) {
    require_compatible(a, b);
    RingElement out(a.N, a.Q, a.domain);
    for (uint32_t i = 0; i < a.N; ++i) {
        uint64_t s = a.c[i] + b.c[i];
        out.c[i] = s >= a.Q ? s - a.Q : s;
    }
    return out;
}

RingElement poly_sub(const RingElement& a, const RingElement& b) {
    require_compatible(a, b);
    RingElement out(a.N, a.Q, a.domain);
    for (uint32_t i = 0; i < a.N; ++i)
        out.c[i] = a.c[i] >= b.c[i] ? a.c[i] - b.c[i] : a.c[i] + a.Q - b.c[i];
    return out;
}

RingElement pointwise_mul(const TwiddleTable& tw, const RingElement& a, const RingElement& b) {
    require_compatible(a, b);
    require(a.domain == Domain::Ntt, "pointwise_mul expects NTT domain");
    RingElement out(a.N, a.Q, Domain::Ntt);
    for (uint32_t i = 0; i < a.N; ++i) out.c[i] = tw.mod.mul(a.c[i], b.c[i]);
    return out;
}

RingElement poly_mul_negacyclic(const TwiddleTable& tw, const RingElement& a,
                                const RingElement& b) {
    require(a.domain == Domain::Coefficient && b.domain == Domain::Coefficient,
            "poly_mul_negacyclic expects coefficient domain");
    return ntt_inverse(tw, pointwise_mul(tw, ntt_forward(tw, a), ntt_forward(tw, b)));
}

RingElement monomial_mul(const RingElement& a, uint32_t e) {
    require(a.domain == Domain::Coefficient, "monomial_mul expects coefficient domain");
    require(e < 2 * a.N, "monomial exponent out of range");
    RingElement out(a.N, a.Q, Domain::Coefficient);
    // X^N = -1: crossing the degree boundary negates.
    for (uint32_t k = 0; k < a.N; ++k) {
        uint32_t idx = k + e;
        bool negate = (idx / a.N) & 1;
        idx %= a.N;
        out.c[idx] = negate ? (a.c[k] == 0 ? 0 : a.Q - a.c[k]) : a.c[k];
    }
    return out;
}

RingElement scalar_mul(const ModContext& mod, const RingElement& a, uint64_t s) {
    RingElement out(a.N, a.Q, a.domain);
    uint64_t sm = mod.to_mont(s % mod.Q);
    for (uint32_t i = 0; i < a.N; ++i)
        out.c[i] = mod.mont_reduce(static_cast<u128>(a.c[i]) * sm);
    return out;
}

} // namespace pimfhe
