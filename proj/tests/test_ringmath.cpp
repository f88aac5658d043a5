#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pimfhe/params.hpp"
#include "pimfhe/ring.hpp"

using namespace pimfhe;

namespace {

RingElement random_element(uint32_t N, uint64_t Q, std::mt19937_64& gen) {
    RingElement a(N, Q);
    for (auto& c : a.c) c = gen() % Q;
    return a;
}

// O(N^2) evaluation oracle: slot j of the transform is a(psi^(2j+1)).
RingElement dft_oracle(const TwiddleTable& tw, const RingElement& a) {
    RingElement out(a.N, a.Q, Domain::Ntt);
    for (uint32_t j = 0; j < a.N; ++j) {
        uint64_t x = tw.mod.pow(tw.psi, 2 * j + 1);
        uint64_t acc = 0, xp = 1;
        for (uint32_t k = 0; k < a.N; ++k) {
            acc = tw.mod.add(acc, tw.mod.mul(a.c[k], xp));
            xp = tw.mod.mul(xp, x);
        }
        out.c[j] = acc;
    }
    return out;
}

// O(N^2) schoolbook negacyclic product: X^N = -1.
RingElement schoolbook_negacyclic(const ModContext& mod, const RingElement& a,
                                  const RingElement& b) {
    RingElement out(a.N, a.Q);
    for (uint32_t i = 0; i < a.N; ++i) {
        for (uint32_t j = 0; j < a.N; ++j) {
            uint64_t p = mod.mul(a.c[i], b.c[j]);
            uint32_t k = i + j;
            if (k < a.N)
                out.c[k] = mod.add(out.c[k], p);
            else
                out.c[k - a.N] = mod.sub(out.c[k - a.N], p);
        }
    }
    return out;
}

} // namespace

TEST_CASE("forward transform equals the evaluation oracle") {
    for (auto [N, Q] : {std::pair<uint32_t, uint64_t>{16, 97},
                        std::pair<uint32_t, uint64_t>{1024, 134215681}}) {
        CAPTURE(N);
        TwiddleTable tw(N, Q);
        std::mt19937_64 gen(3);
        int reps = N <= 16 ? 50 : 5;
        for (int r = 0; r < reps; ++r) {
            RingElement a = random_element(N, Q, gen);
            RingElement fast = ntt_forward(tw, a);
            RingElement slow = dft_oracle(tw, a);
            CHECK(fast.c == slow.c);
            CHECK(fast.domain == Domain::Ntt);
        }
    }
}

TEST_CASE("inverse composed with forward is the identity, 1000 elements") {
    TwiddleTable tw(16, 97);
    std::mt19937_64 gen(5);
    for (int r = 0; r < 1000; ++r) {
        RingElement a = random_element(16, 97, gen);
        RingElement back = ntt_inverse(tw, ntt_forward(tw, a));
        CHECK(back.c == a.c);
        CHECK(back.domain == Domain::Coefficient);
    }
}

TEST_CASE("negacyclic product equals schoolbook oracle, both sizes") {
    for (auto [N, Q] : {std::pair<uint32_t, uint64_t>{16, 97},
                        std::pair<uint32_t, uint64_t>{1024, 134215681}}) {
        CAPTURE(N);
        TwiddleTable tw(N, Q);
        std::mt19937_64 gen(9);
        int reps = N <= 16 ? 200 : 200;
        for (int r = 0; r < reps; ++r) {
            RingElement a = random_element(N, Q, gen);
            RingElement b = random_element(N, Q, gen);
            RingElement fast = poly_mul_negacyclic(tw, a, b);
            RingElement slow = schoolbook_negacyclic(tw.mod, a, b);
            CHECK(fast.c == slow.c);
        }
    }
}

TEST_CASE("X^N reduces to -1: multiplying by X N times negates") {
    TwiddleTable tw(16, 97);
    std::mt19937_64 gen(10);
    RingElement a = random_element(16, 97, gen);
    RingElement x(16, 97);
    x.c[1] = 1;
    RingElement cur = a;
    for (uint32_t i = 0; i < 16; ++i) cur = poly_mul_negacyclic(tw, cur, x);
    for (uint32_t k = 0; k < 16; ++k) CHECK(cur.c[k] == tw.mod.neg(a.c[k]));
}

TEST_CASE("monomial_mul matches product with an explicit monomial") {
    TwiddleTable tw(16, 97);
    std::mt19937_64 gen(12);
    for (uint32_t e = 0; e < 32; ++e) {
        RingElement a = random_element(16, 97, gen);
        RingElement m(16, 97);
        if (e < 16)
            m.c[e] = 1;
        else
            m.c[e - 16] = 96; // -X^(e-N)
        RingElement fast = monomial_mul(a, e);
        RingElement slow = poly_mul_negacyclic(tw, a, m);
        CHECK(fast.c == slow.c);
    }
}

TEST_CASE("psi is a primitive 2N-th root with psi^N = -1") {
    for (auto [N, Q] : {std::pair<uint32_t, uint64_t>{16, 97},
                        std::pair<uint32_t, uint64_t>{1024, 134215681},
                        std::pair<uint32_t, uint64_t>{2048, 1125899906826241}}) {
        CAPTURE(N);
        TwiddleTable tw(N, Q);
        CHECK(tw.mod.pow(tw.psi, N) == Q - 1);
        CHECK(tw.mod.pow(tw.psi, 2 * N) == 1);
    }
}

TEST_CASE("constant geometry: stage wiring is stage-independent by construction") {
    // The wiring helpers are pure functions of the slot index; every stage of
    // the transform reads pairs (2i, 2i+1) and writes (i, i+N/2).
    uint32_t N = 16;
    for (uint32_t i = 0; i < N / 2; ++i) {
        CHECK(stage_in_even(i) == 2 * i);
        CHECK(stage_in_odd(i) == 2 * i + 1);
        CHECK(stage_out_hi(N, i) == i + N / 2);
    }
    // Stage count bookkeeping: one transform runs exactly log2(N) stages.
    TwiddleTable tw(N, 97);
    reset_ring_instrumentation();
    RingElement a(N, 97);
    ntt_forward(tw, a);
    CHECK(ring_instrumentation().forward_transforms == 1);
    CHECK(ring_instrumentation().stage_executions == 4);
    ntt_inverse(tw, ntt_forward(tw, a));
    CHECK(ring_instrumentation().forward_transforms == 2);
    CHECK(ring_instrumentation().inverse_transforms == 1);
    CHECK(ring_instrumentation().stage_executions == 12);
    reset_ring_instrumentation();
}

TEST_CASE("twiddle schedule: stage s repeats blocks of size 2^(t-1-s)") {
    TwiddleTable tw(16, 97);
    REQUIRE(tw.w_fwd.size() == 4);
    for (uint32_t s = 0; s < 4; ++s) {
        uint32_t block = uint32_t{1} << (4 - 1 - s);
        for (uint32_t i = 0; i < 8; ++i) {
            uint32_t e = (i >> (4 - 1 - s)) << (4 - 1 - s);
            CHECK(tw.w_fwd[s][i] == tw.mod.to_mont(tw.mod.pow(tw.mod.mul(tw.psi, tw.psi), e)));
            // Constant within a block.
            if (i % block != 0) CHECK(tw.w_fwd[s][i] == tw.w_fwd[s][i - 1]);
        }
    }
}

TEST_CASE("domain and shape mismatches throw") {
    TwiddleTable tw(16, 97);
    RingElement a(16, 97);
    RingElement b(16, 97, Domain::Ntt);
    CHECK_THROWS_AS(ntt_forward(tw, b), std::invalid_argument);
    CHECK_THROWS_AS(ntt_inverse(tw, a), std::invalid_argument);
    CHECK_THROWS_AS(poly_add(a, b), std::invalid_argument);
    CHECK_THROWS_AS(pointwise_mul(tw, a, a), std::invalid_argument);
    RingElement c(32, 97);
    CHECK_THROWS_AS(poly_add(a, c), std::invalid_argument);
    RingElement d(16, 929);
    CHECK_THROWS_AS(poly_sub(a, d), std::invalid_argument);
}

TEST_CASE("add, sub, scalar_mul slotwise semantics") {
    TwiddleTable tw(16, 97);
    std::mt19937_64 gen(21);
    RingElement a = random_element(16, 97, gen);
    RingElement b = random_element(16, 97, gen);
    RingElement s = poly_add(a, b);
    RingElement d = poly_sub(a, b);
    RingElement k = scalar_mul(tw.mod, a, 5);
    for (uint32_t i = 0; i < 16; ++i) {
        CHECK(s.c[i] == (a.c[i] + b.c[i]) % 97);
        CHECK(d.c[i] == (a.c[i] + 97 - b.c[i]) % 97);
        CHECK(k.c[i] == a.c[i] * 5 % 97);
    }
    // Convolution theorem: pointwise product in NTT domain.
    RingElement pw = ntt_inverse(
        tw, pointwise_mul(tw, ntt_forward(tw, a), ntt_forward(tw, b)));
    CHECK(pw.c == schoolbook_negacyclic(tw.mod, a, b).c);
}
