#pragma once

#include <cstdint>
#include <vector>

#include "pimfhe/modmath.hpp"

namespace pimfhe {

enum class Domain { Coefficient, Ntt };

// Element of Z_Q[X]/(X^N + 1). NTT-domain slot j holds the evaluation at
// psi^(2j+1) where psi is a primitive 2N-th root of unity.
struct RingElement {
    uint32_t N = 0;
    uint64_t Q = 0;
    Domain domain = Domain::Coefficient;
    std::vector<uint64_t> c;

    RingElement() = default;
    RingElement(uint32_t n, uint64_t q, Domain d = Domain::Coefficient)
        : N(n), Q(q), domain(d), c(n, 0) {}
};

// Twiddle schedule for the constant-geometry transform: every stage applies the
// same butterfly wiring (read pairs (2i, 2i+1), write i and i+N/2), only the
// twiddle vector changes. Stage s of the forward pass uses
//   w_fwd[s][i] = omega^((i >> (t-1-s)) << (t-1-s)),  omega = psi^2, t = log2 N,
// stored in Montgomery form. The inverse pass runs the same wiring with the
// elementwise inverses and folds N^{-1} * psi^{-k} into the final untwist.
class TwiddleTable {
  public:
    TwiddleTable(uint32_t N, uint64_t Q);

    uint32_t N;
    uint32_t log2_N;
    ModContext mod;
    uint64_t psi;                                // primitive 2N-th root, psi^N = -1
    std::vector<std::vector<uint64_t>> w_fwd;    // [stage][i], Montgomery form
    std::vector<std::vector<uint64_t>> w_inv;    // elementwise inverse schedule
    std::vector<uint64_t> twist;                 // psi^k, Montgomery form
    std::vector<uint64_t> untwist;               // N^{-1} * psi^{-k}, Montgomery form
    std::vector<uint32_t> bitrev;                // bit-reversal permutation of [0, N)
};

// Fixed wiring shared by every stage: output slots i and i+N/2 read input
// slots 2i and 2i+1. The transform loops call these, so a test can assert the
// geometry never varies with the stage index.
inline uint32_t stage_in_even(uint32_t i) { return 2 * i; }
inline uint32_t stage_in_odd(uint32_t i) { return 2 * i + 1; }
inline uint32_t stage_out_hi(uint32_t N, uint32_t i) { return i + N / 2; }

// Transform counters for the hardware-model cross-checks (process-wide totals).
struct RingInstrumentation {
    uint64_t forward_transforms = 0;
    uint64_t inverse_transforms = 0;
    uint64_t stage_executions = 0; // one per butterfly stage actually run
};
RingInstrumentation& ring_instrumentation();
void reset_ring_instrumentation();

// Coefficient domain -> NTT domain (throws on domain or shape mismatch).
RingElement ntt_forward(const TwiddleTable& tw, const RingElement& a);
// NTT domain -> coefficient domain.
RingElement ntt_inverse(const TwiddleTable& tw, const RingElement& a);

// Slotwise sum/difference; operands must share N, Q, and domain.
RingElement poly_add(const RingElement& a, const RingElement& b);
RingElement poly_sub(const RingElement& a, const RingElement& b);
// Slotwise product; both operands must be NTT domain.
RingElement pointwise_mul(const TwiddleTable& tw, const RingElement& a, const RingElement& b);
// Negacyclic product of two coefficient-domain elements (forward, multiply, inverse).
RingElement poly_mul_negacyclic(const TwiddleTable& tw, const RingElement& a, const RingElement& b);
// a(X) * X^e with X^N = -1; e in [0, 2N). Coefficient domain only.
RingElement monomial_mul(const RingElement& a, uint32_t e);
// a * s mod Q, either domain.
RingElement scalar_mul(const ModContext& mod, const RingElement& a, uint64_t s);

} // namespace pimfhe
