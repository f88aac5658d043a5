#include "pimfhe/bootstrap.hpp"

#include <cassert>
#include <stdexcept>

namespace pimfhe {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// ntt(c * X^e) slot j = c * psi^((2j+1) * e): a geometric walk with ratio
// psi^(2e), so building it costs one multiply per slot.
void add_monomial_ntt(const TwiddleTable& tw, std::vector<uint64_t>& slots, size_t base,
                      uint64_t c, uint32_t e) {
    const ModContext& mod = tw.mod;
    uint64_t cur = mod.mul(c, mod.pow(tw.psi, e));
    uint64_t step = mod.pow(tw.psi, (2 * uint64_t{e}) % (2 * uint64_t{tw.N}));
    uint64_t step_m = mod.to_mont(step);
    for (uint32_t j = 0; j < tw.N; ++j) {
        slots[base + j] = mod.add(slots[base + j], cur);
        cur = mod.mont_reduce(static_cast<u128>(cur) * step_m);
    }
}

} // namespace

BootstrapInstrumentation& bootstrap_instrumentation() {
    static BootstrapInstrumentation inst;
    return inst;
}

void reset_bootstrap_instrumentation() { bootstrap_instrumentation() = BootstrapInstrumentation{}; }

RlweSecret rlwe_keygen(const ParamSet& params, SecretDist dist, Rng& rng) {
    RlweSecret z;
    z.params = params;
    z.dist = dist;
    z.z.resize(params.N);
    for (auto& v : z.z) {
        if (dist == SecretDist::Binary)
            v = static_cast<int8_t>(rng.uniform(2));
        else
            v = static_cast<int8_t>(static_cast<int64_t>(rng.uniform(3)) - 1);
    }
    return z;
}

RgswCiphertext rgsw_encrypt(const TwiddleTable& tw, const RlweSecret& zk, const MonomialPlain& mu,
                            double stddev, Rng& rng) {
    const ParamSet& p = zk.params;
    require(tw.N == p.N && tw.mod.Q == p.Q, "twiddle table does not match parameters");
    const uint32_t N = p.N;
    const uint64_t Q = p.Q;
    const ModContext& mod = tw.mod;

    RgswCiphertext out;
    out.N = N;
    out.Q = Q;
    out.d_g = p.d_g;
    out.words = FlatWords(size_t{2} * p.d_g * 2 * N, Q);

    // z in the evaluation domain, reused for every row.
    RingElement zc(N, Q, Domain::Coefficient);
    for (uint32_t i = 0; i < N; ++i) zc.c[i] = zk.z[i] < 0 ? Q - 1 : static_cast<uint64_t>(zk.z[i]);
    RingElement zhat = ntt_forward(tw, zc);

    std::vector<uint64_t> row(2 * size_t{N});
    RingElement e(N, Q, Domain::Coefficient);
    for (uint32_t r = 0; r < 2 * p.d_g; ++r) {
        uint32_t k = r % p.d_g;
        bool gadget_on_a = r < p.d_g;
        // Mask sampled directly in the evaluation domain (the transform is a
        // bijection, so the distribution is still uniform).
        for (uint32_t j = 0; j < N; ++j) row[j] = rng.uniform(Q);
        for (uint32_t j = 0; j < N; ++j) e.c[j] = rng.gaussian_mod(stddev, Q);
        RingElement ehat = ntt_forward(tw, e);
        for (uint32_t j = 0; j < N; ++j)
            row[N + j] = mod.add(mod.mul(row[j], zhat.c[j]), ehat.c[j]);

        if (!mu.zero) {
            uint64_t gk = 1;
            for (uint32_t i = 0; i < k; ++i) gk = mod.mul(gk, p.B_g);
            if (mu.negate) gk = mod.neg(gk);
            uint32_t exp = mu.exp % (2 * N);
            add_monomial_ntt(tw, row, gadget_on_a ? 0 : N, gk, exp);
        }
        // Stored in Montgomery form so the external product can defer its
        // reduction to one per output slot.
        size_t base = size_t{r} * 2 * N;
        for (uint32_t j = 0; j < 2 * N; ++j) out.words.set(base + j, mod.to_mont(row[j]));
    }
    return out;
}

std::vector<RingElement> signed_digit_decompose(const ParamSet& params, const RingElement& a) {
    require(a.domain == Domain::Coefficient, "decomposition expects coefficient domain");
    const uint64_t Q = params.Q;
    const uint64_t B = params.B_g;
    const uint64_t half_B = B / 2;
    std::vector<RingElement> digits(params.d_g, RingElement(params.N, Q, Domain::Coefficient));

    for (uint32_t i = 0; i < params.N; ++i) {
        // Centered lift to [-Q/2, Q/2], then balanced base-B digits with carry.
        int64_t v = static_cast<int64_t>(a.c[i]);
        if (2 * a.c[i] >= Q) v -= static_cast<int64_t>(Q);
        for (uint32_t k = 0; k + 1 < params.d_g; ++k) {
            int64_t r = v % static_cast<int64_t>(B);
            if (r < 0) r += static_cast<int64_t>(B);
            if (r >= static_cast<int64_t>(half_B)) r -= static_cast<int64_t>(B);
            v = (v - r) / static_cast<int64_t>(B);
            digits[k].c[i] = r < 0 ? Q - static_cast<uint64_t>(-r) : static_cast<uint64_t>(r);
        }
        // The top digit absorbs the remainder with no further carry. Because
        // B_g^d_g >= Q, the remainder of a centered lift fits in the closed
        // interval [-B_g/2, B_g/2]; reducing it here would drop a carry of
        // B_g^d_g mod Q != 0 for lifts near +Q/2 and break recomposition.
        assert(v >= -static_cast<int64_t>(half_B) && v <= static_cast<int64_t>(half_B) &&
               "digit count must cover the centered range");
        digits[params.d_g - 1].c[i] = v < 0 ? Q - static_cast<uint64_t>(-v) : static_cast<uint64_t>(v);
    }
    return digits;
}

Accumulator external_product(const TwiddleTable& tw, const ParamSet& params,
                             const Accumulator& acc, const RgswCiphertext& rgsw) {
    require(rgsw.N == params.N && rgsw.Q == params.Q && rgsw.d_g == params.d_g,
            "key element does not match parameters");
    const uint32_t N = params.N;
    const ModContext& mod = tw.mod;

    // Digits of a then b, matching the key's row order.
    std::vector<RingElement> dec = signed_digit_decompose(params, acc.a);
    {
        std::vector<RingElement> db = signed_digit_decompose(params, acc.b);
        dec.insert(dec.end(), std::make_move_iterator(db.begin()), std::make_move_iterator(db.end()));
    }
    std::vector<RingElement> dec_hat;
    dec_hat.reserve(dec.size());
    for (auto& d : dec) dec_hat.push_back(ntt_forward(tw, d));

    // Slotwise sum of 2*d_g plain*Montgomery products stays below Q * 2^64, so
    // one reduction per slot suffices.
    RingElement oa(N, params.Q, Domain::Ntt), ob(N, params.Q, Domain::Ntt);
    for (uint32_t j = 0; j < N; ++j) {
        u128 sa = 0, sb = 0;
        for (uint32_t r = 0; r < 2 * params.d_g; ++r) {
            size_t base = size_t{r} * 2 * N;
            uint64_t d = dec_hat[r].c[j];
            sa += static_cast<u128>(d) * rgsw.words.get(base + j);
            sb += static_cast<u128>(d) * rgsw.words.get(base + N + j);
        }
        oa.c[j] = mod.mont_reduce(sa);
        ob.c[j] = mod.mont_reduce(sb);
    }

    bootstrap_instrumentation().external_products++;
    return Accumulator{ntt_inverse(tw, oa), ntt_inverse(tw, ob)};
}

Accumulator acc_initialize(const ParamSet& params, const LweCiphertext& ct, const Window& window) {
    require(ct.modulus == params.q, "accumulator input must be mod q");
    require(ct.dim() == params.n, "accumulator input dimension mismatch");
    const uint32_t q = params.q;
    require(window.lb < q && window.ub < q, "window endpoints out of range");
    require(window.lb % (q / 8) == 0 && window.ub % (q / 8) == 0,
            "window endpoints must be multiples of q/8");
    // Width exactly q/2: the test polynomial encodes f and -f shifted by q/2 in
    // the same coefficients, which is only consistent for antisymmetric windows.
    require((window.ub + q - window.lb) % q == q / 2, "window width must be exactly q/2");

    const uint32_t N = params.N;
    const uint64_t Q = params.Q;
    const uint32_t delta = params.delta();
    const uint64_t hi = params.q8();
    const uint64_t lo = Q - hi;

    // Constant term of T * X^(delta*phi) must equal f(phi): walking the three
    // reduction branches of X^(k + delta*phi) mod (X^N + 1) yields these
    // assignments; antisymmetry makes the overlaps agree.
    RingElement T(N, Q, Domain::Coefficient);
    for (uint32_t phi = 0; phi < q; ++phi) {
        uint64_t f = window.contains(phi, q) ? hi : lo;
        uint32_t r = delta * phi; // in [0, 2N)
        if (r == 0)
            T.c[0] = f;
        else if (r <= N)
            T.c[N - r] = f == 0 ? 0 : Q - f;
        else
            T.c[2 * N - r] = f;
    }

    Accumulator acc;
    acc.a = RingElement(N, Q, Domain::Coefficient);
    acc.b = monomial_mul(T, (delta * static_cast<uint32_t>(ct.b % q)) % (2 * N));
    return acc;
}

RotationSchedule prepare_rotations(const ParamSet& params, const LweCiphertext& ct,
                                   BootstrapMode mode) {
    require(ct.modulus == params.q, "rotation schedule expects a mod-q ciphertext");
    const uint32_t q = params.q;
    const uint32_t delta = params.delta();
    const uint32_t twoN = 2 * params.N;
    RotationSchedule rot;
    if (mode == BootstrapMode::AP) {
        rot.ap_digits.resize(size_t{params.n} * params.d_r);
        for (uint32_t i = 0; i < params.n; ++i) {
            uint32_t x = (q - static_cast<uint32_t>(ct.a[i] % q)) % q; // -a_i mod q
            for (uint32_t j = 0; j < params.d_r; ++j) {
                rot.ap_digits[size_t{i} * params.d_r + j] = x % params.B_r;
                x /= params.B_r;
            }
        }
    } else {
        rot.ginx_exp.resize(size_t{params.n} * 2);
        for (uint32_t i = 0; i < params.n; ++i) {
            uint32_t m = (delta * ((q - static_cast<uint32_t>(ct.a[i] % q)) % q)) % twoN;
            rot.ginx_exp[size_t{i} * 2] = m;
            rot.ginx_exp[size_t{i} * 2 + 1] = (twoN - m) % twoN;
        }
    }
    return rot;
}

void ap_accumulate(const TwiddleTable& tw, const RefreshKeyAP& rk, const RotationSchedule& rot,
                   Accumulator& acc) {
    const ParamSet& p = rk.params;
    require(rot.ap_digits.size() == size_t{p.n} * p.d_r, "rotation schedule mismatch");
    for (uint32_t i = 0; i < p.n; ++i) {
        for (uint32_t j = 0; j < p.d_r; ++j) {
            uint32_t v = rot.ap_digits[size_t{i} * p.d_r + j];
            // v = 0 selects an encryption of X^0; it is multiplied in like any
            // other entry so the schedule length never depends on the data.
            const RgswCiphertext& ek = rk.ek[(size_t{i} * p.d_r + j) * p.B_r + v];
            acc = external_product(tw, p, acc, ek);
        }
    }
}

void ginx_accumulate(const TwiddleTable& tw, const RefreshKeyGINX& rk,
                     const RotationSchedule& rot, Accumulator& acc) {
    const ParamSet& p = rk.params;
    require(rot.ginx_exp.size() == size_t{p.n} * 2, "rotation schedule mismatch");
    for (uint32_t i = 0; i < p.n; ++i) {
        for (uint32_t c = 0; c < 2; ++c) {
            uint32_t m = rot.ginx_exp[size_t{i} * 2 + c];
            Accumulator prod = external_product(tw, p, acc, rk.ek[size_t{i} * 2 + c]);
            // ACC += (X^m - 1) * prod.
            acc.a = poly_add(acc.a, poly_sub(monomial_mul(prod.a, m), prod.a));
            acc.b = poly_add(acc.b, poly_sub(monomial_mul(prod.b, m), prod.b));
        }
    }
}

LweCiphertext extract(const ParamSet& params, const Accumulator& acc) {
    const uint32_t N = params.N;
    LweCiphertext out;
    out.modulus = params.Q;
    out.a.resize(N);
    // Constant coefficient of b - a*z as an LWE relation over the coefficients
    // of z: (a*z)_0 = a_0 z_0 - sum_{k>0} a_{N-k} z_k.
    out.a[0] = acc.a.c[0];
    for (uint32_t k = 1; k < N; ++k)
        out.a[k] = acc.a.c[N - k] == 0 ? 0 : params.Q - acc.a.c[N - k];
    out.b = (acc.b.c[0] + params.q8()) % params.Q;
    return out;
}

BootstrapKeys refresh_keygen(const ParamSet& params, BootstrapMode mode, const RlweSecret& z,
                             const LweSecretKey& sk, Rng& rng) {
    require(z.params.name == params.name && sk.params.name == params.name,
            "key material from mismatched parameter sets");
    TwiddleTable tw(params.N, params.Q);
    const uint32_t twoN = 2 * params.N;
    const uint32_t delta = params.delta();

    BootstrapKeys keys;
    if (mode == BootstrapMode::AP) {
        RefreshKeyAP rk;
        rk.params = params;
        rk.ek.reserve(size_t{params.n} * params.d_r * params.B_r);
        for (uint32_t i = 0; i < params.n; ++i) {
            int64_t si = sk.s[i];
            for (uint32_t j = 0; j < params.d_r; ++j) {
                uint64_t brj = 1;
                for (uint32_t x = 0; x < j; ++x) brj *= params.B_r;
                for (uint32_t v = 0; v < params.B_r; ++v) {
                    // X^(v * B_r^j * delta * s_i), exponent reduced mod 2N.
                    int64_t e = static_cast<int64_t>(v * brj % twoN) * delta % twoN * si % twoN;
                    uint32_t exp = static_cast<uint32_t>((e % twoN + twoN) % twoN);
                    MonomialPlain mu{false, false, exp};
                    rk.ek.push_back(rgsw_encrypt(tw, z, mu, params.error_stddev, rng));
                }
            }
        }
        keys.ap = std::move(rk);
    } else {
        RefreshKeyGINX rk;
        rk.params = params;
        rk.dist = sk.dist;
        rk.ek.reserve(size_t{params.n} * 2);
        for (uint32_t i = 0; i < params.n; ++i) {
            // Column 0 holds the positive part, column 1 the negative part;
            // binary secrets make column 1 an all-zero plaintext.
            uint32_t pos = sk.s[i] == 1 ? 1 : 0;
            uint32_t neg = sk.s[i] == -1 ? 1 : 0;
            rk.ek.push_back(rgsw_encrypt(tw, z, MonomialPlain{pos == 0, false, 0},
                                         params.error_stddev, rng));
            rk.ek.push_back(rgsw_encrypt(tw, z, MonomialPlain{neg == 0, false, 0},
                                         params.error_stddev, rng));
        }
        keys.ginx = std::move(rk);
    }

    keys.ksk = keyswitch_keygen(params, z.z, sk, rng);
    return keys;
}

LweCiphertext bootstrap(const TwiddleTable& tw, const BootstrapKeys& keys, BootstrapMode mode,
                        const LweCiphertext& ct, const Window& window) {
    require(mode == BootstrapMode::AP ? keys.ap.has_value() : keys.ginx.has_value(),
            "refresh key for the requested mode is missing");
    const ParamSet& p = mode == BootstrapMode::AP ? keys.ap->params : keys.ginx->params;
    Accumulator acc = acc_initialize(p, ct, window);
    RotationSchedule rot = prepare_rotations(p, ct, mode);
    if (mode == BootstrapMode::AP)
        ap_accumulate(tw, *keys.ap, rot, acc);
    else
        ginx_accumulate(tw, *keys.ginx, rot, acc);
    bootstrap_instrumentation().bootstraps++;
    return extract(p, acc);
}

} // namespace pimfhe
