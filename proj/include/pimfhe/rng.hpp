#pragma once

#include <cstdint>
#include <random>

namespace pimfhe {

// Seeded deterministic randomness. Reproducibility matters more than
// cryptographic strength here; every keygen/encrypt entry point takes one of
// these so runs can be replayed exactly.
class Rng {
  public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    // Uniform in [0, bound); bound > 0.
    uint64_t uniform(uint64_t bound) {
        return std::uniform_int_distribution<uint64_t>(0, bound - 1)(gen_);
    }

    // Rounded Gaussian, zero-centered. stddev == 0 yields exactly 0, which is
    // the hook the noiseless algebra tests use.
    int64_t gaussian(double stddev) {
        if (stddev == 0.0) return 0;
        return static_cast<int64_t>(std::llround(normal_(gen_) * stddev));
    }

    // Gaussian noise lifted into [0, modulus).
    uint64_t gaussian_mod(double stddev, uint64_t modulus) {
        int64_t e = gaussian(stddev);
        int64_t r = e % static_cast<int64_t>(modulus);
        if (r < 0) r += static_cast<int64_t>(modulus);
        return static_cast<uint64_t>(r);
    }

    std::mt19937_64& engine() { return gen_; }

  private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace pimfhe
