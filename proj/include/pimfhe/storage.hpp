#pragma once

#include <cstdint>
#include <vector>

namespace pimfhe {

// Flat word buffer that stores 32-bit words when every value fits (modulus
// < 2^32) and 64-bit words otherwise. Key material dominates memory; halving
// it keeps the largest refresh keys comfortably inside small machines.
class FlatWords {
  public:
    FlatWords() = default;
    FlatWords(size_t count, uint64_t modulus)
        : wide_(modulus > 0xFFFFFFFFull) {
        if (wide_)
            w64_.assign(count, 0);
        else
            w32_.assign(count, 0);
    }

    [[nodiscard]] size_t size() const { return wide_ ? w64_.size() : w32_.size(); }
    [[nodiscard]] bool wide() const { return wide_; }

    [[nodiscard]] uint64_t get(size_t i) const { return wide_ ? w64_[i] : w32_[i]; }
    void set(size_t i, uint64_t v) {
        if (wide_)
            w64_[i] = v;
        else
            w32_[i] = static_cast<uint32_t>(v);
    }

    [[nodiscard]] size_t byte_size() const {
        return wide_ ? w64_.size() * sizeof(uint64_t) : w32_.size() * sizeof(uint32_t);
    }

  private:
    bool wide_ = false;
    std::vector<uint32_t> w32_;
    std::vector<uint64_t> w64_;
};

} // namespace pimfhe
