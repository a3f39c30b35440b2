#pragma once

#include <cstdint>
#include <vector>

#include "ca184/errors.hpp"

namespace ca184 {

/// Bit-packed cell storage, LSB-first within each 64-bit word. This is the
/// canonical representation of binary configurations so the word-parallel
/// stepper pays no packing cost.
class BitVec {
public:
    BitVec() = default;

    explicit BitVec(std::int64_t size, bool fill = false)
        : size_(size),
          words_((size + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
        mask_tail();
    }

    std::int64_t size() const { return size_; }

    bool get(std::int64_t i) const {
        return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
    }

    void set(std::int64_t i, bool v) {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        auto& w = words_[static_cast<std::size_t>(i >> 6)];
        if (v)
            w |= bit;
        else
            w &= ~bit;
    }

    std::int64_t popcount() const {
        std::int64_t n = 0;
        for (std::uint64_t w : words_) n += __builtin_popcountll(w);
        return n;
    }

    /// Copy of the bit range [from, from+count).
    BitVec slice(std::int64_t from, std::int64_t count) const {
        if (from < 0 || count < 0 || from + count > size_)
            throw InvalidArgument("BitVec::slice out of range");
        BitVec out(count);
        const std::int64_t shift = from & 63;
        const std::size_t base = static_cast<std::size_t>(from >> 6);
        for (std::size_t i = 0; i < out.words_.size(); ++i) {
            std::uint64_t w = words_[base + i] >> shift;
            if (shift != 0 && base + i + 1 < words_.size())
                w |= words_[base + i + 1] << (64 - shift);
            out.words_[i] = w;
        }
        out.mask_tail();
        return out;
    }

    std::vector<std::uint64_t>& words() { return words_; }
    const std::vector<std::uint64_t>& words() const { return words_; }

    /// Zero out bits beyond size_ in the last word; word-parallel kernels may
    /// shift garbage into them.
    void mask_tail() {
        if (size_ == 0 || words_.empty()) return;
        const int used = static_cast<int>(size_ & 63);
        if (used != 0) words_.back() &= (~std::uint64_t{0}) >> (64 - used);
    }

    bool operator==(const BitVec& o) const {
        return size_ == o.size_ && words_ == o.words_;
    }

private:
    std::int64_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace ca184
