#pragma once

#include <cstdint>
#include <string_view>

#include "ca184/errors.hpp"

namespace ca184 {

namespace detail {

// SplitMix64 finalizer. The whole generator below is counter-based: output i
// is a pure function of (key, i), so streams can be split and replayed.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

} // namespace detail

/// Deterministic counter-based stream. Streams are derived from
/// (master_seed, stream_label, replica_index); equal triples yield identical
/// sequences on every platform, distinct triples yield decorrelated ones.
/// Replicas of a Monte Carlo experiment each get their own stream, so results
/// do not depend on thread scheduling.
class RngStream {
public:
    explicit RngStream(std::uint64_t key) : key_(key) {}

    static RngStream derive(std::uint64_t master_seed, std::string_view label,
                            std::uint64_t replica = 0) {
        std::uint64_t k = detail::mix64(master_seed ^ 0x9E3779B97F4A7C15ull);
        k = detail::mix64(k ^ detail::fnv1a64(label));
        k = detail::mix64(k + replica * 0xD1342543DE82EF95ull);
        return RngStream(k);
    }

    std::uint64_t next_u64() {
        ++counter_;
        return detail::mix64(key_ + counter_ * 0x9E3779B97F4A7C15ull);
    }

    /// Uniform double in [0, 1), 53 bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n), unbiased (rejection).
    std::uint64_t next_below(std::uint64_t n) {
        if (n == 0) throw InvalidArgument("next_below: n must be positive");
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    bool bernoulli(double p) { return next_unit() < p; }

    /// Trit-valued draw: +1 with p_plus, -1 with p_minus, 0 otherwise.
    int trit(double p_plus, double p_minus) {
        const double u = next_unit();
        if (u < p_plus) return 1;
        if (u < p_plus + p_minus) return -1;
        return 0;
    }

    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace ca184
