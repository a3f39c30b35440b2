#pragma once

#include <cstdint>
#include <string>

#include "ca184/errors.hpp"

namespace ca184 {

enum class TopologyKind { Ring, Open };

/// Boundary topology of a configuration. A ring wraps periodically; an open
/// window covers the absolute coordinates [lo, hi] and is the finite-lattice
/// embedding of an infinite configuration: radius-1 rules shrink the valid
/// range by one cell per side per step, so every in-range value equals the
/// infinite-lattice value.
class Topology {
public:
    static Topology ring(std::int64_t size) {
        if (size < 3) throw InvalidArgument("ring size must be >= 3");
        return Topology(TopologyKind::Ring, 0, size - 1);
    }

    static Topology open(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw InvalidArgument("open window needs lo <= hi");
        return Topology(TopologyKind::Open, lo, hi);
    }

    TopologyKind kind() const { return kind_; }
    bool is_ring() const { return kind_ == TopologyKind::Ring; }
    bool is_open() const { return kind_ == TopologyKind::Open; }

    /// Number of cells.
    std::int64_t extent() const { return hi_ - lo_ + 1; }

    /// Absolute coordinate of cell index 0 (0 for rings).
    std::int64_t lo() const { return lo_; }
    /// Absolute coordinate of the last cell.
    std::int64_t hi() const { return hi_; }

    std::int64_t ring_size() const {
        if (!is_ring()) throw InvalidArgument("not a ring topology");
        return extent();
    }

    /// Light-cone trimming for one radius-1 step (identity on rings).
    Topology trimmed(std::int64_t per_side = 1) const {
        if (is_ring()) return *this;
        if (extent() < 2 * per_side + 1)
            throw LightConeError("open window exhausted by trimming");
        return Topology(TopologyKind::Open, lo_ + per_side, hi_ - per_side);
    }

    /// Largest step count an open window supports before the valid range
    /// empties; unbounded on rings (returns a large sentinel).
    std::int64_t max_steps() const {
        if (is_ring()) return INT64_MAX / 4;
        return (extent() - 1) / 2;
    }

    bool operator==(const Topology& o) const = default;

    std::string describe() const {
        if (is_ring()) return "ring(" + std::to_string(extent()) + ")";
        return "open[" + std::to_string(lo_) + ".." + std::to_string(hi_) + "]";
    }

private:
    Topology(TopologyKind k, std::int64_t lo, std::int64_t hi)
        : kind_(k), lo_(lo), hi_(hi) {}

    TopologyKind kind_;
    std::int64_t lo_;
    std::int64_t hi_;
};

} // namespace ca184
