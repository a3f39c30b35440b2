#pragma once

#include <cstdint>
#include <vector>

#include "ca184/bitvec.hpp"
#include "ca184/topology.hpp"

namespace ca184 {

using Trit = std::int8_t; // -1, 0, +1

/// Binary occupancy configuration for the rule-184 automaton. Immutable in
/// spirit: steppers return fresh configurations, so values can be shared
/// read-only across threads.
class Ca184Config {
public:
    Ca184Config(Topology topo, BitVec cells)
        : topo_(topo), cells_(std::move(cells)) {
        if (cells_.size() != topo_.extent())
            throw InvalidArgument("cell count does not match topology extent");
    }

    static Ca184Config zeros(Topology topo) {
        return Ca184Config(topo, BitVec(topo.extent()));
    }

    static Ca184Config ones(Topology topo) {
        return Ca184Config(topo, BitVec(topo.extent(), true));
    }

    /// Checkerboard with particles on odd coordinates (index parity on rings,
    /// absolute coordinate parity on open windows). Rings must be even-sized
    /// or the pattern cannot close.
    static Ca184Config checkerboard_odd(Topology topo) {
        return checkerboard(topo, 1);
    }

    /// Checkerboard with particles on even coordinates.
    static Ca184Config checkerboard_even(Topology topo) {
        return checkerboard(topo, 0);
    }

    const Topology& topology() const { return topo_; }
    std::int64_t extent() const { return topo_.extent(); }

    /// Cell by local index in [0, extent).
    bool cell(std::int64_t i) const { return cells_.get(i); }
    void set_cell(std::int64_t i, bool v) { cells_.set(i, v); }

    /// Cell by absolute coordinate (open windows only differ from local).
    bool cell_at(std::int64_t coord) const {
        return cells_.get(coord - topo_.lo());
    }

    std::int64_t particle_count() const { return cells_.popcount(); }

    const BitVec& bits() const { return cells_; }
    BitVec& bits() { return cells_; }

    bool operator==(const Ca184Config& o) const {
        return topo_ == o.topo_ && cells_ == o.cells_;
    }

private:
    static Ca184Config checkerboard(Topology topo, int occupied_parity) {
        if (topo.is_ring() && topo.extent() % 2 != 0)
            throw InvalidArgument("checkerboard needs an even ring");
        BitVec b(topo.extent());
        for (std::int64_t i = 0; i < topo.extent(); ++i) {
            const std::int64_t coord = topo.lo() + i;
            // (coord mod 2) kept non-negative for negative coordinates
            const int parity = static_cast<int>(((coord % 2) + 2) % 2);
            if (parity == occupied_parity) b.set(i, true);
        }
        return Ca184Config(topo, std::move(b));
    }

    Topology topo_;
    BitVec cells_;
};

/// Trit-valued configuration of the annihilating particle system: +1 is a
/// right-mover, -1 a left-mover, 0 an empty site.
class BaConfig {
public:
    BaConfig(Topology topo, std::vector<Trit> cells)
        : topo_(topo), cells_(std::move(cells)) {
        if (static_cast<std::int64_t>(cells_.size()) != topo_.extent())
            throw InvalidArgument("cell count does not match topology extent");
        for (Trit t : cells_)
            if (t < -1 || t > 1) throw InvalidArgument("trit out of range");
    }

    static BaConfig zeros(Topology topo) {
        return BaConfig(topo, std::vector<Trit>(topo.extent(), 0));
    }

    const Topology& topology() const { return topo_; }
    std::int64_t extent() const { return topo_.extent(); }

    Trit cell(std::int64_t i) const { return cells_[static_cast<std::size_t>(i)]; }
    void set_cell(std::int64_t i, Trit v) { cells_[static_cast<std::size_t>(i)] = v; }
    Trit cell_at(std::int64_t coord) const {
        return cells_[static_cast<std::size_t>(coord - topo_.lo())];
    }

    std::int64_t count_plus() const { return count(1); }
    std::int64_t count_minus() const { return count(-1); }
    std::int64_t particle_count() const { return count(1) + count(-1); }

    /// Local indices of all particles, in order.
    std::vector<std::int64_t> particle_indices() const {
        std::vector<std::int64_t> out;
        for (std::int64_t i = 0; i < extent(); ++i)
            if (cells_[static_cast<std::size_t>(i)] != 0) out.push_back(i);
        return out;
    }

    const std::vector<Trit>& cells() const { return cells_; }

    bool operator==(const BaConfig& o) const {
        return topo_ == o.topo_ && cells_ == o.cells_;
    }

private:
    std::int64_t count(Trit v) const {
        std::int64_t n = 0;
        for (Trit t : cells_) n += (t == v);
        return n;
    }

    Topology topo_;
    std::vector<Trit> cells_;
};

/// Classification of a trit window into the families that matter for
/// invariance: empty, single-species, single phase boundary (all right-movers
/// left of all left-movers, one converging interface), or mixed. The phase
/// boundary class is the finite-window analogue of the infinite-lattice
/// definition; on a window "infinitely many particles of each sign" weakens
/// to "at least one on each side of the interface".
struct ConfigClass {
    enum class Kind { Empty, AllPositive, AllNegative, SinglePhaseBoundary, Mixed };
    Kind kind = Kind::Empty;
    // Converging interface data, valid for SinglePhaseBoundary. midgap2 is the
    // midpoint statistic (neg - pos)/2 stored in doubled units to stay integer.
    std::int64_t pos = 0;
    std::int64_t neg = 0;
    std::int64_t midgap2 = 0;
};

ConfigClass classify_config(const BaConfig& zeta);

/// Mirror image with all velocities flipped (the reflection symmetry of the
/// dynamics). Open windows keep their coordinate range.
BaConfig mirror_flip(const BaConfig& zeta);

} // namespace ca184
