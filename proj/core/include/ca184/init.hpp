#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "ca184/config.hpp"
#include "ca184/rng.hpp"
#include "ca184/topology.hpp"

namespace ca184 {

/// Seeded initial-state sampler specification. Identical
/// (seed, spec, topology) triples yield bit-identical configurations; Monte
/// Carlo replicas derive disjoint streams from the same seed.
struct InitSpec {
    enum class Kind {
        BernoulliCa,  // i.i.d. occupied with probability p
        BernoulliBaPM,// i.i.d. +-1 fair coin per site, no holes
        BernoulliBa,  // i.i.d. trits with (p_plus, p_minus, p_zero)
        MarkovCa,     // 2-state Markov chain, started from its stationary law
        ExplicitCa,   // fixed binary cells
        ExplicitBa,   // fixed trit cells
    };

    Kind kind = Kind::BernoulliCa;
    double p = 0.5;
    double p_plus = 0.0;
    double p_minus = 0.0;
    double p_zero = 1.0;
    // Row-stochastic transition matrix markov[current][next].
    std::array<std::array<double, 2>, 2> markov{{{0.5, 0.5}, {0.5, 0.5}}};
    std::vector<Trit> cells;
    std::uint64_t seed = 0;

    static InitSpec bernoulli_ca(double p, std::uint64_t seed);
    static InitSpec bernoulli_ba_pm(std::uint64_t seed);
    static InitSpec bernoulli_ba(double p_plus, double p_minus,
                                 std::uint64_t seed);
    static InitSpec markov_ca(const std::array<std::array<double, 2>, 2>& m,
                              std::uint64_t seed);
    static InitSpec explicit_ca(std::vector<Trit> cells);
    static InitSpec explicit_ba(std::vector<Trit> cells);

    bool produces_ba() const {
        return kind == Kind::BernoulliBaPM || kind == Kind::BernoulliBa ||
               kind == Kind::ExplicitBa;
    }

    /// Throws InvalidArgument on a bad probability vector or Markov matrix.
    void validate() const;
};

/// Sample one configuration using the spec's own seed (replica 0).
std::variant<Ca184Config, BaConfig> sample_initial(const InitSpec& spec,
                                                   const Topology& topo);

/// Replica-addressed samplers for parallel Monte Carlo.
Ca184Config sample_ca(const InitSpec& spec, const Topology& topo,
                      std::uint64_t replica);
BaConfig sample_ba(const InitSpec& spec, const Topology& topo,
                   std::uint64_t replica);

} // namespace ca184
