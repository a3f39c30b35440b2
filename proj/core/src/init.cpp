#include "ca184/init.hpp"

#include <cmath>

namespace ca184 {

namespace {
constexpr double kProbTol = 1e-12;

bool is_prob(double p) { return p >= 0.0 && p <= 1.0; }
} // namespace

InitSpec InitSpec::bernoulli_ca(double p, std::uint64_t seed) {
    InitSpec s;
    s.kind = Kind::BernoulliCa;
    s.p = p;
    s.seed = seed;
    s.validate();
    return s;
}

InitSpec InitSpec::bernoulli_ba_pm(std::uint64_t seed) {
    InitSpec s;
    s.kind = Kind::BernoulliBaPM;
    s.p_plus = 0.5;
    s.p_minus = 0.5;
    s.p_zero = 0.0;
    s.seed = seed;
    return s;
}

InitSpec InitSpec::bernoulli_ba(double p_plus, double p_minus,
                                std::uint64_t seed) {
    InitSpec s;
    s.kind = Kind::BernoulliBa;
    s.p_plus = p_plus;
    s.p_minus = p_minus;
    s.p_zero = 1.0 - p_plus - p_minus;
    s.seed = seed;
    s.validate();
    return s;
}

InitSpec InitSpec::markov_ca(const std::array<std::array<double, 2>, 2>& m,
                             std::uint64_t seed) {
    InitSpec s;
    s.kind = Kind::MarkovCa;
    s.markov = m;
    s.seed = seed;
    s.validate();
    return s;
}

InitSpec InitSpec::explicit_ca(std::vector<Trit> cells) {
    InitSpec s;
    s.kind = Kind::ExplicitCa;
    s.cells = std::move(cells);
    s.validate();
    return s;
}

InitSpec InitSpec::explicit_ba(std::vector<Trit> cells) {
    InitSpec s;
    s.kind = Kind::ExplicitBa;
    s.cells = std::move(cells);
    s.validate();
    return s;
}

void InitSpec::validate() const {
    switch (kind) {
    case Kind::BernoulliCa:
        if (!is_prob(p)) throw InvalidArgument("occupation probability not in [0,1]");
        break;
    case Kind::BernoulliBaPM:
        break;
    case Kind::BernoulliBa: {
        if (!is_prob(p_plus) || !is_prob(p_minus) || !is_prob(p_zero))
            throw InvalidArgument("trit probabilities not in [0,1]");
        if (std::abs(p_plus + p_minus + p_zero - 1.0) > kProbTol)
            throw InvalidArgument("trit probabilities must sum to 1");
        break;
    }
    case Kind::MarkovCa:
        for (const auto& row : markov) {
            if (!is_prob(row[0]) || !is_prob(row[1]))
                throw InvalidArgument("Markov entries not in [0,1]");
            if (std::abs(row[0] + row[1] - 1.0) > kProbTol)
                throw InvalidArgument("Markov rows must sum to 1");
        }
        break;
    case Kind::ExplicitCa:
        for (Trit t : cells)
            if (t != 0 && t != 1) throw InvalidArgument("explicit binary cell not 0/1");
        break;
    case Kind::ExplicitBa:
        for (Trit t : cells)
            if (t < -1 || t > 1) throw InvalidArgument("explicit trit out of range");
        break;
    }
}

namespace {

RngStream init_stream(const InitSpec& spec, std::uint64_t replica) {
    return RngStream::derive(spec.seed, "init", replica);
}

Ca184Config sample_ca_impl(const InitSpec& spec, const Topology& topo,
                           RngStream& rng) {
    const std::int64_t n = topo.extent();
    BitVec bits(n);
    switch (spec.kind) {
    case InitSpec::Kind::BernoulliCa:
        for (std::int64_t i = 0; i < n; ++i)
            if (rng.bernoulli(spec.p)) bits.set(i, true);
        break;
    case InitSpec::Kind::MarkovCa: {
        // Start from the stationary law of the chain so the sampled window is
        // translation invariant in distribution. Degenerate chains (both
        // switch probabilities 0) fall back to a fair first cell.
        const double a = spec.markov[0][1]; // P(1 | 0)
        const double b = spec.markov[1][0]; // P(0 | 1)
        const double pi1 = (a + b > 0.0) ? a / (a + b) : 0.5;
        int state = rng.bernoulli(pi1) ? 1 : 0;
        bits.set(0, state == 1);
        for (std::int64_t i = 1; i < n; ++i) {
            const double p_next1 = spec.markov[static_cast<std::size_t>(state)][1];
            state = rng.bernoulli(p_next1) ? 1 : 0;
            bits.set(i, state == 1);
        }
        break;
    }
    case InitSpec::Kind::ExplicitCa: {
        if (static_cast<std::int64_t>(spec.cells.size()) != n)
            throw InvalidArgument("explicit cells do not match topology extent");
        for (std::int64_t i = 0; i < n; ++i)
            bits.set(i, spec.cells[static_cast<std::size_t>(i)] != 0);
        break;
    }
    default:
        throw InvalidArgument("spec does not produce a binary configuration");
    }
    return Ca184Config(topo, std::move(bits));
}

BaConfig sample_ba_impl(const InitSpec& spec, const Topology& topo,
                        RngStream& rng) {
    const std::int64_t n = topo.extent();
    std::vector<Trit> cells(static_cast<std::size_t>(n), 0);
    switch (spec.kind) {
    case InitSpec::Kind::BernoulliBaPM:
        for (std::int64_t i = 0; i < n; ++i)
            cells[static_cast<std::size_t>(i)] = rng.bernoulli(0.5) ? 1 : -1;
        break;
    case InitSpec::Kind::BernoulliBa:
        for (std::int64_t i = 0; i < n; ++i)
            cells[static_cast<std::size_t>(i)] =
                static_cast<Trit>(rng.trit(spec.p_plus, spec.p_minus));
        break;
    case InitSpec::Kind::ExplicitBa:
        if (static_cast<std::int64_t>(spec.cells.size()) != n)
            throw InvalidArgument("explicit cells do not match topology extent");
        cells = spec.cells;
        break;
    default:
        throw InvalidArgument("spec does not produce a trit configuration");
    }
    return BaConfig(topo, std::move(cells));
}

} // namespace

Ca184Config sample_ca(const InitSpec& spec, const Topology& topo,
                      std::uint64_t replica) {
    spec.validate();
    RngStream rng = init_stream(spec, replica);
    return sample_ca_impl(spec, topo, rng);
}

BaConfig sample_ba(const InitSpec& spec, const Topology& topo,
                   std::uint64_t replica) {
    spec.validate();
    RngStream rng = init_stream(spec, replica);
    return sample_ba_impl(spec, topo, rng);
}

std::variant<Ca184Config, BaConfig> sample_initial(const InitSpec& spec,
                                                   const Topology& topo) {
    if (spec.produces_ba()) return sample_ba(spec, topo, 0);
    return sample_ca(spec, topo, 0);
}

} // namespace ca184
