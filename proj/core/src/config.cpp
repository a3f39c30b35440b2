#include "ca184/config.hpp"

namespace ca184 {

namespace {

// Sign sequence of the particles in scan order. For a single phase boundary
// we need the pattern +^a -^b with a,b >= 1; on a ring the pattern is read
// cyclically (exactly one +- descent).
struct SignScan {
    std::vector<std::int64_t> idx;
    std::vector<Trit> sign;
};

SignScan scan_particles(const BaConfig& zeta) {
    SignScan s;
    for (std::int64_t i = 0; i < zeta.extent(); ++i) {
        const Trit t = zeta.cell(i);
        if (t != 0) {
            s.idx.push_back(i);
            s.sign.push_back(t);
        }
    }
    return s;
}

} // namespace

ConfigClass classify_config(const BaConfig& zeta) {
    ConfigClass out;
    const SignScan s = scan_particles(zeta);
    const std::size_t m = s.idx.size();

    if (m == 0) {
        out.kind = ConfigClass::Kind::Empty;
        return out;
    }

    bool any_plus = false, any_minus = false;
    for (Trit t : s.sign) (t > 0 ? any_plus : any_minus) = true;
    if (!any_minus) {
        out.kind = ConfigClass::Kind::AllPositive;
        return out;
    }
    if (!any_plus) {
        out.kind = ConfigClass::Kind::AllNegative;
        return out;
    }

    // Both species present: count converging (+-) and diverging (-+)
    // adjacencies among subsequent particles, including the wrap pair on
    // rings.
    const bool ring = zeta.topology().is_ring();
    std::size_t converging = 0, diverging = 0;
    std::size_t conv_at = 0;
    const std::size_t pairs = ring ? m : m - 1;
    for (std::size_t k = 0; k < pairs; ++k) {
        const Trit a = s.sign[k];
        const Trit b = s.sign[(k + 1) % m];
        if (a > 0 && b < 0) {
            ++converging;
            conv_at = k;
        } else if (a < 0 && b > 0) {
            ++diverging;
        }
    }

    const bool single_boundary =
        ring ? (converging == 1) : (converging == 1 && diverging == 0);
    if (single_boundary) {
        out.kind = ConfigClass::Kind::SinglePhaseBoundary;
        out.pos = zeta.topology().lo() + s.idx[conv_at];
        out.neg = zeta.topology().lo() + s.idx[(conv_at + 1) % m];
        out.midgap2 = out.neg - out.pos; // (neg - pos)/2 in doubled units
        return out;
    }

    out.kind = ConfigClass::Kind::Mixed;
    return out;
}

BaConfig mirror_flip(const BaConfig& zeta) {
    std::vector<Trit> cells(static_cast<std::size_t>(zeta.extent()));
    for (std::int64_t i = 0; i < zeta.extent(); ++i)
        cells[static_cast<std::size_t>(zeta.extent() - 1 - i)] =
            static_cast<Trit>(-zeta.cell(i));
    return BaConfig(zeta.topology(), std::move(cells));
}

} // namespace ca184
