#pragma once

#include <cstdint>
#include <vector>

#include "ca184/errors.hpp"

namespace ca184 {

/// Clock resolution of a tracer path. Half-step paths tick every half time
/// unit and move +-1/2 per tick (the annihilation-system tracer); whole-step
/// paths tick every unit and move +-1 (the rule-184 tracer).
enum class PathClock { HalfStep, WholeStep };

/// Tracer path. Times and positions are stored in doubled units so
/// half-integers stay exact: one half-step tick advances time2 by 1 and pos2
/// by steps[k]; one whole-step tick advances time2 by 2 and pos2 by
/// 2*steps[k]. steps[k] must be +-1 for a valid path; validation is a
/// separate operation so malformed paths can be represented and reported.
struct SecondClassPath {
    PathClock clock = PathClock::HalfStep;
    std::int64_t start_time2 = 0;
    std::int64_t start_pos2 = 0;
    std::vector<std::int8_t> steps;

    std::int64_t tick_count() const {
        return static_cast<std::int64_t>(steps.size());
    }

    std::int64_t time2_scale() const {
        return clock == PathClock::HalfStep ? 1 : 2;
    }

    std::int64_t time2_at_tick(std::int64_t tick) const {
        return start_time2 + tick * time2_scale();
    }

    std::int64_t pos2_at_tick(std::int64_t tick) const {
        if (tick < 0 || tick > tick_count())
            throw InvalidArgument("path tick out of range");
        std::int64_t p = start_pos2;
        for (std::int64_t k = 0; k < tick; ++k)
            p += steps[static_cast<std::size_t>(k)] * time2_scale();
        return p;
    }

    std::vector<std::int64_t> positions2() const {
        std::vector<std::int64_t> out(static_cast<std::size_t>(tick_count()) + 1);
        out[0] = start_pos2;
        for (std::size_t k = 0; k < steps.size(); ++k)
            out[k + 1] = out[k] + steps[k] * time2_scale();
        return out;
    }

    bool operator==(const SecondClassPath& o) const = default;
};

} // namespace ca184
