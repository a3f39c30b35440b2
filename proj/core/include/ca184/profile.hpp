#pragma once

#include <cstdint>
#include <vector>

#include "ca184/errors.hpp"

namespace ca184 {

/// Integer lattice path: heights at the integer nodes
/// origin, origin+1, ..., origin+step_count(), with consecutive differences
/// in {-1, 0, +1}. All arithmetic is exact. Counting profiles of particle
/// configurations and sliding-minimum outputs both live here.
class HeightProfile {
public:
    HeightProfile(std::int64_t origin, std::int64_t base,
                  std::vector<std::int8_t> steps)
        : origin_(origin), base_(base), steps_(std::move(steps)) {
        for (std::int8_t s : steps_)
            if (s < -1 || s > 1) throw InvalidArgument("profile step out of range");
    }

    static HeightProfile constant(std::int64_t origin, std::int64_t base,
                                  std::int64_t node_count) {
        if (node_count < 1) throw InvalidArgument("profile needs >= 1 node");
        return HeightProfile(origin, base,
                             std::vector<std::int8_t>(node_count - 1, 0));
    }

    /// Build from explicit node heights (differences must be in {-1,0,+1}).
    static HeightProfile from_heights(std::int64_t origin,
                                      const std::vector<std::int64_t>& h) {
        if (h.empty()) throw InvalidArgument("profile needs >= 1 node");
        std::vector<std::int8_t> steps(h.size() - 1);
        for (std::size_t i = 0; i + 1 < h.size(); ++i) {
            const std::int64_t d = h[i + 1] - h[i];
            if (d < -1 || d > 1)
                throw InvalidArgument("height difference out of range");
            steps[i] = static_cast<std::int8_t>(d);
        }
        return HeightProfile(origin, h.front(), std::move(steps));
    }

    std::int64_t origin() const { return origin_; }
    std::int64_t base() const { return base_; }
    std::int64_t step_count() const {
        return static_cast<std::int64_t>(steps_.size());
    }
    std::int64_t node_count() const { return step_count() + 1; }
    /// Abscissa of the last node.
    std::int64_t end() const { return origin_ + step_count(); }

    const std::vector<std::int8_t>& steps() const { return steps_; }

    std::vector<std::int64_t> heights() const {
        std::vector<std::int64_t> h(static_cast<std::size_t>(node_count()));
        h[0] = base_;
        for (std::size_t i = 0; i < steps_.size(); ++i)
            h[i + 1] = h[i] + steps_[i];
        return h;
    }

    std::int64_t height_at(std::int64_t abscissa) const {
        if (abscissa < origin_ || abscissa > end())
            throw InvalidArgument("abscissa outside profile");
        std::int64_t h = base_;
        for (std::int64_t k = origin_; k < abscissa; ++k)
            h += steps_[static_cast<std::size_t>(k - origin_)];
        return h;
    }

    /// Same shape, shifted so that height_at(abscissa) == value.
    HeightProfile rebased(std::int64_t abscissa, std::int64_t value) const {
        HeightProfile out = *this;
        out.base_ += value - height_at(abscissa);
        return out;
    }

    bool operator==(const HeightProfile& o) const {
        return origin_ == o.origin_ && base_ == o.base_ && steps_ == o.steps_;
    }

private:
    std::int64_t origin_;
    std::int64_t base_;
    std::vector<std::int8_t> steps_;
};

} // namespace ca184
