#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace dagsched {

struct booked_interval {
    double start = 0.0;
    double end = 0.0;
    std::int64_t cores = 0;
    double memory = 0.0;
};

struct capacity {
    std::int64_t cores = 0;
    double memory = 0.0;
};

/// Reservations on one compute node. Usage is piecewise constant between
/// interval endpoints, so capacity only needs checking at those points.
class node_book {
public:
    const std::vector<booked_interval>& intervals() const noexcept { return intervals_; }
    bool empty() const noexcept { return intervals_.empty(); }
    void add(const booked_interval& iv) {
        intervals_.push_back(iv);
        horizon_ = iv.end > horizon_ ? iv.end : horizon_;
    }
    /// Latest reserved end time (0 when empty).
    double horizon() const noexcept { return horizon_; }

    /// Smallest t >= ready such that [t, t + duration) stays within cap with the
    /// request added. Candidates are `ready` and every reserved end after it.
    /// nullopt when the request alone exceeds cap.
    std::optional<double> earliest_start(double ready, double duration, std::int64_t cores, double memory,
                                         capacity cap) const;

    /// Usage at instant t over intervals with start <= t < end.
    capacity usage_at(double t) const noexcept;

private:
    std::vector<booked_interval> intervals_;
    double horizon_ = 0.0;
};

} // namespace dagsched
