#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string_view>
#include <vector>

#include "dagsched/books.hpp"
#include "dagsched/model.hpp"

namespace dagsched {

struct env_config {
    /// Episode step budget; 0 means 4 x number of tasks.
    std::size_t max_steps = 0;
    double already_assigned_penalty = -5.0;
    double dependency_penalty = -20.0;
    double feature_penalty = -5.0;
    double concurrency_penalty = -5.0;
    double timeout_base = -50.0;
    double timeout_per_task = -10.0;
    double success_base = 15.0;
    double completion_base = 30.0;
    /// Add predecessor transfer time to the earliest start (same rule as the exact solver).
    bool transfer = true;
    /// Divide the duration and makespan reward terms by the mean task duration when it
    /// exceeds success_base.
    bool reward_norm = true;
};

enum class step_event { assigned, already_assigned, unmet_dependency, feature_mismatch, over_capacity, timeout };
std::string_view to_string(step_event e) noexcept;

struct env_state {
    std::vector<std::uint8_t> assigned;
    std::vector<node_book> books;
    std::vector<std::size_t> node_of;
    std::vector<double> start;
    std::vector<double> end;
    std::size_t num_assigned = 0;
    double makespan = 0.0;
    std::size_t current_step = 0;
    bool done = false;
};

struct placement {
    std::size_t task = 0;
    std::size_t node = 0;
    double start = 0.0;
    double end = 0.0;
};

struct step_result {
    double reward = 0.0;
    bool done = false;
    step_event event = step_event::assigned;
    std::optional<placement> placed;
};

struct trace_record {
    std::size_t step = 0;
    std::size_t task = 0;
    std::size_t node = 0;
    double reward = 0.0;
    bool done = false;
    step_event event = step_event::assigned;
};

/// Single-episode scheduling environment: the agent assigns one (task, node) pair per
/// step and the task is booked at its earliest feasible start on that node.
class sched_env {
public:
    sched_env(std::shared_ptr<const instance> inst, env_config cfg = {});

    const env_state& reset();
    /// Throws index_error for out-of-range indices and error when the episode is over.
    step_result step(std::size_t task, std::size_t node);

    /// Earliest start of t on n given the current bookings; nullopt when t alone exceeds n.
    /// All predecessors of t must be assigned.
    std::optional<double> earliest_feasible_start(std::size_t t, std::size_t n) const;

    bool ready(std::size_t t) const noexcept { return !state_.assigned[t] && waiting_[t] == 0; }
    bool valid(std::size_t t, std::size_t n) const noexcept { return ready(t) && inst_->compatible(t, n); }
    /// Row-major M x N.
    std::vector<std::uint8_t> valid_action_mask() const;
    /// Unassigned tasks whose predecessors are all assigned, ascending index.
    const std::set<std::size_t>& ready_tasks() const noexcept { return ready_; }

    /// Throws incomplete_episode_error unless every task is assigned.
    schedule extract_schedule() const;

    const env_state& state() const noexcept { return state_; }
    const instance& inst() const noexcept { return *inst_; }
    const std::shared_ptr<const instance>& inst_ptr() const noexcept { return inst_; }
    const env_config& config() const noexcept { return cfg_; }
    std::size_t max_steps() const noexcept { return max_steps_; }
    /// Divisor applied to duration and makespan reward terms.
    double reward_scale() const noexcept { return reward_scale_; }
    const std::vector<trace_record>& trace() const noexcept { return trace_; }

private:
    std::shared_ptr<const instance> inst_;
    env_config cfg_;
    std::size_t max_steps_ = 0;
    double reward_scale_ = 1.0;
    env_state state_;
    std::vector<std::size_t> waiting_;
    std::set<std::size_t> ready_;
    std::vector<trace_record> trace_;
};

/// One JSON object per line: {"step","task","node","reward","done","event"}.
void write_trace_jsonl(std::ostream& out, const sched_env& env);

} // namespace dagsched
