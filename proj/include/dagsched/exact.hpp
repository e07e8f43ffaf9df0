#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dagsched/books.hpp"
#include "dagsched/model.hpp"

namespace dagsched {

/// Objective alpha * sum_j U_j + beta * makespan, with U_j the task's requested cores.
struct objective_weights {
    double alpha = 0.0;
    double beta = 1.0;
};

enum class solve_status { optimal, infeasible, timed_out };

std::string_view to_string(solve_status s) noexcept;

struct exact_result {
    solve_status status = solve_status::infeasible;
    /// Set for optimal and, when an incumbent exists, timed_out.
    std::optional<schedule> best;
    double objective = 0.0;
    bool optimality_proven = false;
    /// Task that fits no node when status is infeasible.
    std::string infeasible_task;
    std::uint64_t explored = 0;
};

/// Partial list schedule: tasks placed so far, each at its earliest feasible start.
struct search_node {
    static constexpr std::size_t unassigned = static_cast<std::size_t>(-1);

    std::vector<std::size_t> node_of;
    std::vector<double> start;
    std::vector<double> end;
    std::vector<node_book> books;
    std::size_t placed = 0;
    double makespan = 0.0;

    explicit search_node(const instance& inst);

    bool assigned(std::size_t t) const noexcept { return node_of[t] != unassigned; }
};

/// Time at which task t may start on node n given where its predecessors sit
/// (all of them must be placed).
double dependency_ready(const instance& inst, const search_node& sn, std::size_t t, std::size_t n);

/// Place t on n at its earliest feasible start; returns false when t does not fit n.
bool place(const instance& inst, search_node& sn, std::size_t t, std::size_t n);

/// Admissible makespan bound for every completion of sn: the larger of the partial
/// makespan, a critical path over minimum durations, and total core-time over total cores.
double lower_bound(const instance& inst, const search_node& sn);

/// Branch-and-bound over list schedules (topological placement order x node assignment).
exact_result solve_exact(const instance& inst, objective_weights weights = {},
                         std::chrono::duration<double> time_limit = std::chrono::seconds(10));

struct oracle_limits {
    std::size_t max_tasks = 8;
    std::size_t max_nodes = 3;
};

/// Exhaustive enumeration of every assignment vector and every topological order.
/// Returns nullopt when some task fits no node; throws limit_exceeded_error past the limits.
/// Among equal makespans the lexicographically smallest assignment wins.
std::optional<schedule> brute_force_oracle(const system_model& sys, const workflow& wf,
                                           oracle_limits limits = {});

} // namespace dagsched
