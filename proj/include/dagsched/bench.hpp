#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dagsched/env.hpp"
#include "dagsched/exact.hpp"
#include "dagsched/heuristics.hpp"
#include "dagsched/ppo.hpp"

namespace dagsched {

/// Shortest text that parses back to the same double.
std::string format_number(double x);

std::string schedule_to_json(const schedule& s);
/// Reads `{"assignments": {task: {node, start, end}}, "makespan": x, "method": m}`.
/// The stored makespan is kept as written so the validator can check it.
schedule schedule_from_json(std::string_view text);

/// One lane per system node (system order) with its tasks sorted by start; lanes for
/// nodes unknown to the system follow in id order.
std::string gantt_json(const schedule& s, const system_model& sys);

/// "episode,reward,makespan" rows.
std::string training_log_csv(std::span<const episode_log> log);

struct bench_record {
    std::string workflow;
    std::string method;
    std::size_t num_nodes = 0;
    std::size_t num_tasks = 0;
    std::optional<double> makespan;
    double solver_time_s = 0.0;
    /// Peak RSS growth during the solve; empty when it could not be measured.
    std::optional<double> mem_diff_mb;
    /// clean, INVALID, INFEASIBLE, TIMEOUT, SKIPPED or FAILED.
    std::string status;

    bool operator==(const bench_record&) const = default;
};

inline constexpr std::string_view bench_csv_header =
    "workflow,method,num_nodes,num_tasks,makespan,solver_time_s,mem_diff_mb,status";

std::string bench_csv(std::span<const bench_record> rows);
/// Inverse of bench_csv; throws parse_error naming the line.
std::vector<bench_record> parse_bench_csv(std::string_view text);
std::string bench_table(std::span<const bench_record> rows);

struct bench_options {
    std::vector<std::string> methods{"exact", "heft", "olb", "gnnrl"};
    objective_weights weights;
    double time_limit_s = 60.0;
    heuristic_options heuristics;
    env_config env;
    /// Training settings for gnnrl; episodes is the training budget.
    ppo_config ppo;
    policy_dims dims;
    /// Where gnnrl models are saved between the two gnnrl rows. Empty: a temporary
    /// directory that is cleaned up afterwards.
    std::filesystem::path model_dir;
    bool parallel = false;
};

/// Rows grouped by workflow, methods in the given order. gnnrl yields two rows:
/// gnnrl-train-test (training plus inference) and gnnrl-test (load plus inference).
/// Cell failures become FAILED rows; diagnostics are appended to notes when given.
std::vector<bench_record> run_bench(const system_model& sys, std::span<const workflow> workflows,
                                    const bench_options& opts, std::vector<std::string>* notes = nullptr);

struct scale_size {
    std::size_t nodes = 0;
    std::size_t tasks = 0;
};

/// "10x10,100x100" as nodes x tasks. Throws error on malformed input.
std::vector<scale_size> parse_sizes(std::string_view text);

struct scale_options {
    std::vector<std::string> methods{"olb", "heft", "gnnrl"};
    std::uint64_t seed = 0;
    double time_budget_s = 60.0;
    heuristic_options heuristics;
    env_config env;
    /// gnnrl is trained this many episodes first (0: untrained masked policy).
    std::size_t train_episodes = 0;
    /// gnnrl cells whose M x N action space exceeds this are SKIPPED.
    std::size_t max_gnnrl_actions = 4'000'000;
    oracle_limits exact_scale;
};

/// Synthetic instances per size. Exact is SKIPPED beyond oracle scale; a cell whose
/// wall time exceeds the budget is marked TIMEOUT (the exact solver stops at the budget).
std::vector<bench_record> run_scale(std::span<const scale_size> sizes, const scale_options& opts,
                                    std::vector<std::string>* notes = nullptr);

} // namespace dagsched
