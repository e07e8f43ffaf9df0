#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dagsched/errors.hpp"

namespace dagsched {

/// Orders ids "naturally": runs of digits compare by numeric value, so T2 < T10.
struct id_less {
    bool operator()(std::string_view a, std::string_view b) const noexcept;
    using is_transparent = void;
};

using feature_set = std::set<std::string>;

template <typename V>
using id_map = std::map<std::string, V, id_less>;

struct node {
    std::string id;
    std::int64_t cores = 0;
    double memory = 0.0;
    feature_set features;
    double processing_speed = 1.0;
    double data_transfer_rate = 1.0;
    /// Attributes carried through parsing but consumed by no solver (raw JSON text).
    std::map<std::string, std::string> extra;
};

struct task {
    std::string id;
    std::int64_t cores = 0;
    double memory_required = 0.0;
    feature_set features;
    double data = 0.0;
    /// One entry: node-independent work scaled by node speed.
    /// per_node_durations: entry k is the duration on the k-th node of the system.
    std::vector<double> durations{1.0};
    bool per_node_durations = false;
    std::vector<std::string> dependencies;
};

class system_model {
public:
    system_model() = default;
    explicit system_model(std::vector<node> nodes);

    const std::vector<node>& nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    const node& at(std::size_t i) const { return nodes_.at(i); }
    std::optional<std::size_t> index_of(std::string_view id) const;

private:
    std::vector<node> nodes_;
    std::unordered_map<std::string, std::size_t> index_;
};

class workflow {
public:
    workflow() = default;
    /// Tasks keep the given order. Throws unknown_task_error on a dangling dependency
    /// and error on duplicate ids. Cycles are allowed here and reported by topological_order.
    workflow(std::string id, std::vector<task> tasks);

    const std::string& id() const noexcept { return id_; }
    const std::vector<task>& tasks() const noexcept { return tasks_; }
    std::size_t size() const noexcept { return tasks_.size(); }
    const task& at(std::size_t i) const { return tasks_.at(i); }
    std::optional<std::size_t> index_of(std::string_view id) const;

    /// Predecessor indices of task i, in the order listed by the task.
    const std::vector<std::size_t>& predecessors(std::size_t i) const { return preds_.at(i); }
    const std::vector<std::size_t>& successors(std::size_t i) const { return succs_.at(i); }

private:
    std::string id_;
    std::vector<task> tasks_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> preds_;
    std::vector<std::vector<std::size_t>> succs_;
};

enum class method { exact, heft, olb, gnnrl };

std::string_view to_string(method m) noexcept;
std::optional<method> method_from_string(std::string_view s) noexcept;

struct schedule_entry {
    std::string task_id;
    std::string node_id;
    double start = 0.0;
    double end = 0.0;
};

struct schedule {
    id_map<schedule_entry> entries;
    double makespan = 0.0;
    method produced_by = method::exact;

    void add(schedule_entry e);
    void recompute_makespan() noexcept;
};

std::vector<std::string> topological_order(const workflow& wf);

/// Index-based variant; ties broken by id_less on task ids.
std::vector<std::size_t> topological_indices(const workflow& wf);

double effective_duration(const task& t, const node& n, std::size_t node_index) noexcept;

double transfer_time(const task& pred, const node& pred_node, const node& succ_node) noexcept;

bool features_satisfied(const task& t, const node& n) noexcept;

enum class constraint_family { assignment, feature, resource, timing, makespan, dependency };

std::string_view to_string(constraint_family f) noexcept;

struct violation {
    constraint_family family;
    std::vector<std::string> ids;
    std::string message;
};

struct validation_report {
    std::vector<violation> violations;

    bool clean() const noexcept { return violations.empty(); }
    std::size_t count(constraint_family f) const noexcept;
};

enum class validation_mode {
    full,
    /// Assignment uniqueness, features and dependency order without transfer times.
    relaxed,
};

validation_report validate_schedule(const schedule& s, const workflow& wf, const system_model& sys,
                                    validation_mode mode = validation_mode::full);

/// Comparison slack used for time arithmetic across the library.
inline constexpr double time_epsilon = 1e-9;

bool time_leq(double a, double b) noexcept;

/// Precomputed, index-based view of a (system, workflow) pair shared by the solvers.
class instance {
public:
    /// Throws cycle_error when the workflow has no topological order.
    instance(system_model sys, workflow wf);

    const system_model& system() const noexcept { return *sys_; }
    const workflow& flow() const noexcept { return *wf_; }
    std::size_t num_tasks() const noexcept { return num_tasks_; }
    std::size_t num_nodes() const noexcept { return num_nodes_; }

    double duration(std::size_t t, std::size_t n) const noexcept { return duration_[t * num_nodes_ + n]; }
    /// Features subset and the task alone fits node capacity.
    bool compatible(std::size_t t, std::size_t n) const noexcept { return compat_[t * num_nodes_ + n] != 0; }
    bool features_match(std::size_t t, std::size_t n) const noexcept { return feat_[t * num_nodes_ + n] != 0; }
    bool fits_capacity(std::size_t t, std::size_t n) const noexcept;
    double transfer(std::size_t pred, std::size_t from, std::size_t to) const noexcept;

    /// Minimum duration over compatible nodes (infinity when none).
    double min_duration(std::size_t t) const noexcept { return min_duration_[t]; }
    const std::vector<std::size_t>& topo() const noexcept { return topo_; }
    const std::vector<std::size_t>& predecessors(std::size_t t) const { return wf_->predecessors(t); }
    const std::vector<std::size_t>& successors(std::size_t t) const { return wf_->successors(t); }

    /// First task that fits no node, if any.
    std::optional<std::size_t> first_unplaceable_task() const noexcept;

    /// Build a schedule from per-task (node, start) decisions.
    schedule make_schedule(std::span<const std::size_t> node_of, std::span<const double> start_of,
                           method m) const;

private:
    std::shared_ptr<const system_model> sys_;
    std::shared_ptr<const workflow> wf_;
    std::size_t num_tasks_ = 0;
    std::size_t num_nodes_ = 0;
    std::vector<double> duration_;
    std::vector<std::uint8_t> compat_;
    std::vector<std::uint8_t> feat_;
    std::vector<double> min_duration_;
    std::vector<std::size_t> topo_;
};

} // namespace dagsched
