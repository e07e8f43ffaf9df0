#pragma once

#include <stdexcept>
#include <string>

namespace dagsched {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class parse_error : public error {
public:
    parse_error(std::string path, const std::string& what)
        : error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}

    /// JSON path (dotted) or "line N" locating the offending input.
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

class cycle_error : public error {
public:
    explicit cycle_error(std::string task_id)
        : error("dependency cycle through task '" + task_id + "'"), task_id_(std::move(task_id)) {}

    /// A task that lies on the detected cycle.
    const std::string& task_id() const noexcept { return task_id_; }

private:
    std::string task_id_;
};

class empty_system_error : public error {
public:
    empty_system_error() : error("system has no nodes") {}
};

class unknown_task_error : public error {
public:
    explicit unknown_task_error(const std::string& id) : error("unknown task '" + id + "'") {}
};

class unknown_node_error : public error {
public:
    explicit unknown_node_error(const std::string& id) : error("unknown node '" + id + "'") {}
};

/// A task whose features or resource request fit no node.
class infeasible_task_error : public error {
public:
    explicit infeasible_task_error(std::string task_id)
        : error("task '" + task_id + "' fits no node (features or capacity)"),
          task_id_(std::move(task_id)) {}
    const std::string& task_id() const noexcept { return task_id_; }

private:
    std::string task_id_;
};

class limit_exceeded_error : public error {
public:
    using error::error;
};

class index_error : public error {
public:
    using error::error;
};

class shape_mismatch_error : public error {
public:
    using error::error;
};

class format_error : public error {
public:
    using error::error;
};

class incomplete_episode_error : public error {
public:
    using error::error;
};

class no_valid_action_error : public error {
public:
    no_valid_action_error() : error("action mask has no valid entry") {}
};

class non_finite_loss_error : public error {
public:
    non_finite_loss_error(std::size_t minibatch, const std::string& what)
        : error("non-finite loss in minibatch " + std::to_string(minibatch) + ": " + what),
          minibatch_(minibatch) {}
    std::size_t minibatch() const noexcept { return minibatch_; }

private:
    std::size_t minibatch_;
};

} // namespace dagsched
