#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "dagsched/env.hpp"
#include "dagsched/gnn.hpp"

namespace dagsched {

using row_matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// load, cores, memory, speed
inline constexpr std::size_t node_feature_dim = 4;
/// Ready tasks whose embeddings enter the state vector.
inline constexpr std::size_t top_ready = 4;

struct policy_dims {
    std::size_t tasks = 0;
    std::size_t nodes = 0;
    std::size_t input = task_feature_dim;
    std::size_t hidden = 32;
    std::size_t layers = 2;
    std::size_t state_hidden = 32;
    std::size_t key_dim = 8;
    std::size_t critic_hidden = 32;

    /// assigned mask, node loads, mean embedding, top-ready embeddings
    std::size_t state_dim() const noexcept { return tasks + nodes + (1 + top_ready) * hidden; }
    bool operator==(const policy_dims&) const = default;
};

/// Actor: logit(i, j) = u_i + a_i . k_j + bias_ij with
///   u_i = task_proj . h_i + task_state_i . z,   z = tanh(w_state s + b_state),
///   a_i = w_task_key h_i,                       k_j = w_node_key phi_j + b_node_key.
/// Critic: V = critic_out . tanh(w_critic s + b_critic) + critic_bias.
struct policy_params {
    encoder_params encoder;
    matrix w_state;
    matrix b_state;
    matrix task_proj;
    matrix task_state;
    matrix w_task_key;
    matrix w_node_key;
    matrix b_node_key;
    matrix pair_bias;
    matrix w_critic;
    matrix b_critic;
    matrix critic_out;
    matrix critic_bias;

    template <class F>
    void visit(F&& f) {
        encoder.visit(f);
        for (matrix* m : {&w_state, &b_state, &task_proj, &task_state, &w_task_key, &w_node_key, &b_node_key,
                          &pair_bias, &w_critic, &b_critic, &critic_out, &critic_bias})
            f(*m);
    }
    template <class F>
    void visit(F&& f) const {
        encoder.visit(f);
        for (const matrix* m : {&w_state, &b_state, &task_proj, &task_state, &w_task_key, &w_node_key, &b_node_key,
                                &pair_bias, &w_critic, &b_critic, &critic_out, &critic_bias})
            f(*m);
    }
    std::size_t parameter_count() const;
};

policy_params zeros_like(const policy_params& p);

struct policy_model {
    policy_dims dims;
    policy_params params;
    std::uint64_t seed = 0;
    std::uint64_t episodes_trained = 0;
};

/// All-zero weights of the right shapes.
policy_model blank_policy(const policy_dims& dims);
/// Deterministic in seed: uniform in +-1/sqrt(fan_in), zero biases and pair biases.
policy_model init_policy(const policy_dims& dims, std::uint64_t seed);
policy_dims dims_for(const instance& inst);
/// Throws shape_mismatch_error naming both shapes.
void check_shape(const policy_model& m, const instance& inst);

/// What the agent sees of an env state.
struct observation {
    std::vector<std::uint8_t> assigned;
    std::vector<double> loads; // latest booked end per node
};

observation observe(const sched_env& env);

/// Per-instance constants shared by every state of an episode.
struct policy_context {
    std::shared_ptr<const instance> inst;
    task_graph graph;      // assigned flags all zero
    row_matrix node_static; // N x node_feature_dim, load column zero
    double load_scale = 1.0;
    std::vector<std::vector<std::size_t>> compatible_nodes;
};

policy_context make_context(std::shared_ptr<const instance> inst);

/// Full forward pass over one state.
struct policy_eval {
    task_graph graph;
    encoder_trace enc;
    colvec state;
    colvec z;
    row_matrix task_keys;
    row_matrix node_keys;
    row_matrix node_feats;
    colvec u;
    std::vector<std::size_t> top;
    /// Valid actions (task * N + node) ascending, with their logits and masked softmax.
    std::vector<std::size_t> actions;
    colvec logits;
    colvec log_probs;
    colvec probs;
    colvec critic_hidden;
    double value = 0.0;

    const matrix& h() const { return enc.output(); }
};

policy_eval evaluate(const policy_model& m, const policy_context& ctx, const observation& obs);

/// Accumulate parameter gradients from d(loss)/d(logits over eval.actions) and d(loss)/d(value).
void backward(const policy_model& m, const policy_context& ctx, const policy_eval& ev, const colvec& d_logits,
              double d_value, policy_params& grad);

/// Index into eval.actions of the greedy choice: each task's best node by a_i . k_j + bias_ij
/// (lowest node on ties), then the task maximizing its logit (lowest task on ties).
std::size_t greedy_choice(const policy_model& m, const policy_eval& ev);

/// Greedy rollout that refreshes only what a step changes. Picks exactly what repeated
/// evaluate + greedy_choice would. Returns false when the step budget ran out.
bool greedy_rollout(const policy_model& m, const policy_context& ctx, sched_env& env);

} // namespace dagsched
