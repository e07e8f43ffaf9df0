#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "dagsched/env.hpp"
#include "dagsched/policy.hpp"
#include "dagsched/rng.hpp"

namespace dagsched {

struct ppo_config {
    double learning_rate = 3e-4;
    double gamma = 0.99;
    double gae_lambda = 0.95;
    double clip = 0.2;
    std::size_t epochs = 4;
    std::size_t minibatches = 4;
    std::size_t episodes = 0;
    double entropy_coef = 0.01;
    double value_coef = 0.5;
    /// Global gradient-norm clip; 0 disables.
    double max_grad_norm = 0.5;
    bool normalize_advantages = true;
    std::uint64_t seed = 0;

    /// Throws error on out-of-range values.
    void check() const;
};

struct transition {
    observation obs;
    std::size_t action = 0; // task * N + node
    double logprob = 0.0;
    double reward = 0.0;
    double value = 0.0;
    bool done = false;
};

struct action_choice {
    std::size_t action = 0;
    double logprob = 0.0;
};

/// Sample from softmax(logits) restricted to mask (masked entries get probability 0).
/// Throws no_valid_action_error when the mask has no true entry.
action_choice select_action(const colvec& logits, const std::vector<std::uint8_t>& mask, rng& r);
/// Sample an action for the current state of the model.
action_choice select_action(const policy_eval& ev, rng& r);

struct gae_result {
    std::vector<double> advantages;
    std::vector<double> returns;
};

/// delta_t = r_t + gamma V(s_{t+1}) - V(s_t), A_t = sum_l (gamma lambda)^l delta_{t+l};
/// the value after a done transition is 0. returns = advantages + values (before any normalization).
gae_result compute_gae(const std::vector<transition>& traj, double gamma, double lambda);
/// Shift to zero mean and scale to unit variance (left alone when the variance is 0).
void normalize(std::vector<double>& xs);

class adam {
public:
    explicit adam(const policy_params& shape, double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8);
    void step(policy_params& params, const policy_params& grad, double lr);
    std::uint64_t steps() const noexcept { return t_; }

private:
    std::vector<matrix> m_;
    std::vector<matrix> v_;
    double beta1_, beta2_, eps_;
    std::uint64_t t_ = 0;
};

struct update_metrics {
    double policy_loss = 0.0;
    double value_loss = 0.0;
    double entropy = 0.0;
    double mean_ratio = 0.0;
    double clip_fraction = 0.0;
    std::size_t minibatches = 0;
};

/// Loss of one minibatch and its gradient (when grad is non-null):
///   -mean(min(r A, clip(r) A)) - entropy_coef * mean(H) + value_coef * mean((G - V)^2).
struct minibatch_loss {
    double total = 0.0;
    double policy = 0.0;
    double value = 0.0;
    double entropy = 0.0;
    double ratio_sum = 0.0;
    std::size_t clipped = 0;
};
minibatch_loss ppo_loss(const policy_model& m, const policy_context& ctx, const std::vector<const transition*>& batch,
                        const std::vector<double>& advantages, const std::vector<double>& returns,
                        const ppo_config& cfg, policy_params* grad);

/// K epochs of shuffled minibatch updates. Throws non_finite_loss_error naming the minibatch.
update_metrics ppo_update(policy_model& m, adam& opt, const policy_context& ctx, const std::vector<transition>& buffer,
                          const ppo_config& cfg, rng& r);

struct episode_log {
    std::size_t episode = 0;
    double reward = 0.0;
    double makespan = 0.0;
    bool completed = false;
};

struct training_result {
    policy_model model;
    std::vector<episode_log> log;
};

/// Called after every episode; return false to stop early.
using episode_callback = std::function<bool(const episode_log&, const policy_model&)>;

training_result train(std::shared_ptr<const instance> inst, const env_config& env_cfg, const ppo_config& cfg,
                      policy_dims dims = {}, const episode_callback& on_episode = {});

/// Greedy rollout; throws incomplete_episode_error when the step budget runs out.
schedule infer_schedule(const policy_model& m, std::shared_ptr<const instance> inst, const env_config& env_cfg = {});

} // namespace dagsched
