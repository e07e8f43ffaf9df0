#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "dagsched/model.hpp"

namespace dagsched {

using matrix = Eigen::MatrixXd;
using colvec = Eigen::VectorXd;

/// cores, memory, mean duration, 8 feature slots, assigned flag, in-degree, out-degree.
inline constexpr std::size_t task_feature_dim = 14;
inline constexpr std::size_t feature_slots = 8;

/// Slot of a feature tag: "F1".."F8" map to 0..7, anything else hashes into the 8 slots.
std::size_t feature_slot(std::string_view tag) noexcept;

struct graph_scales {
    double cores = 1.0;
    double memory = 1.0;
    double duration = 1.0;
    double degree = 1.0;
};

/// Task-only graph: one row of features per task plus both edge directions.
struct task_graph {
    matrix features; // M x task_feature_dim
    std::vector<std::vector<std::size_t>> preds;
    std::vector<std::vector<std::size_t>> succs;
    graph_scales scales;

    std::size_t size() const noexcept { return preds.size(); }
    std::size_t edge_count() const noexcept;
    void set_assigned(std::size_t t, bool on) { features(static_cast<Eigen::Index>(t), 11) = on ? 1.0 : 0.0; }
};

task_graph build_task_graph(const instance& inst, const std::vector<std::uint8_t>& assigned);

struct encoder_layer {
    matrix w_self;
    matrix w_fwd; // applied to the mean of predecessor rows
    matrix w_bwd; // applied to the mean of successor rows
    matrix bias;  // out x 1
};

struct encoder_params {
    std::vector<encoder_layer> layers;

    std::size_t input_dim() const { return layers.empty() ? 0 : static_cast<std::size_t>(layers.front().w_self.cols()); }
    std::size_t hidden_dim() const { return layers.empty() ? 0 : static_cast<std::size_t>(layers.back().w_self.rows()); }
    template <class F>
    void visit(F&& f) {
        for (auto& l : layers) {
            f(l.w_self);
            f(l.w_fwd);
            f(l.w_bwd);
            f(l.bias);
        }
    }
    template <class F>
    void visit(F&& f) const {
        for (const auto& l : layers) {
            f(l.w_self);
            f(l.w_fwd);
            f(l.w_bwd);
            f(l.bias);
        }
    }
};

/// Uniform in +-1/sqrt(fan_in), deterministic in seed.
encoder_params init_encoder(std::uint64_t seed, std::size_t input_dim, std::size_t hidden_dim, std::size_t layers);
encoder_params zeros_like(const encoder_params& p);

/// Activations of every layer; acts[0] is the input features.
struct encoder_trace {
    std::vector<matrix> acts;
    const matrix& output() const { return acts.back(); }
};

/// L rounds of h_i <- tanh(W_self h_i + W_fwd mean(pred h) + W_bwd mean(succ h) + b).
/// Throws shape_mismatch_error when feature width and params disagree.
matrix embed(const task_graph& g, const encoder_params& p);
encoder_trace embed_trace(const task_graph& g, const encoder_params& p);

/// Accumulates d(loss)/d(params) into grad given d(loss)/d(output).
void embed_backward(const task_graph& g, const encoder_params& p, const encoder_trace& tr, const matrix& d_out,
                    encoder_params& grad);

/// Keeps every layer's activations and refreshes only the rows within reach of a changed
/// task, giving the same values as a full embed.
class incremental_encoder {
public:
    incremental_encoder(const encoder_params& p, task_graph g);

    const matrix& output() const { return trace_.output(); }
    const task_graph& graph() const noexcept { return graph_; }
    /// Flip t's assigned flag and return the output rows that were recomputed.
    const std::vector<std::size_t>& set_assigned(std::size_t t, bool on);

private:
    const encoder_params& params_;
    task_graph graph_;
    encoder_trace trace_;
    std::vector<std::size_t> frontier_;
    std::vector<std::size_t> next_;
    std::vector<std::uint32_t> seen_;
    std::uint32_t epoch_ = 0;
};

} // namespace dagsched
