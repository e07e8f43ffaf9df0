#pragma once

#include "dagsched/model.hpp"

namespace dagsched {

using rank_table = id_map<double>;

struct heuristic_options {
    /// Add predecessor data-transfer time when a candidate node differs from the
    /// predecessor's node. Without it schedules only pass relaxed validation.
    bool include_transfer = true;
    /// OLB compares nodes by speed-scaled duration instead of the raw task duration.
    bool olb_speed_scaled = false;
};

/// rank(t) = avg_comp(t) + max rank over t's dependencies (avg_comp(t) for sources),
/// where avg_comp averages the task's duration over every node of the system.
rank_table heft_ranks(const instance& inst);

/// Rank-priority list scheduling: repeatedly takes the highest-ranked task whose
/// dependencies are all scheduled (ties by id) and puts it on the candidate node with
/// the earliest finish. Each node keeps a single availability frontier.
/// Throws infeasible_task_error when a task fits no node.
schedule schedule_heft(const instance& inst, const heuristic_options& opts = {});

/// Opportunistic load balancing: tasks in topological order, each on the node where
/// start + raw duration is smallest (first node wins ties).
schedule schedule_olb(const instance& inst, const heuristic_options& opts = {});

} // namespace dagsched
