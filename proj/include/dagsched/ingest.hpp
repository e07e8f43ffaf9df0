#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dagsched/model.hpp"

namespace dagsched {

struct instance_bundle {
    system_model system;
    std::vector<workflow> workflows;
    /// "json", "stg" or "synthetic(<seed>)".
    std::string provenance;
};

/// `{"nodes": {id: {cores, memory, features, processing_speed?, data_transfer_rate?}}}`.
/// Node order follows the document. Unknown node attributes are preserved verbatim.
system_model parse_system_json(std::string_view text);

/// `{"workflows": {id: {"tasks": {id: {...}}}}}`; every workflow is checked for cycles.
std::vector<workflow> parse_workflows_json(std::string_view text);

/// Standard Task Graph text. Tasks are named T0..T{n+1}; zero processing times
/// (the dummy source and sink) are clamped to one time unit.
workflow parse_stg(std::string_view text, std::int64_t default_cores, const feature_set& default_features,
                   std::string id = "stg");

std::string serialize_system_json(const system_model& sys);
std::string serialize_workflows_json(std::span<const workflow> workflows);

/// Layered random DAG: layers of width num_nodes, each task depending on one or two
/// tasks of the previous layer. Every task fits at least one node.
instance_bundle generate_synthetic(std::size_t num_nodes, std::size_t num_tasks, std::uint64_t seed);

std::string read_text_file(const std::filesystem::path& path);

/// Dispatches on extension: ".stg" goes through parse_stg, anything else through
/// parse_workflows_json.
std::vector<workflow> load_workflows(const std::filesystem::path& path, std::int64_t stg_default_cores = 1,
                                     const feature_set& stg_default_features = {});

} // namespace dagsched
