#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dagsched/policy.hpp"

namespace dagsched {

inline constexpr std::uint32_t model_format_version = 1;

/// Little-endian: "GRLM", u32 version, u64 dims (tasks, nodes, input, hidden, layers,
/// state_hidden, key_dim, critic_hidden), u64 seed, u64 episodes trained, then every
/// weight matrix in declaration order as u64 rows, u64 cols and column-major f64 values,
/// and finally the crc32 of everything before it.
std::vector<std::uint8_t> encode_model(const policy_model& m);
/// Throws format_error on bad magic, version, truncation, shape or checksum.
policy_model decode_model(const std::vector<std::uint8_t>& bytes);

void save_model(const policy_model& m, const std::string& path);
policy_model load_model(const std::string& path);

} // namespace dagsched
