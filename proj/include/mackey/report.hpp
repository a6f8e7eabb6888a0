#pragma once

// JSON and plain-text renderings of pipeline results. Timings never enter the
// JSON so identical runs give identical bytes.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mackey/decomp.hpp"

namespace mackey {

using Json = nlohmann::ordered_json;

Json matrix_json(const IntMatrix& m);

/// Header fields: group, order, prime, field, Mackey dimension.
Json header_json(Pipeline& pl);

/// One entry per block pair: dims, simple counts, Cartan matrix of the Mackey block.
Json blocks_json(Pipeline& pl, std::optional<int> group_block = std::nullopt);

Json decomposition_json(Pipeline& pl, std::optional<int> group_block = std::nullopt);

Json checks_json(const std::vector<CheckResult>& checks);

/// Sections {group, prime, field, blocks, decomposition_matrix, checks}.
Json full_report(Pipeline& pl, const std::vector<CheckResult>& checks, std::optional<int> group_block = std::nullopt);

std::string blocks_text(Pipeline& pl, std::optional<int> group_block, bool with_cartan);
std::string decomposition_text(Pipeline& pl, std::optional<int> group_block);
std::string checks_text(const std::vector<CheckResult>& checks, bool with_timing = true);

/// "principal", or a group block index.
int parse_block(Pipeline& pl, const std::string& spec);

}  // namespace mackey
