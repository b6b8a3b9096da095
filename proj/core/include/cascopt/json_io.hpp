// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cascopt/cascade.hpp"
#include "cascopt/graph.hpp"
#include "cascopt/preprocess.hpp"
#include "cascopt/saa.hpp"

namespace cascopt {

// Instance schema: { "nodes": count, "edges": [[src,dst,prob]...],
// "base_nodes": [...], "actions": [{"nodes": [...], "cost": c}...],
// "sources": [...], "rewards": [[node,value]...], "budget": b } plus the
// optional "labels", "seed" and "metapop" blocks. Round-trip stable up to
// array ordering. Malformed input raises std::runtime_error.
std::string instance_to_json(const Instance& inst, const MetapopSpec* metapop = nullptr,
                             std::optional<uint64_t> seed = std::nullopt);
Instance instance_from_json(const std::string& text);

// The "metapop" extension block, when the instance was generated from a
// metapopulation spec.
std::optional<MetapopSpec> metapop_from_instance_json(const std::string& text);

std::string cascade_to_json(const CascadeSample& sample);
CascadeSample cascade_from_json(const std::string& text);

std::string reduced_to_json(const ReducedCascade& cascade);
ReducedCascade reduced_from_json(const std::string& text);

std::string strategy_to_json(const Strategy& y, std::optional<uint64_t> seed = std::nullopt);
Strategy strategy_from_json(const std::string& text);

std::string estimate_to_json(const Estimate& est, std::optional<uint64_t> seed = std::nullopt);

std::string saa_report_to_json(const SaaReport& report);

std::string reduce_stats_to_json(const std::vector<ReduceStats>& stats,
                                 std::optional<uint64_t> seed = std::nullopt);

std::string validation_report_to_json(const ValidationReport& report);

}  // namespace cascopt
