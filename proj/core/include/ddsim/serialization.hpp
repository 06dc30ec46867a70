#pragma once

#include "ddsim/bps_model.hpp"
#include "ddsim/distribution.hpp"
#include "ddsim/process_model.hpp"

#include <filesystem>
#include <string>

namespace ddsim {

// JSON documents. Doubles are written with round-trip precision, so
// model_to_json(bps_model_from_json(s)) == s for any s produced here.
//
// Process model:
//   {"nodes": [{"id": 0, "kind": "start"}, {"id": 2, "kind": "task", "label": "A"}, ...],
//    "edges": [{"id": 0, "source": 0, "target": 2}, ...]}
// Node and edge ids must be 0..n-1 in order.
//
// Distribution: {"family": "exponential", "params": [3600.0], "fit_error": 0.01}
//
// BPS model:
//   {"format": "ddsim.bps_model", "version": 1,
//    "process_model": {...},
//    "branching": [{"split": 3, "fallback": false,
//                   "branches": [{"edge": 4, "probability": 0.3}, ...]}, ...],
//    "interarrival": {...},
//    "activity_durations": {"A": {...}, ...},
//    "pools": [{"id": "pool_1", "resources": ["ann", "bob"]}, ...],
//    "activity_pool": {"A": "pool_1", ...},
//    "max_case_length": 120,
//    "warnings": [...]}

std::string process_model_to_json(const ProcessModel& model, int indent = 2);
ProcessModel process_model_from_json(const std::string& text);

std::string distribution_to_json(const DistributionSpec& spec, int indent = -1);
DistributionSpec distribution_from_json(const std::string& text);

std::string bps_model_to_json(const BpsModel& model, int indent = 2);
/// Throws IoError on malformed JSON, ModelError / AssemblyError on invalid content.
BpsModel bps_model_from_json(const std::string& text);

void save_bps_model(const BpsModel& model, const std::filesystem::path& path);
BpsModel load_bps_model(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace ddsim
