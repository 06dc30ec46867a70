#pragma once

// nlohmann/json adapters shared by the serialisers; not installed.

#include "ddsim/bps_model.hpp"

#include <json.hpp>

namespace ddsim::json_codec {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

ordered_json encode(const ProcessModel& model);
ProcessModel decode_process_model(const json& j);

ordered_json encode(const DistributionSpec& spec);
DistributionSpec decode_distribution(const json& j);

ordered_json encode(const BpsModel& model);
BpsModel decode_bps_model(const json& j);

}  // namespace ddsim::json_codec
