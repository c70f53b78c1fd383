// Copyright 2026 The gridpe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRIDPE_CONFIG_HPP_
#define GRIDPE_CONFIG_HPP_

#include <string>

#include "json.hpp"

#include "gridpe/coevolution.hpp"
#include "gridpe/env.hpp"

namespace gridpe {

using Json = nlohmann::json;

// Parsers start from defaults, apply the given keys, and reject unknown
// ones, so a config file states only what it overrides and typos fail
// loudly. Emitted objects carry every key; keys serialize sorted, which
// keeps written configs byte-stable.

Json reward_table_to_json(const RewardTable& table);
RewardTable reward_table_from_json(const Json& j);

Json env_config_to_json(const EnvConfig& config);
EnvConfig env_config_from_json(const Json& j);

Json learner_config_to_json(const LearnerConfig& config);
LearnerConfig learner_config_from_json(const Json& j);

Json coevolution_config_to_json(const CoevolutionConfig& config);
CoevolutionConfig coevolution_config_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace gridpe

#endif  // GRIDPE_CONFIG_HPP_
