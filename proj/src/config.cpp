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

#include "gridpe/config.hpp"

#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace gridpe {
namespace {

void check_keys(const Json& j, std::initializer_list<const char*> allowed,
                const char* what) {
  if (!j.is_object()) {
    throw std::invalid_argument(std::string(what) + " must be a JSON object");
  }
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw std::invalid_argument("unknown key '" + item.key() + "' in " +
                                  what);
    }
  }
}

template <typename T>
void maybe(const Json& j, const char* key, T* out) {
  if (auto it = j.find(key); it != j.end()) *out = it->get<T>();
}

}  // namespace

Json reward_table_to_json(const RewardTable& table) {
  return Json{{"capture", table.capture},
              {"being_captured", table.being_captured},
              {"neighbor", table.neighbor},
              {"being_neighbored", table.being_neighbored},
              {"collide", table.collide},
              {"step_cost", table.step_cost}};
}

RewardTable reward_table_from_json(const Json& j) {
  check_keys(j,
             {"capture", "being_captured", "neighbor", "being_neighbored",
              "collide", "step_cost"},
             "rewards");
  RewardTable table;
  maybe(j, "capture", &table.capture);
  maybe(j, "being_captured", &table.being_captured);
  maybe(j, "neighbor", &table.neighbor);
  maybe(j, "being_neighbored", &table.being_neighbored);
  maybe(j, "collide", &table.collide);
  maybe(j, "step_cost", &table.step_cost);
  return table;
}

Json env_config_to_json(const EnvConfig& config) {
  Json obstacles = Json::array();
  for (const Position& p : config.obstacles) {
    obstacles.push_back(Json::array({p.row, p.col}));
  }
  return Json{{"task", config.task.name},
              {"width", config.width},
              {"height", config.height},
              {"obstacles", obstacles},
              {"pursuers", config.pursuers},
              {"evaders", config.evaders},
              {"fov", config.fov},
              {"rewards", reward_table_to_json(config.rewards)},
              {"seed", config.seed},
              {"max_steps", config.max_steps},
              {"mode", interaction_mode_name(config.mode)},
              {"pursuers_move_first", config.pursuers_move_first}};
}

EnvConfig env_config_from_json(const Json& j) {
  check_keys(j,
             {"task", "width", "height", "obstacles", "pursuers", "evaders",
              "fov", "rewards", "seed", "max_steps", "mode",
              "pursuers_move_first"},
             "env config");
  EnvConfig config;
  if (auto it = j.find("task"); it != j.end()) {
    config.task = task_spec(it->get<std::string>());
  }
  maybe(j, "width", &config.width);
  maybe(j, "height", &config.height);
  if (auto it = j.find("obstacles"); it != j.end()) {
    config.obstacles.clear();
    for (const Json& cell : *it) {
      if (!cell.is_array() || cell.size() != 2) {
        throw std::invalid_argument("obstacles must be [row, col] pairs");
      }
      config.obstacles.insert(Position{cell[0].get<int>(), cell[1].get<int>()});
    }
  }
  maybe(j, "pursuers", &config.pursuers);
  maybe(j, "evaders", &config.evaders);
  maybe(j, "fov", &config.fov);
  if (auto it = j.find("rewards"); it != j.end()) {
    config.rewards = reward_table_from_json(*it);
  }
  maybe(j, "seed", &config.seed);
  maybe(j, "max_steps", &config.max_steps);
  if (auto it = j.find("mode"); it != j.end()) {
    config.mode = interaction_mode_from_name(it->get<std::string>());
  }
  maybe(j, "pursuers_move_first", &config.pursuers_move_first);
  return config;
}

Json learner_config_to_json(const LearnerConfig& config) {
  return Json{{"policy_lr", config.policy_lr},
              {"value_lr", config.value_lr},
              {"actor_updates_per_epoch", config.actor_updates_per_epoch},
              {"critic_updates_per_epoch", config.critic_updates_per_epoch},
              {"gamma", config.gamma},
              {"episodes_per_epoch", config.episodes_per_epoch}};
}

LearnerConfig learner_config_from_json(const Json& j) {
  check_keys(j,
             {"policy_lr", "value_lr", "actor_updates_per_epoch",
              "critic_updates_per_epoch", "gamma", "episodes_per_epoch"},
             "learner config");
  LearnerConfig config;
  maybe(j, "policy_lr", &config.policy_lr);
  maybe(j, "value_lr", &config.value_lr);
  maybe(j, "actor_updates_per_epoch", &config.actor_updates_per_epoch);
  maybe(j, "critic_updates_per_epoch", &config.critic_updates_per_epoch);
  maybe(j, "gamma", &config.gamma);
  maybe(j, "episodes_per_epoch", &config.episodes_per_epoch);
  return config;
}

Json coevolution_config_to_json(const CoevolutionConfig& config) {
  return Json{{"generations", config.generations},
              {"pursuer_epochs", config.pursuer_epochs},
              {"evader_epochs", config.evader_epochs},
              {"env", env_config_to_json(config.env)},
              {"learner", learner_config_to_json(config.learner)},
              {"scheme", scheme_name(config.scheme)},
              {"seed", config.seed},
              {"store_dir", config.store_dir}};
}

CoevolutionConfig coevolution_config_from_json(const Json& j) {
  check_keys(j,
             {"generations", "pursuer_epochs", "evader_epochs", "env",
              "learner", "scheme", "seed", "store_dir"},
             "coevolution config");
  CoevolutionConfig config;
  maybe(j, "generations", &config.generations);
  maybe(j, "pursuer_epochs", &config.pursuer_epochs);
  maybe(j, "evader_epochs", &config.evader_epochs);
  if (auto it = j.find("env"); it != j.end()) {
    config.env = env_config_from_json(*it);
  }
  if (auto it = j.find("learner"); it != j.end()) {
    config.learner = learner_config_from_json(*it);
  }
  if (auto it = j.find("scheme"); it != j.end()) {
    config.scheme = scheme_from_name(it->get<std::string>());
  }
  maybe(j, "seed", &config.seed);
  maybe(j, "store_dir", &config.store_dir);
  return config;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error("invalid JSON in " + path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write: " + path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing: " + path);
}

}  // namespace gridpe
