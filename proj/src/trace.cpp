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

#include "gridpe/trace.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include "gridpe/config.hpp"
#include "gridpe/learner.hpp"

namespace gridpe {
namespace {

constexpr int kTraceVersion = 1;

Json tick_json(int index, const Env& env, const StepOutcome& outcome,
               const std::map<int, Action>& joint) {
  Json agents = Json::array();
  for (const AgentRecord& a : env.world().agents) {
    Json rec{{"id", a.id},
             {"role", role_name(a.role)},
             {"row", a.position.row},
             {"col", a.position.col},
             {"alive", a.alive},
             {"captured", a.captured}};
    if (auto it = joint.find(a.id); it != joint.end()) {
      rec["action"] = action_name(it->second);
    }
    if (auto it = outcome.rewards.find(a.id); it != outcome.rewards.end()) {
      rec["reward"] = it->second;
    }
    agents.push_back(std::move(rec));
  }
  Json events = Json::array();
  for (const CollisionEvent& ev : outcome.report.events) {
    std::string applied;
    for (Outcome o : ev.applied) applied.push_back(outcome_char(o));
    events.push_back(Json{{"type", collision_type_name(ev.type)},
                          {"kind", event_kind_name(ev.kind)},
                          {"cell", Json::array({ev.contested_cell.row,
                                                ev.contested_cell.col})},
                          {"participants", ev.participants},
                          {"applied", applied}});
  }
  Json captures = Json::array();
  for (const Capture& c : outcome.captures) {
    captures.push_back(Json{{"evader", c.evader_id},
                            {"capturers", c.capturer_ids},
                            {"events", c.event_indices}});
  }
  return Json{{"type", "tick"},
              {"index", index},
              {"step", env.world().step_index},
              {"status", game_status_name(env.status())},
              {"agents", std::move(agents)},
              {"events", std::move(events)},
              {"captures", std::move(captures)}};
}

StepOutcome execute(Env* env, const std::map<int, Action>& joint) {
  switch (env->config().effective_mode()) {
    case InteractionMode::TwoSwarm:
      return env->step_two_swarm(env->next_swarm(), joint);
    case InteractionMode::AgentByAgent: {
      if (joint.size() != 1) {
        throw std::invalid_argument("agent-by-agent ticks carry one action");
      }
      const auto& [id, action] = *joint.begin();
      return env->step_agent_by_agent(id, action);
    }
    default:
      return env->step_simultaneous(joint);
  }
}

Json parse_line(const std::string& line, int line_no) {
  try {
    return Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error("trace line " + std::to_string(line_no) +
                             ": invalid JSON: " + e.what());
  }
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw std::runtime_error("trace line " + std::to_string(line_no) + ": " +
                           what);
}

}  // namespace

std::string record_episode_trace(const EnvConfig& config,
                                 Policy& pursuer_policy,
                                 Policy& evader_policy,
                                 std::uint64_t collect_seed,
                                 int episode_index) {
  Env env(config);
  const std::uint64_t episode_seed =
      rollout_episode_seed(collect_seed, episode_index);
  ResetOutcome start = env.reset(episode_seed);
  Rng draw_rng(rollout_draw_seed(collect_seed, episode_index));
  std::map<int, Observation> obs_map = std::move(start.observations);

  std::ostringstream out;
  out << Json{{"type", "header"},
              {"version", kTraceVersion},
              {"config", env_config_to_json(config)},
              {"episode_seed", episode_seed}}
             .dump()
      << '\n';

  int tick = 0;
  while (!env.done()) {
    std::map<int, Action> joint;
    for (int id : env.next_actors()) {
      Policy& policy = env.world().agents[id].role == Role::Pursuer
                           ? pursuer_policy
                           : evader_policy;
      joint.emplace(id, policy.act(obs_map.at(id), draw_rng));
    }
    StepOutcome outcome = execute(&env, joint);
    out << tick_json(tick, env, outcome, joint).dump() << '\n';
    obs_map = std::move(outcome.observations);
    ++tick;
  }
  return out.str();
}

void replay_trace(std::istream& in) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line) && line.empty()) ++line_no;
  if (line.empty()) fail(line_no + 1, "missing header");
  ++line_no;
  const Json header = parse_line(line, line_no);
  if (header.value("type", "") != "header") fail(line_no, "expected header");
  if (header.value("version", 0) != kTraceVersion) {
    fail(line_no, "unsupported trace version");
  }
  EnvConfig config;
  std::uint64_t episode_seed = 0;
  try {
    config = env_config_from_json(header.at("config"));
    episode_seed = header.at("episode_seed").get<std::uint64_t>();
  } catch (const std::exception& e) {
    fail(line_no, e.what());
  }

  Env env(config);
  env.reset(episode_seed);
  int tick = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const Json rec = parse_line(line, line_no);
    if (rec.value("type", "") != "tick") fail(line_no, "expected a tick record");
    if (env.done()) fail(line_no, "tick after the episode finished");
    std::map<int, Action> joint;
    try {
      for (const Json& agent : rec.at("agents")) {
        if (auto it = agent.find("action"); it != agent.end()) {
          joint.emplace(agent.at("id").get<int>(),
                        action_from_name(it->get<std::string>()));
        }
      }
    } catch (const std::exception& e) {
      fail(line_no, e.what());
    }
    StepOutcome outcome;
    try {
      outcome = execute(&env, joint);
    } catch (const std::exception& e) {
      fail(line_no, std::string("cannot execute recorded actions: ") +
                        e.what());
    }
    const Json actual = tick_json(tick, env, outcome, joint);
    if (actual.dump() != rec.dump()) {
      fail(line_no, "replayed state diverges from the recorded tick");
    }
    ++tick;
  }
  if (!env.done()) {
    fail(line_no + 1, "trace ended before the episode did");
  }
}

std::array<long, 3> trace_collision_totals(std::istream& in) {
  std::array<long, 3> totals{};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const Json rec = parse_line(line, line_no);
    if (rec.value("type", "") != "tick") continue;
    try {
      for (const Json& ev : rec.at("events")) {
        const std::string type = ev.at("type").get<std::string>();
        if (type == collision_type_name(CollisionType::AgentObstacle)) {
          ++totals[0];
        } else if (type ==
                   collision_type_name(CollisionType::AgentAgentCooperative)) {
          ++totals[1];
        } else if (type == collision_type_name(CollisionType::PursuerEvader)) {
          ++totals[2];
        } else {
          fail(line_no, "unknown collision type: " + type);
        }
      }
    } catch (const Json::exception& e) {
      fail(line_no, e.what());
    }
  }
  return totals;
}

}  // namespace gridpe
