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

#include "gridpe/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gridpe/checkpoint.hpp"
#include "gridpe/coevolution.hpp"
#include "gridpe/config.hpp"
#include "gridpe/env.hpp"
#include "gridpe/eval.hpp"
#include "gridpe/learner.hpp"
#include "gridpe/nn.hpp"
#include "gridpe/policy.hpp"
#include "gridpe/render.hpp"
#include "gridpe/task.hpp"
#include "gridpe/trace.hpp"

namespace gridpe {
namespace {

namespace fs = std::filesystem;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// A policy token is a built-in name or a checkpoint path; checkpoint-backed
// policies own their loaded nets.
struct PolicyHandle {
  std::unique_ptr<AgentCheckpoint> ckpt;
  std::unique_ptr<Policy> policy;
};

PolicyHandle resolve_policy(const std::string& token) {
  PolicyHandle handle;
  if (token.size() > 5 && token.substr(token.size() - 5) == ".ckpt") {
    handle.ckpt = std::make_unique<AgentCheckpoint>(load_checkpoint(token));
    handle.policy = std::make_unique<NetworkPolicy>(&handle.ckpt->policy);
    return handle;
  }
  handle.policy = make_policy(token);
  return handle;
}

// Env settings shared by the episode-running subcommands. Explicit flags
// override the config file, which overrides defaults.
struct EnvFlags {
  std::string task;
  int width = 0;
  int height = 0;
  int pursuers = 0;
  int evaders = 0;
  int fov = 0;
  int max_steps = 0;
  std::string mode;

  CLI::Option* o_task = nullptr;
  CLI::Option* o_width = nullptr;
  CLI::Option* o_height = nullptr;
  CLI::Option* o_pursuers = nullptr;
  CLI::Option* o_evaders = nullptr;
  CLI::Option* o_fov = nullptr;
  CLI::Option* o_max_steps = nullptr;
  CLI::Option* o_mode = nullptr;
};

void add_env_flags(CLI::App* cmd, EnvFlags* f) {
  f->o_task = cmd->add_option("--task", f->task,
                              "Task variant name (e.g. -S); see task list");
  f->o_width = cmd->add_option("--width", f->width, "Grid width");
  f->o_height = cmd->add_option("--height", f->height, "Grid height");
  f->o_pursuers = cmd->add_option("--pursuers", f->pursuers, "Pursuer count");
  f->o_evaders = cmd->add_option("--evaders", f->evaders, "Evader count");
  f->o_fov = cmd->add_option("--fov", f->fov, "Field-of-view radius");
  f->o_max_steps =
      cmd->add_option("--max-steps", f->max_steps, "Episode step limit");
  f->o_mode = cmd->add_option(
      "--mode", f->mode, "Interaction mode (auto, simultaneous, two_swarm, "
                         "agent_by_agent)");
}

void apply_env_flags(const EnvFlags& f, EnvConfig* config) {
  if (f.o_task->count() > 0) config->task = task_spec(f.task);
  if (f.o_width->count() > 0) config->width = f.width;
  if (f.o_height->count() > 0) config->height = f.height;
  if (f.o_pursuers->count() > 0) config->pursuers = f.pursuers;
  if (f.o_evaders->count() > 0) config->evaders = f.evaders;
  if (f.o_fov->count() > 0) config->fov = f.fov;
  if (f.o_max_steps->count() > 0) config->max_steps = f.max_steps;
  if (f.o_mode->count() > 0) config->mode = interaction_mode_from_name(f.mode);
}

EnvConfig env_from(const std::string& config_path, const EnvFlags& flags) {
  EnvConfig config;
  if (!config_path.empty()) {
    config = env_config_from_json(load_json_file(config_path));
  }
  apply_env_flags(flags, &config);
  config.validate();
  return config;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

std::string stats_csv(const RolloutStats& s) {
  std::string csv =
      "episodes,capture_rate,all_captured_rate,mean_steps,collisions_ao,"
      "collisions_aa,collisions_pe,mean_pursuer_reward,mean_evader_reward\n";
  csv += std::to_string(s.episodes);
  csv += "," + format_double(s.capture_rate);
  csv += "," + format_double(s.all_captured_rate);
  csv += "," + format_double(s.mean_steps);
  for (long c : s.collision_counts) csv += "," + std::to_string(c);
  csv += "," + format_double(s.mean_pursuer_reward);
  csv += "," + format_double(s.mean_evader_reward);
  csv += "\n";
  return csv;
}

void print_stats(const RolloutStats& s) {
  std::cout << "episodes: " << s.episodes << "\n"
            << "capture_rate: " << format_double(s.capture_rate) << "\n"
            << "all_captured_rate: " << format_double(s.all_captured_rate)
            << "\n"
            << "mean_steps: " << format_double(s.mean_steps) << "\n"
            << "collisions (obstacle, cooperative, adversarial): "
            << s.collision_counts[0] << ", " << s.collision_counts[1] << ", "
            << s.collision_counts[2] << "\n"
            << "mean_pursuer_reward: " << format_double(s.mean_pursuer_reward)
            << "\n"
            << "mean_evader_reward: " << format_double(s.mean_evader_reward)
            << "\n";
}

// Draws actions for the ids due to act and dispatches the step matching the
// effective interaction mode. Draw order is ascending id within the call.
StepOutcome drive_step(Env* env, const std::map<int, Observation>& obs,
                       Policy& pursuer_policy, Policy& evader_policy,
                       Rng* rng) {
  const std::vector<int> actors = env->next_actors();
  std::map<int, Action> joint;
  for (int id : actors) {
    const Observation& o = obs.at(id);
    Policy& policy = env->world().agents[static_cast<std::size_t>(id)].role ==
                             Role::Pursuer
                         ? pursuer_policy
                         : evader_policy;
    joint[id] = policy.act(o, *rng);
  }
  switch (env->config().effective_mode()) {
    case InteractionMode::TwoSwarm:
      return env->step_two_swarm(env->next_swarm(), joint);
    case InteractionMode::AgentByAgent:
      return env->step_agent_by_agent(actors.at(0), joint.at(actors.at(0)));
    default:
      return env->step_simultaneous(joint);
  }
}

int cmd_run(const std::string& config_path, const EnvFlags& flags,
            const std::string& pursuer_token, const std::string& evader_token,
            int episodes, std::uint64_t seed, const std::string& out_dir,
            int trace_episodes) {
  const EnvConfig config = env_from(config_path, flags);
  PolicyHandle pursuer = resolve_policy(pursuer_token);
  PolicyHandle evader = resolve_policy(evader_token);
  const EpisodeStats stats =
      evaluate(*pursuer.policy, *evader.policy, config, episodes, seed);
  print_stats(stats);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(out_dir + "/stats.csv", stats_csv(stats));
    const int traced = std::min(trace_episodes, episodes);
    for (int e = 0; e < traced; ++e) {
      char name[32];
      std::snprintf(name, sizeof(name), "/episode_%03d.trace", e);
      write_file(out_dir + name,
                 record_episode_trace(config, *pursuer.policy, *evader.policy,
                                      seed, e));
    }
  }
  return 0;
}

int cmd_train(const std::string& config_path, const EnvFlags& flags,
              CLI::Option* o_seed, std::uint64_t seed, const std::string& role,
              const std::string& opponent_token, CLI::Option* o_epochs,
              int epochs, const std::string& out_dir) {
  CoevolutionConfig config;
  if (!config_path.empty()) {
    config = coevolution_config_from_json(load_json_file(config_path));
  }
  apply_env_flags(flags, &config.env);
  config.env.validate();
  config.learner.validate();
  if (o_seed->count() > 0) config.seed = seed;

  const Role side = role_from_name(role);
  int budget = side == Role::Pursuer ? config.pursuer_epochs
                                     : config.evader_epochs;
  if (o_epochs->count() > 0) budget = epochs;
  if (budget < 0) throw std::invalid_argument("epochs must be >= 0");

  PolicyHandle opponent = resolve_policy(opponent_token);
  const int obs_len = observation_length(config.env.fov);
  AgentCheckpoint nets = init_agent_nets(
      obs_len, config.seed, side == Role::Pursuer ? 0 : 1);
  const std::string csv =
      train_single_side(&nets, side, *opponent.policy, config.env,
                        config.learner, budget, config.seed);
  fs::create_directories(out_dir);
  const std::string ckpt_path =
      out_dir + "/" + role_name(side) + ".ckpt";
  save_checkpoint(ckpt_path, nets.policy, nets.value);
  write_file(out_dir + "/stats.csv", csv);
  std::cout << "trained " << role_name(side) << " for " << budget
            << " epochs vs " << opponent_token << "; wrote " << ckpt_path
            << "\n";
  return 0;
}

int cmd_coevolve(const std::string& config_path, const EnvFlags& flags,
                 CLI::Option* o_seed, std::uint64_t seed,
                 CLI::Option* o_scheme, const std::string& scheme,
                 CLI::Option* o_generations, int generations,
                 CLI::Option* o_pursuer_epochs, int pursuer_epochs,
                 CLI::Option* o_evader_epochs, int evader_epochs,
                 const std::string& out_dir, bool baselines) {
  CoevolutionConfig config;
  if (!config_path.empty()) {
    config = coevolution_config_from_json(load_json_file(config_path));
  }
  apply_env_flags(flags, &config.env);
  if (o_seed->count() > 0) config.seed = seed;
  if (o_scheme->count() > 0) config.scheme = scheme_from_name(scheme);
  if (o_generations->count() > 0) config.generations = generations;
  if (o_pursuer_epochs->count() > 0) config.pursuer_epochs = pursuer_epochs;
  if (o_evader_epochs->count() > 0) config.evader_epochs = evader_epochs;
  if (!out_dir.empty()) config.store_dir = out_dir;

  const CheckpointStore store = run_coevolution(config);
  std::cout << "store complete through generation "
            << store.last_complete_generation() << " at " << store.dir()
            << "\n";
  if (baselines) {
    train_baselines(config);
    std::cout << "baselines written under " << config.store_dir
              << "/baseline{1,2,3}\n";
  }
  return 0;
}

int cmd_tournament(const std::string& config_path, const EnvFlags& flags,
                   const std::string& store_dir, int episodes,
                   std::uint64_t seed, const std::string& out_dir) {
  const EnvConfig config = env_from(config_path, flags);
  const CheckpointStore store(store_dir);
  const TournamentMatrix matrix = tournament(store, config, episodes, seed);

  std::string csv = "pursuer_gen";
  for (int j = 0; j <= matrix.generations; ++j) {
    csv += ",evader_" + std::to_string(j);
  }
  csv += "\n";
  for (int i = 0; i <= matrix.generations; ++i) {
    csv += std::to_string(i);
    for (int j = 0; j <= matrix.generations; ++j) {
      csv += "," + format_double(matrix.at(i, j));
    }
    csv += "\n";
  }
  std::cout << csv;
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(out_dir + "/tournament.csv", csv);
  }
  return 0;
}

int cmd_render(const std::string& config_path, const EnvFlags& flags,
               const std::string& pursuer_token,
               const std::string& evader_token, std::uint64_t seed) {
  const EnvConfig config = env_from(config_path, flags);
  PolicyHandle pursuer = resolve_policy(pursuer_token);
  PolicyHandle evader = resolve_policy(evader_token);

  Env env(config);
  ResetOutcome reset = env.reset(rollout_episode_seed(seed, 0));
  Rng rng(rollout_draw_seed(seed, 0));
  std::map<int, Observation> obs = reset.observations;

  std::cout << "tick 0 (step 0)\n" << render_ascii(env.world()) << "\n";
  int tick = 0;
  while (!env.done()) {
    StepOutcome out =
        drive_step(&env, obs, *pursuer.policy, *evader.policy, &rng);
    obs = out.observations;
    ++tick;
    std::cout << "\ntick " << tick << " (step " << env.world().step_index
              << ")\n"
              << render_ascii(env.world()) << "\n";
  }
  std::cout << "\nstatus: " << game_status_name(env.status()) << " after "
            << env.world().step_index << " steps\n";
  return 0;
}

int cmd_replay(const std::string& trace_path) {
  std::ifstream in(trace_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + trace_path);
  replay_trace(in);
  std::cout << "replay ok: " << trace_path << "\n";
  return 0;
}

// Task variant names start with '-', which an option parser would read as a
// flag, so "--task -S" collapses to "--task=-S" before parsing.
void merge_task_values(std::vector<std::string>* args) {
  for (std::size_t i = 0; i + 1 < args->size(); ++i) {
    if ((*args)[i] == "--task") {
      (*args)[i] += "=" + (*args)[i + 1];
      args->erase(args->begin() + static_cast<std::ptrdiff_t>(i) + 1);
    }
  }
}

}  // namespace

int run_cli(std::vector<std::string> args) {
  CLI::App app{"gridpe: grid pursuit-evasion training and evaluation"};
  app.require_subcommand(1);

  std::string config_path;
  std::uint64_t seed = 0;
  std::string out_dir;
  std::string pursuer_token = "random";
  std::string evader_token = "random";
  int episodes = 10;
  int trace_episodes = 0;
  std::string role = "pursuer";
  std::string opponent_token = "random";
  int epochs = 0;
  std::string scheme = "spec_spec";
  int generations = 0;
  int pursuer_epochs = 0;
  int evader_epochs = 0;
  bool baselines = false;
  std::string store_dir;
  std::string trace_path;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file");
    cmd->add_option("--out", out_dir, "Output directory");
    return cmd->add_option("--seed", seed, "Master seed");
  };

  CLI::App* run = app.add_subcommand("run", "Evaluate a policy matchup");
  EnvFlags run_env;
  add_common(run);
  add_env_flags(run, &run_env);
  run->add_option("--pursuer", pursuer_token,
                  "Pursuer policy (random, greedy_pursuer, greedy_evader, or "
                  "a .ckpt path)");
  run->add_option("--evader", evader_token, "Evader policy");
  run->add_option("--episodes", episodes, "Episode count");
  run->add_option("--traces", trace_episodes,
                  "Write traces for the first N episodes (needs --out)");

  CLI::App* train =
      app.add_subcommand("train", "Train one side against a fixed opponent");
  EnvFlags train_env;
  CLI::Option* train_seed = add_common(train);
  add_env_flags(train, &train_env);
  train->add_option("--role", role, "Side to train (pursuer or evader)");
  train->add_option("--opponent", opponent_token, "Opponent policy token");
  CLI::Option* train_epochs =
      train->add_option("--epochs", epochs, "Training epochs");

  CLI::App* coevolve =
      app.add_subcommand("coevolve", "Run a co-evolution schedule");
  EnvFlags coevolve_env;
  CLI::Option* coevolve_seed = add_common(coevolve);
  add_env_flags(coevolve, &coevolve_env);
  CLI::Option* o_scheme = coevolve->add_option(
      "--scheme", scheme, "spec_spec, gen_spec, or gen_gen");
  CLI::Option* o_generations =
      coevolve->add_option("--generations", generations, "Generation count");
  CLI::Option* o_pursuer_epochs = coevolve->add_option(
      "--pursuer-epochs", pursuer_epochs, "Pursuer epochs per generation");
  CLI::Option* o_evader_epochs = coevolve->add_option(
      "--evader-epochs", evader_epochs, "Evader epochs per generation");
  coevolve->add_flag("--baselines", baselines,
                     "Also train the single-side baselines");

  CLI::App* tour = app.add_subcommand(
      "tournament", "Cross-generation capture-rate matrix from a store");
  EnvFlags tour_env;
  add_common(tour);
  add_env_flags(tour, &tour_env);
  tour->add_option("--store", store_dir, "Checkpoint store directory")
      ->required();
  tour->add_option("--episodes", episodes, "Episodes per matrix cell");

  CLI::App* render =
      app.add_subcommand("render", "Print one episode as ASCII frames");
  EnvFlags render_env;
  add_common(render);
  add_env_flags(render, &render_env);
  render->add_option("--pursuer", pursuer_token, "Pursuer policy token");
  render->add_option("--evader", evader_token, "Evader policy token");

  CLI::App* replay =
      app.add_subcommand("replay", "Verify a recorded episode trace");
  add_common(replay);
  replay->add_option("trace", trace_path, "Trace file to replay")->required();

  merge_task_values(&args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (run->parsed()) {
      return cmd_run(config_path, run_env, pursuer_token, evader_token,
                     episodes, seed, out_dir, trace_episodes);
    }
    if (train->parsed()) {
      if (out_dir.empty()) {
        throw std::invalid_argument("train requires --out");
      }
      return cmd_train(config_path, train_env, train_seed, seed, role,
                       opponent_token, train_epochs, epochs, out_dir);
    }
    if (coevolve->parsed()) {
      return cmd_coevolve(config_path, coevolve_env, coevolve_seed, seed,
                          o_scheme, scheme, o_generations, generations,
                          o_pursuer_epochs, pursuer_epochs, o_evader_epochs,
                          evader_epochs, out_dir, baselines);
    }
    if (tour->parsed()) {
      return cmd_tournament(config_path, tour_env, store_dir, episodes, seed,
                            out_dir);
    }
    if (render->parsed()) {
      return cmd_render(config_path, render_env, pursuer_token, evader_token,
                        seed);
    }
    if (replay->parsed()) return cmd_replay(trace_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "error: no subcommand\n";
  return 1;
}

}  // namespace gridpe
