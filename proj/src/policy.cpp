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

#include "gridpe/policy.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace gridpe {
namespace {

struct Window {
  const Observation* obs;
  int side;  // 2*fov + 1

  float blocker(int r, int c) const { return at(0, r, c); }
  float opponent(int r, int c) const { return at(2, r, c); }
  float at(int ch, int r, int c) const {
    return obs->data[static_cast<std::size_t>(ch) * side * side +
                     static_cast<std::size_t>(r) * side + c];
  }
  bool inside(int r, int c) const {
    return r >= 0 && r < side && c >= 0 && c < side;
  }
};

// Proximity of (r, c) to the opponent set. Manhattan decides; squared
// Euclidean breaks Manhattan ties so that moving straight away from (or
// straight at) an opponent beats the diagonal-feeling sidestep that keeps
// the same Manhattan distance.
struct Proximity {
  int manhattan = std::numeric_limits<int>::max();
  long euclid2 = std::numeric_limits<long>::max();
};

Proximity nearest_opponent(const Window& w, int r, int c) {
  Proximity p;
  for (int wr = 0; wr < w.side; ++wr) {
    for (int wc = 0; wc < w.side; ++wc) {
      if (w.opponent(wr, wc) == 0.0f) continue;
      const int dr = wr - r;
      const int dc = wc - c;
      p.manhattan = std::min(p.manhattan, std::abs(dr) + std::abs(dc));
      p.euclid2 = std::min(p.euclid2, static_cast<long>(dr) * dr +
                                          static_cast<long>(dc) * dc);
    }
  }
  return p;
}

bool any_opponent(const Window& w) {
  for (int wr = 0; wr < w.side; ++wr) {
    for (int wc = 0; wc < w.side; ++wc) {
      if (w.opponent(wr, wc) != 0.0f) return true;
    }
  }
  return false;
}

// Score every non-blocked candidate move with `better` deciding strict
// improvement; ties keep the earlier action in the fixed order.
template <typename Better>
Action pick_move(const Observation& obs, Better better) {
  const Window w{&obs, 2 * obs.fov + 1};
  if (!any_opponent(w)) return Action::Stay;
  const int center = obs.fov;
  bool have = false;
  Proximity best_score;
  Action best = Action::Stay;
  for (Action a : kGreedyTieOrder) {
    const Position t = intended_position(Position{center, center}, a);
    if (!w.inside(t.row, t.col)) continue;
    if (a != Action::Stay && w.blocker(t.row, t.col) != 0.0f) continue;
    const Proximity score = nearest_opponent(w, t.row, t.col);
    if (!have || better(score, best_score)) {
      have = true;
      best_score = score;
      best = a;
    }
  }
  return best;
}

}  // namespace

Action RandomPolicy::act(const Observation& obs, Rng& rng) {
  (void)obs;
  return static_cast<Action>(rng.next_below(kActionCount));
}

Action GreedyPursuerPolicy::act(const Observation& obs, Rng& rng) {
  (void)rng;
  return pick_move(obs, [](const Proximity& s, const Proximity& best) {
    return s.manhattan != best.manhattan ? s.manhattan < best.manhattan
                                         : s.euclid2 < best.euclid2;
  });
}

Action GreedyEvaderPolicy::act(const Observation& obs, Rng& rng) {
  (void)rng;
  return pick_move(obs, [](const Proximity& s, const Proximity& best) {
    return s.manhattan != best.manhattan ? s.manhattan > best.manhattan
                                         : s.euclid2 > best.euclid2;
  });
}

std::unique_ptr<Policy> make_policy(const std::string& name) {
  if (name == "random") return std::make_unique<RandomPolicy>();
  if (name == "greedy_pursuer") return std::make_unique<GreedyPursuerPolicy>();
  if (name == "greedy_evader") return std::make_unique<GreedyEvaderPolicy>();
  throw std::invalid_argument(
      "unknown policy: " + name +
      " (expected random, greedy_pursuer, greedy_evader)");
}

std::map<int, Action> act_all(Policy& policy,
                              const std::map<int, Observation>& observations,
                              Rng& rng) {
  std::map<int, Action> actions;
  for (const auto& [id, obs] : observations) {
    actions.emplace(id, policy.act(obs, rng));
  }
  return actions;
}

}  // namespace gridpe
