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

#include <array>
#include <stdexcept>

#include "doctest.h"

using namespace gridpe;

namespace {

// 5x5 egocentric window, self at (2, 2), all channels clear.
Observation blank_window() {
  Observation o;
  o.fov = 2;
  o.data.assign(observation_length(2), 0.0f);
  return o;
}

void mark(Observation& o, int channel, int row, int col) {
  const int side = 2 * o.fov + 1;
  o.data[static_cast<std::size_t>(channel) * side * side +
         static_cast<std::size_t>(row) * side + col] = 1.0f;
}

Action greedy(Policy&& p, const Observation& o) {
  Rng rng(0);
  return p.act(o, rng);
}

}  // namespace

TEST_CASE("the random policy is uniform over the five actions") {
  RandomPolicy p;
  Rng rng(99);
  const Observation o = blank_window();
  std::array<int, kActionCount> counts{};
  const int draws = 1000000;
  for (int i = 0; i < draws; ++i) counts[static_cast<int>(p.act(o, rng))] += 1;
  for (int a = 0; a < kActionCount; ++a) {
    CHECK(counts[a] >= 198000);
    CHECK(counts[a] <= 202000);
  }
}

TEST_CASE("the random policy replays under the same seed") {
  RandomPolicy p;
  Rng a(5), b(5);
  const Observation o = blank_window();
  for (int i = 0; i < 100; ++i) CHECK(p.act(o, a) == p.act(o, b));
}

TEST_CASE("greedy movers stay put with no opponent in sight") {
  const Observation o = blank_window();
  CHECK(greedy(GreedyPursuerPolicy{}, o) == Action::Stay);
  CHECK(greedy(GreedyEvaderPolicy{}, o) == Action::Stay);
}

TEST_CASE("a pursuer closes straight on a distant evader") {
  Observation o = blank_window();
  mark(o, 2, 2, 4);  // evader two cells right
  CHECK(greedy(GreedyPursuerPolicy{}, o) == Action::Right);
}

TEST_CASE("a pursuer breaks the up-left tie upward") {
  Observation o = blank_window();
  mark(o, 2, 1, 1);  // evader one up, one left
  CHECK(greedy(GreedyPursuerPolicy{}, o) == Action::Up);
}

TEST_CASE("an evader flees directly away from an adjacent pursuer") {
  Observation o = blank_window();
  mark(o, 2, 2, 1);  // pursuer directly left
  // Up and Right tie on Manhattan distance; straight away wins on the
  // squared-Euclidean tie-break.
  CHECK(greedy(GreedyEvaderPolicy{}, o) == Action::Right);
}

TEST_CASE("a pinched evader slips out sideways") {
  Observation o = blank_window();
  mark(o, 2, 2, 0);  // pursuer two left
  mark(o, 2, 2, 4);  // pursuer two right
  CHECK(greedy(GreedyEvaderPolicy{}, o) == Action::Up);
}

TEST_CASE("blocked cells are never chosen even when they are closest") {
  Observation o = blank_window();
  mark(o, 2, 2, 4);  // evader two cells right
  mark(o, 0, 2, 3);  // wall in between
  // Right would close to distance 1 but is off the table; holding at
  // distance 2 beats stepping around at 3.
  CHECK(greedy(GreedyPursuerPolicy{}, o) == Action::Stay);
}

TEST_CASE("an evader never flees into a wall") {
  Observation o = blank_window();
  mark(o, 2, 2, 1);  // pursuer directly left
  mark(o, 0, 2, 3);  // wall to the right
  mark(o, 0, 1, 2);  // wall above
  CHECK(greedy(GreedyEvaderPolicy{}, o) == Action::Down);
}

TEST_CASE("teammates do not attract or repel greedy movers") {
  Observation o = blank_window();
  mark(o, 1, 2, 3);  // teammate right
  CHECK(greedy(GreedyPursuerPolicy{}, o) == Action::Stay);
  CHECK(greedy(GreedyEvaderPolicy{}, o) == Action::Stay);
}

TEST_CASE("policies are constructable from their config tokens") {
  Rng rng(1);
  Observation o = blank_window();
  mark(o, 2, 2, 4);
  CHECK(make_policy("greedy_pursuer")->act(o, rng) == Action::Right);
  CHECK(make_policy("greedy_evader")->act(o, rng) == Action::Left);
  CHECK_NOTHROW(make_policy("random"));
  CHECK_THROWS_WITH_AS(make_policy("chase"),
                       "unknown policy: chase (expected random, "
                       "greedy_pursuer, greedy_evader)",
                       std::invalid_argument);
}

TEST_CASE("joint action maps draw in ascending id order") {
  RandomPolicy p;
  const Observation o = blank_window();
  std::map<int, Observation> observations{{0, o}, {5, o}, {9, o}};
  Rng live(7), twin(7);
  const std::map<int, Action> acts = act_all(p, observations, live);
  REQUIRE(acts.size() == 3);
  CHECK(acts.at(0) == p.act(o, twin));
  CHECK(acts.at(5) == p.act(o, twin));
  CHECK(acts.at(9) == p.act(o, twin));
}
