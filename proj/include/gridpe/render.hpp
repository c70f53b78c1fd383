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

#ifndef GRIDPE_RENDER_HPP_
#define GRIDPE_RENDER_HPP_

#include <string>

#include "gridpe/world.hpp"

namespace gridpe {

// One character per cell, rows joined by newlines: P pursuer, E evader,
// * captured (frozen) evader, # obstacle, . empty. Cells shared by several
// alive agents show the occupant count digit, capped at 9.
std::string render_ascii(const WorldState& world);

}  // namespace gridpe

#endif  // GRIDPE_RENDER_HPP_
