// Copyright 2026 powerkit contributors
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

#ifndef POWERKIT_BARGAINING_HPP
#define POWERKIT_BARGAINING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "powerkit/game.hpp"
#include "powerkit/rational.hpp"

namespace powerkit {

struct ObjectionWitness {
    int objector;
    int target;
    Coalition coalition;
    std::vector<Rat> payoff;  // y on the objecting coalition, by player id
};

/// Decides whether some player has a justified objection against another at
/// the imputation x: an objection (S containing i but not j, payoff y on S
/// with y(S) = v(S) and y_k > x_k) admitting no counter-objection. Membership
/// of x in the bargaining set is the negation. Exhaustive over ordered pairs
/// and coalitions with an exact LP feasibility test per candidate; n <= 5.
std::optional<ObjectionWitness> find_justified_objection(
    const VotingGame& game, const std::vector<Rat>& x);

bool has_justified_objection(const VotingGame& game,
                             const std::vector<Rat>& x);

}  // namespace powerkit

#endif  // POWERKIT_BARGAINING_HPP
