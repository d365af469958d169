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

#ifndef POWERKIT_SOLUTION_HPP
#define POWERKIT_SOLUTION_HPP

#include <string>
#include <vector>

#include "powerkit/game.hpp"
#include "powerkit/indices.hpp"
#include "powerkit/rational.hpp"

namespace powerkit {

struct ExcessRecord {
    Coalition coalition;
    Rat excess;
};

/// e(S, x) = v(S) - x(S).
Rat excess(const VotingGame& game, Coalition s, const std::vector<Rat>& x);

struct LeastCoreResult {
    /// Minimum over imputations of the maximum excess of a proper nonempty
    /// coalition.
    Rat epsilon;
    std::vector<Rat> witness;
    /// Coalitions attaining epsilon at the witness. Exhaustive for
    /// n <= 16; for larger games, the generated constraint pool is scanned.
    std::vector<Coalition> binding;
    /// True when the optimal set is a single imputation (decided by
    /// auxiliary LPs over the optimal face).
    bool unique;
};

/// One refinement round of the nucleolus computation: the minimized excess
/// level and the coalitions whose excess is pinned there.
struct NucleolusRound {
    Rat level;
    std::vector<Coalition> fixed;
};

struct NucleolusResult {
    PowerProfile profile;                // kind == Nucleolus
    std::vector<NucleolusRound> rounds;  // audit trail
};

/// Least core by constraint generation: a most-violated coalition is found
/// by branch-and-bound over winning coalitions (minimize x(S)) and over
/// losing ones (cheapest losing structure).
LeastCoreResult least_core(const VotingGame& game);

/// The nucleolus: repeatedly minimize the largest free excess, pin the
/// coalitions proven tight on the whole optimal face (positive dual
/// multipliers), and stop when the face is a single imputation.
PowerProfile nucleolus(const VotingGame& game);
NucleolusResult nucleolus_with_certificate(const VotingGame& game);

/// Independent reference implementation for n <= 15: the same sequential-LP
/// scheme but with every one of the 2^n - 2 coalition constraints present
/// explicitly (solved in dual column form), no branch-and-bound separation.
PowerProfile nucleolus_oracle(const VotingGame& game);

/// True iff the least-core value is <= 0.
bool core_nonempty(const VotingGame& game);

/// Renders the refinement rounds as a plain-text audit certificate.
std::string certificate_text(const VotingGame& game,
                             const NucleolusResult& result);

/// Re-verifies a nucleolus certificate against the game by direct
/// enumeration: every fixed coalition's excess equals its recorded level
/// and no proper nonempty coalition exceeds the first level. Works for
/// n <= kMaxEnumPlayers; independent of the LP machinery.
bool verify_certificate(const VotingGame& game, const NucleolusResult& result);

}  // namespace powerkit

#endif  // POWERKIT_SOLUTION_HPP
