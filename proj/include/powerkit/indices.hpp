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

#ifndef POWERKIT_INDICES_HPP
#define POWERKIT_INDICES_HPP

#include <string>
#include <vector>

#include "powerkit/game.hpp"
#include "powerkit/rational.hpp"

namespace powerkit {

enum class IndexKind {
    Ssi,
    Banzhaf,
    Johnston,
    DeeganPackel,
    PublicGood,
    Nucleolus,
};

std::string index_kind_name(IndexKind kind);
IndexKind index_kind_from_name(const std::string& name);

/// A normalized power vector: nonnegative exact rationals summing to 1.
struct PowerProfile {
    IndexKind kind;
    std::vector<Rat> values;

    int size() const { return static_cast<int>(values.size()); }
};

/// Sum of profile values over the members of s.
Rat coalition_value_under_profile(const PowerProfile& profile, Coalition s);

/// Shapley-Shubik index. Uses the weight-counting path for single-rule
/// games with small integer normal form (any n up to 64), otherwise
/// exhaustive enumeration (n <= 30).
PowerProfile shapley_shubik(const VotingGame& game);
PowerProfile banzhaf(const VotingGame& game);
PowerProfile johnston(const VotingGame& game);
PowerProfile deegan_packel(const VotingGame& game);
PowerProfile public_good(const VotingGame& game);

/// The two SSI/Banzhaf computation paths, exposed separately so they can be
/// cross-checked against each other.
PowerProfile shapley_shubik_enumeration(const VotingGame& game);
PowerProfile shapley_shubik_counting(const VotingGame& game);
PowerProfile banzhaf_enumeration(const VotingGame& game);
PowerProfile banzhaf_counting(const VotingGame& game);

/// True when the (size, weight) counting path applies to this game.
bool counting_path_applies(const VotingGame& game);

namespace detail {

/// Per-player tallies from one pass over all 2^n coalitions.
struct CriticalStats {
    // crit_by_size[i][k]: coalitions of size k in which player i is critical.
    std::vector<std::vector<unsigned long long>> crit_by_size;
    // swing_by_ncrit[i][c]: winning coalitions with exactly c critical
    // members, i among them.
    std::vector<std::vector<unsigned long long>> swing_by_ncrit;
    // mwc_by_size[i][k]: minimal winning coalitions of size k containing i.
    std::vector<std::vector<unsigned long long>> mwc_by_size;
    unsigned long long mwc_count = 0;
    unsigned long long winning_count = 0;
};

CriticalStats enumerate_critical_stats(const VotingGame& game);

}  // namespace detail

}  // namespace powerkit

#endif  // POWERKIT_INDICES_HPP
