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

#ifndef POWERKIT_GAME_HPP
#define POWERKIT_GAME_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "powerkit/errors.hpp"
#include "powerkit/rational.hpp"

namespace powerkit {

/// Upper bound on the number of players (coalitions are 64-bit masks).
inline constexpr int kMaxPlayers = 64;
/// Upper bound for operations that enumerate all 2^n coalitions.
inline constexpr int kMaxEnumPlayers = 30;

/// A subset of players as a bit pattern; bit i corresponds to player id i.
class Coalition {
  public:
    constexpr Coalition() = default;
    constexpr explicit Coalition(std::uint64_t mask) : mask_(mask) {}

    static Coalition of(std::initializer_list<int> players) {
        std::uint64_t m = 0;
        for (int p : players) m |= std::uint64_t{1} << p;
        return Coalition(m);
    }
    static constexpr Coalition grand(int n) {
        return Coalition(n == 64 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << n) - 1);
    }
    static constexpr Coalition single(int player) {
        return Coalition(std::uint64_t{1} << player);
    }

    constexpr std::uint64_t mask() const { return mask_; }
    constexpr bool contains(int player) const {
        return (mask_ >> player) & 1;
    }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr int size() const { return std::popcount(mask_); }

    constexpr Coalition with(int player) const {
        return Coalition(mask_ | (std::uint64_t{1} << player));
    }
    constexpr Coalition without(int player) const {
        return Coalition(mask_ & ~(std::uint64_t{1} << player));
    }
    constexpr bool subset_of(Coalition other) const {
        return (mask_ & ~other.mask_) == 0;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (std::uint64_t m = mask_; m;) {
            int b = std::countr_zero(m);
            out.push_back(b);
            m &= m - 1;
        }
        return out;
    }

    friend constexpr bool operator==(Coalition a, Coalition b) {
        return a.mask_ == b.mask_;
    }
    friend constexpr bool operator<(Coalition a, Coalition b) {
        return a.mask_ < b.mask_;
    }

  private:
    std::uint64_t mask_ = 0;
};

/// One weighted decision rule [q; w]. A coalition passes the rule when its
/// total weight reaches the quota (weak inequality).
struct WeightedRule {
    std::vector<Rat> weights;
    Rat quota;

    Rat total_weight() const;
    bool passes(Coalition s) const;
};

struct Player {
    int id = 0;
    std::string label;
};

/// A simple voting game given by one or more weighted rules over a common
/// player set; a coalition wins iff it passes every rule. Immutable after
/// construction.
class VotingGame {
  public:
    VotingGame(std::string name, std::vector<std::string> labels,
               std::vector<WeightedRule> rules);

    const std::string& name() const { return name_; }
    int num_players() const { return static_cast<int>(players_.size()); }
    const std::vector<Player>& players() const { return players_; }
    const std::string& label(int i) const { return players_[i].label; }
    int player_by_label(const std::string& label) const;  // -1 if absent
    const std::vector<WeightedRule>& rules() const { return rules_; }
    Coalition grand_coalition() const {
        return Coalition::grand(num_players());
    }

    bool is_winning(Coalition s) const;
    /// v(S): 1 for winning, 0 for losing.
    int value(Coalition s) const { return is_winning(s) ? 1 : 0; }
    /// True iff i in S, S winning, and S \ {i} losing.
    bool is_critical(int player, Coalition s) const;

    /// Each rule rescaled to coprime integer weights. Used by the fast
    /// enumeration and DP paths; represents exactly the same game.
    struct IntegerRule {
        std::vector<std::int64_t> weights;
        std::int64_t quota = 0;       // satisfiable quota after scaling
        std::int64_t total = 0;
        std::int64_t max_weight = 0;
    };
    const std::vector<IntegerRule>& integer_rules() const {
        return int_rules_;
    }

  private:
    std::string name_;
    std::vector<Player> players_;
    std::vector<WeightedRule> rules_;
    std::vector<IntegerRule> int_rules_;
};

VotingGame make_weighted_game(const std::vector<std::string>& labels,
                              const std::vector<Rat>& weights,
                              const Rat& quota,
                              const std::string& name = "game");

/// Concatenates the rules of several games over identical player lists:
/// the result wins exactly when every input game wins.
VotingGame intersect_games(const std::vector<VotingGame>& games,
                           const std::string& name = "intersection");

/// All winning coalitions whose proper subsets all lose. Exhaustive subset
/// enumeration; requires n <= kMaxEnumPlayers.
std::vector<Coalition> minimal_winning_coalitions(const VotingGame& game);

/// Players critical in no winning coalition.
std::vector<int> dummies(const VotingGame& game);

/// Players contained in every winning coalition.
std::vector<int> vetoers(const VotingGame& game);

/// Parses the JSON game document format: {"name": ..., "members": [...],
/// "rules": [{"weights": [...], "quota": ...}]}. Weights and quotas may be
/// numbers or "p/q" strings.
VotingGame game_from_json(const std::string& json_text);
VotingGame load_game(const std::string& path);
std::string game_to_json(const VotingGame& game);

}  // namespace powerkit

#endif  // POWERKIT_GAME_HPP
