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

#include "powerkit/indices.hpp"

#include <algorithm>
#include <array>

namespace powerkit {

std::string index_kind_name(IndexKind kind) {
    switch (kind) {
        case IndexKind::Ssi: return "ssi";
        case IndexKind::Banzhaf: return "banzhaf";
        case IndexKind::Johnston: return "johnston";
        case IndexKind::DeeganPackel: return "deegan_packel";
        case IndexKind::PublicGood: return "public_good";
        case IndexKind::Nucleolus: return "nucleolus";
    }
    return "?";
}

IndexKind index_kind_from_name(const std::string& name) {
    if (name == "ssi" || name == "shapley" || name == "shapley_shubik")
        return IndexKind::Ssi;
    if (name == "banzhaf") return IndexKind::Banzhaf;
    if (name == "johnston") return IndexKind::Johnston;
    if (name == "deegan_packel" || name == "dp") return IndexKind::DeeganPackel;
    if (name == "public_good" || name == "pgi") return IndexKind::PublicGood;
    if (name == "nucleolus" || name == "nucl") return IndexKind::Nucleolus;
    throw InvalidInputError("unknown index name: " + name);
}

Rat coalition_value_under_profile(const PowerProfile& profile, Coalition s) {
    Rat sum = 0;
    for (int i : s.members()) sum += profile.values.at(i);
    return sum;
}

namespace detail {

CriticalStats enumerate_critical_stats(const VotingGame& game) {
    const int n = game.num_players();
    if (n > kMaxEnumPlayers)
        throw CapabilityError(
            "index enumeration limited to n <= " +
            std::to_string(kMaxEnumPlayers) + ", game has " +
            std::to_string(n));
    const auto& rules = game.integer_rules();
    const std::size_t nrules = rules.size();

    // Split the mask into halves so each rule's coalition weight is two
    // table lookups instead of a popcount loop.
    const int lo_bits = n / 2;
    const int hi_bits = n - lo_bits;
    const std::uint64_t lo_size = std::uint64_t{1} << lo_bits;
    const std::uint64_t hi_size = std::uint64_t{1} << hi_bits;
    std::vector<std::vector<std::int64_t>> lo(nrules), hi(nrules);
    for (std::size_t r = 0; r < nrules; ++r) {
        lo[r].assign(lo_size, 0);
        hi[r].assign(hi_size, 0);
        for (std::uint64_t m = 1; m < lo_size; ++m) {
            int b = std::countr_zero(m);
            lo[r][m] = lo[r][m & (m - 1)] + rules[r].weights[b];
        }
        for (std::uint64_t m = 1; m < hi_size; ++m) {
            int b = std::countr_zero(m);
            hi[r][m] = hi[r][m & (m - 1)] + rules[r].weights[b + lo_bits];
        }
    }

    CriticalStats stats;
    stats.crit_by_size.assign(n, std::vector<unsigned long long>(n + 1, 0));
    stats.swing_by_ncrit.assign(n, std::vector<unsigned long long>(n + 1, 0));
    stats.mwc_by_size.assign(n, std::vector<unsigned long long>(n + 1, 0));

    const std::uint64_t lo_mask = lo_size - 1;
    const std::uint64_t top = std::uint64_t{1} << n;
    std::array<std::int64_t, 8> slack{};
    for (std::uint64_t mask = 1; mask < top; ++mask) {
        bool winning = true;
        bool maybe_critical = false;
        for (std::size_t r = 0; r < nrules; ++r) {
            std::int64_t sum = lo[r][mask & lo_mask] + hi[r][mask >> lo_bits];
            std::int64_t s = sum - rules[r].quota;
            if (s < 0) { winning = false; break; }
            slack[r] = s;
            if (s < rules[r].max_weight) maybe_critical = true;
        }
        if (!winning) continue;
        ++stats.winning_count;
        if (!maybe_critical) continue;  // no member weight exceeds any slack

        std::uint64_t crit = 0;
        for (std::uint64_t m = mask; m;) {
            int b = std::countr_zero(m);
            for (std::size_t r = 0; r < nrules; ++r)
                if (rules[r].weights[b] > slack[r]) {
                    crit |= std::uint64_t{1} << b;
                    break;
                }
            m &= m - 1;
        }
        if (!crit) continue;
        const int k = std::popcount(mask);
        const int c = std::popcount(crit);
        for (std::uint64_t m = crit; m;) {
            int b = std::countr_zero(m);
            ++stats.crit_by_size[b][k];
            ++stats.swing_by_ncrit[b][c];
            m &= m - 1;
        }
        if (crit == mask) {
            ++stats.mwc_count;
            for (std::uint64_t m = mask; m;) {
                int b = std::countr_zero(m);
                ++stats.mwc_by_size[b][k];
                m &= m - 1;
            }
        }
    }
    return stats;
}

}  // namespace detail

namespace {

// Guard for the (size, weight) tables: total scaled weight after rational
// normalization must stay small enough to index by.
constexpr std::int64_t kMaxCountingWeight = std::int64_t{1} << 20;

PowerProfile normalized(IndexKind kind, std::vector<Rat> raw) {
    Rat total = 0;
    for (const Rat& v : raw) total += v;
    if (total == 0)
        throw ComputationError(index_kind_name(kind) +
                               ": all raw scores are zero");
    for (Rat& v : raw) v /= total;
    return PowerProfile{kind, std::move(raw)};
}

}  // namespace

bool counting_path_applies(const VotingGame& game) {
    return game.integer_rules().size() == 1 &&
           game.integer_rules()[0].total <= kMaxCountingWeight;
}

namespace {

// dp[s][w] = number of coalitions of size s and weight w, over all players;
// then each player is divided back out to get the table "without i".
struct WeightCounts {
    int n;
    std::int64_t total;
    std::vector<std::vector<unsigned long long>> dp;

    explicit WeightCounts(const VotingGame::IntegerRule& rule)
        : n(static_cast<int>(rule.weights.size())), total(rule.total) {
        dp.assign(n + 1,
                  std::vector<unsigned long long>(total + 1, 0));
        dp[0][0] = 1;
        for (int i = 0; i < n; ++i) {
            std::int64_t w = rule.weights[i];
            for (int s = i; s >= 0; --s)
                for (std::int64_t v = total - w; v >= 0; --v)
                    if (dp[s][v]) dp[s + 1][v + w] += dp[s][v];
        }
    }

    // Table restricted to coalitions avoiding player i.
    std::vector<std::vector<unsigned long long>> without(
        std::int64_t w) const {
        std::vector<std::vector<unsigned long long>> out(
            n, std::vector<unsigned long long>(total + 1, 0));
        out[0][0] = 1;
        for (std::int64_t v = 1; v <= total; ++v)
            out[0][v] = dp[0][v];  // all zero, kept for clarity
        for (int s = 1; s < n; ++s)
            for (std::int64_t v = 0; v <= total; ++v) {
                unsigned long long c = dp[s][v];
                if (v >= w) c -= out[s - 1][v - w];
                out[s][v] = c;
            }
        return out;
    }
};

// cnt[s] = losing coalitions T of size s avoiding i with T + {i} winning.
std::vector<Int> swing_counts_by_size(
    const std::vector<std::vector<unsigned long long>>& without_i,
    std::int64_t w, std::int64_t quota, std::int64_t total) {
    const int n = static_cast<int>(without_i.size());
    std::vector<Int> cnt(n, 0);
    if (w == 0) return cnt;
    std::int64_t from = std::max<std::int64_t>(0, quota - w);
    std::int64_t to = std::min(quota - 1, total);
    for (int s = 0; s < n; ++s)
        for (std::int64_t v = from; v <= to; ++v)
            cnt[s] += without_i[s][v];
    return cnt;
}

void require_counting(const VotingGame& game, const char* op) {
    if (!counting_path_applies(game))
        throw CapabilityError(
            std::string(op) +
            ": counting path needs a single rule with total scaled weight <= " +
            std::to_string(kMaxCountingWeight));
}

}  // namespace

PowerProfile shapley_shubik_counting(const VotingGame& game) {
    require_counting(game, "shapley_shubik_counting");
    const auto& rule = game.integer_rules()[0];
    const int n = game.num_players();
    WeightCounts counts(rule);
    const Int n_fact = factorial(n);
    std::vector<Rat> phi(n, 0);
    for (int i = 0; i < n; ++i) {
        auto without_i = counts.without(rule.weights[i]);
        auto cnt = swing_counts_by_size(without_i, rule.weights[i], rule.quota,
                                        rule.total);
        Int acc = 0;
        for (int s = 0; s < n; ++s)
            if (cnt[s] != 0)
                acc += cnt[s] * factorial(s) * factorial(n - 1 - s);
        phi[i] = Rat(acc, n_fact);
    }
    return PowerProfile{IndexKind::Ssi, std::move(phi)};
}

PowerProfile banzhaf_counting(const VotingGame& game) {
    require_counting(game, "banzhaf_counting");
    const auto& rule = game.integer_rules()[0];
    const int n = game.num_players();
    WeightCounts counts(rule);
    std::vector<Rat> raw(n, 0);
    for (int i = 0; i < n; ++i) {
        auto without_i = counts.without(rule.weights[i]);
        auto cnt = swing_counts_by_size(without_i, rule.weights[i], rule.quota,
                                        rule.total);
        Int acc = 0;
        for (int s = 0; s < n; ++s) acc += cnt[s];
        raw[i] = Rat(acc);
    }
    return normalized(IndexKind::Banzhaf, std::move(raw));
}

PowerProfile shapley_shubik_enumeration(const VotingGame& game) {
    auto stats = detail::enumerate_critical_stats(game);
    const int n = game.num_players();
    const Int n_fact = factorial(n);
    std::vector<Rat> phi(n, 0);
    for (int i = 0; i < n; ++i) {
        Int acc = 0;
        for (int k = 1; k <= n; ++k)
            if (stats.crit_by_size[i][k] != 0)
                acc += Int(stats.crit_by_size[i][k]) * factorial(k - 1) *
                       factorial(n - k);
        phi[i] = Rat(acc, n_fact);
    }
    return PowerProfile{IndexKind::Ssi, std::move(phi)};
}

PowerProfile banzhaf_enumeration(const VotingGame& game) {
    auto stats = detail::enumerate_critical_stats(game);
    const int n = game.num_players();
    std::vector<Rat> raw(n, 0);
    for (int i = 0; i < n; ++i) {
        Int acc = 0;
        for (int k = 1; k <= n; ++k) acc += stats.crit_by_size[i][k];
        raw[i] = Rat(acc);
    }
    return normalized(IndexKind::Banzhaf, std::move(raw));
}

PowerProfile shapley_shubik(const VotingGame& game) {
    if (counting_path_applies(game)) return shapley_shubik_counting(game);
    if (game.num_players() <= kMaxEnumPlayers)
        return shapley_shubik_enumeration(game);
    throw CapabilityError(
        "shapley_shubik: no applicable path (game too large for enumeration "
        "and not a single small-weight rule)");
}

PowerProfile banzhaf(const VotingGame& game) {
    if (counting_path_applies(game)) return banzhaf_counting(game);
    if (game.num_players() <= kMaxEnumPlayers)
        return banzhaf_enumeration(game);
    throw CapabilityError(
        "banzhaf: no applicable path (game too large for enumeration and "
        "not a single small-weight rule)");
}

PowerProfile johnston(const VotingGame& game) {
    auto stats = detail::enumerate_critical_stats(game);
    const int n = game.num_players();
    std::vector<Rat> raw(n, 0);
    for (int i = 0; i < n; ++i)
        for (int c = 1; c <= n; ++c)
            if (stats.swing_by_ncrit[i][c] != 0)
                raw[i] += Rat(Int(stats.swing_by_ncrit[i][c]), Int(c));
    return normalized(IndexKind::Johnston, std::move(raw));
}

PowerProfile deegan_packel(const VotingGame& game) {
    auto stats = detail::enumerate_critical_stats(game);
    const int n = game.num_players();
    if (stats.mwc_count == 0)
        throw ComputationError("deegan_packel: no minimal winning coalitions");
    std::vector<Rat> values(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int k = 1; k <= n; ++k)
            if (stats.mwc_by_size[i][k] != 0)
                values[i] += Rat(Int(stats.mwc_by_size[i][k]), Int(k));
        values[i] /= Int(stats.mwc_count);
    }
    return PowerProfile{IndexKind::DeeganPackel, std::move(values)};
}

PowerProfile public_good(const VotingGame& game) {
    auto stats = detail::enumerate_critical_stats(game);
    const int n = game.num_players();
    std::vector<Rat> raw(n, 0);
    for (int i = 0; i < n; ++i) {
        Int acc = 0;
        for (int k = 1; k <= n; ++k) acc += stats.mwc_by_size[i][k];
        raw[i] = Rat(acc);
    }
    return normalized(IndexKind::PublicGood, std::move(raw));
}

}  // namespace powerkit
