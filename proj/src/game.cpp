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

#include "powerkit/game.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace powerkit {

Rat WeightedRule::total_weight() const {
    Rat t = 0;
    for (const Rat& w : weights) t += w;
    return t;
}

bool WeightedRule::passes(Coalition s) const {
    Rat sum = 0;
    for (int i : s.members()) sum += weights[i];
    return sum >= quota;
}

namespace {

VotingGame::IntegerRule scale_rule(const WeightedRule& rule, int rule_idx) {
    std::vector<Rat> all = rule.weights;
    all.push_back(rule.quota);
    Int den = common_denominator(all);
    Int g = 0;
    for (const Rat& v : all) g = gcd(g, rat_num(v * den));
    if (g == 0) g = 1;

    VotingGame::IntegerRule out;
    Int total = 0;
    for (const Rat& w : rule.weights) {
        Int scaled = rat_num(w * den) / g;
        if (scaled > std::numeric_limits<std::int64_t>::max() / 2)
            throw CapabilityError("rule " + std::to_string(rule_idx) +
                                  ": scaled integer weights exceed 64 bits");
        out.weights.push_back(scaled.convert_to<std::int64_t>());
        total += scaled;
        out.max_weight = std::max(out.max_weight,
                                  scaled.convert_to<std::int64_t>());
    }
    if (total > std::numeric_limits<std::int64_t>::max() / 2)
        throw CapabilityError("rule " + std::to_string(rule_idx) +
                              ": scaled total weight exceeds 64 bits");
    out.total = total.convert_to<std::int64_t>();
    out.quota = (rat_num(rule.quota * den) / g).convert_to<std::int64_t>();
    return out;
}

}  // namespace

VotingGame::VotingGame(std::string name, std::vector<std::string> labels,
                       std::vector<WeightedRule> rules)
    : name_(std::move(name)), rules_(std::move(rules)) {
    const int n = static_cast<int>(labels.size());
    if (n < 1) throw InvalidInputError("game needs at least one player");
    if (n > kMaxPlayers)
        throw InvalidInputError("game has " + std::to_string(n) +
                                " players; limit is " +
                                std::to_string(kMaxPlayers));
    std::set<std::string> seen;
    for (int i = 0; i < n; ++i) {
        if (!seen.insert(labels[i]).second)
            throw InvalidInputError("duplicate player label: " + labels[i]);
        players_.push_back({i, std::move(labels[i])});
    }
    if (rules_.empty()) throw InvalidInputError("game needs at least one rule");
    for (std::size_t r = 0; r < rules_.size(); ++r) {
        const WeightedRule& rule = rules_[r];
        if (static_cast<int>(rule.weights.size()) != n)
            throw InvalidInputError("rule " + std::to_string(r) + " has " +
                                    std::to_string(rule.weights.size()) +
                                    " weights for " + std::to_string(n) +
                                    " players");
        for (const Rat& w : rule.weights)
            if (w < 0)
                throw InvalidInputError("rule " + std::to_string(r) +
                                        ": negative weight " +
                                        to_fraction_string(w));
        if (rule.quota <= 0)
            throw InvalidInputError("rule " + std::to_string(r) +
                                    ": quota must be positive");
        if (rule.quota > rule.total_weight())
            throw InvalidInputError(
                "void game: rule " + std::to_string(r) + " quota " +
                to_fraction_string(rule.quota) + " exceeds total weight " +
                to_fraction_string(rule.total_weight()));
        int_rules_.push_back(scale_rule(rule, static_cast<int>(r)));
    }
}

int VotingGame::player_by_label(const std::string& label) const {
    for (const Player& p : players_)
        if (p.label == label) return p.id;
    return -1;
}

bool VotingGame::is_winning(Coalition s) const {
    for (const IntegerRule& rule : int_rules_) {
        std::int64_t sum = 0;
        for (std::uint64_t m = s.mask(); m;) {
            int b = std::countr_zero(m);
            sum += rule.weights[b];
            m &= m - 1;
        }
        if (sum < rule.quota) return false;
    }
    return true;
}

bool VotingGame::is_critical(int player, Coalition s) const {
    return s.contains(player) && is_winning(s) &&
           !is_winning(s.without(player));
}

VotingGame make_weighted_game(const std::vector<std::string>& labels,
                              const std::vector<Rat>& weights,
                              const Rat& quota, const std::string& name) {
    return VotingGame(name, labels, {WeightedRule{weights, quota}});
}

VotingGame intersect_games(const std::vector<VotingGame>& games,
                           const std::string& name) {
    if (games.empty())
        throw InvalidInputError("intersect_games needs at least one game");
    std::vector<std::string> labels;
    for (const Player& p : games[0].players()) labels.push_back(p.label);
    std::vector<WeightedRule> rules;
    for (const VotingGame& g : games) {
        if (g.num_players() != games[0].num_players())
            throw InvalidInputError("intersect_games: player counts differ");
        for (int i = 0; i < g.num_players(); ++i)
            if (g.label(i) != labels[i])
                throw InvalidInputError(
                    "intersect_games: player lists differ at position " +
                    std::to_string(i) + " (" + g.label(i) + " vs " +
                    labels[i] + ")");
        rules.insert(rules.end(), g.rules().begin(), g.rules().end());
    }
    return VotingGame(name, labels, rules);
}

namespace {

void require_enumerable(const VotingGame& game, const char* op) {
    if (game.num_players() > kMaxEnumPlayers)
        throw CapabilityError(std::string(op) +
                              ": exhaustive enumeration limited to n <= " +
                              std::to_string(kMaxEnumPlayers) + ", game has " +
                              std::to_string(game.num_players()));
}

}  // namespace

std::vector<Coalition> minimal_winning_coalitions(const VotingGame& game) {
    require_enumerable(game, "minimal_winning_coalitions");
    const int n = game.num_players();
    const auto& rules = game.integer_rules();
    std::vector<Coalition> out;
    const std::uint64_t top = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < top; ++mask) {
        bool winning = true;
        std::vector<std::int64_t> sums(rules.size(), 0);
        for (std::uint64_t m = mask; m;) {
            int b = std::countr_zero(m);
            for (std::size_t r = 0; r < rules.size(); ++r)
                sums[r] += rules[r].weights[b];
            m &= m - 1;
        }
        for (std::size_t r = 0; r < rules.size(); ++r)
            if (sums[r] < rules[r].quota) { winning = false; break; }
        if (!winning) continue;
        // Minimal iff every member is critical.
        bool minimal = true;
        for (std::uint64_t m = mask; m && minimal;) {
            int b = std::countr_zero(m);
            bool member_critical = false;
            for (std::size_t r = 0; r < rules.size(); ++r)
                if (sums[r] - rules[r].weights[b] < rules[r].quota) {
                    member_critical = true;
                    break;
                }
            minimal = member_critical;
            m &= m - 1;
        }
        if (minimal) out.push_back(Coalition(mask));
    }
    return out;
}

std::vector<int> vetoers(const VotingGame& game) {
    // i is a vetoer iff N \ {i} loses (monotonicity).
    std::vector<int> out;
    Coalition grand = game.grand_coalition();
    for (int i = 0; i < game.num_players(); ++i)
        if (!game.is_winning(grand.without(i))) out.push_back(i);
    return out;
}

std::vector<int> dummies(const VotingGame& game) {
    require_enumerable(game, "dummies");
    const int n = game.num_players();
    std::vector<bool> critical_somewhere(n, false);
    const std::uint64_t top = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < top; ++mask) {
        Coalition s(mask);
        if (!game.is_winning(s)) continue;
        for (std::uint64_t m = mask; m;) {
            int b = std::countr_zero(m);
            if (!critical_somewhere[b] && !game.is_winning(s.without(b)))
                critical_somewhere[b] = true;
            m &= m - 1;
        }
    }
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (!critical_somewhere[i]) out.push_back(i);
    return out;
}

namespace {

Rat rational_from_json(const nlohmann::json& v, const std::string& where) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rat(Int(v.get<std::int64_t>()));
    if (v.is_number_unsigned()) {
        std::ostringstream os;
        os << v.get<std::uint64_t>();
        return parse_rational(os.str());
    }
    if (v.is_number_float()) {
        // Recover the shortest decimal that round-trips to this double, so
        // 0.62 is read as 62/100 rather than the binary expansion.
        double d = v.get<double>();
        char buf[64];
        for (int prec = 15; prec <= 17; ++prec) {
            std::snprintf(buf, sizeof(buf), "%.*g", prec, d);
            if (std::strtod(buf, nullptr) == d) break;
        }
        std::string s(buf);
        auto epos = s.find_first_of("eE");
        if (epos == std::string::npos) return parse_rational(s);
        int exp = std::stoi(s.substr(epos + 1));
        Rat base = parse_rational(s.substr(0, epos));
        Rat ten(10);
        for (int i = 0; i < std::abs(exp); ++i)
            base = exp > 0 ? base * ten : base / ten;
        return base;
    }
    throw InvalidInputError(where + ": expected a number or rational string");
}

}  // namespace

VotingGame game_from_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInputError(std::string("malformed game file: ") +
                                e.what());
    }
    if (!doc.contains("members") || !doc["members"].is_array())
        throw InvalidInputError("game file missing \"members\" array");
    if (!doc.contains("rules") || !doc["rules"].is_array() ||
        doc["rules"].empty())
        throw InvalidInputError("game file missing non-empty \"rules\" array");
    std::vector<std::string> labels;
    for (const auto& m : doc["members"]) labels.push_back(m.get<std::string>());
    std::vector<WeightedRule> rules;
    for (const auto& r : doc["rules"]) {
        WeightedRule rule;
        if (!r.contains("weights") || !r["weights"].is_array())
            throw InvalidInputError("rule missing \"weights\" array");
        for (const auto& w : r["weights"])
            rule.weights.push_back(rational_from_json(w, "weight"));
        if (!r.contains("quota"))
            throw InvalidInputError("rule missing \"quota\"");
        rule.quota = rational_from_json(r["quota"], "quota");
        rules.push_back(std::move(rule));
    }
    std::string name = doc.value("name", "game");
    return VotingGame(name, labels, rules);
}

VotingGame load_game(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open game file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return game_from_json(ss.str());
    } catch (const InvalidInputError& e) {
        throw InvalidInputError(path + ": " + e.what());
    }
}

std::string game_to_json(const VotingGame& game) {
    nlohmann::json doc;
    doc["name"] = game.name();
    for (const Player& p : game.players()) doc["members"].push_back(p.label);
    for (const WeightedRule& r : game.rules()) {
        nlohmann::json jr;
        for (const Rat& w : r.weights)
            jr["weights"].push_back(to_fraction_string(w));
        jr["quota"] = to_fraction_string(r.quota);
        doc["rules"].push_back(jr);
    }
    return doc.dump(2);
}

}  // namespace powerkit
