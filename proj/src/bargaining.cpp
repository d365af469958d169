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

#include "powerkit/bargaining.hpp"

#include "powerkit/lp.hpp"

namespace powerkit {

namespace {

constexpr int kMaxBargainingPlayers = 5;

Rat sum_over(const std::vector<Rat>& x, Coalition s) {
    Rat out = 0;
    for (int k : s.members()) out += x[k];
    return out;
}

// An objection of i against j through winning S admits no counter-objection
// iff some payoff y on S (y(S) = 1, y_k > x_k) keeps every candidate counter
// coalition T (j in T, i not in T) short: y(T∩S) + x(T\S) > v(T).
//
// Feasibility of the open system is decided by maximizing the common margin
// t in the closed relaxation; the objection is justified iff max t > 0.
std::optional<std::vector<Rat>> objection_payoff(const VotingGame& g,
                                                 const std::vector<Rat>& x,
                                                 int i, int j, Coalition s) {
    const int n = g.num_players();
    lp::Problem p;
    std::vector<int> yvar(n, -1);
    for (int k : s.members()) yvar[k] = p.add_var(Rat(0), x[k]);
    const int t = p.add_var(Rat(-1), Rat(0), /*free_var=*/true);  // max t

    {
        std::vector<Rat> row(p.num_vars, Rat(0));
        for (int k : s.members()) row[yvar[k]] = 1;
        p.add_row(std::move(row), lp::Sense::Eq, Rat(1));
    }
    for (int k : s.members()) {
        std::vector<Rat> row(p.num_vars, Rat(0));
        row[yvar[k]] = 1;
        row[t] = -1;
        p.add_row(std::move(row), lp::Sense::Ge, x[k]);
    }
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        Coalition tcoal(m);
        if (!tcoal.contains(j) || tcoal.contains(i)) continue;
        // y(T∩S) + x(T\S) >= v(T) + t must FAIL to counter; require > v(T).
        std::vector<Rat> row(p.num_vars, Rat(0));
        Rat rhs(g.value(tcoal));
        for (int k : tcoal.members()) {
            if (s.contains(k))
                row[yvar[k]] = 1;
            else
                rhs -= x[k];
        }
        row[t] = -1;
        p.add_row(std::move(row), lp::Sense::Ge, std::move(rhs));
    }
    auto sol = lp::solve(p);
    if (sol.status != lp::Status::Optimal || -sol.objective <= 0)
        return std::nullopt;
    std::vector<Rat> y(n, Rat(0));
    for (int k : s.members()) y[k] = sol.x[yvar[k]];
    return y;
}

}  // namespace

std::optional<ObjectionWitness> find_justified_objection(
    const VotingGame& game, const std::vector<Rat>& x) {
    const int n = game.num_players();
    if (n > kMaxBargainingPlayers)
        throw CapabilityError(
            "has_justified_objection: exhaustive pair/coalition search "
            "limited to n <= " + std::to_string(kMaxBargainingPlayers) +
            ", game has " + std::to_string(n));
    if (static_cast<int>(x.size()) != n)
        throw InvalidInputError("imputation length does not match the game");

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
                Coalition s(m);
                if (!s.contains(i) || s.contains(j)) continue;
                if (!game.is_winning(s)) continue;  // v(S)=0 leaves no room
                if (sum_over(x, s) >= 1) continue;
                if (auto y = objection_payoff(game, x, i, j, s)) {
                    ObjectionWitness w;
                    w.objector = i;
                    w.target = j;
                    w.coalition = s;
                    w.payoff = std::move(*y);
                    return w;
                }
            }
        }
    }
    return std::nullopt;
}

bool has_justified_objection(const VotingGame& game,
                             const std::vector<Rat>& x) {
    return find_justified_objection(game, x).has_value();
}

}  // namespace powerkit
