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

#include "powerkit/solution.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "powerkit/lp.hpp"

namespace powerkit {

Rat excess(const VotingGame& game, Coalition s, const std::vector<Rat>& x) {
    Rat sum = 0;
    for (int i : s.members()) sum += x.at(i);
    return Rat(game.value(s)) - sum;
}

namespace {

constexpr int kMaxRounds = 300;

std::vector<Rat> singleton_values(const VotingGame& g) {
    std::vector<Rat> v(g.num_players());
    for (int i = 0; i < g.num_players(); ++i)
        v[i] = Rat(g.value(Coalition::single(i)));
    return v;
}

void require_imputations(const VotingGame& g, const std::vector<Rat>& lower) {
    Rat sum = std::accumulate(lower.begin(), lower.end(), Rat(0));
    if (sum > 1)
        throw InvalidInputError(
            g.name() + ": imputation set is empty (" +
            to_fraction_string(sum) + " of singleton value to distribute)");
}

// ---------------------------------------------------------------------------
// Separation: cheapest winning / losing coalition under a payoff vector,
// skipping an exclusion set. Depth-first branch and bound over players in
// ascending payoff order.

// Up to kBatch cheapest candidates are returned per side; rows for the
// runners-up save LP re-solves. Supersets of an unexcluded candidate are
// implied by its row and x >= 0, so recording prunes the subtree.
//
// Cost is templated: payoffs scale onto a common integer grid when they fit
// in 64 bits (the usual case), with exact rationals as the fallback.
template <typename CostT>
struct SeparatorImpl {
    static constexpr std::size_t kBatch = 8;

    const VotingGame& g;
    const std::unordered_set<std::uint64_t>& excluded;
    int n;
    std::vector<int> order;
    std::vector<CostT> cost;  // by original player index
    std::vector<std::vector<std::int64_t>> suffix;  // [rule][pos]

    SeparatorImpl(const VotingGame& game, std::vector<CostT> costs,
                  const std::unordered_set<std::uint64_t>& excl)
        : g(game), excluded(excl), n(game.num_players()),
          cost(std::move(costs)) {
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return cost[a] < cost[b];
        });
        const auto& rules = g.integer_rules();
        suffix.assign(rules.size(), std::vector<std::int64_t>(n + 1, 0));
        for (std::size_t r = 0; r < rules.size(); ++r)
            for (int pos = n - 1; pos >= 0; --pos)
                suffix[r][pos] =
                    suffix[r][pos + 1] + rules[r].weights[order[pos]];
    }

    std::vector<std::pair<CostT, std::uint64_t>> top;  // sorted by cost

    bool meets_all(const std::vector<std::int64_t>& w) const {
        const auto& rules = g.integer_rules();
        for (std::size_t r = 0; r < rules.size(); ++r)
            if (w[r] < rules[r].quota) return false;
        return true;
    }

    std::vector<std::pair<CostT, std::uint64_t>> cheapest_winning() {
        top.clear();
        std::vector<std::int64_t> w(g.integer_rules().size(), 0);
        winning_dfs(0, 0, CostT(0), w);
        return top;
    }

    std::vector<std::pair<CostT, std::uint64_t>> cheapest_losing() {
        top.clear();
        std::vector<std::int64_t> w(g.integer_rules().size(), 0);
        losing_dfs(0, 0, CostT(0), w);
        return top;
    }

  private:
    bool prune(const CostT& acc) const {
        return top.size() == kBatch && acc >= top.back().first;
    }

    void record(const CostT& acc, std::uint64_t mask) {
        auto at = std::upper_bound(
            top.begin(), top.end(), acc,
            [](const CostT& a, const auto& b) { return a < b.first; });
        top.insert(at, {acc, mask});
        if (top.size() > kBatch) top.pop_back();
    }

    void winning_dfs(int pos, std::uint64_t mask, const CostT& acc,
                     std::vector<std::int64_t>& w) {
        if (prune(acc)) return;
        if (meets_all(w)) {
            if (!excluded.contains(mask)) {
                record(acc, mask);
                return;  // supersets are implied rows
            }
            // excluded winner: a superset may still be needed
        }
        if (pos == n) return;
        const auto& rules = g.integer_rules();
        for (std::size_t r = 0; r < rules.size(); ++r)
            if (w[r] + suffix[r][pos] < rules[r].quota) return;
        int p = order[pos];
        for (std::size_t r = 0; r < rules.size(); ++r)
            w[r] += rules[r].weights[p];
        winning_dfs(pos + 1, mask | (std::uint64_t{1} << p), acc + cost[p], w);
        for (std::size_t r = 0; r < rules.size(); ++r)
            w[r] -= rules[r].weights[p];
        winning_dfs(pos + 1, mask, acc, w);
    }

    void losing_dfs(int pos, std::uint64_t mask, const CostT& acc,
                    std::vector<std::int64_t>& w) {
        if (prune(acc)) return;
        if (meets_all(w)) return;  // all supersets win as well
        if (pos == n) {
            if (mask != 0 && !excluded.contains(mask)) record(acc, mask);
            return;
        }
        // Taking the cheap players first fills the candidate list with
        // low-cost sets, after which equal-cost branches prune away.
        int p = order[pos];
        const auto& rules = g.integer_rules();
        for (std::size_t r = 0; r < rules.size(); ++r)
            w[r] += rules[r].weights[p];
        losing_dfs(pos + 1, mask | (std::uint64_t{1} << p), acc + cost[p], w);
        for (std::size_t r = 0; r < rules.size(); ++r)
            w[r] -= rules[r].weights[p];
        losing_dfs(pos + 1, mask, acc, w);
    }
};

/// Runs both separation sides at a payoff vector; results as exact excesses.
struct SeparationResult {
    std::vector<std::pair<Rat, std::uint64_t>> winning;  // (x(S), S)
    std::vector<std::pair<Rat, std::uint64_t>> losing;
};

SeparationResult separate(const VotingGame& g, const std::vector<Rat>& x,
                          const std::unordered_set<std::uint64_t>& excluded) {
    SeparationResult out;
    const Int denom = common_denominator(x);
    bool fits = denom < Int(std::int64_t{1} << 40);
    std::vector<std::int64_t> scaled;
    if (fits) {
        for (const Rat& v : x) {
            Int s = rat_num(v * denom);
            if (s > Int(std::int64_t{1} << 60)) { fits = false; break; }
            scaled.push_back(s.convert_to<std::int64_t>());
        }
    }
    if (fits) {
        SeparatorImpl<std::int64_t> sep(g, std::move(scaled), excluded);
        for (auto& [c, m] : sep.cheapest_winning())
            out.winning.emplace_back(Rat(Int(c), denom), m);
        for (auto& [c, m] : sep.cheapest_losing())
            out.losing.emplace_back(Rat(Int(c), denom), m);
    } else {
        SeparatorImpl<Rat> sep(g, x, excluded);
        out.winning = sep.cheapest_winning();
        out.losing = sep.cheapest_losing();
    }
    return out;
}

// Exact Gaussian elimination; returns the unique solution when the system
// has full column rank, nullopt otherwise.
std::optional<std::vector<Rat>> solve_if_unique(
    std::vector<std::vector<Rat>> a, std::vector<Rat> b, int n) {
    const int m = static_cast<int>(a.size());
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < n && rank < m; ++col) {
        int piv = -1;
        for (int r = rank; r < m; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        std::swap(b[rank], b[piv]);
        Rat inv = 1 / a[rank][col];
        for (int j = 0; j < n; ++j) a[rank][j] *= inv;
        b[rank] *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int j = 0; j < n; ++j) a[r][j] -= f * a[rank][j];
            b[r] -= f * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank < n) return std::nullopt;
    std::vector<Rat> x(n);
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
    // Inconsistent rows would mean the face is empty, which cannot happen.
    for (int r = rank; r < m; ++r)
        if (b[r] != 0)
            throw ComputationError("inconsistent equality system");
    return x;
}

// ---------------------------------------------------------------------------
// Constraint-generation engine shared by least_core() and nucleolus().

class Engine {
  public:
    explicit Engine(const VotingGame& g)
        : g_(g), n_(g.num_players()), lower_(singleton_values(g)) {
        require_imputations(g, lower_);
        excluded_.insert(g.grand_coalition().mask());
        for (int i = 0; i < n_; ++i) {
            add_pool(Coalition::single(i).mask());
            if (n_ > 2) add_pool(g.grand_coalition().without(i).mask());
        }
    }

    struct RoundSolution {
        Rat eps;
        std::vector<Rat> x;
        std::vector<std::uint64_t> positive_dual_rows;
        std::vector<std::uint64_t> binding_rows;  // within the pool
        std::vector<char> pinned;  // x_i at its bound across the whole face
    };

    /// Minimizes the largest excess over coalitions not yet fixed.
    RoundSolution solve_round() {
        for (;;) {
            auto sol = solve_pool_lp(/*with_eps=*/true, Rat(0), -1);
            if (!add_violations(sol.x, sol.eps)) {
                RoundSolution out;
                out.eps = sol.eps;
                out.x = std::move(sol.x);
                out.positive_dual_rows = std::move(sol.positive_y);
                for (std::uint64_t mask : pool_)
                    if (excess(g_, Coalition(mask), out.x) == out.eps)
                        out.binding_rows.push_back(mask);
                out.pinned = std::move(sol.pinned);
                return out;
            }
        }
    }

    /// True when the optimal face at level eps is the single point x.
    /// Fast path: the equalities known to hold across the face (fixed
    /// rows, positive-dual rows, coordinates with positive reduced cost)
    /// already pin a unique point. Complete path: maximize each coordinate
    /// over the face; under the sum-to-one constraint "no coordinate can
    /// increase" is equivalent to uniqueness.
    bool face_is_point(const RoundSolution& rs) {
        if (face_point_by_rank(rs)) return true;
        for (int k = 0; k < n_; ++k) {
            if (rs.pinned[k]) continue;  // cannot move off its bound
            for (;;) {
                auto sol = solve_pool_lp(/*with_eps=*/false, rs.eps, k);
                if (add_violations(sol.x, rs.eps)) continue;
                if (sol.x[k] > rs.x[k]) return false;
                break;
            }
        }
        return true;
    }

    void fix_rows(const std::vector<std::uint64_t>& rows, const Rat& level) {
        for (std::uint64_t mask : rows) {
            auto it = std::find(pool_.begin(), pool_.end(), mask);
            if (it == pool_.end()) continue;
            pool_.erase(it);
            fixed_.emplace_back(mask, level);
            excluded_.insert(mask);
        }
    }

    const std::vector<std::pair<std::uint64_t, Rat>>& fixed() const {
        return fixed_;
    }

  private:
    bool add_pool(std::uint64_t mask) {
        if (mask == 0 || excluded_.contains(mask)) return false;
        if (std::find(pool_.begin(), pool_.end(), mask) != pool_.end())
            return false;
        pool_.push_back(mask);
        return true;
    }

    bool face_point_by_rank(const RoundSolution& rs) const {
        std::vector<std::vector<Rat>> rows;
        std::vector<Rat> rhs;
        rows.push_back(std::vector<Rat>(n_, Rat(1)));
        rhs.push_back(Rat(1));
        auto add_mask_row = [&](std::uint64_t mask, Rat value) {
            std::vector<Rat> row(n_, Rat(0));
            for (int i : Coalition(mask).members()) row[i] = 1;
            rows.push_back(std::move(row));
            rhs.push_back(std::move(value));
        };
        for (const auto& [mask, level] : fixed_)
            add_mask_row(mask, Rat(g_.value(Coalition(mask))) - level);
        for (std::uint64_t mask : rs.positive_dual_rows)
            add_mask_row(mask, Rat(g_.value(Coalition(mask))) - rs.eps);
        for (int i = 0; i < n_; ++i) {
            if (!rs.pinned[i]) continue;
            std::vector<Rat> row(n_, Rat(0));
            row[i] = 1;
            rows.push_back(std::move(row));
            rhs.push_back(lower_[i]);
        }
        auto x = solve_if_unique(rows, rhs, n_);
        return x && *x == rs.x;
    }

    struct PoolLpSolution {
        Rat eps;                // the minimized level (with_eps mode)
        std::vector<Rat> x;
        std::vector<std::uint64_t> positive_y;
        std::vector<char> pinned;
    };

    /// The pool LP, posed in its dual column orientation so the tableau has
    /// only n+1 rows no matter how many coalitions were generated:
    ///
    ///   max  B0*lam + sum_F d_S*mu_S + sum_pool b_S*y_S
    ///   s.t. per player i:  lam + mu(F ni) + y(pool ni) <= c_i,  y >= 0
    ///        (with eps)     sum_pool y_S = 1
    ///
    /// where the primal is min eps (or max x_k when `maximize_coord` >= 0
    /// and eps is pinned at eps_value, entering b_S). The imputation x is
    /// read back from the row duals.
    PoolLpSolution solve_pool_lp(bool with_eps, const Rat& eps_value,
                                 int maximize_coord) const {
        lp::Problem p;
        std::vector<int> yvar, muvar;
        for (std::size_t k = 0; k < pool_.size(); ++k) {
            Rat b = Rat(g_.value(Coalition(pool_[k]))) -
                    lower_sum(pool_[k]);
            if (!with_eps) b -= eps_value;
            yvar.push_back(p.add_var(-b));
        }
        for (const auto& [mask, level] : fixed_) {
            Rat d = Rat(g_.value(Coalition(mask))) - level - lower_sum(mask);
            muvar.push_back(p.add_var(-d, Rat(0), /*free_var=*/true));
        }
        Rat b0 = Rat(1);
        for (int i = 0; i < n_; ++i) b0 -= lower_[i];
        int lam = p.add_var(-b0, Rat(0), /*free_var=*/true);

        for (int i = 0; i < n_; ++i) {
            std::vector<Rat> row(p.num_vars, Rat(0));
            for (std::size_t k = 0; k < pool_.size(); ++k)
                if (Coalition(pool_[k]).contains(i)) row[yvar[k]] = 1;
            for (std::size_t f = 0; f < fixed_.size(); ++f)
                if (Coalition(fixed_[f].first).contains(i))
                    row[muvar[f]] = 1;
            row[lam] = 1;
            Rat rhs = (i == maximize_coord) ? Rat(-1) : Rat(0);
            p.add_row(std::move(row), lp::Sense::Le, std::move(rhs));
        }
        if (with_eps) {
            std::vector<Rat> row(p.num_vars, Rat(0));
            for (int v : yvar) row[v] = 1;
            p.add_row(std::move(row), lp::Sense::Eq, Rat(1));
        }
        auto sol = lp::solve(p);
        if (sol.status != lp::Status::Optimal)
            throw ComputationError(g_.name() + ": pool LP not optimal");

        PoolLpSolution out;
        out.x.resize(n_);
        for (int i = 0; i < n_; ++i) out.x[i] = lower_[i] - sol.row_dual[i];
        out.eps = with_eps ? -sol.objective : eps_value;
        for (std::size_t k = 0; k < pool_.size(); ++k)
            if (sol.x[yvar[k]] > 0) out.positive_y.push_back(pool_[k]);
        // A slack player row means x_i sits at its bound on every optimum.
        out.pinned.assign(n_, 0);
        for (int i = 0; i < n_; ++i) {
            Rat lhs = sol.x[lam];
            for (std::size_t k = 0; k < pool_.size(); ++k)
                if (Coalition(pool_[k]).contains(i)) lhs += sol.x[yvar[k]];
            for (std::size_t f = 0; f < fixed_.size(); ++f)
                if (Coalition(fixed_[f].first).contains(i))
                    lhs += sol.x[muvar[f]];
            Rat rhs = (i == maximize_coord) ? Rat(-1) : Rat(0);
            if (lhs < rhs) out.pinned[i] = 1;
        }
        check_witness(out, with_eps);
        return out;
    }

    Rat lower_sum(std::uint64_t mask) const {
        Rat s = 0;
        for (int i : Coalition(mask).members()) s += lower_[i];
        return s;
    }

    // The recovered point must be a face member; anything else signals a
    // duality bookkeeping error.
    void check_witness(const PoolLpSolution& s, bool with_eps) const {
        Rat sum = std::accumulate(s.x.begin(), s.x.end(), Rat(0));
        if (sum != 1)
            throw ComputationError(g_.name() + ": pool LP witness not efficient");
        for (int i = 0; i < n_; ++i)
            if (s.x[i] < lower_[i])
                throw ComputationError(g_.name() +
                                       ": pool LP witness below bound");
        for (const auto& [mask, level] : fixed_)
            if (excess(g_, Coalition(mask), s.x) != level)
                throw ComputationError(g_.name() +
                                       ": pool LP witness off fixed level");
        for (std::uint64_t mask : pool_)
            if (excess(g_, Coalition(mask), s.x) > s.eps)
                throw ComputationError(g_.name() +
                                       ": pool LP witness violates a row");
        (void)with_eps;
    }

    /// Finds coalitions whose excess at x exceeds `threshold` and pools
    /// them. Returns true when anything was added.
    bool add_violations(const std::vector<Rat>& x, const Rat& threshold) {
        auto res = separate(g_, x, excluded_);
        bool added = false;
        for (const auto& [xs, mask] : res.winning)
            if (Rat(1) - xs > threshold) added |= add_pool(mask);
        for (const auto& [xs, mask] : res.losing)
            if (-xs > threshold) added |= add_pool(mask);
        return added;
    }

    const VotingGame& g_;
    int n_;
    std::vector<Rat> lower_;
    std::vector<std::uint64_t> pool_;
    std::vector<std::pair<std::uint64_t, Rat>> fixed_;
    std::unordered_set<std::uint64_t> excluded_;
};

std::vector<Coalition> binding_coalitions(const VotingGame& g,
                                          const std::vector<Rat>& x,
                                          const Rat& eps,
                                          const std::vector<std::uint64_t>& pool_binding) {
    std::vector<Coalition> out;
    if (g.num_players() <= 16) {
        const std::uint64_t top = std::uint64_t{1} << g.num_players();
        for (std::uint64_t m = 1; m < top - 1; ++m)
            if (excess(g, Coalition(m), x) == eps) out.push_back(Coalition(m));
    } else {
        for (std::uint64_t m : pool_binding) out.push_back(Coalition(m));
    }
    return out;
}

NucleolusResult run_nucleolus(const VotingGame& g) {
    const int n = g.num_players();
    NucleolusResult result;
    if (n == 1) {
        result.profile = PowerProfile{IndexKind::Nucleolus, {Rat(1)}};
        return result;
    }
    Engine engine(g);
    for (int round = 0; round < kMaxRounds; ++round) {
        auto rs = engine.solve_round();
        if (engine.face_is_point(rs)) {
            if (result.rounds.empty() || result.rounds.back().level != rs.eps)
                result.rounds.push_back({rs.eps, {}});
            result.profile = PowerProfile{IndexKind::Nucleolus, rs.x};
            return result;
        }
        if (rs.positive_dual_rows.empty())
            throw ComputationError(g.name() +
                                   ": no coalition to fix in refinement");
        NucleolusRound record{rs.eps, {}};
        for (std::uint64_t m : rs.positive_dual_rows)
            record.fixed.push_back(Coalition(m));
        engine.fix_rows(rs.positive_dual_rows, rs.eps);
        if (!result.rounds.empty() && result.rounds.back().level == rs.eps) {
            auto& last = result.rounds.back().fixed;
            last.insert(last.end(), record.fixed.begin(), record.fixed.end());
        } else {
            result.rounds.push_back(std::move(record));
        }
    }
    throw ComputationError(g.name() + ": refinement did not converge");
}

}  // namespace

LeastCoreResult least_core(const VotingGame& game) {
    const int n = game.num_players();
    if (n == 1)
        return LeastCoreResult{Rat(-1), {Rat(1)}, {}, true};
    Engine engine(game);
    auto rs = engine.solve_round();
    LeastCoreResult out;
    out.epsilon = rs.eps;
    out.witness = rs.x;
    out.unique = engine.face_is_point(rs);
    out.binding = binding_coalitions(game, rs.x, rs.eps, rs.binding_rows);
    return out;
}

PowerProfile nucleolus(const VotingGame& game) {
    return run_nucleolus(game).profile;
}

NucleolusResult nucleolus_with_certificate(const VotingGame& game) {
    return run_nucleolus(game);
}

bool core_nonempty(const VotingGame& game) {
    return least_core(game).epsilon <= 0;
}

// ---------------------------------------------------------------------------
// Reference implementation: sequential LPs with the complete coalition set.
// Each round LP is solved in dual column form (one column per coalition,
// priced exhaustively every iteration) by a small revised simplex with an
// explicit basis inverse.

namespace {

class OracleSimplex {
  public:
    // Column identifiers, in Bland order: coalition columns by mask, then
    // fixed-equality multiplier pairs, the efficiency multiplier pair,
    // player-row slacks, and the bootstrap artificial.
    struct Column {
        enum Kind { Y, MuPos, MuNeg, LamPos, LamNeg, Slack, Art } kind;
        std::uint64_t mask = 0;  // Y / Mu
        int index = 0;           // Slack row / fixed index
    };

    OracleSimplex(const VotingGame& g, const std::vector<Rat>& lower,
                  const std::vector<std::pair<std::uint64_t, Rat>>& fixed,
                  const std::unordered_set<std::uint64_t>& fixed_set)
        : g_(g), n_(g.num_players()), rows_(n_ + 1), lower_(lower),
          fixed_(fixed), fixed_set_(fixed_set) {
        grand_ = g.grand_coalition().mask();
        // b_S = v(S) - sum of lower bounds inside S; lower bounds are the
        // singleton values, 1 only for a winning singleton.
        winner_singletons_ = 0;
        for (int i = 0; i < n_; ++i)
            if (lower_[i] == 1)
                winner_singletons_ |= std::uint64_t{1} << i;
        b0_ = Rat(1);
        for (int i = 0; i < n_; ++i) b0_ -= lower_[i];
    }

    struct Outcome {
        Rat eps;
        std::vector<Rat> x;
        std::vector<std::uint64_t> positive_y;
        std::vector<char> slack_positive;  // per player row
    };

    Outcome solve() {
        basis_.clear();
        binv_.assign(rows_, std::vector<Rat>(rows_, Rat(0)));
        xb_.assign(rows_, Rat(0));
        for (int i = 0; i < rows_; ++i) binv_[i][i] = 1;
        for (int i = 0; i < n_; ++i)
            basis_.push_back(Column{Column::Slack, 0, i});
        basis_.push_back(Column{Column::Art, 0, 0});
        xb_[n_] = 1;  // artificial carries the eps-row equality

        run_phase(/*phase1=*/true);
        for (int i = 0; i < rows_; ++i)
            if (basis_[i].kind == Column::Art && xb_[i] != 0)
                throw ComputationError(g_.name() +
                                       ": oracle round LP infeasible");
        run_phase(/*phase1=*/false);

        Outcome out;
        std::vector<Rat> pi = multipliers(/*phase1=*/false);
        out.eps = pi[n_];
        out.x.resize(n_);
        for (int i = 0; i < n_; ++i) out.x[i] = lower_[i] + pi[i];
        out.slack_positive.assign(n_, 0);
        for (int i = 0; i < rows_; ++i) {
            if (xb_[i] <= 0) continue;
            if (basis_[i].kind == Column::Y)
                out.positive_y.push_back(basis_[i].mask);
            if (basis_[i].kind == Column::Slack)
                out.slack_positive[basis_[i].index] = 1;
        }
        return out;
    }

  private:
    // Total order on columns used by Bland's rule (entering scan order and
    // leaving-variable tie breaks).
    std::uint64_t ordinal(const Column& c) const {
        const std::uint64_t base = std::uint64_t{1} << n_;
        switch (c.kind) {
            case Column::Y: return c.mask;
            case Column::MuPos: return base + 2 * c.index;
            case Column::MuNeg: return base + 2 * c.index + 1;
            case Column::LamPos: return base + 2 * fixed_.size();
            case Column::LamNeg: return base + 2 * fixed_.size() + 1;
            case Column::Slack:
                return base + 2 * fixed_.size() + 2 + c.index;
            case Column::Art:
                return base + 2 * fixed_.size() + 2 +
                       static_cast<std::uint64_t>(n_);
        }
        return ~std::uint64_t{0};
    }

    Rat column_cost(const Column& c, bool phase1) const {
        if (phase1) return c.kind == Column::Art ? Rat(-1) : Rat(0);
        switch (c.kind) {
            case Column::Y: return b_of(c.mask);
            case Column::MuPos: return d_of(c.index);
            case Column::MuNeg: return -d_of(c.index);
            case Column::LamPos: return b0_;
            case Column::LamNeg: return -b0_;
            default: return Rat(0);
        }
    }

    Rat b_of(std::uint64_t mask) const {
        Rat b(g_.value(Coalition(mask)));
        return b - Rat(std::popcount(mask & winner_singletons_));
    }
    Rat d_of(int f) const {
        auto [mask, level] = fixed_[f];
        return Rat(g_.value(Coalition(mask))) - level -
               Rat(std::popcount(mask & winner_singletons_));
    }

    // d = Binv * a for the sparse constraint column of c.
    std::vector<Rat> basis_direction(const Column& c) const {
        std::vector<Rat> d(rows_, Rat(0));
        auto add_col = [&](int j, const Rat& f) {
            for (int r = 0; r < rows_; ++r)
                if (binv_[r][j] != 0) d[r] += f * binv_[r][j];
        };
        switch (c.kind) {
            case Column::Y:
                for (int i : Coalition(c.mask).members()) add_col(i, Rat(1));
                add_col(n_, Rat(1));
                break;
            case Column::MuPos:
            case Column::MuNeg: {
                Rat f = c.kind == Column::MuPos ? Rat(1) : Rat(-1);
                for (int i : Coalition(fixed_[c.index].first).members())
                    add_col(i, f);
                break;
            }
            case Column::LamPos:
            case Column::LamNeg: {
                Rat f = c.kind == Column::LamPos ? Rat(1) : Rat(-1);
                for (int i = 0; i < n_; ++i) add_col(i, f);
                break;
            }
            case Column::Slack:
                add_col(c.index, Rat(1));
                break;
            case Column::Art:
                add_col(n_, Rat(1));
                break;
        }
        return d;
    }

    std::vector<Rat> multipliers(bool phase1) const {
        // pi = c_B * Binv
        std::vector<Rat> pi(rows_, Rat(0));
        for (int i = 0; i < rows_; ++i) {
            Rat cb = column_cost(basis_[i], phase1);
            if (cb == 0) continue;
            for (int j = 0; j < rows_; ++j)
                if (binv_[i][j] != 0) pi[j] += cb * binv_[i][j];
        }
        return pi;
    }

    // sigma[mask] = sum over players in mask of pi; evaluated with split
    // lookup tables rebuilt once per pricing pass.
    struct SigmaTables {
        int lo_bits;
        std::vector<Rat> lo, hi;
        Rat operator()(std::uint64_t mask) const {
            return lo[mask & ((std::uint64_t{1} << lo_bits) - 1)] +
                   hi[mask >> lo_bits];
        }
    };
    SigmaTables sigma_tables(const std::vector<Rat>& pi) const {
        SigmaTables t;
        t.lo_bits = n_ / 2;
        int hi_bits = n_ - t.lo_bits;
        t.lo.assign(std::uint64_t{1} << t.lo_bits, Rat(0));
        t.hi.assign(std::uint64_t{1} << hi_bits, Rat(0));
        for (std::uint64_t m = 1; m < t.lo.size(); ++m) {
            int b = std::countr_zero(m);
            t.lo[m] = t.lo[m & (m - 1)] + pi[b];
        }
        for (std::uint64_t m = 1; m < t.hi.size(); ++m) {
            int b = std::countr_zero(m);
            t.hi[m] = t.hi[m & (m - 1)] + pi[b + t.lo_bits];
        }
        return t;
    }

    // Winning status for every mask, via two-level weight tables.
    bool is_winning_mask(std::uint64_t mask) const {
        return g_.is_winning(Coalition(mask));
    }

    void run_phase(bool phase1) {
        int degenerate_streak = 0;
        bool bland = false;
        for (int iter = 0;; ++iter) {
            if (iter > (1 << std::min(n_ + 6, 24)))
                throw ComputationError(g_.name() +
                                       ": oracle simplex iteration cap");
            std::vector<Rat> pi = multipliers(phase1);
            SigmaTables sigma = sigma_tables(pi);

            Column enter{};
            Rat best_rc(0);
            bool have = false;
            auto consider = [&](const Column& c, const Rat& rc) {
                if (rc <= 0) return false;  // maximization: enter on rc > 0
                if (!have || (!bland && rc > best_rc)) {
                    have = true;
                    best_rc = rc;
                    enter = c;
                    return bland;  // under Bland's rule take the first
                }
                return false;
            };

            bool stop = false;
            const std::uint64_t top = std::uint64_t{1} << n_;
            for (std::uint64_t mask = 1; mask < top - 1 && !stop; ++mask) {
                if (fixed_set_.contains(mask)) continue;
                Rat rc = (phase1 ? Rat(0) : b_of(mask)) - sigma(mask) - pi[n_];
                if (rc > 0) stop = consider(Column{Column::Y, mask, 0}, rc);
            }
            for (std::size_t f = 0; f < fixed_.size() && !stop; ++f) {
                Rat s = sigma(fixed_[f].first);
                Rat d = phase1 ? Rat(0) : d_of(static_cast<int>(f));
                stop = consider(
                           Column{Column::MuPos, 0, static_cast<int>(f)},
                           d - s) ||
                       consider(
                           Column{Column::MuNeg, 0, static_cast<int>(f)},
                           s - d);
            }
            if (!stop) {
                Rat s = sigma(grand_);
                Rat b0 = phase1 ? Rat(0) : b0_;
                stop = consider(Column{Column::LamPos, 0, 0}, b0 - s) ||
                       consider(Column{Column::LamNeg, 0, 0}, s - b0);
            }
            for (int i = 0; i < n_ && !stop; ++i)
                stop = consider(Column{Column::Slack, 0, i}, -pi[i]);

            if (!have) return;  // optimal for this phase

            std::vector<Rat> d = basis_direction(enter);
            int leave = -1;
            Rat best_ratio(0);
            for (int r = 0; r < rows_; ++r) {
                if (d[r] <= 0) continue;
                Rat ratio = xb_[r] / d[r];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio &&
                     ordinal(basis_[r]) < ordinal(basis_[leave]))) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave < 0)
                throw ComputationError(g_.name() +
                                       ": oracle dual LP unbounded");
            if (best_ratio == 0) {
                if (++degenerate_streak > 40) bland = true;
            } else {
                degenerate_streak = 0;
                bland = false;
            }
            // Pivot: update Binv and basic values.
            Rat inv = 1 / d[leave];
            for (int j = 0; j < rows_; ++j) binv_[leave][j] *= inv;
            xb_[leave] *= inv;
            for (int r = 0; r < rows_; ++r) {
                if (r == leave || d[r] == 0) continue;
                Rat f = d[r];
                for (int j = 0; j < rows_; ++j)
                    if (binv_[leave][j] != 0)
                        binv_[r][j] -= f * binv_[leave][j];
                xb_[r] -= f * xb_[leave];
            }
            basis_[leave] = enter;
        }
    }

    const VotingGame& g_;
    int n_, rows_;
    std::vector<Rat> lower_;
    const std::vector<std::pair<std::uint64_t, Rat>>& fixed_;
    const std::unordered_set<std::uint64_t>& fixed_set_;
    std::uint64_t grand_ = 0, winner_singletons_ = 0;
    Rat b0_;

    std::vector<Column> basis_;
    std::vector<std::vector<Rat>> binv_;
    std::vector<Rat> xb_;
};

}  // namespace

PowerProfile nucleolus_oracle(const VotingGame& game) {
    const int n = game.num_players();
    if (n > 15)
        throw CapabilityError(
            "nucleolus_oracle: full constraint enumeration limited to n <= "
            "15, game has " + std::to_string(n));
    if (n == 1) return PowerProfile{IndexKind::Nucleolus, {Rat(1)}};

    std::vector<Rat> lower = singleton_values(game);
    require_imputations(game, lower);

    std::vector<std::pair<std::uint64_t, Rat>> fixed;
    std::unordered_set<std::uint64_t> fixed_set;
    std::vector<char> pinned(n, 0);
    Rat last_eps;

    for (int round = 0; round < kMaxRounds; ++round) {
        OracleSimplex lp(game, lower, fixed, fixed_set);
        auto sol = lp.solve();
        last_eps = sol.eps;

        // The round's optimum must reproduce the max excess over free
        // coalitions; verify by direct enumeration.
        Rat max_exc;
        bool first = true;
        const std::uint64_t top = std::uint64_t{1} << n;
        for (std::uint64_t m = 1; m < top - 1; ++m) {
            if (fixed_set.contains(m)) continue;
            Rat e = excess(game, Coalition(m), sol.x);
            if (first || e > max_exc) { max_exc = e; first = false; }
        }
        if (first || max_exc != sol.eps)
            throw ComputationError(game.name() +
                                   ": oracle round verification failed");

        for (std::uint64_t m : sol.positive_y) {
            if (fixed_set.insert(m).second) fixed.emplace_back(m, sol.eps);
        }
        for (int i = 0; i < n; ++i)
            if (sol.slack_positive[i]) pinned[i] = 1;

        // Assemble the equality system accumulated so far; a full-rank
        // system pins the nucleolus.
        std::vector<std::vector<Rat>> rows;
        std::vector<Rat> rhs;
        rows.push_back(std::vector<Rat>(n, Rat(1)));
        rhs.push_back(Rat(1));
        for (const auto& [mask, level] : fixed) {
            std::vector<Rat> row(n, Rat(0));
            for (int i : Coalition(mask).members()) row[i] = 1;
            rows.push_back(std::move(row));
            rhs.push_back(Rat(game.value(Coalition(mask))) - level);
        }
        for (int i = 0; i < n; ++i) {
            if (!pinned[i]) continue;
            std::vector<Rat> row(n, Rat(0));
            row[i] = 1;
            rows.push_back(std::move(row));
            rhs.push_back(lower[i]);
        }
        if (auto x = solve_if_unique(rows, rhs, n)) {
            // Final feasibility audit against every coalition.
            for (int i = 0; i < n; ++i)
                if ((*x)[i] < lower[i])
                    throw ComputationError(game.name() +
                                           ": oracle solution audit failed");
            for (std::uint64_t m = 1; m < top - 1; ++m) {
                Rat e = excess(game, Coalition(m), *x);
                if (!fixed_set.contains(m) && e > sol.eps)
                    throw ComputationError(game.name() +
                                           ": oracle solution audit failed");
            }
            for (const auto& [mask, level] : fixed)
                if (excess(game, Coalition(mask), *x) != level)
                    throw ComputationError(game.name() +
                                           ": oracle level audit failed");
            return PowerProfile{IndexKind::Nucleolus, *x};
        }
    }
    throw ComputationError(game.name() + ": oracle did not converge");
}

std::string certificate_text(const VotingGame& game,
                             const NucleolusResult& result) {
    std::ostringstream os;
    os << "nucleolus certificate for " << game.name() << "\n";
    os << "payoff:";
    for (int i = 0; i < game.num_players(); ++i)
        os << " " << game.label(i) << "="
           << to_fraction_string(result.profile.values[i]);
    os << "\n";
    for (std::size_t r = 0; r < result.rounds.size(); ++r) {
        const auto& round = result.rounds[r];
        os << "round " << (r + 1)
           << ": level " << to_fraction_string(round.level) << "\n";
        for (Coalition c : round.fixed) {
            os << "  fixed {";
            bool firstm = true;
            for (int i : c.members()) {
                if (!firstm) os << ",";
                os << game.label(i);
                firstm = false;
            }
            os << "}\n";
        }
    }
    return os.str();
}

bool verify_certificate(const VotingGame& game,
                        const NucleolusResult& result) {
    const int n = game.num_players();
    if (n > kMaxEnumPlayers)
        throw CapabilityError(
            "verify_certificate: enumeration limited to n <= " +
            std::to_string(kMaxEnumPlayers));
    const auto& x = result.profile.values;
    Rat sum = std::accumulate(x.begin(), x.end(), Rat(0));
    if (sum != 1) return false;
    if (result.rounds.empty()) return n == 1;
    for (const auto& round : result.rounds)
        for (Coalition c : round.fixed)
            if (excess(game, c, x) != round.level) return false;

    // Sweep all proper nonempty coalitions: no excess may beat the first
    // level. Payoffs are rescaled to a common integer grid so the sweep is
    // integer arithmetic; coalition weights come from split lookup tables.
    const Rat& level = result.rounds.front().level;
    std::vector<Rat> all = x;
    all.push_back(level);
    const Int denom = common_denominator(all);
    const Int win_need_big = denom - rat_num(level * denom);
    const Int lose_need_big = -rat_num(level * denom);
    bool fits = win_need_big.convert_to<double>() < 4.0e18 &&
                win_need_big.convert_to<double>() > -4.0e18;
    std::vector<std::int64_t> scaled(n);
    Int check_total = 0;
    for (int i = 0; i < n && fits; ++i) {
        Int v = rat_num(x[i] * denom);
        check_total += v;
        if (v > Int(std::int64_t{1} << 60)) fits = false;
        else scaled[i] = v.convert_to<std::int64_t>();
    }
    const std::uint64_t top = std::uint64_t{1} << n;
    if (!fits) {
        for (std::uint64_t m = 1; m < top - 1; ++m)
            if (excess(game, Coalition(m), x) > level) return false;
        return true;
    }
    const std::int64_t win_need = win_need_big.convert_to<std::int64_t>();
    const std::int64_t lose_need = lose_need_big.convert_to<std::int64_t>();
    const int lo_bits = n / 2;
    const std::uint64_t lo_size = std::uint64_t{1} << lo_bits;
    const std::uint64_t hi_size = std::uint64_t{1} << (n - lo_bits);
    std::vector<std::int64_t> pay_lo(lo_size, 0), pay_hi(hi_size, 0);
    const auto& rules = game.integer_rules();
    std::vector<std::vector<std::int64_t>> wlo(rules.size()),
        whi(rules.size());
    for (std::size_t r = 0; r < rules.size(); ++r) {
        wlo[r].assign(lo_size, 0);
        whi[r].assign(hi_size, 0);
    }
    for (std::uint64_t m = 1; m < lo_size; ++m) {
        int b = std::countr_zero(m);
        pay_lo[m] = pay_lo[m & (m - 1)] + scaled[b];
        for (std::size_t r = 0; r < rules.size(); ++r)
            wlo[r][m] = wlo[r][m & (m - 1)] + rules[r].weights[b];
    }
    for (std::uint64_t m = 1; m < hi_size; ++m) {
        int b = std::countr_zero(m);
        pay_hi[m] = pay_hi[m & (m - 1)] + scaled[b + lo_bits];
        for (std::size_t r = 0; r < rules.size(); ++r)
            whi[r][m] = whi[r][m & (m - 1)] + rules[r].weights[b + lo_bits];
    }
    const std::uint64_t lo_mask = lo_size - 1;
    for (std::uint64_t m = 1; m < top - 1; ++m) {
        bool winning = true;
        for (std::size_t r = 0; r < rules.size(); ++r)
            if (wlo[r][m & lo_mask] + whi[r][m >> lo_bits] < rules[r].quota) {
                winning = false;
                break;
            }
        std::int64_t pay = pay_lo[m & lo_mask] + pay_hi[m >> lo_bits];
        if (pay < (winning ? win_need : lose_need)) return false;
    }
    return true;
}

}  // namespace powerkit
