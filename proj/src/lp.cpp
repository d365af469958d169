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

#include "powerkit/lp.hpp"

#include <algorithm>


namespace powerkit::lp {

int Problem::add_var(Rat cost, Rat lower_bound, bool free_var) {
    objective.push_back(std::move(cost));
    lower.push_back(std::move(lower_bound));
    is_free.push_back(free_var ? 1 : 0);
    for (auto& row : row_coeffs) row.push_back(Rat(0));
    return num_vars++;
}

void Problem::add_row(std::vector<Rat> coeffs, Sense sense, Rat rhs) {
    if (static_cast<int>(coeffs.size()) != num_vars)
        throw InvalidInputError("lp row width does not match variable count");
    row_coeffs.push_back(std::move(coeffs));
    row_sense.push_back(sense);
    row_rhs.push_back(std::move(rhs));
}

namespace {

// Dense simplex tableau over columns of the standardized problem
// (split/shifted variables, slacks, artificials). Row `m` holds reduced
// costs, column `ncols` the rhs / negated objective.
class Tableau {
  public:
    Tableau(int m, int ncols) : m_(m), ncols_(ncols) {
        t_.assign(m + 1, std::vector<Rat>(ncols + 1, Rat(0)));
        basis_.assign(m, -1);
    }

    Rat& at(int i, int j) { return t_[i][j]; }
    Rat& rhs(int i) { return t_[i][ncols_]; }
    Rat& cost(int j) { return t_[m_][j]; }
    Rat& objective() { return t_[m_][ncols_]; }
    int basis(int i) const { return basis_[i]; }
    void set_basis(int i, int j) { basis_[i] = j; }
    int rows() const { return m_; }
    int cols() const { return ncols_; }

    void pivot(int pr, int pc) {
        Rat inv = 1 / t_[pr][pc];
        for (int j = 0; j <= ncols_; ++j)
            if (t_[pr][j] != 0) t_[pr][j] *= inv;
        for (int i = 0; i <= m_; ++i) {
            if (i == pr) continue;
            Rat f = t_[i][pc];
            if (f == 0) continue;
            for (int j = 0; j <= ncols_; ++j)
                if (t_[pr][j] != 0) t_[i][j] -= f * t_[pr][j];
            t_[i][pc] = 0;  // exact, but keep it explicit
        }
        basis_[pr] = pc;
    }

    // Minimizes the current cost row. `allowed[j]` marks enterable columns.
    Status run(const std::vector<char>& allowed) {
        int degenerate_streak = 0;
        bool bland = false;
        for (;;) {
            int enter = -1;
            if (!bland) {
                Rat best(0);
                for (int j = 0; j < ncols_; ++j)
                    if (allowed[j] && t_[m_][j] < best) {
                        best = t_[m_][j];
                        enter = j;
                    }
            } else {
                for (int j = 0; j < ncols_ && enter < 0; ++j)
                    if (allowed[j] && t_[m_][j] < 0) enter = j;
            }
            if (enter < 0) return Status::Optimal;

            int leave = -1;
            Rat best_ratio(0);
            for (int i = 0; i < m_; ++i) {
                if (t_[i][enter] <= 0) continue;
                Rat ratio = t_[i][ncols_] / t_[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return Status::Unbounded;

            if (best_ratio == 0) {
                if (++degenerate_streak > 40) bland = true;
            } else {
                degenerate_streak = 0;
                bland = false;
            }
            pivot(leave, enter);
        }
    }

  private:
    int m_, ncols_;
    std::vector<std::vector<Rat>> t_;
    std::vector<int> basis_;
};

}  // namespace

Solution solve(const Problem& p) {
    const int m = p.num_rows();
    const int n = p.num_vars;

    // Column layout: per variable one column (shifted to >= 0) or two
    // (free split), then one slack/surplus per inequality row, then
    // artificials as needed.
    std::vector<int> var_col(n), var_col_neg(n, -1);
    int ncols = 0;
    for (int j = 0; j < n; ++j) {
        var_col[j] = ncols++;
        if (p.is_free[j]) var_col_neg[j] = ncols++;
    }
    const int slack_base = ncols;
    std::vector<int> slack_col(m, -1);
    for (int i = 0; i < m; ++i)
        if (p.row_sense[i] != Sense::Eq) slack_col[i] = ncols++;

    // Shift rhs by lower bounds, then normalize signs so b >= 0.
    std::vector<Rat> b(m);
    std::vector<char> flipped(m, 0);
    for (int i = 0; i < m; ++i) {
        b[i] = p.row_rhs[i];
        for (int j = 0; j < n; ++j)
            if (!p.is_free[j] && p.row_coeffs[i][j] != 0)
                b[i] -= p.row_coeffs[i][j] * p.lower[j];
        if (b[i] < 0) flipped[i] = 1;
    }

    std::vector<int> art_col(m, -1);
    for (int i = 0; i < m; ++i) {
        Sense s = p.row_sense[i];
        bool le = (s == Sense::Le) != static_cast<bool>(flipped[i]);
        if (s == Sense::Eq || !le) art_col[i] = ncols++;
    }

    Tableau t(m, ncols);
    for (int i = 0; i < m; ++i) {
        Rat sign = flipped[i] ? Rat(-1) : Rat(1);
        for (int j = 0; j < n; ++j) {
            Rat a = p.row_coeffs[i][j] * sign;
            t.at(i, var_col[j]) = a;
            if (var_col_neg[j] >= 0) t.at(i, var_col_neg[j]) = -a;
        }
        t.rhs(i) = b[i] * sign;
        if (slack_col[i] >= 0) {
            bool le = (p.row_sense[i] == Sense::Le) !=
                      static_cast<bool>(flipped[i]);
            t.at(i, slack_col[i]) = le ? Rat(1) : Rat(-1);
        }
        if (art_col[i] >= 0) {
            t.at(i, art_col[i]) = 1;
            t.set_basis(i, art_col[i]);
        } else {
            t.set_basis(i, slack_col[i]);
        }
    }

    std::vector<char> allowed(ncols, 1);

    // Phase 1: minimize the sum of artificials.
    bool need_phase1 = false;
    for (int i = 0; i < m; ++i)
        if (art_col[i] >= 0) need_phase1 = true;
    if (need_phase1) {
        for (int i = 0; i < m; ++i) {
            if (art_col[i] < 0) continue;
            for (int j = 0; j < ncols; ++j) t.cost(j) -= t.at(i, j);
            t.objective() -= t.rhs(i);
        }
        for (int i = 0; i < m; ++i)
            if (art_col[i] >= 0) t.cost(art_col[i]) = 0;
        Status s = t.run(allowed);
        if (s != Status::Optimal)
            throw ComputationError("lp phase 1 did not reach an optimum");
        if (t.objective() != 0) return Solution{Status::Infeasible, Rat(0),
                                                {}, {}, {}};
        // Pivot remaining artificials out of the basis where possible.
        for (int i = 0; i < m; ++i) {
            int bj = t.basis(i);
            bool is_art = false;
            for (int r = 0; r < m; ++r)
                if (art_col[r] == bj) is_art = true;
            if (!is_art) continue;
            int pc = -1;
            for (int j = 0; j < slack_base && pc < 0; ++j)
                if (t.at(i, j) != 0) pc = j;
            for (int j = slack_base; j < ncols && pc < 0; ++j) {
                bool j_art = false;
                for (int r = 0; r < m; ++r)
                    if (art_col[r] == j) j_art = true;
                if (!j_art && t.at(i, j) != 0) pc = j;
            }
            if (pc >= 0) t.pivot(i, pc);
            // Otherwise the row is redundant; its artificial stays basic
            // at value zero and is barred from re-entering.
        }
    }
    for (int i = 0; i < m; ++i)
        if (art_col[i] >= 0) allowed[art_col[i]] = 0;

    // Phase 2: rebuild the cost row for the true objective.
    std::vector<Rat> col_cost(ncols, Rat(0));
    for (int j = 0; j < n; ++j) {
        col_cost[var_col[j]] = p.objective[j];
        if (var_col_neg[j] >= 0) col_cost[var_col_neg[j]] = -p.objective[j];
    }
    for (int j = 0; j < ncols; ++j) t.cost(j) = col_cost[j];
    t.objective() = 0;
    for (int i = 0; i < m; ++i) {
        Rat cb = col_cost[t.basis(i)];
        if (cb == 0) continue;
        for (int j = 0; j < ncols; ++j)
            if (t.at(i, j) != 0) t.cost(j) -= cb * t.at(i, j);
        t.objective() -= cb * t.rhs(i);
    }

    Status s = t.run(allowed);
    if (s == Status::Unbounded)
        return Solution{Status::Unbounded, Rat(0), {}, {}, {}};

    Solution out;
    out.status = Status::Optimal;
    std::vector<Rat> colval(ncols, Rat(0));
    for (int i = 0; i < m; ++i) colval[t.basis(i)] = t.rhs(i);
    out.x.resize(n);
    for (int j = 0; j < n; ++j) {
        Rat v = colval[var_col[j]];
        if (var_col_neg[j] >= 0) v -= colval[var_col_neg[j]];
        else v += p.lower[j];
        out.x[j] = v;
    }
    Rat obj = 0;
    for (int j = 0; j < n; ++j)
        if (p.objective[j] != 0) obj += p.objective[j] * out.x[j];
    out.objective = obj;

    // Duals from the identity companion column of each row; undo any sign
    // flip applied during standardization.
    out.row_dual.resize(m);
    for (int i = 0; i < m; ++i) {
        Rat y;
        if (slack_col[i] >= 0) {
            bool plus_slack = (p.row_sense[i] == Sense::Le) !=
                              static_cast<bool>(flipped[i]);
            y = plus_slack ? -t.cost(slack_col[i]) : t.cost(slack_col[i]);
        } else {
            y = -t.cost(art_col[i]);
        }
        out.row_dual[i] = flipped[i] ? -y : y;
    }
    out.reduced_cost.resize(n);
    for (int j = 0; j < n; ++j)
        out.reduced_cost[j] = p.is_free[j] ? Rat(0) : t.cost(var_col[j]);
    return out;
}

}  // namespace powerkit::lp
