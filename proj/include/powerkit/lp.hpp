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

#ifndef POWERKIT_LP_HPP
#define POWERKIT_LP_HPP

#include <vector>

#include "powerkit/errors.hpp"
#include "powerkit/rational.hpp"

namespace powerkit::lp {

enum class Sense { Le, Ge, Eq };
enum class Status { Optimal, Infeasible, Unbounded };

/// A linear program in exact rationals:
///   minimize c'x  subject to  a_i'x {<=,>=,=} b_i,  x_j >= lower_j
/// (or x_j free). Solved by a dense two-phase simplex; degenerate stretches
/// fall back to Bland's rule, so the solve always terminates.
struct Problem {
    int num_vars = 0;
    std::vector<Rat> objective;
    std::vector<Rat> lower;
    std::vector<char> is_free;
    std::vector<std::vector<Rat>> row_coeffs;
    std::vector<Sense> row_sense;
    std::vector<Rat> row_rhs;

    /// Adds a variable, returns its index.
    int add_var(Rat cost, Rat lower_bound = Rat(0), bool free_var = false);
    void add_row(std::vector<Rat> coeffs, Sense sense, Rat rhs);
    int num_rows() const { return static_cast<int>(row_coeffs.size()); }
};

struct Solution {
    Status status = Status::Infeasible;
    Rat objective;
    std::vector<Rat> x;
    /// Dual value per row, in the convention of the dual of
    ///   min c'x, A_ge x >= b (y >= 0), A_le x <= b (y <= 0), A_eq (free).
    std::vector<Rat> row_dual;
    /// Reduced cost per variable; positive means the variable is pinned at
    /// its lower bound in every optimal solution.
    std::vector<Rat> reduced_cost;
};

Solution solve(const Problem& problem);

}  // namespace powerkit::lp

#endif  // POWERKIT_LP_HPP
