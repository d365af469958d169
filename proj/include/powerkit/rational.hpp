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

#ifndef POWERKIT_RATIONAL_HPP
#define POWERKIT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace powerkit {

/// Arbitrary-precision integer (GMP-backed, plain value semantics).
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;

/// Exact rational number. All game-theoretic computations use this type;
/// floating point only appears in the econometrics layer and in rendering.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

/// Parses "3", "-7/2", or a plain decimal such as "0.62" (read exactly as
/// 62/100). Throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& text);

/// Renders r as a ratio, e.g. "7/30" or "3" when the denominator is 1.
std::string to_fraction_string(const Rat& r);

/// Renders r as a fixed-point decimal with `digits` places, rounding
/// half-to-even on the last digit. The computation is exact.
std::string to_decimal_string(const Rat& r, int digits);

/// Half-even rounding of r to `digits` decimal places, as an exact rational.
Rat round_half_even(const Rat& r, int digits);

/// Least common multiple of the denominators of `values` (at least 1).
Int common_denominator(const std::vector<Rat>& values);

}  // namespace powerkit

#endif  // POWERKIT_RATIONAL_HPP
