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

#include "powerkit/rational.hpp"

#include <algorithm>
#include <cctype>

namespace powerkit {

Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + i, s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den))
            throw std::invalid_argument("malformed rational literal: " + text);
        Int d(den);
        if (d == 0) throw std::invalid_argument("zero denominator: " + text);
        return Rat(Int(num), d);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (whole.empty() || whole == "-" || whole == "+") whole += "0";
        if (!is_integer_token(whole) ||
            (!frac.empty() && !is_integer_token(frac)) )
            throw std::invalid_argument("malformed decimal literal: " + text);
        bool neg = s[0] == '-';
        Int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Int units = Int(whole);
        if (units < 0) units = -units;
        Int num = units * scale + (frac.empty() ? Int(0) : Int(frac));
        Rat r(num, scale);
        return neg ? -r : r;
    }
    if (!is_integer_token(s))
        throw std::invalid_argument("malformed rational literal: " + text);
    return Rat(Int(s));
}

std::string to_fraction_string(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

Rat round_half_even(const Rat& r, int digits) {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rat scaled = r * scale;
    Int num = rat_num(scaled);
    Int den = rat_den(scaled);
    bool neg = num < 0;
    if (neg) num = -num;
    Int q = num / den;
    Int rem = num % den;
    Int twice = rem * 2;
    if (twice > den || (twice == den && (q % 2) != 0)) ++q;
    Rat out(q, scale);
    return neg ? -out : out;
}

std::string to_decimal_string(const Rat& r, int digits) {
    Rat rounded = round_half_even(r, digits);
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Int units = rat_num(rounded * scale);  // exact after rounding
    bool neg = units < 0;
    if (neg) units = -units;
    std::string s = units.str();
    if (static_cast<int>(s.size()) <= digits)
        s.insert(0, digits + 1 - s.size(), '0');
    std::string out = s.substr(0, s.size() - digits);
    if (digits > 0) out += "." + s.substr(s.size() - digits);
    if (neg && units != 0) out.insert(0, 1, '-');
    return out;
}

Int common_denominator(const std::vector<Rat>& values) {
    Int l = 1;
    for (const Rat& v : values) l = lcm(l, rat_den(v));
    return l;
}

}  // namespace powerkit
