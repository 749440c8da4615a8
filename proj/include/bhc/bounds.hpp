/*
   Copyright 2026 the bhtool authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BHC_BOUNDS_HPP
#define BHC_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bhc/matrix.hpp"
#include "bhc/radius.hpp"
#include "bhc/rational.hpp"
#include "bhc/weight.hpp"

namespace bhc {

/// Exact value scale * (n - sqrt(n)). Rational precisely when n is a
/// perfect square; otherwise comparisons and the integer ceiling are still
/// exact, via squaring.
struct Surd {
    Rat scale;
    int n = 1;

    bool is_rational() const;
    Rat rational_value() const;  // throws unless is_rational()
    /// Smallest integer >= the value, decided without floating point.
    std::int64_t ceil_value() const;
    /// value <= v, exactly.
    bool leq(const Rat& v) const;
    std::string to_string() const;  // "a/b" when rational, else "s*(n-sqrt(n))"
};

/// Covering-radius lower bound lambda * (n - sqrt(n)) under the given
/// scaling, valid whenever the matrix admits a bent vector. The hypothesis
/// is the caller's to verify; reports carry a flag when it is not.
Surd bent_lower_bound(int n, int q, const WeightScaling& s);

/// Covering-radius upper bound n * lambda for codes of strength >= 1.
Rat strength1_upper_bound(int n, int q, const WeightScaling& s);

/// Norse-type upper bound for a self-complementary strength-2 code over a
/// prime alphabet, Honold scaling: n(p-1) - m with m the smallest integer
/// satisfying m^2 * code_size >= p * n^2. This is the form the second-moment
/// proof yields, and the one whose values the source table tabulates.
std::int64_t norse_upper_bound(int n, int p, std::int64_t code_size);

/// The looser printed form n(p - 1 - ceil(sqrt(p/code_size))), kept as a
/// labeled alternate for side-by-side reporting.
std::int64_t norse_paper_literal(int n, int p, std::int64_t code_size);

struct BoundsReport {
    int n = 0;
    int q = 0;
    std::int64_t code_size = 0;
    std::string scaling;
    bool strength1 = false;
    bool strength2 = false;
    bool self_complementary = false;
    Surd lower_bent;
    std::int64_t lower_bent_ceil = 0;
    Rat upper_strength1;
    std::optional<std::int64_t> upper_norse;
    std::optional<std::int64_t> upper_norse_paper_literal;
    std::optional<RadiusReport> exact_radius;
    std::vector<std::string> flags;
};

/// One-call pipeline: builds bh_code(m), verifies the hypotheses behind
/// each bound (strengths, self-complementarity, existence of a bent vector
/// by limited search), evaluates every applicable bound, and optionally
/// computes the exact radius. When the exact radius is present and a
/// hypothesis is verified, the corresponding side of the sandwich is
/// asserted; a violation throws std::logic_error.
BoundsReport bounds_report(const LogMatrix& m, const WeightScaling& s, bool with_exact,
                           int workers = 1, std::int64_t budget = kDefaultBudget);

}  // namespace bhc

#endif
