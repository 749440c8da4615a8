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

#ifndef BHC_RADIUS_HPP
#define BHC_RADIUS_HPP

#include <cstdint>
#include <string>

#include "bhc/code.hpp"
#include "bhc/types.hpp"
#include "bhc/weight.hpp"

namespace bhc {

/// Default cap on distance-evaluation work (candidates * |C| * n symbol
/// operations) for the exhaustive searches.
inline constexpr std::int64_t kDefaultBudget = std::int64_t{1} << 28;

/// Outcome of a covering-radius computation. Under the exact method the
/// radius is attained by deep_hole; under the sampled method it is only a
/// lower bound on the true radius.
struct RadiusReport {
    Rat radius;
    LogVector deep_hole;
    std::string method;        // "exact" | "sampled"
    std::int64_t samples = 0;  // 0 for the exact method
    std::string scaling;
    std::string kernel;        // which min-distance kernel ran (diagnostic)
    bool restricted = false;   // first-symbol-0 coset restriction applied
};

/// Exhaustive covering radius max_x min_y d(x, y) with a witness deep hole.
///
/// Candidates are enumerated in odometer order (last coordinate fastest,
/// which is lexicographic order); among all maximizers the lexicographically
/// smallest is reported. Self-complementary codes are searched with the
/// first symbol pinned to 0, a factor-q reduction that cannot change the
/// maximum because d(x + a*1, C) = d(x, C) under closure.
///
/// The candidate space is split into contiguous index ranges across
/// `workers` threads; the merge takes the maximum with the lexicographic
/// tie-break, so output is identical for every worker count.
///
/// Throws BudgetError when candidates * |C| * n exceeds `budget`;
/// std::invalid_argument on an empty code or a scaling/code q mismatch.
RadiusReport covering_radius_exact(const Code& c, const WeightScaling& s,
                                   int workers = 1,
                                   std::int64_t budget = kDefaultBudget);

/// Seeded Monte Carlo lower bound: the maximum distance over `samples`
/// uniform candidates. The sample stream is drawn up front from a single
/// mt19937_64 (rejection sampling, no modulo bias), so the result depends
/// only on (seed, samples) and never on the worker count.
RadiusReport covering_radius_sampled(const Code& c, const WeightScaling& s,
                                     std::int64_t samples, std::uint64_t seed,
                                     int workers = 1);

}  // namespace bhc

#endif
