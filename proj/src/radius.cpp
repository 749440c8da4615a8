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

#include "bhc/radius.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "bhc/kernel.hpp"

namespace bhc {

namespace {

// Best candidate seen by one worker: maximal distance, lexicographically
// smallest witness within the worker's range.
struct Local {
    std::uint32_t dist = 0;
    std::vector<std::uint8_t> witness;
    bool any = false;
};

void merge_into(Local& acc, const Local& other) {
    if (!other.any) return;
    if (!acc.any || other.dist > acc.dist ||
        (other.dist == acc.dist && other.witness < acc.witness)) {
        acc = other;
    }
}

// Writes candidate number `index` (odometer order, last coordinate fastest)
// into the free coordinates of `cand`.
void candidate_at(__int128 index, int q, std::uint8_t* free_begin, int free_len) {
    for (int k = free_len - 1; k >= 0; --k) {
        free_begin[k] = static_cast<std::uint8_t>(static_cast<int>(index % q));
        index /= q;
    }
}

// Advances the free coordinates one odometer step.
void candidate_next(int q, std::uint8_t* free_begin, int free_len) {
    for (int k = free_len - 1; k >= 0; --k) {
        if (++free_begin[k] < q) return;
        free_begin[k] = 0;
    }
}

Local scan_range(__int128 lo, __int128 hi, int q, int n, int fixed,
                 const PackedCode& pc, const DiffWeightTable& tbl, MinDistFn fn) {
    Local best;
    if (lo >= hi) return best;
    std::vector<std::uint8_t> cand(static_cast<std::size_t>(n), 0);
    const int free_len = n - fixed;
    candidate_at(lo, q, cand.data() + fixed, free_len);
    for (__int128 i = lo; i < hi; ++i) {
        const std::uint32_t d = fn(pc, tbl, cand.data());
        if (!best.any || d > best.dist) {
            best.dist = d;
            best.witness = cand;
            best.any = true;
        }
        candidate_next(q, cand.data() + fixed, free_len);
    }
    return best;
}

LogVector to_log_vector(int q, const std::vector<std::uint8_t>& bytes) {
    std::vector<int> symbols(bytes.begin(), bytes.end());
    return LogVector(q, std::move(symbols));
}

void check_inputs(const Code& c, const WeightScaling& s) {
    if (c.size() == 0) throw std::invalid_argument("covering radius of an empty code");
    if (s.q() != c.q())
        throw std::invalid_argument("scaling modulus " + std::to_string(s.q()) +
                                    " does not match code modulus " + std::to_string(c.q()));
}

}  // namespace

RadiusReport covering_radius_exact(const Code& c, const WeightScaling& s, int workers,
                                   std::int64_t budget) {
    check_inputs(c, s);
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");

    const int q = c.q();
    const int n = c.n();
    const bool restricted = is_self_complementary(c);
    const int fixed = restricted ? 1 : 0;
    const int free_len = n - fixed;

    __int128 total = 1;
    __int128 cost = 0;
    const __int128 per_candidate = static_cast<__int128>(c.size()) * n;
    bool over = false;
    for (int k = 0; k < free_len; ++k) {
        total *= q;
        if (total * per_candidate > budget) {
            over = true;
            break;
        }
    }
    cost = total * per_candidate;
    if (over || cost > budget) {
        throw BudgetError("exact search needs more than " + std::to_string(budget) +
                          " distance-evaluation steps; raise --budget or use --method sample");
    }

    const PackedCode pc = pack_code(c);
    const DiffWeightTable tbl = build_diff_table(q);
    const MinDistFn fn = select_min_dist(pc, tbl);

    Local best;
    const int use = static_cast<int>(std::min<__int128>(workers, total));
    if (use <= 1) {
        best = scan_range(0, total, q, n, fixed, pc, tbl, fn);
    } else {
        std::vector<Local> part(static_cast<std::size_t>(use));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(use));
        for (int w = 0; w < use; ++w) {
            const __int128 lo = total * w / use;
            const __int128 hi = total * (w + 1) / use;
            pool.emplace_back([&, w, lo, hi] {
                part[static_cast<std::size_t>(w)] = scan_range(lo, hi, q, n, fixed, pc, tbl, fn);
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& p : part) merge_into(best, p);
    }

    RadiusReport rep;
    rep.radius = Rat(static_cast<std::int64_t>(best.dist)) * s.factor();
    rep.deep_hole = to_log_vector(q, best.witness);
    rep.method = "exact";
    rep.samples = 0;
    rep.scaling = s.name();
    rep.kernel = selected_kernel_name(pc, tbl);
    rep.restricted = restricted;
    return rep;
}

RadiusReport covering_radius_sampled(const Code& c, const WeightScaling& s,
                                     std::int64_t samples, std::uint64_t seed, int workers) {
    check_inputs(c, s);
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");

    const int q = c.q();
    const int n = c.n();

    // One up-front stream fixes the sample set; workers only split the
    // scoring, so output is independent of the worker count.
    std::vector<std::uint8_t> draws(static_cast<std::size_t>(samples) * n);
    {
        std::mt19937_64 rng(seed);
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() -
            std::numeric_limits<std::uint64_t>::max() % static_cast<std::uint64_t>(q);
        for (auto& b : draws) {
            std::uint64_t r;
            do {
                r = rng();
            } while (r >= limit);
            b = static_cast<std::uint8_t>(r % static_cast<std::uint64_t>(q));
        }
    }

    const PackedCode pc = pack_code(c);
    const DiffWeightTable tbl = build_diff_table(q);
    const MinDistFn fn = select_min_dist(pc, tbl);

    auto scan_samples = [&](std::int64_t lo, std::int64_t hi) {
        Local best;
        for (std::int64_t i = lo; i < hi; ++i) {
            const std::uint8_t* cand = draws.data() + static_cast<std::size_t>(i) * n;
            const std::uint32_t d = fn(pc, tbl, cand);
            if (!best.any || d > best.dist ||
                (d == best.dist &&
                 std::lexicographical_compare(cand, cand + n, best.witness.begin(),
                                              best.witness.end()))) {
                best.dist = d;
                best.witness.assign(cand, cand + n);
                best.any = true;
            }
        }
        return best;
    };

    Local best;
    const int use = static_cast<int>(std::min<std::int64_t>(workers, samples));
    if (use <= 1) {
        best = scan_samples(0, samples);
    } else {
        std::vector<Local> part(static_cast<std::size_t>(use));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(use));
        for (int w = 0; w < use; ++w) {
            const std::int64_t lo = samples * w / use;
            const std::int64_t hi = samples * (w + 1) / use;
            pool.emplace_back(
                [&, w, lo, hi] { part[static_cast<std::size_t>(w)] = scan_samples(lo, hi); });
        }
        for (auto& t : pool) t.join();
        for (const auto& p : part) merge_into(best, p);
    }

    RadiusReport rep;
    rep.radius = Rat(static_cast<std::int64_t>(best.dist)) * s.factor();
    rep.deep_hole = to_log_vector(q, best.witness);
    rep.method = "sampled";
    rep.samples = samples;
    rep.scaling = s.name();
    rep.kernel = selected_kernel_name(pc, tbl);
    rep.restricted = false;
    return rep;
}

}  // namespace bhc
