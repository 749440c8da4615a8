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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "bhc/kernel.hpp"
#include "bhc/weight.hpp"
#include "fixtures.hpp"

using namespace bhc;

namespace {

// Deliberately naive: no packing, no early abandon. The ground truth the
// kernels are measured against.
std::uint32_t naive_min_dist(const Code& c, const std::vector<std::uint8_t>& cand) {
    const auto table = honold_weight_table(c.q());
    std::uint32_t best = UINT32_MAX;
    for (const auto& w : c.words()) {
        std::uint32_t sum = 0;
        for (std::size_t k = 0; k < w.size(); ++k) {
            const int d = (static_cast<int>(cand[k]) - w[k] % c.q() + c.q()) % c.q();
            sum += static_cast<std::uint32_t>(table[static_cast<std::size_t>(d)]);
        }
        if (sum < best) best = sum;
    }
    return best;
}

Code random_code(std::mt19937& rng, int q, int n, int count) {
    std::vector<std::vector<int>> words;
    for (int i = 0; i < count; ++i) {
        std::vector<int> w(static_cast<std::size_t>(n));
        for (auto& s : w) s = static_cast<int>(rng() % static_cast<unsigned>(q));
        words.push_back(std::move(w));
    }
    return Code(q, n, std::move(words));
}

std::vector<std::uint8_t> random_candidate(std::mt19937& rng, int q, int n) {
    std::vector<std::uint8_t> c(static_cast<std::size_t>(n));
    for (auto& s : c) s = static_cast<std::uint8_t>(rng() % static_cast<unsigned>(q));
    return c;
}

}  // namespace

TEST_CASE("pack_code layout") {
    const Code c = bh_code(fourier(3));  // 9 words, n = 3
    const PackedCode pc = pack_code(c);
    CHECK(pc.q == 3);
    CHECK(pc.n == 3);
    CHECK(pc.count == 9);
    CHECK(pc.stride == 32);
    REQUIRE(pc.rows.size() == 9 * 3);
    REQUIRE(pc.cols.size() == 3 * 32);

    for (std::size_t j = 0; j < pc.count; ++j)
        for (int k = 0; k < pc.n; ++k) {
            const auto sym = static_cast<std::uint8_t>(c.word(j)[static_cast<std::size_t>(k)]);
            CHECK(pc.rows[j * 3 + static_cast<std::size_t>(k)] == sym);
            CHECK(pc.cols[static_cast<std::size_t>(k) * pc.stride + j] == sym);
        }
    // padding lanes replicate word 0
    for (std::size_t j = pc.count; j < pc.stride; ++j)
        for (int k = 0; k < pc.n; ++k)
            CHECK(pc.cols[static_cast<std::size_t>(k) * pc.stride + j] ==
                  static_cast<std::uint8_t>(c.word(0)[static_cast<std::size_t>(k)]));
}

TEST_CASE("pack_code stride rounds up to 32") {
    CHECK(pack_code(Code(2, 1, {{0}})).stride == 32);
    std::vector<std::vector<int>> w33;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) w33.push_back({a, b, c});
    CHECK(pack_code(Code(3, 3, w33)).stride == 32);  // 27 -> 32
    CHECK(pack_code(bh_code(fourier(8))).stride == 64);  // 64 -> 64
}

TEST_CASE("pack_code rejects empty codes and oversized alphabets") {
    CHECK_THROWS_AS(pack_code(Code(3, 2, {})), std::invalid_argument);
    CHECK_THROWS_AS(pack_code(Code(300, 1, {{0}})), std::invalid_argument);
}

TEST_CASE("difference table agrees with the Honold weight table") {
    for (int q : {2, 3, 4, 5, 6, 8, 9, 12, 16, 17, 30}) {
        const DiffWeightTable tbl = build_diff_table(q);
        const auto honold = honold_weight_table(q);
        REQUIRE(tbl.q == q);
        REQUIRE(tbl.diff.size() == static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
        std::uint16_t max_seen = 0;
        for (int v = 0; v < q; ++v)
            for (int y = 0; y < q; ++y) {
                const auto expect = static_cast<std::uint16_t>(honold[static_cast<std::size_t>((v - y + q) % q)]);
                CHECK(tbl.diff[static_cast<std::size_t>(v * q + y)] == expect);
                max_seen = std::max(max_seen, expect);
            }
        CHECK(tbl.max_weight == max_seen);
        if (q <= 16) {
            REQUIRE(tbl.lut16.size() == static_cast<std::size_t>(q) * 16);
            for (int v = 0; v < q; ++v)
                for (int y = 0; y < 16; ++y) {
                    const std::uint8_t expect =
                        y < q ? static_cast<std::uint8_t>(tbl.diff[static_cast<std::size_t>(v * q + y)]) : 0;
                    CHECK(tbl.lut16[static_cast<std::size_t>(v * 16 + y)] == expect);
                }
        } else {
            CHECK(tbl.lut16.empty());
        }
    }
}

TEST_CASE("scalar kernel matches the naive reference") {
    std::mt19937 rng(20260825);
    for (int q : {2, 3, 4, 5, 6, 8, 9, 12, 16, 24, 60}) {
        for (int round = 0; round < 6; ++round) {
            const int n = 1 + static_cast<int>(rng() % 9);
            const int count = 1 + static_cast<int>(rng() % 40);
            const Code c = random_code(rng, q, n, count);
            const PackedCode pc = pack_code(c);
            const DiffWeightTable tbl = build_diff_table(q);
            for (int t = 0; t < 25; ++t) {
                const auto cand = random_candidate(rng, q, n);
                CAPTURE(q);
                CAPTURE(n);
                CHECK(min_dist_scalar(pc, tbl, cand.data()) == naive_min_dist(c, cand));
            }
        }
    }
}

TEST_CASE("scalar kernel returns zero for codewords") {
    const Code c = bh_code(fourier(5));
    const PackedCode pc = pack_code(c);
    const DiffWeightTable tbl = build_diff_table(5);
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::vector<std::uint8_t> cand;
        for (int s : c.word(i)) cand.push_back(static_cast<std::uint8_t>(s));
        CHECK(min_dist_scalar(pc, tbl, cand.data()) == 0);
    }
}

TEST_CASE("selected kernel is equivalent to the scalar reference") {
    std::mt19937 rng(987654321);
    for (int q : {2, 3, 4, 5, 8, 12, 16}) {
        for (int round = 0; round < 8; ++round) {
            const int n = 1 + static_cast<int>(rng() % 12);
            const int count = 1 + static_cast<int>(rng() % 90);
            const Code c = random_code(rng, q, n, count);
            const PackedCode pc = pack_code(c);
            const DiffWeightTable tbl = build_diff_table(q);
            const MinDistFn fn = select_min_dist(pc, tbl);
            for (int t = 0; t < 40; ++t) {
                const auto cand = random_candidate(rng, q, n);
                CAPTURE(q);
                CAPTURE(n);
                CAPTURE(selected_kernel_name(pc, tbl));
                CHECK(fn(pc, tbl, cand.data()) == min_dist_scalar(pc, tbl, cand.data()));
            }
        }
    }
}

#if defined(BHC_BUILD_AVX2)
TEST_CASE("avx2 kernel matches scalar when eligible") {
    std::mt19937 rng(5550123);
    int exercised = 0;
    for (int q : {2, 3, 4, 6, 8, 16}) {
        const DiffWeightTable tbl = build_diff_table(q);
        for (int round = 0; round < 6; ++round) {
            const int n = 1 + static_cast<int>(rng() % 10);
            const int count = 1 + static_cast<int>(rng() % 130);
            const Code c = random_code(rng, q, n, count);
            const PackedCode pc = pack_code(c);
            if (!avx2_eligible(pc, tbl)) continue;
            ++exercised;
            for (int t = 0; t < 40; ++t) {
                const auto cand = random_candidate(rng, q, n);
                CHECK(min_dist_avx2(pc, tbl, cand.data()) == min_dist_scalar(pc, tbl, cand.data()));
            }
        }
    }
    // On hardware without AVX2 nothing is exercised; eligibility says so.
    if (exercised == 0) {
        const Code c = bh_code(fourier(4));
        const PackedCode pc = pack_code(c);
        CHECK_FALSE(avx2_eligible(pc, build_diff_table(4)));
    }
}
#endif

TEST_CASE("kernel selection falls back to scalar out of shape") {
    // q > 16 has no byte tables
    {
        const Code c = bh_code(fourier(17));
        const PackedCode pc = pack_code(c);
        const DiffWeightTable tbl = build_diff_table(17);
        CHECK_FALSE(avx2_eligible(pc, tbl));
        CHECK(selected_kernel_name(pc, tbl) == "scalar");
        CHECK(select_min_dist(pc, tbl) == &min_dist_scalar);
    }
    // accumulated distance can overflow uint16 lanes: q = 16 has max weight
    // 16, so n = 4096 exceeds 65535
    {
        const Code c(16, 4096, {std::vector<int>(4096, 0)});
        const PackedCode pc = pack_code(c);
        const DiffWeightTable tbl = build_diff_table(16);
        CHECK_FALSE(avx2_eligible(pc, tbl));
        CHECK(selected_kernel_name(pc, tbl) == "scalar");
    }
}
