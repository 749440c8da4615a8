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

#include "bhc/kernel.hpp"

#include <stdexcept>

#include "bhc/weight.hpp"

namespace bhc {

PackedCode pack_code(const Code& c) {
    if (c.size() == 0) throw std::invalid_argument("pack_code: empty code");
    if (c.q() > 255)
        throw std::invalid_argument("pack_code: searches support q <= 255, got q=" +
                                    std::to_string(c.q()));
    PackedCode pc;
    pc.q = c.q();
    pc.n = c.n();
    pc.count = c.size();
    pc.stride = (pc.count + 31) / 32 * 32;
    pc.rows.resize(pc.count * static_cast<std::size_t>(pc.n));
    pc.cols.resize(static_cast<std::size_t>(pc.n) * pc.stride);
    for (std::size_t j = 0; j < pc.stride; ++j) {
        // padding lanes replicate word 0; they cannot change a minimum
        const auto& w = c.word(j < pc.count ? j : 0);
        for (int k = 0; k < pc.n; ++k) {
            const auto sym = static_cast<std::uint8_t>(w[static_cast<std::size_t>(k)]);
            if (j < pc.count) pc.rows[j * static_cast<std::size_t>(pc.n) + static_cast<std::size_t>(k)] = sym;
            pc.cols[static_cast<std::size_t>(k) * pc.stride + j] = sym;
        }
    }
    return pc;
}

DiffWeightTable build_diff_table(int q) {
    if (q < 2 || q > 255) throw std::invalid_argument("build_diff_table: need 2 <= q <= 255");
    const auto honold = honold_weight_table(q);
    DiffWeightTable tbl;
    tbl.q = q;
    tbl.diff.resize(static_cast<std::size_t>(q) * q);
    for (int v = 0; v < q; ++v) {
        for (int y = 0; y < q; ++y) {
            const auto w = static_cast<std::uint16_t>(honold[static_cast<std::size_t>(((v - y) % q + q) % q)]);
            tbl.diff[static_cast<std::size_t>(v) * q + y] = w;
            tbl.max_weight = std::max(tbl.max_weight, w);
        }
    }
    if (q <= 16) {
        tbl.lut16.assign(static_cast<std::size_t>(q) * 16, 0);
        for (int v = 0; v < q; ++v)
            for (int y = 0; y < q; ++y)
                tbl.lut16[static_cast<std::size_t>(v) * 16 + y] =
                    static_cast<std::uint8_t>(tbl.diff[static_cast<std::size_t>(v) * q + y]);
    }
    return tbl;
}

#if defined(BHC_BUILD_AVX2)
namespace {

bool cpu_has_avx2() {
    static const bool has = __builtin_cpu_supports("avx2");
    return has;
}

}  // namespace
#endif

bool avx2_eligible(const PackedCode& pc, const DiffWeightTable& tbl) {
#if defined(BHC_BUILD_AVX2)
    // byte LUT needs q <= 16 and weights < 256; u16 accumulators need
    // n * max_weight to fit
    return cpu_has_avx2() && pc.q <= 16 && tbl.max_weight <= 255 &&
           static_cast<std::uint64_t>(pc.n) * tbl.max_weight <= 65535;
#else
    (void)pc;
    (void)tbl;
    return false;
#endif
}

MinDistFn select_min_dist(const PackedCode& pc, const DiffWeightTable& tbl) {
#if defined(BHC_BUILD_AVX2)
    if (avx2_eligible(pc, tbl)) return &min_dist_avx2;
#endif
    (void)pc;
    (void)tbl;
    return &min_dist_scalar;
}

std::string selected_kernel_name(const PackedCode& pc, const DiffWeightTable& tbl) {
#if defined(BHC_BUILD_AVX2)
    if (avx2_eligible(pc, tbl)) return "avx2";
#endif
    (void)pc;
    (void)tbl;
    return "scalar";
}

}  // namespace bhc
