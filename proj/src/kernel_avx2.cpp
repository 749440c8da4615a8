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

// Translation unit compiled with -mavx2; only entered after a runtime
// cpuid check, see select_min_dist.

#include "bhc/kernel.hpp"

#if defined(BHC_BUILD_AVX2)

#include <immintrin.h>

namespace bhc {

std::uint32_t min_dist_avx2(const PackedCode& pc, const DiffWeightTable& tbl,
                            const std::uint8_t* candidate) {
    const std::size_t n = static_cast<std::size_t>(pc.n);
    const std::size_t stride = pc.stride;
    std::uint32_t best = 0xffffffffu;
    for (std::size_t base = 0; base < stride; base += 32) {
        // 32 codewords per block; accumulate per-coordinate byte weights
        // into sixteen u16 lanes each for the low and high halves
        __m256i acc_lo = _mm256_setzero_si256();
        __m256i acc_hi = _mm256_setzero_si256();
        const __m256i zero = _mm256_setzero_si256();
        for (std::size_t k = 0; k < n; ++k) {
            const __m128i lut128 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(
                tbl.lut16.data() + static_cast<std::size_t>(candidate[k]) * 16));
            const __m256i lut = _mm256_broadcastsi128_si256(lut128);
            const __m256i sym = _mm256_loadu_si256(
                reinterpret_cast<const __m256i*>(pc.cols.data() + k * stride + base));
            const __m256i w = _mm256_shuffle_epi8(lut, sym);
            acc_lo = _mm256_add_epi16(acc_lo, _mm256_unpacklo_epi8(w, zero));
            acc_hi = _mm256_add_epi16(acc_hi, _mm256_unpackhi_epi8(w, zero));
        }
        // lane order is a permutation of the 32 codewords; a min does not care
        const __m256i m256 = _mm256_min_epu16(acc_lo, acc_hi);
        const __m128i m128 =
            _mm_min_epu16(_mm256_castsi256_si128(m256), _mm256_extracti128_si256(m256, 1));
        const std::uint32_t block_min =
            static_cast<std::uint32_t>(_mm_extract_epi16(_mm_minpos_epu16(m128), 0));
        if (block_min < best) {
            best = block_min;
            if (best == 0) return 0;
        }
    }
    return best;
}

}  // namespace bhc

#endif  // BHC_BUILD_AVX2
