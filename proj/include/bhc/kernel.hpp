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

#ifndef BHC_KERNEL_HPP
#define BHC_KERNEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bhc/code.hpp"

namespace bhc {

// Min-distance kernel for the covering-radius searches.
//
// Every scaling of the homogeneous weight is an exact rational multiple of
// the Honold integer table, so the inner loops run entirely on small
// unsigned integers; callers rescale the final value. Two variants share
// one contract and are equivalence-tested against each other:
//   scalar  reference implementation, any q <= 255
//   avx2    32 codewords per step via byte-table shuffles, q <= 16
// Selection happens at runtime from CPU capability and problem shape.

/// Search-friendly layout of a code: row-major bytes for the scalar kernel,
/// column-major bytes (codeword count padded to a multiple of 32 by
/// replicating the first word) for the vector kernel.
struct PackedCode {
    int q = 0;
    int n = 0;
    std::size_t count = 0;   // real codewords
    std::size_t stride = 0;  // padded count, multiple of 32
    std::vector<std::uint8_t> rows;  // rows[j*n + k]
    std::vector<std::uint8_t> cols;  // cols[k*stride + j]
};

/// Packs a code for the kernels. Requires 1 <= |C| and q <= 255.
PackedCode pack_code(const Code& c);

/// Honold difference weights wt[(v - y) mod q] indexed by [v][y], plus a
/// 16-byte-per-symbol copy used as PSHUFB tables when q <= 16.
struct DiffWeightTable {
    int q = 0;
    std::vector<std::uint16_t> diff;    // q*q entries, row v
    std::vector<std::uint8_t> lut16;    // q*16 entries, row v, zero-padded
    std::uint16_t max_weight = 0;
};
DiffWeightTable build_diff_table(int q);

using MinDistFn = std::uint32_t (*)(const PackedCode&, const DiffWeightTable&,
                                    const std::uint8_t* candidate);

/// Reference kernel: codeword-major with early abandon against the running
/// minimum. The behavior all other kernels must match exactly.
std::uint32_t min_dist_scalar(const PackedCode& pc, const DiffWeightTable& tbl,
                              const std::uint8_t* candidate);

#if defined(BHC_BUILD_AVX2)
std::uint32_t min_dist_avx2(const PackedCode& pc, const DiffWeightTable& tbl,
                            const std::uint8_t* candidate);
#endif

/// True when the AVX2 variant is compiled in, the CPU supports it, and the
/// problem shape fits its byte-table scheme.
bool avx2_eligible(const PackedCode& pc, const DiffWeightTable& tbl);

/// Runtime kernel selection for this problem.
MinDistFn select_min_dist(const PackedCode& pc, const DiffWeightTable& tbl);
std::string selected_kernel_name(const PackedCode& pc, const DiffWeightTable& tbl);

}  // namespace bhc

#endif
