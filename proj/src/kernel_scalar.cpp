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

namespace bhc {

std::uint32_t min_dist_scalar(const PackedCode& pc, const DiffWeightTable& tbl,
                              const std::uint8_t* candidate) {
    const std::size_t n = static_cast<std::size_t>(pc.n);
    const std::size_t q = static_cast<std::size_t>(tbl.q);
    std::uint32_t best = 0xffffffffu;
    for (std::size_t j = 0; j < pc.count; ++j) {
        const std::uint8_t* w = pc.rows.data() + j * n;
        std::uint32_t sum = 0;
        for (std::size_t k = 0; k < n; ++k) {
            sum += tbl.diff[static_cast<std::size_t>(candidate[k]) * q + w[k]];
            if (sum >= best) break;
        }
        if (sum < best) {
            best = sum;
            if (best == 0) return 0;
        }
    }
    return best;
}

}  // namespace bhc
