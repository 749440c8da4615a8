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

#ifndef BHC_TESTS_FIXTURES_HPP
#define BHC_TESTS_FIXTURES_HPP

#include <vector>

#include "bhc/matrix.hpp"
#include "bhc/types.hpp"

namespace fixtures {

/// A known BH(4,8) instance: the order-4 Fourier exponents doubled into Z_8.
inline bhc::LogMatrix order4_phase8() {
    return bhc::LogMatrix(8, 4,
                          {0, 0, 0, 0,   //
                           0, 2, 4, 6,   //
                           0, 4, 0, 4,   //
                           0, 6, 4, 2});
}

/// Entrywise expected value of kron(fourier(3), fourier(3)), written out
/// independently so the Kronecker construction is tested against data, not
/// against itself.
inline bhc::LogMatrix tensor33_expected() {
    return bhc::LogMatrix(3, 9,
                          {0, 0, 0, 0, 0, 0, 0, 0, 0,  //
                           0, 1, 2, 0, 1, 2, 0, 1, 2,  //
                           0, 2, 1, 0, 2, 1, 0, 2, 1,  //
                           0, 0, 0, 1, 1, 1, 2, 2, 2,  //
                           0, 1, 2, 1, 2, 0, 2, 0, 1,  //
                           0, 2, 1, 1, 0, 2, 2, 1, 0,  //
                           0, 0, 0, 2, 2, 2, 1, 1, 1,  //
                           0, 1, 2, 2, 0, 1, 1, 2, 0,  //
                           0, 2, 1, 2, 1, 0, 1, 0, 2});
}

/// The 4x4 Sylvester matrix over Z_2, i.e. kron(fourier(2), fourier(2)).
inline bhc::LogMatrix sylvester4() {
    return bhc::kronecker(bhc::fourier(2), bhc::fourier(2));
}

inline bhc::LogVector vec(int q, std::vector<int> symbols) {
    return bhc::LogVector(q, std::move(symbols));
}

}  // namespace fixtures

#endif
