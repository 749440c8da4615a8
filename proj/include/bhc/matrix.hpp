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

#ifndef BHC_MATRIX_HPP
#define BHC_MATRIX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "bhc/types.hpp"

namespace bhc {

/// n x n matrix of Z_q exponents: the logarithmic form of a phase-q matrix
/// H = [zeta_q^{entries(i,j)}]. Storage is row-major, 0-based; reports and
/// file formats use the 1-based convention.
class LogMatrix {
public:
    LogMatrix(int q, int n);
    LogMatrix(int q, int n, std::vector<int> entries);

    int q() const { return q_; }
    int n() const { return n_; }

    int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, int value);

    LogVector row(int i) const;
    const std::vector<int>& entries() const { return entries_; }

    friend bool operator==(const LogMatrix& a, const LogMatrix& b) {
        return a.q_ == b.q_ && a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    int q_;
    int n_;
    std::vector<int> entries_;
};

/// Result of the exact Butson check. failing_pair holds the 1-based indices
/// of the first non-orthogonal row pair (lowest lexicographically).
struct BhVerification {
    bool is_butson = false;
    std::optional<std::pair<int, int>> failing_pair;
};

/// Fourier matrix F_m in log form: q = n = m, entry (i,j) = i*j mod m (0-based).
LogMatrix fourier(int m);

/// Log form of the Kronecker product: entry ((a,c),(b,d)) = A(a,b) + B(c,d) mod q.
LogMatrix kronecker(const LogMatrix& a, const LogMatrix& b);

/// Subtract row 1 from every row, then column 1 from every column (mod q).
/// The result has all-zero first row and column; the BH property is preserved.
LogMatrix dephase(const LogMatrix& m);

/// Exact Butson verification: every row pair must give a vanishing sum of
/// roots of unity, decided in Z[zeta_q].
BhVerification is_bh(const LogMatrix& m);

}  // namespace bhc

#endif
