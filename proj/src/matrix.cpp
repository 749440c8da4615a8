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

#include "bhc/matrix.hpp"

#include <stdexcept>

#include "bhc/cyclo.hpp"

namespace bhc {

LogMatrix::LogMatrix(int q, int n) : q_(q), n_(n), entries_(static_cast<std::size_t>(n) * n, 0) {
    if (q < 2) throw std::invalid_argument("LogMatrix: q must be >= 2");
    if (n < 1) throw std::invalid_argument("LogMatrix: n must be >= 1");
}

LogMatrix::LogMatrix(int q, int n, std::vector<int> entries) : LogMatrix(q, n) {
    if (entries.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("LogMatrix: entry count must be n*n");
    for (int e : entries) {
        if (e < 0 || e >= q) throw std::invalid_argument("LogMatrix: entry out of [0,q)");
    }
    entries_ = std::move(entries);
}

void LogMatrix::set(int i, int j, int value) {
    if (value < 0 || value >= q_) throw std::invalid_argument("LogMatrix: entry out of [0,q)");
    entries_[static_cast<std::size_t>(i) * n_ + j] = value;
}

LogVector LogMatrix::row(int i) const {
    std::vector<int> symbols(entries_.begin() + static_cast<std::ptrdiff_t>(i) * n_,
                             entries_.begin() + static_cast<std::ptrdiff_t>(i + 1) * n_);
    return LogVector(q_, std::move(symbols));
}

LogMatrix fourier(int m) {
    if (m < 2) throw std::invalid_argument("fourier: order must be >= 2");
    LogMatrix f(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            f.set(i, j, static_cast<int>((static_cast<long long>(i) * j) % m));
    return f;
}

LogMatrix kronecker(const LogMatrix& a, const LogMatrix& b) {
    if (a.q() != b.q()) throw std::invalid_argument("kronecker: phase mismatch");
    const int q = a.q();
    const int na = a.n();
    const int nb = b.n();
    LogMatrix out(q, na * nb);
    for (int ar = 0; ar < na; ++ar)
        for (int br = 0; br < nb; ++br)
            for (int ac = 0; ac < na; ++ac)
                for (int bc = 0; bc < nb; ++bc)
                    out.set(ar * nb + br, ac * nb + bc, (a.at(ar, ac) + b.at(br, bc)) % q);
    return out;
}

LogMatrix dephase(const LogMatrix& m) {
    const int q = m.q();
    const int n = m.n();
    LogMatrix out(q, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.set(i, j, ((m.at(i, j) - m.at(0, j)) % q + q) % q);
    for (int i = 0; i < n; ++i) {
        const int first = out.at(i, 0);
        for (int j = 0; j < n; ++j)
            out.set(i, j, ((out.at(i, j) - first) % q + q) % q);
    }
    return out;
}

BhVerification is_bh(const LogMatrix& m) {
    const int q = m.q();
    const int n = m.n();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            CycloElem sum(q);
            for (int k = 0; k < n; ++k) {
                const int d = ((m.at(i, k) - m.at(j, k)) % q + q) % q;
                ++sum.coeff(d);
            }
            if (!sum.is_zero()) return {false, std::make_pair(i + 1, j + 1)};
        }
    }
    return {true, std::nullopt};
}

}  // namespace bhc
