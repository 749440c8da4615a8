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

#ifndef BHC_CODE_HPP
#define BHC_CODE_HPP

#include <cstdint>
#include <vector>

#include "bhc/matrix.hpp"
#include "bhc/rational.hpp"
#include "bhc/types.hpp"
#include "bhc/weight.hpp"

namespace bhc {

/// An explicit set of words over a common (n, q). Set semantics: words are
/// stored sorted lexicographically with duplicates collapsed.
class Code {
public:
    Code(int q, int n, std::vector<std::vector<int>> words);

    int q() const { return q_; }
    int n() const { return n_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<std::vector<int>>& words() const { return words_; }
    const std::vector<int>& word(std::size_t i) const { return words_[i]; }
    bool contains(const std::vector<int>& w) const;

    LogVector word_vector(std::size_t i) const { return LogVector(q_, words_[i]); }

private:
    int q_;
    int n_;
    std::vector<std::vector<int>> words_;
};

/// The set of rows of L(H).
Code row_code(const LogMatrix& m);

/// C_H: the rows of L(H) together with all constant shifts alpha * 1.
Code bh_code(const LogMatrix& m);

/// Closed under adding alpha * 1 for every alpha in Z_q.
bool is_self_complementary(const Code& c);

/// Orthogonal-array strength: every s-subset of coordinates carries all q^s
/// patterns equally often. Requires 1 <= s <= n.
bool strength(const Code& c, int s);

/// Largest s for which strength holds; 0 if even s = 1 fails.
int max_strength(const Code& c);

/// Coset weight sum against the strength-1 prediction n * lambda * |C|.
/// The sum is computed regardless; `applicable` records whether the code
/// actually has strength 1 (the hypothesis behind the prediction).
struct FirstMoment {
    Rat sum;
    Rat predicted;
    bool applicable = false;
};
FirstMoment first_moment(const Code& c, const LogVector& v, const WeightScaling& s);

/// Coset sum of squared weights against n^2 (p-1) ((p-1)|C| + p), the
/// strength-2 prediction over a prime alphabet under the Honold scaling.
/// The prediction is exact for the Kronecker/Fourier constructions; for
/// other codes both numbers are reported without judgment.
struct SecondMoment {
    std::int64_t sum = 0;
    std::int64_t predicted = 0;
};
SecondMoment second_moment(const Code& c, const LogVector& v);

}  // namespace bhc

#endif
