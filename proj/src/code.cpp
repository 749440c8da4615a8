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

#include "bhc/code.hpp"

#include <algorithm>
#include <stdexcept>

#include "bhc/cyclo.hpp"

namespace bhc {

Code::Code(int q, int n, std::vector<std::vector<int>> words) : q_(q), n_(n), words_(std::move(words)) {
    if (q < 2) throw std::invalid_argument("Code: q must be >= 2");
    if (n < 1) throw std::invalid_argument("Code: n must be >= 1");
    for (const auto& w : words_) {
        if (w.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("Code: word length mismatch");
        for (int s : w) {
            if (s < 0 || s >= q) throw std::invalid_argument("Code: symbol out of [0,q)");
        }
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool Code::contains(const std::vector<int>& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

Code row_code(const LogMatrix& m) {
    std::vector<std::vector<int>> words;
    words.reserve(static_cast<std::size_t>(m.n()));
    for (int i = 0; i < m.n(); ++i) words.push_back(m.row(i).symbols);
    return Code(m.q(), m.n(), std::move(words));
}

Code bh_code(const LogMatrix& m) {
    const int q = m.q();
    const int n = m.n();
    std::vector<std::vector<int>> words;
    words.reserve(static_cast<std::size_t>(n) * q);
    for (int i = 0; i < n; ++i) {
        const auto base = m.row(i).symbols;
        for (int alpha = 0; alpha < q; ++alpha) {
            std::vector<int> w(base.size());
            for (std::size_t k = 0; k < base.size(); ++k) w[k] = (base[k] + alpha) % q;
            words.push_back(std::move(w));
        }
    }
    return Code(q, n, std::move(words));
}

bool is_self_complementary(const Code& c) {
    const int q = c.q();
    std::vector<int> shifted(static_cast<std::size_t>(c.n()));
    for (const auto& w : c.words()) {
        for (int alpha = 1; alpha < q; ++alpha) {
            for (std::size_t k = 0; k < w.size(); ++k) shifted[k] = (w[k] + alpha) % q;
            if (!c.contains(shifted)) return false;
        }
    }
    return true;
}

bool strength(const Code& c, int s) {
    if (s < 1 || s > c.n()) throw std::invalid_argument("strength: s must lie in [1,n]");
    const int q = c.q();
    // All q^s patterns must occur, each the same number of times, so the
    // code size must be a positive multiple of q^s.
    std::uint64_t patterns = 1;
    for (int i = 0; i < s; ++i) {
        patterns *= static_cast<std::uint64_t>(q);
        if (patterns > c.size()) return false;
    }
    if (c.size() % patterns != 0) return false;
    const std::uint64_t expected = c.size() / patterns;

    std::vector<int> coords(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) coords[static_cast<std::size_t>(i)] = i;
    std::vector<std::uint64_t> counts(patterns);

    while (true) {
        std::fill(counts.begin(), counts.end(), 0);
        for (const auto& w : c.words()) {
            std::uint64_t key = 0;
            for (int i = 0; i < s; ++i)
                key = key * static_cast<std::uint64_t>(q) +
                      static_cast<std::uint64_t>(w[static_cast<std::size_t>(coords[static_cast<std::size_t>(i)])]);
            ++counts[key];
        }
        for (const std::uint64_t cnt : counts)
            if (cnt != expected) return false;

        // next s-combination of {0..n-1} in lexicographic order
        int i = s - 1;
        while (i >= 0 && coords[static_cast<std::size_t>(i)] == c.n() - s + i) --i;
        if (i < 0) break;
        ++coords[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < s; ++j)
            coords[static_cast<std::size_t>(j)] = coords[static_cast<std::size_t>(j - 1)] + 1;
    }
    return true;
}

int max_strength(const Code& c) {
    int best = 0;
    for (int s = 1; s <= c.n(); ++s) {
        if (!strength(c, s)) break;
        best = s;
    }
    return best;
}

FirstMoment first_moment(const Code& c, const LogVector& v, const WeightScaling& s) {
    if (v.q != c.q() || v.size() != static_cast<std::size_t>(c.n()))
        throw std::invalid_argument("first_moment: shape mismatch");
    if (s.q() != c.q()) throw std::invalid_argument("first_moment: scaling modulus mismatch");

    const int q = c.q();
    const auto table = honold_weight_table(q);
    std::int64_t base = 0;
    for (const auto& w : c.words()) {
        for (std::size_t k = 0; k < w.size(); ++k) {
            const int sym = (v[k] + w[k]) % q;
            base = detail::checked_add(base, table[static_cast<std::size_t>(sym)]);
        }
    }

    FirstMoment out;
    out.sum = Rat(base) * s.factor();
    out.predicted = Rat(c.n()) * s.lambda() * Rat(static_cast<std::int64_t>(c.size()));
    out.applicable = strength(c, 1);
    return out;
}

SecondMoment second_moment(const Code& c, const LogVector& v) {
    if (v.q != c.q() || v.size() != static_cast<std::size_t>(c.n()))
        throw std::invalid_argument("second_moment: shape mismatch");
    const int p = c.q();
    if (!is_prime(p)) throw std::invalid_argument("second_moment: alphabet must be prime, got q=" +
                                                  std::to_string(p));

    const auto table = honold_weight_table(p);
    SecondMoment out;
    for (const auto& w : c.words()) {
        std::int64_t wt = 0;
        for (std::size_t k = 0; k < w.size(); ++k)
            wt = detail::checked_add(wt, table[static_cast<std::size_t>((v[k] + w[k]) % p)]);
        out.sum = detail::checked_add(out.sum, detail::checked_mul(wt, wt));
    }
    const std::int64_t n = c.n();
    const auto size = static_cast<std::int64_t>(c.size());
    out.predicted = n * n * (p - 1) * ((p - 1) * size + p);
    return out;
}

}  // namespace bhc
