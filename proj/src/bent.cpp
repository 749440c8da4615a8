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

#include "bhc/bent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "bhc/cyclo.hpp"

namespace bhc {

namespace {

int exact_sqrt(int n) {
    // returns r with r*r == n, or -1
    const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    for (int c = std::max(0, r - 1); c <= r + 1; ++c)
        if (c * c == n) return c;
    return -1;
}

std::vector<CycloElem> product_entries(const LogMatrix& m, const std::vector<int>& x) {
    const int q = m.q();
    const int n = m.n();
    std::vector<CycloElem> z;
    z.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> coeffs(static_cast<std::size_t>(q), 0);
        for (int k = 0; k < n; ++k)
            coeffs[static_cast<std::size_t>((m.at(i, k) + x[static_cast<std::size_t>(k)]) % q)] += 1;
        z.emplace_back(q, std::move(coeffs));
    }
    return z;
}

BentClass classify(const LogMatrix& m, const std::vector<int>& x) {
    const int q = m.q();
    const int n = m.n();
    BentClass out;

    const auto z = product_entries(m, x);
    for (const auto& zi : z)
        if (!zi.norm_sq().equals_constant(n)) return out;

    // z_i * zeta^{-x_i} constant across i <=> Hx = (common) * x
    auto twisted = [&](int sign) {
        std::vector<CycloElem> t;
        t.reserve(z.size());
        for (int i = 0; i < n; ++i) {
            const int e = ((sign * x[static_cast<std::size_t>(i)]) % q + q) % q;
            t.push_back(z[static_cast<std::size_t>(i)].mul(CycloElem::root_power(q, e)));
        }
        return t;
    };
    const auto w = twisted(-1);
    const auto v = twisted(+1);
    out.self_dual = true;
    out.conj_self_dual = true;
    for (int i = 1; i < n; ++i) {
        if (out.self_dual && !w[static_cast<std::size_t>(i)].equals(w[0])) out.self_dual = false;
        if (out.conj_self_dual && !v[static_cast<std::size_t>(i)].equals(v[0]))
            out.conj_self_dual = false;
    }

    out.kind = out.self_dual          ? BentKind::SelfDual
               : out.conj_self_dual   ? BentKind::ConjugateSelfDual
                                      : BentKind::Bent;

    if (out.kind != BentKind::Bent) {
        const int r = exact_sqrt(n);
        if (r >= 0) {
            // duality constant equals sqrt(n) * zeta^t for some residue t?
            const CycloElem& common = out.self_dual ? w[0] : v[0];
            for (int t = 0; t < q; ++t) {
                if (common.equals(CycloElem::constant(q, r).mul(CycloElem::root_power(q, t)))) {
                    out.lambda_log = t;
                    break;
                }
            }
        }
    }
    return out;
}

struct IndexedHit {
    __int128 index;
    BentHit hit;
};

// Writes candidate number `index` (odometer order, last coordinate fastest)
// into coordinates [fixed, n).
void candidate_at(__int128 index, int q, std::vector<int>& x, int fixed) {
    for (int k = static_cast<int>(x.size()) - 1; k >= fixed; --k) {
        x[static_cast<std::size_t>(k)] = static_cast<int>(index % q);
        index /= q;
    }
}

void candidate_next(int q, std::vector<int>& x, int fixed) {
    for (int k = static_cast<int>(x.size()) - 1; k >= fixed; --k) {
        if (++x[static_cast<std::size_t>(k)] < q) return;
        x[static_cast<std::size_t>(k)] = 0;
    }
}

}  // namespace

std::string bent_kind_name(BentKind kind) {
    switch (kind) {
        case BentKind::NotBent: return "not_bent";
        case BentKind::Bent: return "bent";
        case BentKind::SelfDual: return "self_dual";
        case BentKind::ConjugateSelfDual: return "conj_self_dual";
    }
    return "not_bent";
}

BentMode parse_bent_mode(const std::string& name) {
    if (name == "any") return BentMode::Any;
    if (name == "self_dual") return BentMode::SelfDual;
    if (name == "conj_self_dual") return BentMode::ConjSelfDual;
    throw std::invalid_argument("unknown bent mode: " + name);
}

std::string bent_mode_name(BentMode mode) {
    switch (mode) {
        case BentMode::Any: return "any";
        case BentMode::SelfDual: return "self_dual";
        case BentMode::ConjSelfDual: return "conj_self_dual";
    }
    return "any";
}

BentClass is_bent(const LogMatrix& m, const LogVector& x) {
    if (x.q != m.q() || static_cast<int>(x.size()) != m.n())
        throw std::invalid_argument("is_bent: candidate shape does not match matrix");
    return classify(m, x.symbols);
}

BentReport find_bent(const LogMatrix& m, BentMode mode, std::int64_t limit, bool reduce,
                     int workers, std::int64_t budget, const std::string& matrix_id) {
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    const int q = m.q();
    const int n = m.n();
    const int fixed = reduce ? 1 : 0;
    const int free_len = n - fixed;

    __int128 total = 1;
    const __int128 per_candidate = static_cast<__int128>(n) * n;
    for (int k = 0; k < free_len; ++k) {
        total *= q;
        if (total * per_candidate > budget)
            throw BudgetError("bent search needs more than " + std::to_string(budget) +
                              " steps; raise --budget");
    }

    auto matches = [mode](const BentClass& cls) {
        switch (mode) {
            case BentMode::Any: return cls.kind != BentKind::NotBent;
            case BentMode::SelfDual: return cls.self_dual;
            case BentMode::ConjSelfDual: return cls.conj_self_dual;
        }
        return false;
    };

    auto scan = [&](__int128 lo, __int128 hi) {
        std::vector<IndexedHit> hits;
        std::vector<int> x(static_cast<std::size_t>(n), 0);
        candidate_at(lo, q, x, fixed);
        for (__int128 i = lo; i < hi; ++i) {
            const BentClass cls = classify(m, x);
            if (matches(cls)) {
                hits.push_back(IndexedHit{i, BentHit{LogVector(q, x), cls}});
                // a range never contributes more than the first `limit` of
                // its own hits to the merged prefix
                if (limit > 0 && static_cast<std::int64_t>(hits.size()) >= limit) break;
            }
            candidate_next(q, x, fixed);
        }
        return hits;
    };

    std::vector<IndexedHit> hits;
    const int use = static_cast<int>(std::min<__int128>(workers, total));
    if (use <= 1) {
        hits = scan(0, total);
    } else {
        std::vector<std::vector<IndexedHit>> part(static_cast<std::size_t>(use));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(use));
        for (int w = 0; w < use; ++w) {
            const __int128 lo = total * w / use;
            const __int128 hi = total * (w + 1) / use;
            pool.emplace_back([&, w, lo, hi] { part[static_cast<std::size_t>(w)] = scan(lo, hi); });
        }
        for (auto& t : pool) t.join();
        for (auto& p : part)
            for (auto& h : p) hits.push_back(std::move(h));
        std::sort(hits.begin(), hits.end(),
                  [](const IndexedHit& a, const IndexedHit& b) { return a.index < b.index; });
    }

    BentReport rep;
    rep.matrix_id = matrix_id;
    if (limit > 0 && static_cast<std::int64_t>(hits.size()) >= limit) {
        hits.resize(static_cast<std::size_t>(limit));
        rep.searched = static_cast<std::int64_t>(hits.back().index + 1);
        rep.exhaustive = hits.back().index + 1 == total;
    } else {
        rep.searched = static_cast<std::int64_t>(total);
        rep.exhaustive = true;
    }
    rep.found.reserve(hits.size());
    for (auto& h : hits) rep.found.push_back(std::move(h.hit));
    return rep;
}

}  // namespace bhc
