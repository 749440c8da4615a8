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

#include "bhc/weight.hpp"

#include <stdexcept>

#include "bhc/cyclo.hpp"

namespace bhc {

WeightScaling::WeightScaling(Kind kind, int q, Rat lambda)
    : kind_(kind), q_(q), lambda_(lambda), factor_(lambda / Rat(euler_phi(q))) {
    if (q < 2) throw std::invalid_argument("WeightScaling: q must be >= 2");
    if (!(lambda > Rat(0))) throw std::invalid_argument("WeightScaling: lambda must be positive");
}

WeightScaling WeightScaling::honold(int q) {
    return WeightScaling(Kind::Honold, q, Rat(euler_phi(q)));
}

WeightScaling WeightScaling::standard(int q) {
    const auto pk = prime_power(q);
    if (!pk) throw std::invalid_argument("standard scaling requires a prime power modulus, got q=" +
                                         std::to_string(q));
    return WeightScaling(Kind::Standard, q, Rat(euler_phi(q), pk->first));
}

WeightScaling WeightScaling::custom(int q, Rat lambda) {
    return WeightScaling(Kind::Custom, q, lambda);
}

std::string WeightScaling::name() const {
    switch (kind_) {
        case Kind::Honold: return "honold";
        case Kind::Standard: return "standard";
        case Kind::Custom: return "custom:" + lambda_.to_string();
    }
    return "?";
}

std::vector<std::int64_t> honold_weight_table(int q) {
    if (q < 2) throw std::invalid_argument("honold_weight_table: q must be >= 2");
    const std::int64_t phi = euler_phi(q);
    std::vector<std::int64_t> wt(static_cast<std::size_t>(q));
    for (int x = 0; x < q; ++x) wt[static_cast<std::size_t>(x)] = phi - ramanujan_sum(q, x);
    return wt;
}

Rat symbol_weight(int x, const WeightScaling& s) {
    if (x < 0 || x >= s.q()) throw std::invalid_argument("symbol_weight: residue out of [0,q)");
    const std::int64_t base = euler_phi(s.q()) - ramanujan_sum(s.q(), x);
    return Rat(base) * s.factor();
}

Rat vector_weight(const LogVector& v, const WeightScaling& s) {
    if (v.q != s.q()) throw std::invalid_argument("vector_weight: modulus mismatch");
    std::int64_t base = 0;
    const auto table = honold_weight_table(s.q());
    for (int x : v.symbols) base = detail::checked_add(base, table[static_cast<std::size_t>(x)]);
    return Rat(base) * s.factor();
}

Rat distance(const LogVector& u, const LogVector& v, const WeightScaling& s) {
    if (u.q != v.q || u.size() != v.size())
        throw std::invalid_argument("distance: shape mismatch");
    if (u.q != s.q()) throw std::invalid_argument("distance: scaling modulus mismatch");
    const int q = u.q;
    const auto table = honold_weight_table(q);
    std::int64_t base = 0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        const int d = ((u[k] - v[k]) % q + q) % q;
        base = detail::checked_add(base, table[static_cast<std::size_t>(d)]);
    }
    return Rat(base) * s.factor();
}

TraceIdentity lemma2_check(const LogVector& v, const LogVector& w) {
    if (v.q != w.q || v.size() != w.size())
        throw std::invalid_argument("lemma2_check: shape mismatch");
    const int q = v.q;
    const auto n = static_cast<std::int64_t>(v.size());

    TraceIdentity out;
    out.lhs = distance(v, w, WeightScaling::honold(q)).as_integer();

    // Hermitian product <v,w> = sum_k zeta^{v_k - w_k} as a coefficient profile.
    CycloElem inner(q);
    for (std::size_t k = 0; k < v.size(); ++k) {
        const int d = ((v[k] - w[k]) % q + q) % q;
        ++inner.coeff(d);
    }
    out.rhs = detail::checked_sub(detail::checked_mul(n, euler_phi(q)), trace_T(inner));
    return out;
}

}  // namespace bhc
