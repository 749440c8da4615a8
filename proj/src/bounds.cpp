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

#include "bhc/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "bhc/bent.hpp"
#include "bhc/code.hpp"
#include "bhc/cyclo.hpp"

namespace bhc {

namespace {

int exact_sqrt(int n) {
    const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    for (int c = std::max(0, r - 1); c <= r + 1; ++c)
        if (c * c == n) return c;
    return -1;
}

}  // namespace

bool Surd::is_rational() const { return exact_sqrt(n) >= 0; }

Rat Surd::rational_value() const {
    const int r = exact_sqrt(n);
    if (r < 0) throw std::domain_error("Surd: n is not a perfect square");
    return scale * Rat(n - r);
}

std::int64_t Surd::ceil_value() const {
    // smallest m with m >= (a/b)(n - sqrt(n)); compare by squaring:
    // m*b >= a*n - a*sqrt(n)  <=>  a*sqrt(n) >= a*n - m*b
    const __int128 a = scale.num();
    const __int128 b = scale.den();
    for (std::int64_t m = 0;; ++m) {
        const __int128 rest = a * n - static_cast<__int128>(m) * b;
        if (rest <= 0 || a * a * n >= rest * rest) return m;
    }
}

bool Surd::leq(const Rat& v) const {
    // (a/b)(n - sqrt(n)) <= vn/vd  <=>  a*vd*sqrt(n) >= a*vd*n - vn*b
    const __int128 avd = static_cast<__int128>(scale.num()) * v.den();
    const __int128 rest = avd * n - static_cast<__int128>(v.num()) * scale.den();
    if (rest <= 0) return true;
    return avd * avd * n >= rest * rest;
}

std::string Surd::to_string() const {
    if (is_rational()) return rational_value().to_string();
    return scale.to_string() + "*(" + std::to_string(n) + "-sqrt(" + std::to_string(n) + "))";
}

Surd bent_lower_bound(int n, int q, const WeightScaling& s) {
    if (n < 1) throw std::invalid_argument("bent_lower_bound: n must be >= 1");
    if (s.q() != q) throw std::invalid_argument("bent_lower_bound: scaling modulus mismatch");
    return Surd{s.lambda(), n};
}

Rat strength1_upper_bound(int n, int q, const WeightScaling& s) {
    if (n < 1) throw std::invalid_argument("strength1_upper_bound: n must be >= 1");
    if (s.q() != q) throw std::invalid_argument("strength1_upper_bound: scaling modulus mismatch");
    return Rat(n) * s.lambda();
}

std::int64_t norse_upper_bound(int n, int p, std::int64_t code_size) {
    if (!is_prime(p)) throw std::invalid_argument("norse_upper_bound: p must be prime");
    if (code_size < 1) throw std::invalid_argument("norse_upper_bound: empty code");
    const __int128 target = static_cast<__int128>(p) * n * n;
    std::int64_t m = 0;
    while (static_cast<__int128>(m) * m * code_size < target) ++m;
    return static_cast<std::int64_t>(n) * (p - 1) - m;
}

std::int64_t norse_paper_literal(int n, int p, std::int64_t code_size) {
    if (!is_prime(p)) throw std::invalid_argument("norse_paper_literal: p must be prime");
    if (code_size < 1) throw std::invalid_argument("norse_paper_literal: empty code");
    std::int64_t c = 0;  // ceil(sqrt(p / code_size))
    while (static_cast<__int128>(c) * c * code_size < p) ++c;
    return static_cast<std::int64_t>(n) * (p - 1 - c);
}

BoundsReport bounds_report(const LogMatrix& m, const WeightScaling& s, bool with_exact,
                           int workers, std::int64_t budget) {
    const int q = m.q();
    const int n = m.n();
    const Code code = bh_code(m);

    BoundsReport rep;
    rep.n = n;
    rep.q = q;
    rep.code_size = static_cast<std::int64_t>(code.size());
    rep.scaling = s.name();
    rep.strength1 = strength(code, 1);
    rep.strength2 = n >= 2 && strength(code, 2);
    rep.self_complementary = is_self_complementary(code);

    rep.lower_bent = bent_lower_bound(n, q, s);
    rep.lower_bent_ceil = rep.lower_bent.ceil_value();
    rep.upper_strength1 = strength1_upper_bound(n, q, s);
    if (!rep.strength1) rep.flags.push_back("strength1-hypothesis-fails");

    if (!is_prime(q)) {
        rep.flags.push_back("norse-requires-prime");
    } else if (!rep.self_complementary) {
        rep.flags.push_back("norse-requires-self-complementary");
    } else if (!rep.strength2) {
        rep.flags.push_back("norse-requires-strength2");
    } else {
        rep.upper_norse = norse_upper_bound(n, q, rep.code_size);
        rep.upper_norse_paper_literal = norse_paper_literal(n, q, rep.code_size);
    }

    bool bent_found = false;
    try {
        const BentReport br = find_bent(m, BentMode::Any, 1, true, workers, budget);
        bent_found = !br.found.empty();
        if (!bent_found) rep.flags.push_back("bent-hypothesis-fails");
    } catch (const BudgetError&) {
        rep.flags.push_back("bent-hypothesis-unverified");
    }

    if (with_exact) {
        rep.exact_radius = covering_radius_exact(code, s, workers, budget);
        const Rat r = rep.exact_radius->radius;
        if (bent_found && !rep.lower_bent.leq(r))
            throw std::logic_error("bounds_report: bent lower bound exceeds exact radius");
        if (rep.strength1 && r > rep.upper_strength1)
            throw std::logic_error("bounds_report: exact radius exceeds strength-1 bound");
        if (rep.upper_norse) {
            // the Norse bound lives on the Honold scale; undo the scaling
            const Rat honold = r / s.factor();
            if (honold > Rat(*rep.upper_norse))
                throw std::logic_error("bounds_report: exact radius exceeds Norse bound");
        }
    }
    return rep;
}

}  // namespace bhc
