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

#include "bhc/cyclo.hpp"

#include <numeric>
#include <stdexcept>

#include "bhc/rational.hpp"

namespace bhc {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::monomial_minus_one(int degree) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
    c[0] = -1;
    c.back() = 1;
    return IntPoly(std::move(c));
}

std::int64_t IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

IntPoly IntPoly::mod_monic(const IntPoly& divisor) const {
    if (divisor.is_zero() || divisor.coeffs_.back() != 1)
        throw std::domain_error("mod_monic: divisor must be monic");
    std::vector<std::int64_t> rem = coeffs_;
    const int dd = divisor.degree();
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        const std::int64_t factor = rem[static_cast<std::size_t>(i)];
        if (factor == 0) continue;
        for (int j = 0; j <= dd; ++j) {
            auto& r = rem[static_cast<std::size_t>(i - dd + j)];
            r = checked_sub(r, checked_mul(factor, divisor.coeffs_[static_cast<std::size_t>(j)]));
        }
    }
    return IntPoly(std::move(rem));
}

IntPoly IntPoly::div_exact_monic(const IntPoly& divisor) const {
    if (divisor.is_zero() || divisor.coeffs_.back() != 1)
        throw std::domain_error("div_exact_monic: divisor must be monic");
    if (is_zero()) return IntPoly();
    const int dd = divisor.degree();
    if (degree() < dd) throw std::domain_error("div_exact_monic: division leaves a remainder");
    std::vector<std::int64_t> rem = coeffs_;
    std::vector<std::int64_t> quot(static_cast<std::size_t>(degree() - dd) + 1, 0);
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        const std::int64_t factor = rem[static_cast<std::size_t>(i)];
        quot[static_cast<std::size_t>(i - dd)] = factor;
        if (factor == 0) continue;
        for (int j = 0; j <= dd; ++j) {
            auto& r = rem[static_cast<std::size_t>(i - dd + j)];
            r = checked_sub(r, checked_mul(factor, divisor.coeffs_[static_cast<std::size_t>(j)]));
        }
    }
    for (const std::int64_t r : rem) {
        if (r != 0) throw std::domain_error("div_exact_monic: division leaves a remainder");
    }
    return IntPoly(std::move(quot));
}

IntPoly cyclotomic_poly(int q) {
    if (q < 1) throw std::invalid_argument("cyclotomic_poly: q must be >= 1");
    IntPoly numerator = IntPoly::monomial_minus_one(q);
    for (int d = 1; d < q; ++d) {
        if (q % d == 0) numerator = numerator.div_exact_monic(cyclotomic_poly(d));
    }
    return numerator;
}

CycloElem::CycloElem(int q) : q_(q), coeffs_(static_cast<std::size_t>(q), 0) {
    if (q < 1) throw std::invalid_argument("CycloElem: q must be >= 1");
}

CycloElem::CycloElem(int q, std::vector<std::int64_t> coeffs) : q_(q), coeffs_(std::move(coeffs)) {
    if (q < 1) throw std::invalid_argument("CycloElem: q must be >= 1");
    if (coeffs_.size() != static_cast<std::size_t>(q))
        throw std::invalid_argument("CycloElem: coefficient profile must have exactly q entries");
}

CycloElem CycloElem::constant(int q, std::int64_t value) {
    CycloElem z(q);
    z.coeffs_[0] = value;
    return z;
}

CycloElem CycloElem::root_power(int q, int exponent) {
    CycloElem z(q);
    int e = exponent % q;
    if (e < 0) e += q;
    z.coeffs_[static_cast<std::size_t>(e)] = 1;
    return z;
}

CycloElem CycloElem::add(const CycloElem& other) const {
    if (q_ != other.q_) throw std::invalid_argument("CycloElem: modulus mismatch");
    CycloElem r(q_);
    for (int i = 0; i < q_; ++i)
        r.coeffs_[static_cast<std::size_t>(i)] =
            checked_add(coeffs_[static_cast<std::size_t>(i)], other.coeffs_[static_cast<std::size_t>(i)]);
    return r;
}

CycloElem CycloElem::sub(const CycloElem& other) const {
    if (q_ != other.q_) throw std::invalid_argument("CycloElem: modulus mismatch");
    CycloElem r(q_);
    for (int i = 0; i < q_; ++i)
        r.coeffs_[static_cast<std::size_t>(i)] =
            checked_sub(coeffs_[static_cast<std::size_t>(i)], other.coeffs_[static_cast<std::size_t>(i)]);
    return r;
}

CycloElem CycloElem::mul(const CycloElem& other) const {
    if (q_ != other.q_) throw std::invalid_argument("CycloElem: modulus mismatch");
    CycloElem r(q_);
    for (int i = 0; i < q_; ++i) {
        const std::int64_t a = coeffs_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        for (int j = 0; j < q_; ++j) {
            const std::int64_t b = other.coeffs_[static_cast<std::size_t>(j)];
            if (b == 0) continue;
            auto& out = r.coeffs_[static_cast<std::size_t>((i + j) % q_)];
            out = checked_add(out, checked_mul(a, b));
        }
    }
    return r;
}

CycloElem CycloElem::conj() const {
    CycloElem r(q_);
    for (int i = 0; i < q_; ++i)
        r.coeffs_[static_cast<std::size_t>((q_ - i) % q_)] = coeffs_[static_cast<std::size_t>(i)];
    return r;
}

CycloElem CycloElem::norm_sq() const { return mul(conj()); }

bool CycloElem::is_zero() const {
    bool all_zero = true;
    for (const std::int64_t c : coeffs_) {
        if (c != 0) { all_zero = false; break; }
    }
    if (all_zero) return true;
    const IntPoly rem = IntPoly(coeffs_).mod_monic(cyclotomic_poly(q_));
    return rem.is_zero();
}

bool CycloElem::equals(const CycloElem& other) const { return sub(other).is_zero(); }

bool CycloElem::equals_constant(std::int64_t value) const {
    return sub(constant(q_, value)).is_zero();
}

namespace {

std::vector<std::pair<int, int>> factorize(int n) {
    std::vector<std::pair<int, int>> factors;
    for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
        if (n % p == 0) {
            int k = 0;
            while (n % p == 0) { n /= p; ++k; }
            factors.emplace_back(p, k);
        }
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

}  // namespace

int euler_phi(int q) {
    if (q < 1) throw std::invalid_argument("euler_phi: q must be >= 1");
    int result = q;
    for (const auto& [p, k] : factorize(q)) result = result / p * (p - 1);
    return result;
}

int mobius(int m) {
    if (m < 1) throw std::invalid_argument("mobius: m must be >= 1");
    int sign = 1;
    for (const auto& [p, k] : factorize(m)) {
        if (k > 1) return 0;
        sign = -sign;
    }
    return sign;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::optional<std::pair<int, int>> prime_power(int q) {
    if (q < 2) return std::nullopt;
    const auto factors = factorize(q);
    if (factors.size() != 1) return std::nullopt;
    return factors.front();
}

std::int64_t ramanujan_sum(int q, int x) {
    if (q < 1) throw std::invalid_argument("ramanujan_sum: q must be >= 1");
    if (x < 0 || x >= q) throw std::invalid_argument("ramanujan_sum: x must lie in [0,q)");
    if (q == 1) return 1;
    const int g = std::gcd(x, q);  // gcd(0, q) == q, so x = 0 lands on m = 1
    const int m = q / g;
    // mu(m) * phi(q) / phi(m); phi(m) divides phi(q) since m | q.
    return static_cast<std::int64_t>(mobius(m)) * (euler_phi(q) / euler_phi(m));
}

std::int64_t trace_T(const CycloElem& z) {
    std::int64_t t = 0;
    for (int i = 0; i < z.q(); ++i) {
        const std::int64_t c = z.coeffs()[static_cast<std::size_t>(i)];
        if (c != 0) t = checked_add(t, checked_mul(c, ramanujan_sum(z.q(), i)));
    }
    return t;
}

}  // namespace bhc
