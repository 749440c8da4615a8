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

#ifndef BHC_CYCLO_HPP
#define BHC_CYCLO_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace bhc {

/// Univariate polynomial with 64-bit integer coefficients, lowest degree
/// first. No trailing zero coefficients; the zero polynomial is empty.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<std::int64_t> coeffs);

    static IntPoly monomial_minus_one(int degree);  // x^degree - 1

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    std::int64_t coeff(int i) const;
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    /// Remainder of *this by a monic divisor; all intermediate coefficients
    /// stay integral because the divisor is monic.
    IntPoly mod_monic(const IntPoly& divisor) const;

    /// Exact quotient by a monic divisor; throws std::domain_error if the
    /// division leaves a remainder.
    IntPoly div_exact_monic(const IntPoly& divisor) const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<std::int64_t> coeffs_;
    void trim();
};

/// The q-th cyclotomic polynomial Phi_q, monic of degree phi(q). Computed by
/// exact integer division of x^q - 1 by the product of Phi_d over proper
/// divisors d of q.
IntPoly cyclotomic_poly(int q);

/// An element of Z[zeta_q] as a coefficient profile c_0..c_{q-1} standing for
/// sum c_i zeta_q^i. The profile is not canonical; zero tests and equality
/// reduce modulo Phi_q first. Arithmetic is exact and overflow-checked.
class CycloElem {
public:
    explicit CycloElem(int q);
    CycloElem(int q, std::vector<std::int64_t> coeffs);

    static CycloElem constant(int q, std::int64_t value);
    static CycloElem root_power(int q, int exponent);  // zeta_q^exponent

    int q() const { return q_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    std::int64_t& coeff(int i) { return coeffs_[static_cast<std::size_t>(i)]; }

    CycloElem add(const CycloElem& other) const;
    CycloElem sub(const CycloElem& other) const;
    /// Product; exponents fold modulo q (cyclic convolution of profiles).
    CycloElem mul(const CycloElem& other) const;
    /// Complex conjugate: coefficient at i moves to (q - i) mod q.
    CycloElem conj() const;
    /// z * conj(z); reduces to the constant |z|^2 as a complex number.
    CycloElem norm_sq() const;

    /// True iff the represented complex number is 0, decided by reducing
    /// sum c_i x^i modulo Phi_q over the integers.
    bool is_zero() const;
    /// Equality as complex numbers (difference reduces to zero).
    bool equals(const CycloElem& other) const;
    /// True iff the element equals the rational integer `value`.
    bool equals_constant(std::int64_t value) const;

private:
    int q_;
    std::vector<std::int64_t> coeffs_;
};

int euler_phi(int q);
int mobius(int m);
bool is_prime(int p);

/// p, k with q = p^k, or nullopt if q is not a prime power (q >= 2).
std::optional<std::pair<int, int>> prime_power(int q);

/// Ramanujan sum c_q(x) = sum over units a of zeta_q^{ax}, via the closed
/// form mu(q/g) * phi(q) / phi(q/g) with g = gcd(x, q). Always an integer.
std::int64_t ramanujan_sum(int q, int x);

/// Trace of z down to Q: the Z-linear extension of T(zeta_q^i) = c_q(i).
std::int64_t trace_T(const CycloElem& z);

}  // namespace bhc

#endif
