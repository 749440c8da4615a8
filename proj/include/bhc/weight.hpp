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

#ifndef BHC_WEIGHT_HPP
#define BHC_WEIGHT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bhc/rational.hpp"
#include "bhc/types.hpp"

namespace bhc {

/// Normalization of the homogeneous weight wt(x) = lambda * (1 - c_q(x)/phi(q)).
///
/// The weight is determined by Z_q up to the scale lambda, and the two built-in
/// conventions disagree by a factor of p on prime powers, so nothing defaults:
/// every entry point takes an explicit scaling.
///   Honold    lambda = phi(q); per-symbol weights are the integers phi(q) - c_q(x).
///   Standard  lambda = phi(q)/p for q = p^k (Hamming weight when k = 1);
///             integer-valued, rejects non-prime-power q.
///   Custom    lambda = an arbitrary positive rational, carried exactly.
class WeightScaling {
public:
    enum class Kind { Honold, Standard, Custom };

    static WeightScaling honold(int q);
    static WeightScaling standard(int q);            // throws for non-prime-power q
    static WeightScaling custom(int q, Rat lambda);  // lambda > 0

    Kind kind() const { return kind_; }
    int q() const { return q_; }
    Rat lambda() const { return lambda_; }
    /// lambda / phi(q): the exact multiplier taking Honold integer weights
    /// to this scaling. Every distance computation runs on the shared
    /// Honold integer table and rescales at the end.
    Rat factor() const { return factor_; }

    std::string name() const;  // "honold" | "standard" | "custom:A/B"

    friend bool operator==(const WeightScaling& a, const WeightScaling& b) {
        return a.kind_ == b.kind_ && a.q_ == b.q_ && a.lambda_ == b.lambda_;
    }

private:
    WeightScaling(Kind kind, int q, Rat lambda);
    Kind kind_;
    int q_;
    Rat lambda_;
    Rat factor_;
};

/// Honold-normalized per-symbol weights phi(q) - c_q(x) for x in [0,q).
/// This is the one integer table every scaling is a rational multiple of.
std::vector<std::int64_t> honold_weight_table(int q);

/// Homogeneous weight of a single residue under the given scaling. Integer
/// under the built-in scalings; exact rational under Custom.
Rat symbol_weight(int x, const WeightScaling& s);

/// Sum of per-symbol weights.
Rat vector_weight(const LogVector& v, const WeightScaling& s);

/// wt(u - v) componentwise mod q.
Rat distance(const LogVector& u, const LogVector& v, const WeightScaling& s);

/// Both sides of the trace identity d(L(v),L(w)) = n*phi(q) - T(<v,w>),
/// evaluated independently under the Honold scaling. Callers assert lhs == rhs.
struct TraceIdentity {
    std::int64_t lhs = 0;  // homogeneous distance, Honold scaling
    std::int64_t rhs = 0;  // n*phi(q) minus the trace of the Hermitian product
};
TraceIdentity lemma2_check(const LogVector& v, const LogVector& w);

}  // namespace bhc

#endif
