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

#ifndef BHC_BENT_HPP
#define BHC_BENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bhc/matrix.hpp"
#include "bhc/radius.hpp"
#include "bhc/types.hpp"

namespace bhc {

enum class BentKind { NotBent, Bent, SelfDual, ConjugateSelfDual };

/// Classification of a candidate x with entries in the q-th roots: x is bent
/// for H when every entry of Hx has squared modulus n. On top of that,
/// self-dual means Hx is a modulus-1 multiple of x, conjugate self-dual a
/// modulus-1 multiple of conj(x). Both dualities can hold at once (for
/// instance over q = 2, where conjugation is trivial); `kind` then reports
/// SelfDual and the flags keep the full picture.
struct BentClass {
    BentKind kind = BentKind::NotBent;
    bool self_dual = false;
    bool conj_self_dual = false;
    /// Present when the duality constant is itself a q-th root: Hx equals
    /// sqrt(n) * zeta^lambda_log * x (or conj(x)). Only detectable exactly
    /// when n is a perfect square.
    std::optional<int> lambda_log;
};

std::string bent_kind_name(BentKind kind);

/// Exact classification of one candidate. The entries of y = Hx / sqrt(n)
/// are generally outside Z[zeta_q], so bentness is decided through squared
/// moduli and the dualities through constancy of z_i * zeta^{-x_i} and
/// z_i * zeta^{+x_i}, where z_i is the i-th entry of Hx.
BentClass is_bent(const LogMatrix& m, const LogVector& x);

enum class BentMode { Any, SelfDual, ConjSelfDual };
BentMode parse_bent_mode(const std::string& name);  // any|self_dual|conj_self_dual
std::string bent_mode_name(BentMode mode);

struct BentHit {
    LogVector vector;
    BentClass cls;
};

struct BentReport {
    std::string matrix_id;
    std::vector<BentHit> found;  // lexicographic order
    std::int64_t searched = 0;
    bool exhaustive = false;
};

/// Exhaustive search over candidates with the first symbol pinned to 0
/// (bentness and both dualities survive the global scaling x -> zeta^t x,
/// so every orbit has such a representative). `reduce = false` scans the
/// full q^n space instead.
///
/// `limit` > 0 stops after that many hits; the hits are then the first
/// `limit` in lexicographic order and `searched` counts candidates up to
/// and including the last hit, so the report does not depend on the worker
/// count. `limit` = 0 scans everything.
///
/// Throws BudgetError when candidates * n * n exceeds `budget`.
BentReport find_bent(const LogMatrix& m, BentMode mode, std::int64_t limit = 0,
                     bool reduce = true, int workers = 1,
                     std::int64_t budget = kDefaultBudget,
                     const std::string& matrix_id = "");

}  // namespace bhc

#endif
