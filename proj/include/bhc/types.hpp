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

#ifndef BHC_TYPES_HPP
#define BHC_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bhc {

/// Thrown when an input file does not conform to the matrix/code text format.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a search would exceed the configured work budget. Never
/// downgraded to sampling silently; the caller decides what to do.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// A length-n word over Z_q. Doubles as a codeword and as the logarithmic
/// form of a polyphase vector (symbol s stands for zeta_q^s).
struct LogVector {
    int q = 0;
    std::vector<int> symbols;

    LogVector() = default;
    LogVector(int q_, std::vector<int> symbols_) : q(q_), symbols(std::move(symbols_)) {
        if (q < 1) throw std::invalid_argument("LogVector: q must be >= 1");
        for (int s : symbols) {
            if (s < 0 || s >= q) throw std::invalid_argument("LogVector: symbol out of [0,q)");
        }
    }

    std::size_t size() const { return symbols.size(); }
    int operator[](std::size_t i) const { return symbols[i]; }

    friend bool operator==(const LogVector& a, const LogVector& b) {
        return a.q == b.q && a.symbols == b.symbols;
    }
    friend bool operator<(const LogVector& a, const LogVector& b) {
        if (a.q != b.q) return a.q < b.q;
        return a.symbols < b.symbols;
    }
};

}  // namespace bhc

#endif
