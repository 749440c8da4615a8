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

#ifndef BHC_IO_HPP
#define BHC_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "bhc/bent.hpp"
#include "bhc/bounds.hpp"
#include "bhc/code.hpp"
#include "bhc/matrix.hpp"
#include "bhc/radius.hpp"
#include "bhc/table1.hpp"
#include "bhc/types.hpp"
#include "bhc/weight.hpp"

namespace bhc {

using OrderedJson = nlohmann::ordered_json;

// Text formats. Both start with a "q n" header line; '#' starts a comment,
// whitespace is free-form. A matrix file carries n rows of n symbols, a
// code file any number of length-n words, one per line by convention.
// Malformed input throws ParseError.

LogMatrix read_matrix(std::istream& in);
LogMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const LogMatrix& m);
void write_matrix_file(const std::string& path, const LogMatrix& m);

Code read_code(std::istream& in);
Code read_code_file(const std::string& path);
void write_code(std::ostream& out, const Code& c);
void write_code_file(const std::string& path, const Code& c);

/// Scaling flag syntax: honold | standard | custom:NUM | custom:NUM/DEN.
WeightScaling parse_scaling(const std::string& spec, int q);

/// Run parameters echoed into every JSON report for reproducibility.
struct RunEcho {
    std::uint64_t seed = 0;
    int workers = 1;
};

// JSON serializers. Keys are emitted in alphabetical order with elapsed_ms
// always last, so reports are stable golden-file material.

OrderedJson rational_to_json(const Rat& r);  // integer -> number, else "a/b"

OrderedJson verify_to_json(const LogMatrix& m, const BhVerification& v, const RunEcho& run,
                           double elapsed_ms);
OrderedJson radius_to_json(const RadiusReport& rep, const RunEcho& run, double elapsed_ms);
OrderedJson strength_to_json(const Code& c, int s, bool holds, const RunEcho& run,
                             double elapsed_ms);
OrderedJson bent_to_json(const BentReport& rep, BentMode mode, const RunEcho& run,
                         double elapsed_ms);
OrderedJson bounds_to_json(const BoundsReport& rep, const RunEcho& run, double elapsed_ms);
OrderedJson table1_to_json(const std::vector<Table1Row>& rows, const RunEcho& run,
                           double elapsed_ms);
std::string table1_to_tsv(const std::vector<Table1Row>& rows);

}  // namespace bhc

#endif
