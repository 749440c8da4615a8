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

#include "bhc/io.hpp"

#include <fstream>
#include <sstream>

namespace bhc {

namespace {

std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

int parse_int(const std::string& tok, const char* what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(std::string("bad ") + what + ": '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(std::string("bad ") + what + ": '" + tok + "'");
    return value;
}

struct Header {
    int q;
    int n;
    std::vector<int> symbols;  // everything after the header
};

Header parse_body(std::istream& in) {
    const auto tokens = tokenize(in);
    if (tokens.size() < 2) throw ParseError("missing 'q n' header");
    Header h{parse_int(tokens[0], "modulus"), parse_int(tokens[1], "length"), {}};
    if (h.q < 2) throw ParseError("modulus must be >= 2");
    if (h.n < 1) throw ParseError("length must be >= 1");
    h.symbols.reserve(tokens.size() - 2);
    for (std::size_t i = 2; i < tokens.size(); ++i) {
        const int v = parse_int(tokens[i], "symbol");
        if (v < 0 || v >= h.q)
            throw ParseError("symbol " + std::to_string(v) + " outside [0," +
                             std::to_string(h.q) + ")");
        h.symbols.push_back(v);
    }
    return h;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return in;
}

OrderedJson vector_to_json(const LogVector& v) {
    return OrderedJson(v.symbols);
}

OrderedJson radius_body(const RadiusReport& rep) {
    OrderedJson j;
    j["deep_hole"] = vector_to_json(rep.deep_hole);
    j["method"] = rep.method;
    j["radius"] = rational_to_json(rep.radius);
    j["samples"] = rep.samples;
    j["scaling"] = rep.scaling;
    return j;
}

std::string cell(const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : "-";
}

}  // namespace

LogMatrix read_matrix(std::istream& in) {
    const Header h = parse_body(in);
    if (static_cast<std::size_t>(h.n) * h.n != h.symbols.size())
        throw ParseError("matrix needs " + std::to_string(h.n) + "x" + std::to_string(h.n) +
                         " entries, found " + std::to_string(h.symbols.size()));
    return LogMatrix(h.q, h.n, h.symbols);
}

LogMatrix read_matrix_file(const std::string& path) {
    auto in = open_input(path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const LogMatrix& m) {
    out << m.q() << ' ' << m.n() << '\n';
    for (int i = 0; i < m.n(); ++i) {
        for (int j = 0; j < m.n(); ++j) out << (j ? " " : "") << m.at(i, j);
        out << '\n';
    }
}

void write_matrix_file(const std::string& path, const LogMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_matrix(out, m);
}

Code read_code(std::istream& in) {
    const Header h = parse_body(in);
    if (h.symbols.size() % static_cast<std::size_t>(h.n) != 0)
        throw ParseError("code body is not a whole number of length-" + std::to_string(h.n) +
                         " words");
    std::vector<std::vector<int>> words;
    words.reserve(h.symbols.size() / static_cast<std::size_t>(h.n));
    for (std::size_t at = 0; at < h.symbols.size(); at += static_cast<std::size_t>(h.n))
        words.emplace_back(h.symbols.begin() + static_cast<std::ptrdiff_t>(at),
                           h.symbols.begin() + static_cast<std::ptrdiff_t>(at + h.n));
    return Code(h.q, h.n, std::move(words));
}

Code read_code_file(const std::string& path) {
    auto in = open_input(path);
    return read_code(in);
}

void write_code(std::ostream& out, const Code& c) {
    out << c.q() << ' ' << c.n() << '\n';
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& w = c.word(i);
        for (int j = 0; j < c.n(); ++j) out << (j ? " " : "") << w[static_cast<std::size_t>(j)];
        out << '\n';
    }
}

void write_code_file(const std::string& path, const Code& c) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_code(out, c);
}

WeightScaling parse_scaling(const std::string& spec, int q) {
    if (spec == "honold") return WeightScaling::honold(q);
    if (spec == "standard") return WeightScaling::standard(q);
    if (spec.rfind("custom:", 0) == 0) {
        const std::string body = spec.substr(7);
        const auto slash = body.find('/');
        try {
            const std::int64_t num = std::stoll(body.substr(0, slash));
            const std::int64_t den =
                slash == std::string::npos ? 1 : std::stoll(body.substr(slash + 1));
            return WeightScaling::custom(q, Rat(num, den));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad custom scaling: " + spec);
        }
    }
    throw std::invalid_argument("unknown scaling: " + spec +
                                " (expected honold|standard|custom:NUM[/DEN])");
}

OrderedJson rational_to_json(const Rat& r) {
    if (r.den() == 1) return OrderedJson(r.num());
    return OrderedJson(r.to_string());
}

OrderedJson verify_to_json(const LogMatrix& m, const BhVerification& v, const RunEcho& run,
                           double elapsed_ms) {
    OrderedJson j;
    if (v.failing_pair)
        j["failing_pair"] = OrderedJson{v.failing_pair->first, v.failing_pair->second};
    else
        j["failing_pair"] = nullptr;
    j["is_butson"] = v.is_butson;
    j["n"] = m.n();
    j["q"] = m.q();
    j["seed"] = run.seed;
    j["workers"] = run.workers;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

OrderedJson radius_to_json(const RadiusReport& rep, const RunEcho& run, double elapsed_ms) {
    OrderedJson j = radius_body(rep);
    j["seed"] = run.seed;
    j["workers"] = run.workers;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

OrderedJson strength_to_json(const Code& c, int s, bool holds, const RunEcho& run,
                             double elapsed_ms) {
    OrderedJson j;
    j["code_size"] = c.size();
    j["holds"] = holds;
    j["n"] = c.n();
    j["q"] = c.q();
    j["s"] = s;
    j["seed"] = run.seed;
    j["workers"] = run.workers;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

OrderedJson bent_to_json(const BentReport& rep, BentMode mode, const RunEcho& run,
                         double elapsed_ms) {
    OrderedJson j;
    j["exhaustive"] = rep.exhaustive;
    OrderedJson found = OrderedJson::array();
    for (const auto& hit : rep.found) {
        OrderedJson h;
        h["class"] = bent_kind_name(hit.cls.kind);
        if (hit.cls.lambda_log)
            h["lambda_log"] = *hit.cls.lambda_log;
        else
            h["lambda_log"] = nullptr;
        h["vector"] = vector_to_json(hit.vector);
        found.push_back(std::move(h));
    }
    j["found"] = std::move(found);
    j["matrix"] = rep.matrix_id;
    j["mode"] = bent_mode_name(mode);
    j["searched"] = rep.searched;
    j["seed"] = run.seed;
    j["workers"] = run.workers;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

OrderedJson bounds_to_json(const BoundsReport& rep, const RunEcho& run, double elapsed_ms) {
    OrderedJson j;
    j["code_size"] = rep.code_size;
    if (rep.exact_radius) j["exact_radius"] = radius_body(*rep.exact_radius);
    j["flags"] = rep.flags;
    if (rep.lower_bent.is_rational())
        j["lower_bent"] = rational_to_json(rep.lower_bent.rational_value());
    else
        j["lower_bent"] = rep.lower_bent.to_string();
    j["lower_bent_ceil"] = rep.lower_bent_ceil;
    j["n"] = rep.n;
    j["q"] = rep.q;
    j["scaling"] = rep.scaling;
    j["self_complementary"] = rep.self_complementary;
    j["seed"] = run.seed;
    j["strengths"] = OrderedJson{{"s1", rep.strength1}, {"s2", rep.strength2}};
    if (rep.upper_norse) j["upper_norse"] = *rep.upper_norse;
    if (rep.upper_norse_paper_literal)
        j["upper_norse_paper_literal"] = *rep.upper_norse_paper_literal;
    j["upper_strength1"] = rational_to_json(rep.upper_strength1);
    j["workers"] = run.workers;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

OrderedJson table1_to_json(const std::vector<Table1Row>& rows, const RunEcho& run,
                           double elapsed_ms) {
    OrderedJson out;
    OrderedJson list = OrderedJson::array();
    for (const auto& row : rows) {
        OrderedJson r;
        r["code_size"] = row.code_size;
        r["flags"] = row.flags;
        r["matrix"] = row.matrix_id;
        r["n"] = row.n;
        r["p"] = row.p;
        r["paper_radius"] = row.paper_radius ? OrderedJson(*row.paper_radius) : OrderedJson();
        r["paper_upper"] = row.paper_upper;
        r["radius_honold"] = row.radius_honold ? OrderedJson(*row.radius_honold) : OrderedJson();
        r["radius_standard"] =
            row.radius_standard ? OrderedJson(*row.radius_standard) : OrderedJson();
        r["sampled_lower_honold"] =
            row.sampled_lower_honold ? OrderedJson(*row.sampled_lower_honold) : OrderedJson();
        r["sampled_lower_standard"] =
            row.sampled_lower_standard ? OrderedJson(*row.sampled_lower_standard) : OrderedJson();
        r["samples"] = row.samples;
        r["upper_agrees"] = row.upper_agrees;
        r["upper_norse"] = row.upper_norse;
        list.push_back(std::move(r));
    }
    out["rows"] = std::move(list);
    out["seed"] = run.seed;
    out["workers"] = run.workers;
    out["elapsed_ms"] = elapsed_ms;
    return out;
}

std::string table1_to_tsv(const std::vector<Table1Row>& rows) {
    std::ostringstream out;
    out << "p\tn\tmatrix\tcode_size\tradius_honold\tradius_standard\tsampled_lower_honold\t"
           "sampled_lower_standard\tpaper_radius\tupper_norse\tpaper_upper\tflags\n";
    for (const auto& row : rows) {
        out << row.p << '\t' << row.n << '\t' << row.matrix_id << '\t' << row.code_size << '\t'
            << cell(row.radius_honold) << '\t' << cell(row.radius_standard) << '\t'
            << cell(row.sampled_lower_honold) << '\t' << cell(row.sampled_lower_standard) << '\t';
        if (row.paper_radius)
            out << *row.paper_radius;
        else
            out << '-';
        out << '\t' << row.upper_norse << '\t' << row.paper_upper << '\t';
        if (row.flags.empty()) {
            out << '-';
        } else {
            for (std::size_t i = 0; i < row.flags.size(); ++i)
                out << (i ? "," : "") << row.flags[i];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace bhc
