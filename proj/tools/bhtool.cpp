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

// bhtool: construction, verification, search and reporting for Butson
// Hadamard matrices and their Z_q codes.
//
// Exit codes: 0 success / verdict pass, 1 verdict fail, 2 usage,
// 3 input parse error, 4 work budget exceeded.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bhc/bent.hpp"
#include "bhc/bounds.hpp"
#include "bhc/code.hpp"
#include "bhc/io.hpp"
#include "bhc/matrix.hpp"
#include "bhc/radius.hpp"
#include "bhc/table1.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

void emit_json(const bhc::OrderedJson& j, const std::string& out_path) {
    emit_text(j.dump(2) + "\n", out_path);
}

// Shared per-run knobs; every report echoes seed and workers.
struct Common {
    std::string scaling = "honold";
    std::string out_path;
    std::uint64_t seed = 0;
    int workers = 1;
    std::int64_t samples = 1000;
    std::int64_t budget = bhc::kDefaultBudget;
    std::string format = "json";

    bhc::RunEcho echo() const { return bhc::RunEcho{seed, workers}; }
};

// A file is read as a matrix (then expanded to its BH-code) or as a plain
// code. "auto" means: a square body parses as a matrix, otherwise a code.
bhc::Code load_code(const std::string& path, const std::string& as) {
    if (as == "code") return bhc::read_code_file(path);
    if (as == "matrix") return bhc::bh_code(bhc::read_matrix_file(path));
    try {
        return bhc::bh_code(bhc::read_matrix_file(path));
    } catch (const bhc::ParseError&) {
        return bhc::read_code_file(path);
    }
}

int run_gen(const std::string& kind, const std::vector<std::string>& params,
            const Common& common) {
    if (kind == "fourier") {
        if (params.size() != 1)
            throw std::invalid_argument("gen fourier takes exactly one order argument");
        int order = 0;
        try {
            order = std::stoi(params[0]);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad order: " + params[0]);
        }
        std::ostringstream body;
        bhc::write_matrix(body, bhc::fourier(order));
        emit_text(body.str(), common.out_path);
        return 0;
    }
    if (kind == "kron") {
        if (params.size() != 2)
            throw std::invalid_argument("gen kron takes exactly two matrix files");
        const bhc::LogMatrix a = bhc::read_matrix_file(params[0]);
        const bhc::LogMatrix b = bhc::read_matrix_file(params[1]);
        std::ostringstream body;
        bhc::write_matrix(body, bhc::kronecker(a, b));
        emit_text(body.str(), common.out_path);
        return 0;
    }
    throw std::invalid_argument("unknown generator: " + kind + " (expected fourier|kron)");
}

int run_verify(const std::string& path, const Common& common) {
    const auto start = Clock::now();
    const bhc::LogMatrix m = bhc::read_matrix_file(path);
    const bhc::BhVerification v = bhc::is_bh(m);
    emit_json(bhc::verify_to_json(m, v, common.echo(), ms_since(start)), common.out_path);
    return v.is_butson ? 0 : 1;
}

int run_radius(const std::string& path, const std::string& as, const std::string& method,
               const Common& common) {
    const auto start = Clock::now();
    const bhc::Code code = load_code(path, as);
    const bhc::WeightScaling s = bhc::parse_scaling(common.scaling, code.q());
    bhc::RadiusReport rep;
    if (method == "exact") {
        rep = bhc::covering_radius_exact(code, s, common.workers, common.budget);
    } else if (method == "sample") {
        rep = bhc::covering_radius_sampled(code, s, common.samples, common.seed, common.workers);
    } else {
        throw std::invalid_argument("unknown method: " + method + " (expected exact|sample)");
    }
    emit_json(bhc::radius_to_json(rep, common.echo(), ms_since(start)), common.out_path);
    return 0;
}

int run_bent(const std::string& path, const std::string& mode_name, std::int64_t limit,
             bool no_reduce, const Common& common) {
    const auto start = Clock::now();
    const bhc::LogMatrix m = bhc::read_matrix_file(path);
    const bhc::BentMode mode = bhc::parse_bent_mode(mode_name);
    const bhc::BentReport rep =
        bhc::find_bent(m, mode, limit, !no_reduce, common.workers, common.budget, path);
    emit_json(bhc::bent_to_json(rep, mode, common.echo(), ms_since(start)), common.out_path);
    return 0;
}

int run_strength(const std::string& path, const std::string& as, int s, const Common& common) {
    const auto start = Clock::now();
    const bhc::Code code = load_code(path, as);
    if (s < 1 || s > code.n())
        throw std::invalid_argument("strength s must be in [1, n]");
    const bool holds = bhc::strength(code, s);
    emit_json(bhc::strength_to_json(code, s, holds, common.echo(), ms_since(start)),
              common.out_path);
    return holds ? 0 : 1;
}

int run_bounds(const std::string& path, bool with_exact, const Common& common) {
    const auto start = Clock::now();
    const bhc::LogMatrix m = bhc::read_matrix_file(path);
    const bhc::WeightScaling s = bhc::parse_scaling(common.scaling, m.q());
    const bhc::BoundsReport rep =
        bhc::bounds_report(m, s, with_exact, common.workers, common.budget);
    emit_json(bhc::bounds_to_json(rep, common.echo(), ms_since(start)), common.out_path);
    return 0;
}

int run_table1(const Common& common) {
    const auto start = Clock::now();
    const auto rows =
        bhc::table1_rows(common.samples, common.seed, common.workers, common.budget);
    if (common.format == "tsv") {
        emit_text(bhc::table1_to_tsv(rows), common.out_path);
    } else if (common.format == "json") {
        emit_json(bhc::table1_to_json(rows, common.echo(), ms_since(start)), common.out_path);
    } else {
        throw std::invalid_argument("unknown format: " + common.format + " (expected json|tsv)");
    }
    return 0;
}

void add_common(CLI::App* cmd, Common& common, bool with_scaling = false,
                bool with_format = false) {
    cmd->add_option("--out", common.out_path, "Write output here instead of stdout");
    cmd->add_option("--seed", common.seed, "RNG seed for sampled searches");
    cmd->add_option("--workers", common.workers, "Worker threads (default 1)");
    cmd->add_option("--samples", common.samples, "Sample count for --method sample");
    cmd->add_option("--budget", common.budget, "Work budget for exhaustive searches");
    if (with_scaling)
        cmd->add_option("--scaling", common.scaling,
                        "Weight scaling: honold|standard|custom:NUM[/DEN]");
    if (with_format) cmd->add_option("--format", common.format, "Output format: json|tsv");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Butson Hadamard matrices and their Z_q codes: exact constructions, "
                 "searches and bounds"};
    app.set_version_flag("--version", "bhtool 0.1.0");
    app.require_subcommand(1);

    Common common;

    auto* gen = app.add_subcommand("gen", "Generate a matrix file (fourier N | kron A B)");
    std::string gen_kind;
    std::vector<std::string> gen_params;
    gen->add_option("kind", gen_kind, "fourier|kron")->required();
    gen->add_option("params", gen_params, "order, or two matrix files");
    add_common(gen, common);

    auto* verify = app.add_subcommand("verify", "Check the Butson condition HH* = nI");
    std::string verify_file;
    verify->add_option("file", verify_file, "matrix file")->required();
    add_common(verify, common);

    auto* radius = app.add_subcommand("radius", "Covering radius of a BH-code");
    std::string radius_file, radius_as = "auto", radius_method = "exact";
    radius->add_option("file", radius_file, "matrix or code file")->required();
    radius->add_option("--as", radius_as, "Input kind: auto|matrix|code");
    radius->add_option("--method", radius_method, "exact|sample");
    add_common(radius, common, /*with_scaling=*/true);

    auto* bent = app.add_subcommand("bent", "Search for bent vectors of a matrix");
    std::string bent_file, bent_mode = "any";
    std::int64_t bent_limit = 0;
    bool bent_no_reduce = false;
    bent->add_option("file", bent_file, "matrix file")->required();
    bent->add_option("--mode", bent_mode, "any|self_dual|conj_self_dual");
    bent->add_option("--limit", bent_limit, "Stop after this many hits (0 = all)");
    bent->add_flag("--no-reduce", bent_no_reduce, "Scan all q^n candidates, no orbit reduction");
    add_common(bent, common);

    auto* strength = app.add_subcommand("strength", "Orthogonal-array strength check");
    std::string strength_file, strength_as = "code";
    int strength_s = 1;
    strength->add_option("file", strength_file, "code (or matrix) file")->required();
    strength->add_option("-s,--strength", strength_s, "Strength to check")->required();
    strength->add_option("--as", strength_as, "Input kind: code|matrix|auto");
    add_common(strength, common);

    auto* bounds = app.add_subcommand("bounds", "Covering-radius bounds report");
    std::string bounds_file;
    bool bounds_with_exact = false;
    bounds->add_option("file", bounds_file, "matrix file")->required();
    bounds->add_flag("--with-exact", bounds_with_exact, "Also run the exact radius search");
    add_common(bounds, common, /*with_scaling=*/true);

    auto* table1 = app.add_subcommand("table1", "Radii and bounds for the Z_p Fourier family");
    add_common(table1, common, /*with_scaling=*/false, /*with_format=*/true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return run_gen(gen_kind, gen_params, common);
        if (verify->parsed()) return run_verify(verify_file, common);
        if (radius->parsed()) return run_radius(radius_file, radius_as, radius_method, common);
        if (bent->parsed()) return run_bent(bent_file, bent_mode, bent_limit, bent_no_reduce, common);
        if (strength->parsed()) return run_strength(strength_file, strength_as, strength_s, common);
        if (bounds->parsed()) return run_bounds(bounds_file, bounds_with_exact, common);
        if (table1->parsed()) return run_table1(common);
    } catch (const bhc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const bhc::BudgetError& e) {
        bhc::OrderedJson err;
        err["error"] = "budget-exceeded";
        err["message"] = e.what();
        std::cout << err.dump(2) << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
