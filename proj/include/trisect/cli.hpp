/*
   Copyright 2026 The trisect authors

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

#ifndef TRISECT_CLI_HPP
#define TRISECT_CLI_HPP

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "trisect/io.hpp"
#include "trisect/render.hpp"

namespace trisect::cli {

inline int default_jobs() {
    if (const char* env = std::getenv("TRISECT_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

struct SolveArgs {
    std::string file;
    std::string mode = "lazard";
    bool squarefree = false;
    std::int64_t char_override = -1;  // -1: take it from the file
    std::vector<std::uint64_t> verify_primes;
    std::string format = "text";
    bool stats = false;
    int jobs = 0;  // 0: default_jobs()
};

struct BenchArgs {
    std::string directory;
    std::string mode = "lazard";  // lazard | kalkbrener | both
    double timeout_s = -1.0;      // negative: none
    int jobs = 0;
};

namespace detail {

template <class F>
int system_total_degree(const std::vector<Polynomial<F>>& polys) {
    int deg = 0;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms()) {
            int t = 0;
            for (auto e : m) t += static_cast<int>(e);
            deg = std::max(deg, t);
        }
    return deg;
}

struct SolveOutcome {
    int exit_code = 0;
};

template <class F>
SolveOutcome solve_with(const ContextPtr<F>& ctx, const SystemAst& ast, const SolveArgs& args,
                        std::ostream& out, std::ostream& err) {
    std::vector<Polynomial<F>> polys = build_system(ast, ctx);

    SolveOptions opts;
    opts.mode = args.mode == "kalkbrener" ? Mode::kalkbrener : Mode::lazard_wu;
    opts.squarefree = args.squarefree;
    opts.jobs = args.jobs > 0 ? args.jobs : default_jobs();
    Engine<F> eng(ctx, opts);

    auto t0 = std::chrono::steady_clock::now();
    Split<F> split;
    try {
        split = eng.triangularize(polys);
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return {2};
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                  .count();

    bool verify_fail = false;
    std::vector<CheckReport> reports;
    for (std::uint64_t p : args.verify_primes) {
        CheckReport rep;
        try {
            rep = check_triangularize(polys, split, p, opts.mode, ctx);
        } catch (const std::invalid_argument& e) {
            rep.prime = p;
            rep.applicable = false;
            rep.skip_reason = e.what();
        }
        if (rep.applicable && !rep.pass) verify_fail = true;
        reports.push_back(std::move(rep));
    }
    bool radical_checked = false, radical_ok = true;
    if (!args.verify_primes.empty() && opts.mode == Mode::kalkbrener) {
        radical_checked = true;
        for (const auto& c : split)
            for (const auto& f : polys)
                if (!radical_membership(eng, f, c)) radical_ok = false;
        if (!radical_ok) verify_fail = true;
    }

    std::string name = std::filesystem::path(args.file).filename().string();
    if (args.format == "json") {
        nlohmann::json j;
        j["vars"] = ast.vars;
        j["characteristic"] = ctx->field.characteristic();
        j["mode"] = args.mode == "kalkbrener" ? "kalkbrener" : "lazard";
        j["squarefree"] = args.squarefree;
        j["chain_count"] = split.size();
        j["chains"] = split_json(split);
        if (args.stats) {
            j["stats"] = nlohmann::json{{"name", name},
                                        {"vars", ast.vars.size()},
                                        {"eqs", polys.size()},
                                        {"deg", system_total_degree(polys)},
                                        {"mode", j["mode"]},
                                        {"time_ms", ms},
                                        {"chains", split.size()},
                                        {"size", output_size(split)}};
        }
        if (!reports.empty() || radical_checked) {
            nlohmann::json v = nlohmann::json::array();
            for (const auto& r : reports) v.push_back(report_json(r));
            j["verify"] = v;
            if (radical_checked) j["radical_membership"] = radical_ok;
        }
        out << j.dump(2) << "\n";
    } else {
        if (split.empty())
            out << "empty variety\n";
        else
            out << render_split_text(split);
        for (const auto& r : reports) out << "verify " << r.summary() << "\n";
        if (radical_checked)
            out << "verify radical-membership: " << (radical_ok ? "pass" : "FAIL") << "\n";
        if (args.stats)
            out << "# name=" << name << " vars=" << ast.vars.size() << " eqs=" << polys.size()
                << " deg=" << system_total_degree(polys) << " mode=" << args.mode
                << " time_ms=" << ms << " chains=" << split.size() << " size=" << output_size(split)
                << "\n";
    }
    return {verify_fail ? 1 : 0};
}

struct BenchRow {
    bool finished = false;
    int deg = 0;
    long time_ms = 0;
    std::size_t chains = 0;
    std::size_t size = 0;
};

template <class F>
BenchRow bench_one(const ContextPtr<F>& ctx, const SystemAst& ast, const std::string& mode,
                   const BenchArgs& args) {
    BenchRow row;
    auto polys = build_system(ast, ctx);
    row.deg = system_total_degree(polys);
    SolveOptions opts;
    opts.mode = mode == "kalkbrener" ? Mode::kalkbrener : Mode::lazard_wu;
    opts.jobs = args.jobs > 0 ? args.jobs : default_jobs();
    if (args.timeout_s >= 0)
        opts.deadline = std::chrono::steady_clock::now() +
                        std::chrono::microseconds(static_cast<long>(args.timeout_s * 1e6));
    Engine<F> eng(ctx, opts);
    auto t0 = std::chrono::steady_clock::now();
    try {
        auto split = eng.triangularize(polys);
        row.time_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                .count();
        row.chains = split.size();
        row.size = output_size(split);
        row.finished = true;
    } catch (const SolveTimeout&) {
        row.finished = false;
    }
    return row;
}

}  // namespace detail

inline int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    std::ifstream in(args.file);
    if (!in) {
        err << "error: cannot read '" << args.file << "'\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    SystemAst ast;
    try {
        ast = parse_system(buf.str());
    } catch (const ParseError& e) {
        err << "error: " << args.file << ": " << e.what() << "\n";
        return 2;
    }
    std::uint64_t characteristic = ast.characteristic;
    if (args.char_override >= 0) characteristic = static_cast<std::uint64_t>(args.char_override);
    if (args.mode != "lazard" && args.mode != "kalkbrener") {
        err << "error: --mode must be lazard or kalkbrener\n";
        return 2;
    }
    if (args.format != "text" && args.format != "json") {
        err << "error: --format must be text or json\n";
        return 2;
    }

    try {
        if (characteristic == 0) {
            auto ctx = make_context(RationalField{}, ast.vars);
            return detail::solve_with(ctx, ast, args, out, err).exit_code;
        }
        auto ctx = make_context(PrimeField(characteristic), ast.vars);
        return detail::solve_with(ctx, ast, args, out, err).exit_code;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

inline int run_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    try {
        for (const auto& entry : fs::directory_iterator(args.directory))
            if (entry.is_regular_file() && entry.path().extension() == ".sys")
                files.push_back(entry.path());
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    std::sort(files.begin(), files.end());

    std::vector<std::string> modes;
    if (args.mode == "both") {
        modes = {"lazard", "kalkbrener"};
    } else if (args.mode == "lazard" || args.mode == "kalkbrener") {
        modes = {args.mode};
    } else {
        err << "error: --mode must be lazard, kalkbrener or both\n";
        return 2;
    }

    out << std::left << std::setw(24) << "name" << std::right << std::setw(6) << "vars"
        << std::setw(6) << "eqs" << std::setw(6) << "deg" << "  " << std::left << std::setw(11)
        << "mode" << std::right << std::setw(10) << "time_ms" << std::setw(8) << "chains"
        << std::setw(8) << "size" << "\n";

    for (const auto& path : files) {
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        SystemAst ast;
        bool parse_ok = true;
        try {
            ast = parse_system(buf.str());
        } catch (const ParseError&) {
            parse_ok = false;
        }
        for (const auto& mode : modes) {
            std::string name = path.filename().string();
            out << std::left << std::setw(24) << name;
            if (!parse_ok) {
                out << std::right << std::setw(6) << "-" << std::setw(6) << "-" << std::setw(6)
                    << "-" << "  " << std::left << std::setw(11) << mode << std::right
                    << std::setw(10) << "parse-err" << std::setw(8) << "-" << std::setw(8) << "-"
                    << "\n";
                continue;
            }
            detail::BenchRow row;
            if (ast.characteristic == 0)
                row = detail::bench_one(make_context(RationalField{}, ast.vars), ast, mode, args);
            else
                row = detail::bench_one(make_context(PrimeField(ast.characteristic), ast.vars), ast,
                                        mode, args);
            out << std::right << std::setw(6) << ast.vars.size() << std::setw(6)
                << ast.polys.size() << std::setw(6) << row.deg << "  " << std::left << std::setw(11)
                << mode << std::right;
            if (row.finished) {
                out << std::setw(10) << row.time_ms << std::setw(8) << row.chains << std::setw(8)
                    << row.size << "\n";
            } else {
                out << std::setw(10) << "-" << std::setw(8) << "-" << std::setw(8) << "-" << "\n";
            }
        }
    }
    return 0;
}

inline int run(std::vector<std::string> argv_vec, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lazard-Wu and Kalkbrener triangular decompositions via regular chains"};
    app.require_subcommand(1);

    SolveArgs sargs;
    auto* solve = app.add_subcommand("solve", "decompose a polynomial system");
    solve->add_option("file", sargs.file, "system file")->required();
    solve->add_option("--mode", sargs.mode, "lazard | kalkbrener (default lazard)");
    solve->add_flag("--squarefree", sargs.squarefree, "produce squarefree regular chains");
    solve->add_option("--char", sargs.char_override, "override the coefficient characteristic");
    solve->add_option("--verify", sargs.verify_primes, "verification primes")->delimiter(',');
    solve->add_option("--format", sargs.format, "text | json (default text)");
    solve->add_flag("--stats", sargs.stats, "emit a benchmark row for this solve");
    solve->add_option("--jobs", sargs.jobs, "worker count (default $TRISECT_JOBS or 1)");

    BenchArgs bargs;
    auto* bench = app.add_subcommand("bench", "run the solver over a directory of systems");
    bench->add_option("directory", bargs.directory, "directory of .sys files")->required();
    bench->add_option("--mode", bargs.mode, "lazard | kalkbrener | both (default lazard)");
    bench->add_option("--timeout", bargs.timeout_s, "per-system timeout in seconds");
    bench->add_option("--jobs", bargs.jobs, "worker count");

    std::vector<const char*> argv;
    argv.push_back("trisect");
    for (const auto& a : argv_vec) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (*solve) return run_solve(sargs, out, err);
    if (*bench) return run_bench(bargs, out, err);
    return 2;
}

inline int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(std::move(args), std::cout, std::cerr);
}

}  // namespace trisect::cli

#endif
