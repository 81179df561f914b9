/*
   Copyright 2026 The realmoduli authors

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

#include "realmoduli/realmoduli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace realmoduli;

constexpr const char* kVersion = "1.0.0";

enum ExitCode { kOk = 0, kUsage = 1, kMismatch = 2, kResourceCap = 3 };

struct GlobalOpts {
    int pbound = 10;
    std::string pbound_source = "default";
    std::string format = "plain";
    int jobs = 1;
    long long max_ambient = 100000;
    std::string cache_dir;
};

json meta_json(const GlobalOpts& g) {
    return json{{"tool", "realmoduli"},
                {"version", kVersion},
                {"pbound", g.pbound},
                {"pbound_source", g.pbound_source},
                {"format", g.format}};
}

void emit_meta_comment(std::ostream& os, const GlobalOpts& g) {
    os << "# realmoduli " << kVersion << " pbound=" << g.pbound << " (" << g.pbound_source << ")\n";
}

/* JSON output is line-delimited: a metadata object first, then one object
   per record, so results can be streamed and grepped. */
template <class Record>
void emit_records(const GlobalOpts& g, const std::vector<Record>& recs) {
    if (g.format == "json") {
        std::cout << meta_json(g).dump() << "\n";
        for (const auto& r : recs) std::cout << json(r).dump() << "\n";
    } else if (g.format == "csv") {
        emit_meta_comment(std::cout, g);
        emit_csv(std::cout, recs);
    } else {
        emit_meta_comment(std::cout, g);
        emit_plain(std::cout, recs);
    }
}

Partition parse_class(const std::string& text, int n) {
    Partition p;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        int part = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad part '" + tok + "'");
        p.push_back(part);
    }
    std::sort(p.rbegin(), p.rend());
    if (p.empty() || p.back() < 1) throw std::invalid_argument("parts must be positive");
    if (partition_weight(p) != n)
        throw std::invalid_argument("class " + partition_str(p) + " is not a partition of " +
                                    std::to_string(n));
    return p;
}

std::vector<Partition> selected_classes(int n, bool all, const std::string& cls) {
    if (all == !cls.empty())
        throw std::invalid_argument("choose exactly one of --all and --cycle-type");
    if (all) return partitions_of(n);
    return {parse_class(cls, n)};
}

/* Run f(0..count-1) on up to `jobs` threads; results must be written into
   pre-sized slots so output order stays deterministic. */
template <class F>
void parallel_for(int jobs, int count, F&& f) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    int workers = std::min(jobs, count);
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (int i = next++; i < count; i = next++) f(i);
            } catch (...) {
                errors[static_cast<size_t>(w)] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

int run_char(const GlobalOpts& g, int n, bool all, const std::string& cls) {
    auto classes = selected_classes(n, all, cls);
    std::vector<CharRecord> recs(classes.size());
    parallel_for(g.jobs, static_cast<int>(classes.size()), [&](int i) {
        const Partition& lambda = classes[static_cast<size_t>(i)];
        GradedCharacter chi = graded_character(to_virtual(CycleType(lambda)));
        recs[static_cast<size_t>(i)] = CharRecord::from_character(n, lambda, chi);
    });
    emit_records(g, recs);
    return kOk;
}

int run_euler(const GlobalOpts& g, int n, bool all, const std::string& cls) {
    auto classes = selected_classes(n, all, cls);
    std::vector<EulerRecord> recs(classes.size());
    parallel_for(g.jobs, static_cast<int>(classes.size()), [&](int i) {
        const Partition& lambda = classes[static_cast<size_t>(i)];
        recs[static_cast<size_t>(i)] = EulerRecord{n, lambda, euler_character(lambda)};
    });
    emit_records(g, recs);
    return kOk;
}

int run_cycle_index(const GlobalOpts& g, const std::string& family) {
    SymFunc f = SymFunc::zero(g.pbound);
    if (family == "pointed")
        f = z_lambda_prime(g.pbound);
    else if (family == "extended")
        f = z_extended(g.pbound);
    else if (family == "chr")
        f = chr_index(g.pbound);
    else if (family == "complex")
        f = complex_index(g.pbound);
    else
        throw std::invalid_argument("unknown family '" + family +
                                    "' (expected pointed, extended, chr or complex)");
    CycleIndexRecord rec;
    rec.family = family;
    rec.pbound = g.pbound;
    for (const auto& [lambda, coeff] : f.terms())
        rec.entries.push_back(CycleIndexEntry{lambda, coeff.str()});
    if (g.format == "json") {
        std::cout << meta_json(g).dump() << "\n";
        std::cout << json(rec).dump() << "\n";
    } else if (g.format == "csv") {
        emit_meta_comment(std::cout, g);
        emit_csv(std::cout, rec);
    } else {
        emit_meta_comment(std::cout, g);
        emit_plain(std::cout, rec);
    }
    return kOk;
}

int run_verify(const GlobalOpts& g, int n, bool all, const std::string& cls) {
    auto classes = selected_classes(n, all || cls.empty(), cls);
    // Build the graded components once, sequentially, before fanning out.
    oracle::quotient_dims(oracle::AlgebraKind::Lambda, n);
    std::vector<VerifyRecord> recs(classes.size());
    parallel_for(g.jobs, static_cast<int>(classes.size()), [&](int i) {
        const Partition& lambda = classes[static_cast<size_t>(i)];
        GradedCharacter formula = graded_character(to_virtual(CycleType(lambda)));
        GradedCharacter oracle_chi =
            oracle::graded_trace(oracle::AlgebraKind::Lambda, n, class_representative(lambda));
        recs[static_cast<size_t>(i)] =
            VerifyRecord{n, lambda, formula.str(), oracle_chi.str(), formula == oracle_chi};
    });
    bool ok = true;
    for (const auto& r : recs) ok = ok && r.match;
    if (g.format == "json") {
        emit_records(g, recs);
        std::cout << json{{"all_match", ok}}.dump() << "\n";
    } else {
        emit_records(g, recs);
        std::cout << (ok ? "all classes match\n" : "MISMATCH DETECTED\n");
    }
    return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graded characters for symmetric group actions on the cohomology of real "
                 "genus-zero moduli spaces"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("REALMODULI_PBOUND")) {
        try {
            size_t used = 0;
            g.pbound = std::stoi(env, &used);
            if (used != std::string(env).size() || g.pbound < 0) throw std::invalid_argument(env);
            g.pbound_source = "env";
        } catch (const std::exception&) {
            std::cerr << "error: REALMODULI_PBOUND is not a nonnegative integer\n";
            return kUsage;
        }
    }
    app.add_option("--pbound", g.pbound, "truncation bound for cycle-index computations")
        ->check(CLI::Range(0, 100));
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->default_val("plain");
    app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1, 256));
    app.add_option("--max-ambient", g.max_ambient, "largest permitted ambient monomial basis");
    app.add_option("--cache-dir", g.cache_dir, "directory for cached elimination results");

    int n = 0;
    bool all = false;
    std::string cls;
    std::string family = "pointed";

    CLI::App* c_char = app.add_subcommand("char", "graded character of one or all classes");
    c_char->add_option("--n", n, "number of marked points")->required();
    c_char->add_flag("--all", all, "every conjugacy class");
    c_char->add_option("--cycle-type,--class", cls, "cycle type, e.g. 2,2,1");
    c_char->fallthrough();

    CLI::App* c_euler = app.add_subcommand("euler", "integer euler characteristic of fixed loci");
    c_euler->add_option("--n", n, "number of marked points")->required();
    c_euler->add_flag("--all", all, "every conjugacy class");
    c_euler->add_option("--cycle-type,--class", cls, "cycle type, e.g. 2,2,1");
    c_euler->fallthrough();

    CLI::App* c_index = app.add_subcommand("cycle-index", "equivariant cycle index series");
    c_index->add_option("--family", family, "pointed | extended | chr | complex");
    c_index->fallthrough();

    CLI::App* c_verify = app.add_subcommand("verify", "cross-check the closed formula against "
                                                      "the generators-and-relations computation");
    c_verify->add_option("--n", n, "number of marked points")->required();
    c_verify->add_flag("--all", all, "every conjugacy class (default)");
    c_verify->add_option("--cycle-type,--class", cls, "restrict to one cycle type");
    c_verify->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (app.count("--pbound") > 0) g.pbound_source = "flag";

    oracle::options().max_ambient = g.max_ambient;
    oracle::options().cache_dir = g.cache_dir;

    try {
        if (c_char->parsed()) return run_char(g, n, all, cls);
        if (c_euler->parsed()) return run_euler(g, n, all, cls);
        if (c_index->parsed()) return run_cycle_index(g, family);
        if (c_verify->parsed()) return run_verify(g, n, all, cls);
    } catch (const resource_cap_error& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return kResourceCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
