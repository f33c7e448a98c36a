// Copyright 2026 The fibcube Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end. Subcommands:
//
//   table   print p-nomial triangles, number sequences, weight distributions
//   poly    print a closed-form polynomial, optionally cross-checked against
//           the brute-force oracle
//   gf      expand a named generating function
//   census  dump induced cubes (or the graph itself) as JSON
//   verify  run a verification suite and emit a JSON report
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error. Stdout is
// byte-identical across identical invocations; timings go to stderr and only
// under --timing.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fibcube/fibcube.hpp"

namespace {

using namespace fibcube;

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

int default_max_dimension() {
    if (const char* env = std::getenv("FIBCUBE_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("FIBCUBE_MAX_N", "not an integer: " + std::string(env));
        }
    }
    return kDefaultMaxDimension;
}

// "a..b" (inclusive) or a single "a".
std::pair<int, int> parse_range(const std::string& text) {
    try {
        auto dots = text.find("..");
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        int lo = std::stoi(text.substr(0, dots));
        int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("empty range");
        return {lo, hi};
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected 'a' or 'a..b' with a <= b, got '" + text + "'");
    }
}

void print_values(const std::vector<Int>& values, bool csv) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) std::cout << (csv ? "," : " ");
        std::cout << values[i];
    }
    std::cout << '\n';
}

void write_json(const nlohmann::json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
        out << j.dump(2) << '\n';
    }
}

int run_table(const std::string& kind, int p, int rows, int n, bool csv) {
    if (kind == "pnomial") {
        PNomialTable table(p);
        for (int b = 0; b <= rows; ++b) print_values(table.row(b), csv);
        return kExitPass;
    }
    std::vector<Int> values;
    if (kind == "fib_p") {
        for (int i = 0; i <= n; ++i) values.push_back(fib_p(i, p));
    } else if (kind == "fib_pth_order") {
        for (int i = 0; i <= n; ++i) values.push_back(fib_pth_order(i, p));
    } else if (kind == "weights") {
        values = weight_poly(n, p).coefficients();
    } else {
        throw CLI::ValidationError("table", "unknown table '" + kind + "'");
    }
    print_values(values, csv);
    return kExitPass;
}

int run_poly(const std::string& which, int n, int p, std::string family, bool oracle,
             int max_dimension) {
    const bool maxcube = which == "maxcube";
    if (family.empty()) family = maxcube ? "p_cube" : "pth_order";
    if ((maxcube && family != "p_cube") || (!maxcube && family != "pth_order"))
        throw CLI::ValidationError("poly",
                                   "no closed form for '" + which + "' over family '" + family + "'");

    std::string rendered;
    if (which == "weight") rendered = weight_poly(n, p).str();
    else if (which == "cube") rendered = cube_poly(n, p).str();
    else if (which == "distance_cube") rendered = distance_cube_poly(n, p).str();
    else if (which == "maxcube") rendered = maximal_cube_poly(n, p).str();
    else throw CLI::ValidationError("poly", "unknown polynomial '" + which + "'");
    std::cout << rendered << '\n';

    if (!oracle) return kExitPass;
    FamilySpec spec = maxcube ? FamilySpec::p_cube(n, p) : FamilySpec::pth_order(n, p);
    Graph g = build(spec, max_dimension);
    std::string censused;
    if (which == "weight") {
        censused = IntPolynomial(weight_distribution(g)).str();
    } else if (which == "cube") {
        std::map<int, Int> census = cube_census(g);
        std::vector<Int> counts(census.empty() ? 0 : static_cast<std::size_t>(census.rbegin()->first) + 1);
        for (const auto& [k, c] : census) counts[static_cast<std::size_t>(k)] = c;
        censused = IntPolynomial(counts).str();
    } else if (which == "distance_cube") {
        BiPolynomial census;
        for (const auto& [kd, c] : distance_classified_counts(g))
            census.add_term(kd.first, kd.second, c);
        censused = census.str();
    } else {
        std::map<int, Int> census = maximal_cube_census(g);
        std::vector<Int> counts(census.empty() ? 0 : static_cast<std::size_t>(census.rbegin()->first) + 1);
        for (const auto& [k, c] : census) counts[static_cast<std::size_t>(k)] = c;
        censused = IntPolynomial(counts).str();
    }
    if (censused == rendered) {
        std::cout << "oracle: match\n";
        return kExitPass;
    }
    std::cout << "oracle: MISMATCH (" << censused << ")\n";
    return kExitMismatch;
}

int run_gf(const std::string& name, int p, int order, bool csv) {
    RationalGF gf;
    try {
        gf = catalog(name, p);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("gf", e.what());
    }
    std::vector<BiPolynomial> series = expand(gf, order);
    bool numeric = true;
    for (const BiPolynomial& c : series) numeric = numeric && c.is_constant();
    if (numeric) {
        std::vector<Int> values;
        for (const BiPolynomial& c : series) values.push_back(c.to_constant());
        print_values(values, true);
    } else {
        for (std::size_t i = 0; i < series.size(); ++i)
            std::cout << i << (csv ? "," : "; ") << series[i].str() << '\n';
    }
    return kExitPass;
}

int run_census(const std::string& family, int n, int p, bool maximal_only, bool graph_dump,
               const std::string& out_path, int max_dimension) {
    FamilySpec spec;
    spec.family = family_from_name(family);
    spec.n = n;
    spec.p = p;
    Graph g = build(spec, max_dimension);
    if (graph_dump) {
        write_json(graph_to_json(g), out_path);
        return kExitPass;
    }
    std::vector<InducedHypercube> cubes =
        maximal_only ? enumerate_maximal_cubes(g) : enumerate_induced_cubes(g);
    nlohmann::json j = spec_to_json(spec);
    j[maximal_only ? "maximal_cubes" : "cubes"] = cubes_to_json(cubes);
    write_json(j, out_path);
    return kExitPass;
}

int run_verify(const std::vector<std::string>& suites, const std::string& p_range,
               const std::string& n_range, const std::string& json_path, int max_dimension,
               int threads, bool record_all, bool timing) {
    VerifyOptions opt;
    std::tie(opt.p_lo, opt.p_hi) = parse_range(p_range);
    std::tie(opt.n_lo, opt.n_hi) = parse_range(n_range);
    opt.max_dimension = max_dimension;
    opt.threads = threads;
    opt.record_all = record_all;

    std::vector<std::string> expanded;
    for (const std::string& s : suites) {
        if (s == "all") {
            expanded.insert(expanded.end(), suite_names().begin(), suite_names().end());
        } else if (std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end()) {
            expanded.push_back(s);
        } else {
            throw CLI::ValidationError("verify", "unknown suite '" + s + "'");
        }
    }

    std::vector<CheckReport> reports;
    bool all_pass = true;
    for (const std::string& s : expanded) {
        CheckReport report = run_suite(s, opt);
        all_pass = all_pass && report.pass;
        if (timing) std::cerr << s << ": " << report.duration_ms << " ms\n";
        reports.push_back(std::move(report));
    }

    // File output keeps real durations; stdout zeroes them so identical
    // invocations stay byte-identical.
    if (!json_path.empty()) {
        nlohmann::json j = reports.size() == 1 ? nlohmann::json(reports.front())
                                               : nlohmann::json(reports);
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot open " + json_path + " for writing");
        out << j.dump(2) << '\n';
    }
    for (CheckReport& r : reports) r.duration_ms = 0;
    nlohmann::json j = reports.size() == 1 ? nlohmann::json(reports.front())
                                           : nlohmann::json(reports);
    std::cout << j.dump(2) << '\n';
    return all_pass ? kExitPass : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration and verification for generalized Fibonacci cubes"};
    app.require_subcommand(1);

    std::string table_kind, poly_which, gf_name, census_family = "pth_order";
    std::string poly_family, census_out, verify_p = "2..4", verify_n = "0..12", verify_json;
    std::vector<std::string> verify_suites;
    int p = 2, rows = 8, n = 8, gf_order = 16, threads = 0;
    int max_dimension = 0;
    bool csv = false, oracle = false, census_maximal = false, census_graph = false;
    bool record_all = false, timing = false;

    CLI::App* table = app.add_subcommand("table", "print a coefficient table or number sequence");
    table->add_option("kind", table_kind, "pnomial | fib_p | fib_pth_order | weights")->required();
    table->add_option("--p", p, "family parameter")->required();
    table->add_option("--rows", rows, "last triangle row (pnomial)");
    table->add_option("--n", n, "last index / string length");
    table->add_flag("--csv", csv, "comma-separated output");

    CLI::App* poly = app.add_subcommand("poly", "print a closed-form polynomial");
    poly->add_option("which", poly_which, "weight | cube | distance_cube | maxcube")->required();
    poly->add_option("--n", n, "dimension")->required();
    poly->add_option("--p", p, "family parameter")->required();
    poly->add_option("--family", poly_family, "pth_order | p_cube (defaults to the fitting one)");
    poly->add_flag("--oracle", oracle, "cross-check against the brute-force census");
    poly->add_option("--max-n", max_dimension, "dimension cap for --oracle builds");

    CLI::App* gf = app.add_subcommand("gf", "expand a named generating function");
    gf->add_option("name", gf_name, "one of: order_pth_order size_pth_order fib_p fib_pth_order weight cube distance_cube maxcube")
        ->required();
    gf->add_option("--p", p, "family parameter")->required();
    gf->add_option("-N,--order", gf_order, "expansion order (t^0 .. t^N)")->required();
    gf->add_flag("--csv", csv, "comma-separated rows for polynomial series");

    CLI::App* census = app.add_subcommand("census", "dump cubes or the graph as JSON");
    census->add_option("--family", census_family, "hypercube | pth_order | p_cube");
    census->add_option("--n", n, "dimension")->required();
    census->add_option("--p", p, "family parameter");
    census->add_flag("--maximal", census_maximal, "only maximal cubes");
    census->add_flag("--graph", census_graph, "dump vertices and edges instead of cubes");
    census->add_option("--out", census_out, "write to a file instead of stdout");
    census->add_option("--max-n", max_dimension, "dimension cap");

    CLI::App* verify = app.add_subcommand("verify", "run verification suites, emit a JSON report");
    verify->add_option("suite", verify_suites,
                       "weights | edges | cubes | distance-cubes | maxcubes | gf-consistency | bijections | all")
        ->required();
    verify->add_option("--p", verify_p, "p range, 'a' or 'a..b'");
    verify->add_option("--n", verify_n, "n range (gf-consistency: expansion order = upper end)");
    verify->add_option("--json", verify_json, "also write the report (with timings) to a file");
    verify->add_option("--max-n", max_dimension, "dimension cap for graph builds");
    verify->add_option("--threads", threads, "worker threads (0 = hardware)");
    verify->add_flag("--record-all", record_all, "record passing instances too");
    verify->add_flag("--timing", timing, "print per-suite durations to stderr");

    try {
        app.parse(argc, argv);
        if (max_dimension == 0) max_dimension = default_max_dimension();
        if (table->parsed()) return run_table(table_kind, p, rows, n, csv);
        if (poly->parsed()) return run_poly(poly_which, n, p, poly_family, oracle, max_dimension);
        if (gf->parsed()) return run_gf(gf_name, p, gf_order, csv);
        if (census->parsed())
            return run_census(census_family, n, p, census_maximal, census_graph, census_out,
                              max_dimension);
        if (verify->parsed())
            return run_verify(verify_suites, verify_p, verify_n, verify_json, max_dimension,
                              threads, record_all, timing);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
