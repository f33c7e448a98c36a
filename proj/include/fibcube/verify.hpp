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

#pragma once

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "fibcube/cube_oracle.hpp"
#include "fibcube/formulas.hpp"
#include "fibcube/graphs.hpp"
#include "fibcube/series.hpp"

namespace fibcube {

/*
 * Verification sweeps: each suite replays one closed form against the
 * brute-force oracle over a parameter rectangle and reports mismatches.
 * Instances are independent, so a suite fans out over a worker pool and
 * merges results back in (n, p) order; reports are deterministic for a given
 * option set no matter the thread count.
 */

struct CheckInstance {
    std::string name;      // which equality was tested
    std::string instance;  // parameter point, e.g. "n=8,p=2"
    std::string expected;
    std::string actual;
    bool pass = false;

    friend bool operator==(const CheckInstance&, const CheckInstance&) = default;
};

struct CheckReport {
    std::string suite;
    std::map<std::string, std::string> params;
    std::vector<CheckInstance> checks;  // mismatches, plus passes when recording all
    bool pass = false;
    std::int64_t duration_ms = 0;

    friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

inline void to_json(nlohmann::json& j, const CheckInstance& c) {
    j = nlohmann::json{{"name", c.name},
                       {"instance", c.instance},
                       {"expected", c.expected},
                       {"actual", c.actual},
                       {"pass", c.pass}};
}

inline void from_json(const nlohmann::json& j, CheckInstance& c) {
    j.at("name").get_to(c.name);
    j.at("instance").get_to(c.instance);
    j.at("expected").get_to(c.expected);
    j.at("actual").get_to(c.actual);
    j.at("pass").get_to(c.pass);
}

inline void to_json(nlohmann::json& j, const CheckReport& r) {
    j = nlohmann::json{{"suite", r.suite},
                       {"params", r.params},
                       {"checks", r.checks},
                       {"pass", r.pass},
                       {"duration_ms", r.duration_ms}};
}

inline void from_json(const nlohmann::json& j, CheckReport& r) {
    j.at("suite").get_to(r.suite);
    j.at("params").get_to(r.params);
    j.at("checks").get_to(r.checks);
    j.at("pass").get_to(r.pass);
    j.at("duration_ms").get_to(r.duration_ms);
}

struct VerifyOptions {
    int p_lo = 2;
    int p_hi = 4;
    int n_lo = 0;
    int n_hi = 12;
    int max_dimension = kDefaultMaxDimension;
    int threads = 0;  // 0 picks the hardware count
    bool record_all = false;
};

namespace detail {

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    if (count == 0) return;
    unsigned workers = threads > 0 ? static_cast<unsigned>(threads)
                                   : std::max(1u, std::thread::hardware_concurrency());
    if (workers > count) workers = static_cast<unsigned>(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

struct Recorder {
    std::vector<CheckInstance>& out;
    bool record_all;

    void operator()(std::string name, std::string instance, std::string expected,
                    std::string actual) const {
        bool ok = expected == actual;
        if (!ok || record_all)
            out.push_back({std::move(name), std::move(instance), std::move(expected),
                           std::move(actual), ok});
    }
};

inline std::string point(int n, int p) {
    return "n=" + std::to_string(n) + ",p=" + std::to_string(p);
}

inline std::string int_list(const std::vector<Int>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ',';
        out << values[i];
    }
    return out.str();
}

// The (n, p) rectangle with the per-family floor on p applied.
inline std::vector<std::pair<int, int>> grid(const VerifyOptions& opt, int p_floor) {
    std::vector<std::pair<int, int>> points;
    for (int p = std::max(opt.p_lo, p_floor); p <= opt.p_hi; ++p)
        for (int n = std::max(opt.n_lo, 0); n <= opt.n_hi; ++n) points.emplace_back(n, p);
    return points;
}

template <typename CheckFn>
CheckReport sweep(std::string suite, const VerifyOptions& opt, int p_floor, CheckFn&& check) {
    auto start = std::chrono::steady_clock::now();
    CheckReport report;
    report.suite = std::move(suite);
    report.params = {{"p", std::to_string(opt.p_lo) + ".." + std::to_string(opt.p_hi)},
                     {"n", std::to_string(opt.n_lo) + ".." + std::to_string(opt.n_hi)},
                     {"max_n", std::to_string(opt.max_dimension)}};
    std::vector<std::pair<int, int>> points = grid(opt, p_floor);
    std::vector<std::vector<CheckInstance>> results(points.size());
    parallel_for(points.size(), opt.threads, [&](std::size_t i) {
        Recorder record{results[i], opt.record_all};
        check(points[i].first, points[i].second, record);
    });
    for (std::vector<CheckInstance>& r : results)
        report.checks.insert(report.checks.end(), std::make_move_iterator(r.begin()),
                             std::make_move_iterator(r.end()));
    report.pass = true;
    for (const CheckInstance& c : report.checks) report.pass = report.pass && c.pass;
    report.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    return report;
}

}  // namespace detail

// Weight distributions of the run-limited cubes against the p-nomial closed
// form, including the maximum-weight bound.
inline CheckReport verify_weights(const VerifyOptions& opt) {
    return detail::sweep("weights", opt, 2, [&](int n, int p, const detail::Recorder& record) {
        Graph g = build(FamilySpec::pth_order(n, p), opt.max_dimension);
        record("weight_distribution", detail::point(n, p), weight_poly(n, p).str(),
               IntPolynomial(weight_distribution(g)).str());
        int census_max = 0;
        for (const BitString& u : g.vertices()) census_max = std::max(census_max, u.weight());
        record("max_weight", detail::point(n, p), std::to_string(pth_order_max_weight(n, p)),
               std::to_string(census_max));
        record("order", detail::point(n, p), fib_pth_order(n + p, p).str(), order(g).str());
    });
}

// Edge counts of the run-limited cubes: graph count vs block recurrence vs
// generating function vs the k = 1 cube-count formula.
inline CheckReport verify_edges(const VerifyOptions& opt) {
    return detail::sweep("edges", opt, 2, [&](int n, int p, const detail::Recorder& record) {
        Graph g = build(FamilySpec::pth_order(n, p), opt.max_dimension);
        Int actual = size(g);
        record("edge_recurrence", detail::point(n, p), edge_count_by_recurrence(n, p).str(),
               actual.str());
        Int from_gf = expand_integer(catalog("size_pth_order", p), n).back();
        record("edge_gf", detail::point(n, p), from_gf.str(), actual.str());
        record("edge_cube_count", detail::point(n, p), cube_count(n, p, 1).str(), actual.str());
    });
}

// Full cube censuses against the cube polynomial.
inline CheckReport verify_cubes(const VerifyOptions& opt) {
    return detail::sweep("cubes", opt, 2, [&](int n, int p, const detail::Recorder& record) {
        Graph g = build(FamilySpec::pth_order(n, p), opt.max_dimension);
        std::map<int, Int> census = cube_census(g);
        int top = census.empty() ? 0 : census.rbegin()->first;
        std::vector<Int> counts(static_cast<std::size_t>(top) + 1);
        for (const auto& [k, c] : census) counts[static_cast<std::size_t>(k)] = c;
        record("cube_census", detail::point(n, p), cube_poly(n, p).str(),
               IntPolynomial(counts).str());
        for (const auto& [k, c] : census)
            record("cube_count_k" + std::to_string(k), detail::point(n, p),
                   cube_count(n, p, k).str(), c.str());
    });
}

// Distance-refined censuses against the bivariate polynomial and the
// coefficient formula.
inline CheckReport verify_distance_cubes(const VerifyOptions& opt) {
    return detail::sweep("distance-cubes", opt, 2, [&](int n, int p, const detail::Recorder& record) {
        Graph g = build(FamilySpec::pth_order(n, p), opt.max_dimension);
        BiPolynomial census;
        for (const auto& [kd, c] : distance_classified_counts(g))
            census.add_term(kd.first, kd.second, c);
        const BiPolynomial expected = distance_cube_poly(n, p);
        record("distance_cube_census", detail::point(n, p), expected.str(), census.str());
        bool coefficients_match = true;
        for (const auto& [key, c] : census.terms())
            if (cube_count_at_distance(n, p, key.first, key.second) != c) coefficients_match = false;
        for (const auto& [key, c] : expected.terms())
            if (census.coefficient(key.first, key.second) != c) coefficients_match = false;
        record("distance_cube_coefficients", detail::point(n, p), "match",
               coefficients_match ? "match" : "mismatch");
    });
}

// Maximal cubes of the distance-p cubes: census, bottoms, and top lists
// against the closed form.
inline CheckReport verify_maxcubes(const VerifyOptions& opt) {
    return detail::sweep("maxcubes", opt, 1, [&](int n, int p, const detail::Recorder& record) {
        Graph g = build(FamilySpec::p_cube(n, p), opt.max_dimension);
        std::vector<InducedHypercube> maximal = enumerate_maximal_cubes(g);
        bool bottoms_zero = true;
        for (const InducedHypercube& h : maximal)
            if (h.bottom.weight() != 0) bottoms_zero = false;
        record("maxcube_bottoms_zero", detail::point(n, p), "true", bottoms_zero ? "true" : "false");

        std::map<int, Int> census;
        for (const InducedHypercube& h : maximal) ++census[h.dimension];
        int top_k = census.empty() ? 0 : census.rbegin()->first;
        std::vector<Int> counts(static_cast<std::size_t>(top_k) + 1);
        for (const auto& [k, c] : census) counts[static_cast<std::size_t>(k)] = c;
        record("maxcube_census", detail::point(n, p), maximal_cube_poly(n, p).str(),
               IntPolynomial(counts).str());

        for (int k = 1; k <= top_k; ++k) {
            std::vector<std::string> expected;
            for (const BitString& t : maximal_top_vertices(n, p, k)) expected.push_back(t.str());
            std::vector<std::string> got;
            for (const InducedHypercube& h : maximal)
                if (h.dimension == k) got.push_back(h.top.str());
            std::sort(got.begin(), got.end());
            std::ostringstream e, a;
            for (const std::string& s : expected) e << s << ' ';
            for (const std::string& s : got) a << s << ' ';
            record("maxcube_tops_k" + std::to_string(k), detail::point(n, p), e.str(), a.str());
        }
    });
}

// Series expansions against the direct formulas, term by term, plus the
// cross-identities tying the maximal-cube series to its building blocks.
inline CheckReport verify_gf_consistency(const VerifyOptions& opt) {
    VerifyOptions shaped = opt;
    shaped.n_lo = shaped.n_hi;  // one instance per p; n_hi doubles as the expansion order
    return detail::sweep("gf-consistency", shaped, 1, [&](int N, int p, const detail::Recorder& record) {
        const std::string inst = "p=" + std::to_string(p) + ",N=" + std::to_string(N);
        // Distance-p side, valid for every p >= 1.
        {
            std::vector<Int> direct;
            for (int n = 0; n <= N; ++n) direct.push_back(fib_p(n, p));
            record("gf_fib_p", inst, detail::int_list(direct),
                   detail::int_list(expand_integer(catalog("fib_p", p), N)));
        }
        {
            std::vector<BiPolynomial> series = expand(catalog("maxcube", p), N);
            bool ok = true;
            std::string diff;
            for (int n = 0; n <= N && ok; ++n) {
                IntPolynomial direct = maximal_cube_poly(n, p);
                IntPolynomial from_series = series[static_cast<std::size_t>(n)].to_x();
                if (direct != from_series) {
                    ok = false;
                    diff = "n=" + std::to_string(n) + ": " + direct.str() + " vs " +
                           from_series.str();
                }
            }
            record("gf_maxcube", inst, "match", ok ? "match" : diff);

            // t^p H(x, t) + (1 + t + ... + t^(p-1)) = (1+...+t^p)/(1 - x t^(p+1)(1+...+t^p)),
            // compared coefficientwise to order N.
            RationalGF a_side;
            a_side.numerator = detail::geometric_block(p);
            a_side.denominator.assign(static_cast<std::size_t>(2 * p) + 2, BiPolynomial());
            a_side.denominator[0] = BiPolynomial(Int(1));
            for (int i = 0; i <= p; ++i) {
                BiPolynomial c = BiPolynomial::monomial(1, 0);
                c *= Int(-1);
                a_side.denominator[static_cast<std::size_t>(p + 1 + i)] = std::move(c);
            }
            std::vector<BiPolynomial> a = expand(a_side, N);
            bool identity = true;
            for (int m = 0; m <= N && identity; ++m) {
                BiPolynomial left = m >= p ? series[static_cast<std::size_t>(m - p)] : BiPolynomial();
                if (m < p) left += BiPolynomial(Int(1));  // the subtracted block, moved across
                identity = left == a[static_cast<std::size_t>(m)];
            }
            record("gf_maxcube_shift_identity", inst, "holds", identity ? "holds" : "fails");
        }
        if (p < 2) return;
        // Run-limited side.
        {
            std::vector<Int> direct;
            for (int n = 0; n <= N; ++n) direct.push_back(fib_pth_order(n + p, p));
            record("gf_order", inst, detail::int_list(direct),
                   detail::int_list(expand_integer(catalog("order_pth_order", p), N)));
        }
        {
            std::vector<Int> direct;
            for (int n = 0; n <= N; ++n) direct.push_back(fib_pth_order(n, p));
            record("gf_fib_pth_order", inst, detail::int_list(direct),
                   detail::int_list(expand_integer(catalog("fib_pth_order", p), N)));
        }
        {
            std::vector<Int> direct;
            for (int n = 0; n <= N; ++n) direct.push_back(edge_count_by_recurrence(n, p));
            record("gf_size", inst, detail::int_list(direct),
                   detail::int_list(expand_integer(catalog("size_pth_order", p), N)));
        }
        {
            std::vector<BiPolynomial> weight_series = expand(catalog("weight", p), N);
            std::vector<BiPolynomial> cube_series = expand(catalog("cube", p), N);
            std::vector<BiPolynomial> distance_series = expand(catalog("distance_cube", p), N);
            bool weights_ok = true, cubes_ok = true, distance_ok = true, subst_ok = true;
            for (int n = 0; n <= N; ++n) {
                IntPolynomial w = weight_series[static_cast<std::size_t>(n)].to_x();
                weights_ok = weights_ok && w == weight_poly(n, p);
                cubes_ok = cubes_ok &&
                           cube_series[static_cast<std::size_t>(n)].to_x() == cube_poly(n, p);
                distance_ok = distance_ok &&
                              distance_series[static_cast<std::size_t>(n)] == distance_cube_poly(n, p);
                // Substituting into the expanded weight coefficients must agree
                // with expanding the substituted series.
                subst_ok = subst_ok &&
                           substitute_shift(w, 1) == cube_series[static_cast<std::size_t>(n)].to_x() &&
                           substitute_xq(w) == distance_series[static_cast<std::size_t>(n)];
            }
            record("gf_weight", inst, "match", weights_ok ? "match" : "mismatch");
            record("gf_cube", inst, "match", cubes_ok ? "match" : "mismatch");
            record("gf_distance_cube", inst, "match", distance_ok ? "match" : "mismatch");
            record("gf_substitution", inst, "match", subst_ok ? "match" : "mismatch");
        }
        for (int k = 0; k <= 2; ++k) {
            std::vector<Int> direct;
            for (int n = 0; n <= N; ++n) direct.push_back(cube_count(n, p, k));
            record("gf_cube_count_derivative_k" + std::to_string(k), inst,
                   detail::int_list(direct), detail::int_list(cube_counts_by_derivative(p, k, N)));
        }
    });
}

// Round trips of the two structural bijections.
inline CheckReport verify_bijections(const VerifyOptions& opt) {
    return detail::sweep("bijections", opt, 1, [&](int n, int p, const detail::Recorder& record) {
        if (p >= 2) {
            bool ok = true;
            std::string diff;
            for (const BitString& u : enumerate_family(FamilySpec::pth_order(n, p))) {
                std::vector<int> parts = string_to_composition(u, p);
                int sum = 0;
                for (int a : parts) sum += a;
                if (sum != n + 1 ||
                    static_cast<int>(parts.size()) != n + 1 - u.weight() ||
                    composition_to_string(parts, p) != u) {
                    ok = false;
                    diff = "failed at " + u.str();
                    break;
                }
            }
            record("composition_round_trip", detail::point(n, p), "ok", ok ? "ok" : diff);
        }
        // Maximal-top gap bijection for the distance-p cube of the same n, p.
        bool ok = true;
        std::string diff;
        for (int k = 1; k <= (n + p) / (p + 1); ++k) {
            std::vector<BitString> tops = maximal_top_vertices(n, p, k);
            if (Int(tops.size()) != maximal_cube_count(n, p, k)) {
                ok = false;
                diff = "count mismatch at k=" + std::to_string(k);
                break;
            }
            for (const BitString& t : tops) {
                BitString s = maximal_top_to_run_string(t, p);
                if (s.length() != n - p * k + p || s.weight() != n - (p + 1) * k + p ||
                    !is_pth_order(s, p + 1) || run_string_to_maximal_top(s, p) != t) {
                    ok = false;
                    diff = "failed at top " + t.str();
                    break;
                }
            }
            if (!ok) break;
        }
        record("maximal_top_round_trip", detail::point(n, p), "ok", ok ? "ok" : diff);
    });
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "weights", "edges", "cubes", "distance-cubes", "maxcubes", "gf-consistency", "bijections"};
    return names;
}

inline CheckReport run_suite(std::string_view suite, const VerifyOptions& opt) {
    if (suite == "weights") return verify_weights(opt);
    if (suite == "edges") return verify_edges(opt);
    if (suite == "cubes") return verify_cubes(opt);
    if (suite == "distance-cubes") return verify_distance_cubes(opt);
    if (suite == "maxcubes") return verify_maxcubes(opt);
    if (suite == "gf-consistency") return verify_gf_consistency(opt);
    if (suite == "bijections") return verify_bijections(opt);
    throw std::invalid_argument("run_suite: unknown suite '" + std::string(suite) + "'");
}

}  // namespace fibcube
