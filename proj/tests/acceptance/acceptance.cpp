// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kst/constructions.hpp"
#include "kst/error.hpp"
#include "kst/graph6.hpp"
#include "kst/majorization.hpp"
#include "kst/minor.hpp"
#include "kst/search.hpp"
#include "kst/spectral.hpp"
#include "kst/spectral_bounds.hpp"
#include "support/oracles.hpp"

using namespace kst;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

// Collects failures; keeps the first few messages.
class Tally {
public:
    void check(bool ok, const std::string& what)
    {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
    }
    long checks() const { return checks_; }
    Outcome outcome(const std::string& extra = {}) const
    {
        std::ostringstream os;
        os << checks_ << " checks, " << failures_ << " failures";
        if (!extra.empty()) os << ", " << extra;
        if (!first_.empty()) os << " [" << first_ << "]";
        return {failures_ == 0, os.str()};
    }

private:
    long checks_ = 0, failures_ = 0;
    std::string first_;
};

std::string fmt(const char* f, auto... args)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

const std::vector<double> kAlphaGrid{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

Outcome regular_identity()
{
    Tally t;
    std::vector<std::pair<Graph, int>> regular{{petersen_complement(), 6}};
    for (int n = 1; n <= 64; ++n) regular.emplace_back(complete(n), n - 1);
    for (int n = 3; n <= 64; ++n) regular.emplace_back(cycle(n), 2);
    for (const auto& [g, d] : regular)
        for (double a : kAlphaGrid) {
            const double rho = rho_alpha(g, a);
            t.check(std::abs(rho - d) < 1e-10, fmt("n=%d a=%.1f rho=%.12g d=%d", g.order(), a, rho, d));
        }
    return t.outcome();
}

Outcome specializations()
{
    Tally t;
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> order(1, 12);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int i = 0; i < 200; ++i) {
        const Graph g = oracle::random_graph(order(rng), density(rng), rng);
        const double adj = oracle::dense_power_rho(g, 0.0);
        Eigen::MatrixXd q = 2.0 * oracle::a_alpha_matrix(g, 0.5);  // D + A
        const double qi = oracle::dense_power_rho(q);
        const double rho0 = rho_alpha(g, 0.0), rho_half = rho_alpha(g, 0.5), qlib = q_index(g);
        t.check(std::abs(rho0 - adj) < 1e-9, fmt("graph %d: rho_0 %.12g vs %.12g", i, rho0, adj));
        t.check(std::abs(2 * rho_half - qi) < 1e-9, fmt("graph %d: 2rho_1/2 %.12g vs %.12g", i, 2 * rho_half, qi));
        t.check(std::abs(qlib - qi) < 1e-9, fmt("graph %d: q_index %.12g vs %.12g", i, qlib, qi));
    }
    return t.outcome();
}

Outcome fst_sandwich()
{
    Tally t;
    long equality = 0;
    for (auto [s, tt] : {std::pair{2, 2}, {2, 3}, {3, 3}, {2, 5}, {3, 7}})
        for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            const long n0 = fst_sandwich_threshold(s, tt, a);
            for (long n = n0; n < n0 + 20; ++n) {
                const FstSandwichReport r = verify_fst_root_sandwich(n, s, tt, a);
                if (r.equality_case) ++equality;
                t.check(r.hypothesis_met && r.ok,
                        fmt("(%d,%d) a=%.1f n=%ld: h=%.12g rho=%.12g g=%.12g", s, tt, a, n, r.root_h, r.rho, r.root_g));
            }
        }
    return t.outcome(fmt("%ld equality cases", equality));
}

Outcome near_clique_cubic()
{
    Tally t;
    long direct = 0;
    for (int s = 4; s <= 6; ++s)
        for (long n = s; n <= 30; ++n)
            for (double a : kAlphaGrid) {
                const NearCliqueCubicReport r = verify_near_clique_join_cubic(n, s, a);
                if (r.rho_direct) ++direct;
                t.check(r.ok, fmt("s=%d n=%ld a=%.1f cubic=%.12g quotient=%.12g", s, n, a, r.rho_cubic, r.rho_quotient));
            }
    return t.outcome(fmt("%ld direct eigensolves", direct));
}

Outcome regular_join()
{
    Tally t;
    long runs = 0;
    for (auto [s, tt] : {std::pair{3, 3}, {4, 5}})
        for (double a : {0.3, 0.5, 0.7, 0.9}) {
            const long n0 = regular_join_threshold(s, tt, a, default_threshold_constant(a));
            // H = copies of K_t, the smallest such order at or above the threshold and one more copy.
            long copies = std::max<long>(1, (n0 - (s - 1) + tt - 1) / tt);
            for (int extra = 0; extra < 2; ++extra, ++copies) {
                if (s - 1 + copies * tt > 64) break;
                const Graph h = k_copies(complete(tt), static_cast<int>(copies));
                const RegularJoinReport r = verify_regular_join_bound(s, tt, a, h, 16, 7);
                ++runs;
                t.check(r.hypothesis_met && r.ok,
                        fmt("(%d,%d) a=%.1f n=%ld rho=%.12g root_h=%.12g sample_max=%.12g", s, tt, a, r.n, r.rho_regular,
                            r.root_h, r.max_sample_rho));
            }
        }
    return t.outcome(fmt("%ld joins", runs));
}

Outcome star_minor_edges()
{
    Tally t;
    for (auto [tt, n] : {std::pair{3, 6}, {3, 7}, {4, 7}}) {
        const StarMinorEdgeReport r = verify_star_minor_edge_bound(tt, n);
        t.check(r.ok && r.violations == 0 && r.equality_attained,
                fmt("t=%d n=%d max=%d bound=%d", tt, n, r.max_edges, r.bound));
    }
    return t.outcome();
}

Outcome complement_criterion()
{
    Tally t;
    long graphs = 0;
    for (auto [s, tt] : {std::pair{2, 4}, {2, 5}}) {
        const ComplementCriterionReport r = verify_complement_component_criterion(tt, s);
        graphs += r.graphs;
        t.check(r.ok && r.counterexamples == 0, fmt("(%d,%d) counterexample %s", s, tt, r.first_counterexample.c_str()));
    }
    return t.outcome(fmt("%ld labelled graphs, (3,7) skipped: 8 vertices", graphs));
}

Outcome edge_counts()
{
    Tally t;
    std::string notes;
    for (int tt = 4; tt <= 5; ++tt)
        for (int s = 2; s <= tt; ++s) {
            const EdgeMaximumReport m = verify_property_edge_maximum(tt, s);
            t.check(m.ok, fmt("edge maximum (%d,%d): max %d expected %d", s, tt, m.max_edges, m.expected_edges));
            if (StParams(s, tt).beta() > 2) continue;
            const TwoExtraVertexReport x = verify_two_extra_vertex_bound(tt, s);
            t.check(x.ok && x.violations == 0 && x.unmatched.empty(),
                    fmt("two extra (%d,%d): max %d bound %d unmatched %zu", s, tt, x.max_edges, x.bound, x.unmatched.size()));
            if (x.equality_graphs > 0) notes += fmt(" (%d,%d):%ld/%ld", s, tt, x.equality_matched, x.equality_graphs);
        }
    return t.outcome("equality complements matched" + notes);
}

Outcome structure()
{
    Tally t;
    std::set<ExtremalCase> seen;
    for (int tt = 2; tt <= 8; ++tt)
        for (int s = 2; s <= tt; ++s)
            for (int n = 1; n <= 64; ++n) {
                const StParams p(s, tt);
                Graph g;
                try {
                    g = extremal_gstar(n, p);
                } catch (const ContractError&) {
                    continue;  // not constructible at this order
                }
                const StructureReport r = verify_structure(g, s, tt);
                t.check(r.ok, fmt("(%d,%d) n=%d", s, tt, n));
                if (r.ok) seen.insert(extremal_case(n, p));
            }
    // Each named case once, at the parameters that select it.
    struct Named {
        int s, t, r;
        ExtremalCase expect;
    };
    for (const Named c : {Named{5, 8, 2, ExtremalCase::petersen_block}, Named{2, 5, 2, ExtremalCase::subdivided_block},
                          Named{2, 5, 1, ExtremalCase::complement_blocks}, Named{2, 3, 1, ExtremalCase::clique_blocks}}) {
        const StParams p(c.s, c.t);
        bool hit = false;
        for (int n = c.s; n <= 64 && !hit; ++n) {
            if (decompose(n, p).r != c.r) continue;
            try {
                const Graph g = extremal_gstar(n, p);
                hit = extremal_case(n, p) == c.expect && verify_structure(g, c.s, c.t).ok;
            } catch (const ContractError&) {
            }
        }
        t.check(hit, fmt("case %s not exercised via (%d,%d) r=%d", to_string(c.expect), c.s, c.t, c.r));
    }
    t.check(seen.size() == 4, "not every case seen");
    return t.outcome();
}

Outcome construction_minor_free()
{
    Tally t;
    long direct = 0, reduced = 0;
    for (int tt = 2; tt <= 8; ++tt)
        for (int s = 2; s <= tt; ++s)
            for (int n = 1; n <= 64; ++n) {
                Graph g;
                try {
                    g = extremal_gstar(n, StParams(s, tt));
                } catch (const ContractError&) {
                    continue;
                }
                if (n <= 14) {
                    ++direct;
                    t.check(is_kst_minor_free(g, s, tt), fmt("direct (%d,%d) n=%d", s, tt, n));
                } else {
                    ++reduced;
                    const auto k = clique_dominating_set(g, s - 1);
                    t.check(k && minor_free_by_clique_reduction(g, *k, s, tt), fmt("reduction (%d,%d) n=%d", s, tt, n));
                }
            }
    return t.outcome(fmt("%ld direct, %ld by reduction", direct, reduced));
}

Outcome brute_force()
{
    Tally t;
    std::string notes;
    struct Instance {
        int s, t;
        double a;
        int n;
    };
    for (const Instance c : {Instance{2, 2, 0.5, 6}, {2, 2, 0.5, 7}, {2, 3, 0.3, 6}, {2, 3, 0.3, 7}}) {
        const SearchResult pruned = brute_force_extremal(c.n, c.s, c.t, c.a, {SearchMode::pruned, 1});
        const SearchResult full = brute_force_extremal(c.n, c.s, c.t, c.a, {SearchMode::full, 1});
        const std::string tag = fmt("(%d,%d,%.1f,%d)", c.s, c.t, c.a, c.n);
        t.check(pruned.construction_available && pruned.dominates_construction, tag + " below construction");
        t.check(pruned.best_reverified && full.best_reverified, tag + " best graph not re-verified");
        t.check(std::abs(pruned.best_rho - full.best_rho) < 1e-10,
                tag + fmt(" pruned %.12g full %.12g", pruned.best_rho, full.best_rho));
        notes += " " + tag + (pruned.matches_construction ? ":match" : ":mismatch");
    }
    return t.outcome("construction" + notes);
}

Outcome majorization_suites()
{
    Tally t;
    const MajorizationSuiteReport norm = verify_norm_monotonicity(1000, 17);
    const MajorizationSuiteReport inner = verify_inner_product_monotonicity(1000, 17);
    const RotationSuiteReport rot = verify_rotation_majorization(7);
    t.check(norm.ok && norm.trials == 1000 && norm.violations == 0, "norm monotonicity");
    t.check(inner.ok && inner.trials == 1000 && inner.violations == 0, "inner product");
    t.check(rot.ok && rot.violations == 0, "rotation");
    return t.outcome(fmt("%ld rotations on %ld graphs", rot.rotations, rot.graphs));
}

Outcome graph6_round_trip()
{
    Tally t;
    std::vector<Graph> graphs{petersen(), petersen_complement(), empty_graph(0), empty_graph(64)};
    for (int n = 1; n <= 64; ++n) {
        graphs.push_back(complete(n));
        graphs.push_back(path(n));
        if (n >= 3) graphs.push_back(cycle(n));
    }
    for (int a = 1; a <= 8; ++a)
        for (int b = a; a + b <= 64; b += 7) graphs.push_back(complete_bipartite(a, b));
    for (int tt = 2; tt <= 8; ++tt)
        for (int s = 2; s <= tt; ++s) {
            const StParams p(s, tt);
            graphs.push_back(h_st(p));
            graphs.push_back(h_st_complement(p));
            for (int n = s; n <= 64; n += 3) {
                graphs.push_back(f_st(n, p));
                try {
                    graphs.push_back(extremal_gstar(n, p));
                } catch (const ContractError&) {
                }
            }
        }
    for (int a = 0; a <= 3; ++a)
        for (int b = 1; a + b <= 6; ++b) graphs.push_back(h_abc(a, b, 7 - a - b));
    const std::size_t constructed = graphs.size();
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> order(0, 64);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) graphs.push_back(oracle::random_graph(order(rng), density(rng), rng));
    for (const Graph& g : graphs) {
        const std::string text = to_graph6(g);
        const Graph back = from_graph6(text);
        t.check(back == g && to_graph6(back) == text, "round trip " + text);
    }
    return t.outcome(fmt("%zu constructed + 1000 random", constructed));
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "regular-graph identity", 1, regular_identity},
        {2, "specialisations vs dense power iteration", 30, specializations},
        {3, "F_st root sandwich", 60, fst_sandwich},
        {4, "near-clique cubic triple agreement", 60, near_clique_cubic},
        {5, "regular join bound", 60, regular_join},
        {6, "star-minor edge bound", 300, star_minor_edges},
        {7, "complement component criterion", 120, complement_criterion},
        {8, "t+1 and t+2 vertex edge counts", 600, edge_counts},
        {9, "structure of the extremal graphs", 60, structure},
        {10, "constructions are minor-free", 300, construction_minor_free},
        {11, "brute-force cross-validation", 900, brute_force},
        {12, "majorization suites", 120, majorization_suites},
        {13, "graph6 round trip", 10, graph6_round_trip},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.budget_s;
        const bool pass = o.pass && in_time;
        if (!pass) ++failed;
        std::printf("%s %2d %s (%.2f s of %.0f s)%s: %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.budget_s,
                    in_time ? "" : " over budget", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
