#include "kst/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>

#include "kst/isomorphism.hpp"

namespace kst {

RealVector::RealVector(std::vector<double> values) : v_(std::move(values))
{
    for (std::size_t i = 1; i < v_.size(); ++i)
        if (v_[i] > v_[i - 1]) throw ContractError("RealVector: values must be non-increasing");
}

RealVector RealVector::sorted(std::vector<double> values)
{
    std::sort(values.begin(), values.end(), std::greater<>());
    return RealVector(std::move(values));
}

namespace {

template <class T>
void check_lengths(const std::vector<T>& a, const std::vector<T>& b)
{
    if (a.size() != b.size()) throw ContractError("majorization: vectors differ in length");
}

}  // namespace

bool weakly_majorizes(const RealVector& y, const RealVector& x)
{
    check_lengths(y.values(), x.values());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x.values()[i];
        sy += y.values()[i];
        if (sx > sy + kMajorizationSlack) return false;
    }
    return true;
}

bool majorizes(const RealVector& y, const RealVector& x)
{
    if (!weakly_majorizes(y, x)) return false;
    double sx = 0.0, sy = 0.0;
    for (double v : x.values()) sx += v;
    for (double v : y.values()) sy += v;
    return std::abs(sx - sy) <= kMajorizationSlack;
}

bool weakly_majorizes(const DegreeSequence& y, const DegreeSequence& x)
{
    check_lengths(y.values, x.values);
    long sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.values.size(); ++i) {
        sx += x.values[i];
        sy += y.values[i];
        if (sx > sy) return false;
    }
    return true;
}

bool majorizes(const DegreeSequence& y, const DegreeSequence& x)
{
    return weakly_majorizes(y, x) && y.sum() == x.sum();
}

Graph rotate_edge(const Graph& g, int v, int w, int u)
{
    const int n = g.order();
    for (int x : {v, w, u})
        if (x < 0 || x >= n) throw ContractError("rotate_edge: vertex out of range");
    if (!g.has_edge(v, w)) throw ContractError("rotate_edge: vw is not an edge");
    if (u == w) throw ContractError("rotate_edge: u must differ from w");
    if (u == v) throw ContractError("rotate_edge: u must differ from v");
    if (g.has_edge(u, w)) throw ContractError("rotate_edge: uw is already an edge");
    if (g.degree(u) < g.degree(v)) throw ContractError("rotate_edge: need d(u) >= d(v)");
    return add_edge(delete_edge(g, v, w), u, w);
}

MajorizationSuiteReport verify_norm_monotonicity(long trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(1, 8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    MajorizationSuiteReport rep;
    while (rep.trials < trials) {
        const int m = len(rng);
        std::vector<double> y(static_cast<std::size_t>(m)), x(static_cast<std::size_t>(m));
        for (double& e : y) e = 10.0 * unit(rng);
        std::sort(y.begin(), y.end(), std::greater<>());
        // x = a non-increasing vector under y's prefix sums: shrink y, then
        // average random adjacent pairs (both moves keep x <_w y).
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = y[i] * (unit(rng) < 0.3 ? unit(rng) : 1.0);
        std::sort(x.begin(), x.end(), std::greater<>());
        for (int k = 0; k < m; ++k) {
            if (m < 2) break;
            const std::size_t i = static_cast<std::size_t>(k % (m - 1));
            if (unit(rng) < 0.5) {
                const double avg = 0.5 * (x[i] + x[i + 1]);
                x[i] = x[i + 1] = avg;
            }
        }
        if (unit(rng) < 0.1) x = y;
        const RealVector rx(x), ry(y);
        if (!weakly_majorizes(ry, rx)) continue;  // only count valid pairs
        ++rep.trials;
        double gap = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) gap = std::max(gap, std::abs(x[i] - y[i]));
        for (int k = 2; k <= 4; ++k) {
            double nx = 0.0, ny = 0.0;
            for (double e : x) nx += std::pow(e, k);
            for (double e : y) ny += std::pow(e, k);
            nx = std::pow(nx, 1.0 / k);
            ny = std::pow(ny, 1.0 / k);
            // Strictness is only decidable when the vectors are clearly apart.
            const bool holds = gap <= kMajorizationSlack ? std::abs(nx - ny) <= 1e-9
                                                         : (gap > 1e-9 ? nx < ny : nx <= ny + 1e-12);
            if (!holds) {
                ++rep.violations;
                break;
            }
        }
    }
    rep.ok = rep.violations == 0;
    return rep;
}

MajorizationSuiteReport verify_inner_product_monotonicity(long trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(1, 8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    MajorizationSuiteReport rep;
    while (rep.trials < trials) {
        const int m = len(rng);
        std::vector<double> y(static_cast<std::size_t>(m)), z(static_cast<std::size_t>(m));
        for (double& e : y) e = 20.0 * unit(rng) - 5.0;
        for (double& e : z) e = 20.0 * unit(rng) - 5.0;
        std::sort(y.begin(), y.end(), std::greater<>());
        std::sort(z.begin(), z.end(), std::greater<>());
        // Robin Hood transfers from larger to smaller entries keep x < y.
        std::vector<double> x = y;
        for (int k = 0; k < 2 * m && m >= 2; ++k) {
            std::uniform_int_distribution<int> pick(0, m - 1);
            int i = pick(rng), j = pick(rng);
            if (i > j) std::swap(i, j);
            if (i == j) continue;
            const double delta = unit(rng) * 0.5 * (x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)]);
            x[static_cast<std::size_t>(i)] -= delta;
            x[static_cast<std::size_t>(j)] += delta;
            std::sort(x.begin(), x.end(), std::greater<>());
        }
        const RealVector rx(x), ry(y);
        if (!majorizes(ry, rx)) continue;
        ++rep.trials;
        double px = 0.0, py = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            px += x[i] * z[i];
            py += y[i] * z[i];
        }
        if (px > py + 1e-9) ++rep.violations;
    }
    rep.ok = rep.violations == 0;
    return rep;
}

RotationSuiteReport verify_rotation_majorization(int max_order)
{
    if (max_order < 1 || max_order > 8) throw RangeError("rotation suite covers orders 1..8");
    RotationSuiteReport rep;
    rep.max_order = max_order;
    for (int n = 1; n <= max_order; ++n) {
        for (const Graph& g : unlabeled_graphs(n)) {
            ++rep.graphs;
            const DegreeSequence before = degree_sequence(g);
            for (int v = 0; v < n; ++v) {
                for (int w = 0; w < n; ++w) {
                    if (!g.has_edge(v, w)) continue;
                    for (int u = 0; u < n; ++u) {
                        if (u == w || u == v || g.has_edge(u, w) || g.degree(u) < g.degree(v)) continue;
                        ++rep.rotations;
                        const DegreeSequence after = degree_sequence(rotate_edge(g, v, w, u));
                        if (!majorizes(after, before) || after == before) ++rep.violations;
                    }
                }
            }
        }
    }
    rep.ok = rep.violations == 0;
    return rep;
}

}  // namespace kst
