#include "kst/spectral.hpp"

#include <cmath>
#include <string>

namespace kst {

double check_alpha(double alpha)
{
    if (!(alpha >= 0.0 && alpha < 1.0)) throw ContractError("alpha must lie in [0, 1), got " + std::to_string(alpha));
    return alpha;
}

std::vector<double> a_alpha_apply(const Graph& g, double alpha, std::span<const double> x)
{
    if (static_cast<int>(x.size()) != g.order()) throw ContractError("a_alpha_apply: dimension mismatch");
    const int n = g.order();
    std::vector<double> y(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        double sum = 0.0;
        for_each_bit(g.row(v), [&](int u) { sum += x[static_cast<std::size_t>(u)]; });
        y[static_cast<std::size_t>(v)] = alpha * g.degree(v) * x[static_cast<std::size_t>(v)] + (1.0 - alpha) * sum;
    }
    return y;
}

namespace {

struct ComponentSolve {
    double rho = 0.0;
    std::vector<double> x;  // full length, zero off the component
    double residual = 0.0;
    long iterations = 0;
    bool converged = true;
};

double norm(const std::vector<double>& v)
{
    double s = 0.0;
    for (double e : v) s += e * e;
    return std::sqrt(s);
}

ComponentSolve solve_component(const Graph& g, double alpha, Mask comp, const SolverOptions& opt)
{
    const int n = g.order();
    ComponentSolve out;
    out.x.assign(static_cast<std::size_t>(n), 0.0);
    const int m = std::popcount(comp);
    if (m == 1) {
        out.x[static_cast<std::size_t>(std::countr_zero(comp))] = 1.0;
        return out;
    }
    int max_deg = 0;
    for_each_bit(comp, [&](int v) { max_deg = std::max(max_deg, g.degree(v)); });
    const double shift = (1.0 - alpha) * max_deg / 2.0;

    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    const double init = 1.0 / std::sqrt(static_cast<double>(m));
    for_each_bit(comp, [&](int v) { x[static_cast<std::size_t>(v)] = init; });

    double history[10] = {};
    std::vector<double> y;
    out.converged = false;
    for (long it = 1; it <= opt.max_iterations; ++it) {
        y = a_alpha_apply(g, alpha, x);
        double rq = 0.0;
        for (int v = 0; v < n; ++v) rq += x[static_cast<std::size_t>(v)] * y[static_cast<std::size_t>(v)];
        double res2 = 0.0;
        for (int v = 0; v < n; ++v) {
            const double d = y[static_cast<std::size_t>(v)] - rq * x[static_cast<std::size_t>(v)];
            res2 += d * d;
        }
        const double res = std::sqrt(res2);
        out.rho = rq;
        out.residual = res;
        out.iterations = it;
        out.x = x;
        const double previous = history[it % 10];
        history[it % 10] = rq;
        if (res < opt.residual_tol ||
            (it > 10 && std::abs(rq - previous) < opt.stall_change * std::max(1.0, rq) && res < opt.stall_residual)) {
            out.converged = true;
            break;
        }
        for (int v = 0; v < n; ++v) y[static_cast<std::size_t>(v)] += shift * x[static_cast<std::size_t>(v)];
        const double len = norm(y);
        for (int v = 0; v < n; ++v) x[static_cast<std::size_t>(v)] = y[static_cast<std::size_t>(v)] / len;
    }
    return out;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double alpha, const SolverOptions& options)
{
    check_alpha(alpha);
    if (g.order() < 1) throw ContractError("spectral_radius: empty graph");
    SpectralResult result;
    bool first = true;
    for (const VertexSet& comp : components(g)) {
        ComponentSolve c = solve_component(g, alpha, comp.mask(), options);
        result.iterations += c.iterations;
        result.converged = result.converged && c.converged;
        if (first || c.rho > result.rho + 1e-12) {
            result.rho = c.rho;
            result.perron = std::move(c.x);
            result.residual = c.residual;
            first = false;
        }
    }
    return result;
}

double q_index(const Graph& g) { return 2.0 * spectral_radius(g, 0.5).rho; }

QuotientMatrix quotient_matrix(const Graph& g, std::span<const VertexSet> parts)
{
    Mask seen = 0;
    for (const VertexSet& p : parts) {
        if (p.empty()) throw ContractError("quotient_matrix: empty part");
        if (p.mask() & seen) throw ContractError("quotient_matrix: parts overlap");
        seen |= p.mask();
    }
    if (seen != low_bits(g.order())) throw ContractError("quotient_matrix: parts do not cover the vertex set");

    const std::size_t k = parts.size();
    QuotientMatrix q;
    q.b.assign(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        q.part_sizes.push_back(parts[i].size());
        const int rep = parts[i].min();
        for (std::size_t j = 0; j < k; ++j) {
            const int count = std::popcount(g.row(rep) & parts[j].mask());
            for_each_bit(parts[i].mask(), [&](int v) {
                if (std::popcount(g.row(v) & parts[j].mask()) != count) {
                    throw ContractError("quotient_matrix: partition is not equitable (vertex " + std::to_string(v) +
                                        ", parts " + std::to_string(i) + "/" + std::to_string(j) + ")");
                }
            });
            q.b[i][j] = count;
        }
    }
    return q;
}

double quotient_spectral_radius(const QuotientMatrix& q, double alpha)
{
    check_alpha(alpha);
    const std::size_t k = q.b.size();
    if (k == 0) throw ContractError("quotient_spectral_radius: no parts");
    // D^{1/2} Q D^{-1/2} with D = diag(part sizes) is symmetric.
    std::vector<std::vector<double>> s(k, std::vector<double>(k, 0.0));
    double max_row = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < k; ++j) row += q.b[i][j];
        max_row = std::max(max_row, row);
        for (std::size_t j = 0; j < k; ++j) {
            const double qij = (1.0 - alpha) * q.b[i][j] + (i == j ? alpha * row : 0.0);
            s[i][j] = qij * std::sqrt(q.part_sizes[i] / q.part_sizes[j]);
        }
    }
    const double shift = (1.0 - alpha) * max_row / 2.0;
    std::vector<double> x(k, 1.0 / std::sqrt(static_cast<double>(k))), y(k);
    double rho = 0.0;
    for (long it = 0; it < 2000000; ++it) {
        for (std::size_t i = 0; i < k; ++i) {
            y[i] = 0.0;
            for (std::size_t j = 0; j < k; ++j) y[i] += s[i][j] * x[j];
        }
        double rq = 0.0, res2 = 0.0;
        for (std::size_t i = 0; i < k; ++i) rq += x[i] * y[i];
        for (std::size_t i = 0; i < k; ++i) res2 += (y[i] - rq * x[i]) * (y[i] - rq * x[i]);
        rho = rq;
        if (std::sqrt(res2) < 1e-14 * std::max(1.0, rq)) break;
        for (std::size_t i = 0; i < k; ++i) y[i] += shift * x[i];
        const double len = norm(y);
        for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / len;
    }
    return rho;
}

double quotient_spectral_radius(const Graph& g, std::span<const VertexSet> parts, double alpha)
{
    return quotient_spectral_radius(quotient_matrix(g, parts), alpha);
}

}  // namespace kst
