#include "kst/spectral_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace kst {

FstQuadratics fst_quadratics(long n, int s, int t, double alpha)
{
    const double a = alpha, N = static_cast<double>(n), S = s, T = t;
    const double c0 = (a * (N - S + 1) + S - 2) * (a * (S - 1) + T - 1) - (1 - a) * (1 - a) * (S - 1) * (N - S);
    FstQuadratics q;
    q.h = Polynomial{c0, -(a * N + S + T - 3), 1.0};
    q.g = q.h - Polynomial{(1 - a) * (1 - a) * (S - 1)};
    return q;
}

long fst_sandwich_threshold(int s, int t, double alpha)
{
    if (alpha <= 0.0) throw ContractError("the order threshold needs alpha > 0");
    return static_cast<long>(std::ceil(s - 1 + (static_cast<double>(t) * t - 1) / alpha - 1e-9));
}

QuotientMatrix fst_quotient(long n, const StParams& params)
{
    const long rest = n - params.s + 1;
    if (rest < 1) throw ContractError("fst_quotient: need n >= s");
    const long r = (rest - 1) % params.t + 1;
    const long p = (rest - r) / params.t;
    const double s = params.s, t = params.t;
    QuotientMatrix q;
    if (p > 0) {
        const double pt = static_cast<double>(p) * t;
        q.b = {{s - 2, pt, static_cast<double>(r)}, {s - 1, t - 1, 0}, {s - 1, 0, static_cast<double>(r - 1)}};
        q.part_sizes = {s - 1, pt, static_cast<double>(r)};
    } else {
        q.b = {{s - 2, static_cast<double>(r)}, {s - 1, static_cast<double>(r - 1)}};
        q.part_sizes = {s - 1, static_cast<double>(r)};
    }
    return q;
}

FstSandwichReport verify_fst_root_sandwich(long n, int s, int t, double alpha, bool exploratory)
{
    const StParams params(s, t);
    check_alpha(alpha);
    FstSandwichReport rep;
    rep.n = n;
    rep.s = s;
    rep.t = t;
    rep.alpha = alpha;
    rep.threshold = alpha > 0.0 ? fst_sandwich_threshold(s, t, alpha) : -1;
    rep.hypothesis_met = alpha > 0.0 && n >= rep.threshold;
    if (!rep.hypothesis_met && !exploratory) {
        throw ContractError("order hypothesis not met: need n >= s-1+(t^2-1)/alpha = " + std::to_string(rep.threshold) +
                            ", got n=" + std::to_string(n) + " (rerun as exploratory to compute anyway)");
    }
    const long rest = n - s + 1;
    rep.r = static_cast<int>((rest - 1) % t + 1);
    rep.p = (rest - rep.r) / t;

    const FstQuadratics q = fst_quadratics(n, s, t, alpha);
    rep.root_h = largest_real_root(q.h);
    rep.root_g = largest_real_root(q.g);
    rep.rho = quotient_spectral_radius(fst_quotient(n, params), alpha);
    if (n <= kMaxVertices) {
        rep.rho_direct = spectral_radius(f_st(static_cast<int>(n), params), alpha).rho;
        rep.direct_ok = std::abs(*rep.rho_direct - rep.rho) <= kAgreementTol;
    }
    rep.lower_ok = rep.rho - rep.root_h > kStrictMargin;
    rep.equality_case = rep.r == t;
    if (rep.equality_case) {
        rep.equality_ok = std::abs(rep.rho - rep.root_g) <= kEqualityTol;
        rep.upper_ok = rep.rho <= rep.root_g + kEqualityTol;
    } else {
        rep.equality_ok = rep.root_g - rep.rho > kStrictMargin;
        rep.upper_ok = rep.equality_ok;
    }
    rep.ok = rep.direct_ok && rep.lower_ok && rep.upper_ok && rep.equality_ok;
    return rep;
}

Polynomial near_clique_join_cubic(long n, int s, double alpha)
{
    const double a = alpha, N = static_cast<double>(n), S = s;
    const double c2 = -(2 * a * N + S - 4);
    const double c1 = a * a * N * N + 3 * a * N * S - a * S * S - 6 * a * N + a * S - N * S + S * S - 2 * a + N -
                      4 * S + 7;
    const double c0 = -2 * a * a * N * N * S + a * a * N * S * S + 2 * a * a * N * N - a * a * N * S + a * N * N * S -
                      a * N * S * S + 2 * a * a * N - a * N * N + 6 * a * N * S - 2 * a * S * S - 9 * a * N +
                      4 * a * S - 2 * N * S + 2 * S * S - 2 * a + 4 * N - 6 * S + 4;
    return Polynomial{c0, c1, c2, 1.0};
}

Graph near_clique_join(int s, const Graph& h)
{
    if (s < 3) throw ContractError("near_clique_join: need s >= 3");
    const Graph left = delete_edge(complete(s - 1), s - 3, s - 2);
    return join(left, h);
}

NearCliqueCubicReport verify_near_clique_join_cubic(long n, int s, double alpha)
{
    check_alpha(alpha);
    if (s < 4 || n < s) throw ContractError("need s >= 4 and n >= s");
    NearCliqueCubicReport rep;
    rep.n = n;
    rep.s = s;
    rep.alpha = alpha;
    rep.rho_cubic = largest_real_root(near_clique_join_cubic(n, s, alpha));

    const double m = static_cast<double>(n - s + 1), S = s;
    QuotientMatrix q;
    q.b = {{S - 4, 2, m}, {S - 3, 0, m}, {S - 3, 2, 0}};
    q.part_sizes = {S - 3, 2, m};
    rep.rho_quotient = quotient_spectral_radius(q, alpha);
    rep.agreement_ok = std::abs(rep.rho_cubic - rep.rho_quotient) <= kAgreementTol;
    if (n <= kMaxVertices) {
        rep.rho_direct = spectral_radius(near_clique_join(s, empty_graph(static_cast<int>(n) - s + 1)), alpha).rho;
        rep.agreement_ok = rep.agreement_ok && std::abs(*rep.rho_direct - rep.rho_quotient) <= kAgreementTol &&
                           std::abs(*rep.rho_direct - rep.rho_cubic) <= kAgreementTol;
    }
    rep.lower_bound = alpha * (n - 1) + (1 - alpha) * (s - 4);
    rep.bound_ok = rep.rho_quotient - rep.lower_bound > kStrictMargin;
    rep.ok = rep.agreement_ok && rep.bound_ok;
    return rep;
}

double default_threshold_constant(double alpha)
{
    if (alpha <= 0.0) throw ContractError("the order threshold needs alpha > 0");
    return std::ceil(1.0 / alpha - 1e-12);
}

long regular_join_threshold(int s, int t, double alpha, double c)
{
    if (alpha <= 0.0) throw ContractError("the order threshold needs alpha > 0");
    const double first = 2.0 * s - 3 + (t - s + 4) / alpha;
    const double second = (1 - alpha) * (s - 1) * (c * (s + t) + 2) / 2 + s + t;
    return static_cast<long>(std::ceil(std::max(first, second) - 1e-9));
}

namespace {

// Spanning subgraphs of a (t-1)-regular graph and random graphs of maximum
// degree t-1, all on the same vertex set and none of them regular.
std::vector<Graph> non_regular_samples(const Graph& h, int t, int count, std::uint64_t seed)
{
    std::vector<Graph> out;
    const auto edges = h.edges();
    if (count <= 0 || edges.empty()) return out;
    out.push_back(delete_edge(h, edges[0].first, edges[0].second));
    if (static_cast<int>(out.size()) < count && edges.size() > 1)
        out.push_back(delete_edge(out.back(), edges.back().first, edges.back().second));

    std::mt19937_64 rng(seed);
    std::bernoulli_distribution drop(0.3);
    const int n = h.order();
    int guard = 0;
    while (static_cast<int>(out.size()) < count && guard++ < 100 * count) {
        if (out.size() % 2 == 0) {
            GraphBuilder b(h);
            for (auto [u, v] : edges)
                if (drop(rng)) b.clear_edge(u, v);
            const Graph g = b.finish();
            if (!is_regular(g, t - 1)) out.push_back(g);
        } else {
            std::vector<std::pair<int, int>> pairs;
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
            std::shuffle(pairs.begin(), pairs.end(), rng);
            GraphBuilder b(n);
            std::vector<int> deg(static_cast<std::size_t>(n), 0);
            for (auto [u, v] : pairs) {
                if (deg[static_cast<std::size_t>(u)] < t - 1 && deg[static_cast<std::size_t>(v)] < t - 1) {
                    b.set_edge(u, v);
                    ++deg[static_cast<std::size_t>(u)];
                    ++deg[static_cast<std::size_t>(v)];
                }
            }
            const Graph g = b.finish();
            if (!is_regular(g, t - 1)) out.push_back(g);
        }
    }
    return out;
}

}  // namespace

RegularJoinReport verify_regular_join_bound(int s, int t, double alpha, const Graph& h_regular, int samples,
                                            std::uint64_t seed, std::optional<double> c, bool exploratory)
{
    check_alpha(alpha);
    if (s < 3 || t < 2) throw ContractError("need s >= 3 and t >= 2");
    if (!is_regular(h_regular, t - 1)) throw ContractError("H must be (t-1)-regular");
    if (h_regular.order() + s - 1 > kMaxVertices) throw CapacityError("(K_{s-1}-e) v H exceeds 64 vertices");

    RegularJoinReport rep;
    rep.n = h_regular.order() + s - 1;
    rep.s = s;
    rep.t = t;
    rep.alpha = alpha;
    if (alpha > 0.0) {
        rep.c = c.value_or(default_threshold_constant(alpha));
        if (rep.c < 1.0 / alpha - 1e-12) throw ContractError("the threshold constant must be at least 1/alpha");
        rep.threshold = regular_join_threshold(s, t, alpha, rep.c);
        rep.hypothesis_met = rep.n >= rep.threshold;
    }
    if (!rep.hypothesis_met && !exploratory) {
        throw ContractError("order hypothesis not met: need n >= " + std::to_string(rep.threshold) +
                            ", got n=" + std::to_string(rep.n) + " (rerun as exploratory to compute anyway)");
    }

    const Graph g = near_clique_join(s, h_regular);
    rep.rho_regular = spectral_radius(g, alpha).rho;

    std::vector<VertexSet> parts;
    if (s > 3) parts.push_back(VertexSet::range(0, s - 3));
    parts.push_back(VertexSet::range(s - 3, s - 1));
    parts.push_back(VertexSet::range(s - 1, static_cast<int>(rep.n)));
    rep.rho_quotient = quotient_spectral_radius(g, parts, alpha);
    rep.quotient_ok = std::abs(rep.rho_quotient - rep.rho_regular) <= kAgreementTol;

    rep.root_h = largest_real_root(fst_quadratics(rep.n, s, t, alpha).h);
    rep.below_root_ok = rep.root_h - rep.rho_regular > kStrictMargin;

    for (const Graph& h : non_regular_samples(h_regular, t, samples, seed)) {
        const double r = spectral_radius(near_clique_join(s, h), alpha).rho;
        ++rep.samples;
        rep.max_sample_rho = std::max(rep.max_sample_rho, r);
        if (!(rep.rho_regular - r > kStrictMargin)) rep.samples_ok = false;
    }
    rep.ok = rep.quotient_ok && rep.below_root_ok && rep.samples_ok;
    return rep;
}

JoinLowerBoundReport verify_join_lower_bound(int n, int s, double alpha)
{
    check_alpha(alpha);
    if (s < 2 || n < s - 1) throw ContractError("need s >= 2 and n >= s-1");
    if (n > kMaxVertices) throw CapacityError("order exceeds 64 vertices");
    JoinLowerBoundReport rep;
    rep.n = n;
    rep.s = s;
    rep.alpha = alpha;
    rep.rho = spectral_radius(join(complete(s - 1), empty_graph(n - s + 1)), alpha).rho;
    rep.bound = alpha * (n - 1) + (1 - alpha) * (s - 2);
    rep.ok = rep.rho >= rep.bound - kStrictMargin;
    return rep;
}

PerronBoundsReport verify_perron_component_bounds(const Graph& g, VertexSet k, int s, int t, double alpha)
{
    check_alpha(alpha);
    if (k.size() != s - 1) throw ContractError("K must have s-1 vertices");
    const Mask all = low_bits(g.order());
    if ((k.mask() & ~all) != 0) throw ContractError("K contains vertices outside the graph");
    bool dominating = true;
    for_each_bit(k.mask(), [&](int v) { dominating = dominating && g.row(v) == (all & ~bit(v)); });
    if (!dominating) throw ContractError("K is not a clique dominating set");
    if (k.mask() == all) throw ContractError("G - K is empty");

    PerronBoundsReport rep;
    rep.s = s;
    rep.t = t;
    rep.alpha = alpha;
    const SpectralResult sr = spectral_radius(g, alpha);
    rep.rho = sr.rho;
    rep.x1 = 0.0;
    rep.x2 = 1.0;
    for (int v = 0; v < g.order(); ++v) {
        const double xv = sr.perron[static_cast<std::size_t>(v)];
        if (k.contains(v)) {
            rep.x0 += xv;
        } else {
            rep.x1 = std::max(rep.x1, xv);
            rep.x2 = std::min(rep.x2, xv);
        }
    }
    const double den_upper = rep.rho - (alpha * (t + s - 1) + (1 - alpha) * t);
    const double den_lower = rep.rho - alpha * (s - 1);
    rep.denominator_ok = den_upper > 0 && den_lower > 0;
    if (rep.denominator_ok) {
        rep.upper = (1 - alpha) * rep.x0 / den_upper;
        rep.lower = (1 - alpha) * rep.x0 / den_lower;
        rep.upper_ok = rep.x1 < rep.upper;
        rep.lower_ok = rep.x2 >= rep.lower - kStrictMargin;
    }
    rep.ok = rep.denominator_ok && rep.upper_ok && rep.lower_ok;
    return rep;
}

}  // namespace kst
