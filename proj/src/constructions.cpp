#include "kst/constructions.hpp"

#include <string>
#include <vector>

namespace kst {

StParams::StParams(int s_, int t_) : s(s_), t(t_)
{
    if (s < 2 || t < s) {
        throw ContractError("need 2 <= s <= t, got s=" + std::to_string(s) + ", t=" + std::to_string(t));
    }
}

Decomposition decompose(long n, const StParams& params)
{
    const long rest = n - params.s + 1;
    if (rest < 1) throw ContractError("need n >= s, got n=" + std::to_string(n));
    Decomposition d;
    d.r = static_cast<int>((rest - 1) % params.t + 1);
    d.p = static_cast<int>((rest - d.r) / params.t);
    return d;
}

namespace {

void check_order(long n)
{
    if (n > kMaxVertices) throw CapacityError("order " + std::to_string(n) + " exceeds 64 vertices");
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

}  // namespace

Graph f_st(int n, const StParams& params)
{
    check_order(n);
    const Decomposition d = decompose(n, params);
    const Graph rest = disjoint_union(k_copies(complete(params.t), d.p), complete(d.r));
    return join(complete(params.s - 1), rest);
}

Graph h_st(const StParams& params)
{
    check_order(params.t + 1);
    return disjoint_union(k_copies(star(params.s), params.beta() - 1), star(params.alpha_star()));
}

Graph h_st_complement(const StParams& params) { return complement(h_st(params)); }

Graph petersen()
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
    GraphBuilder b(10);
    for (int x = 0; x < 10; ++x) {
        for (int y = x + 1; y < 10; ++y) {
            const auto [a, c] = pairs[static_cast<std::size_t>(x)];
            const auto [e, f] = pairs[static_cast<std::size_t>(y)];
            if (a != e && a != f && c != e && c != f) b.set_edge(x, y);
        }
    }
    return b.finish();
}

Graph petersen_complement() { return complement(petersen()); }

Graph h_abc(int a, int b, int c)
{
    if (a < 0 || b < 1 || c < 1) throw ContractError("h_abc needs a >= 0 and b, c >= 1");
    const int n = a + b + c + 3;
    check_order(n);
    const int w = a + b + c, u1 = w + 1, u2 = w + 2;
    GraphBuilder g(n);
    for (int v = 0; v < a; ++v) {
        g.set_edge(w, v);
        g.set_edge(u1, v);
    }
    for (int v = a; v < a + b; ++v) {
        g.set_edge(w, v);
        g.set_edge(u2, v);
    }
    for (int v = a + b; v < w; ++v) {
        g.set_edge(u1, v);
        g.set_edge(u2, v);
    }
    g.set_edge(w, u1);
    return g.finish();
}

const char* to_string(ExtremalCase c) noexcept
{
    switch (c) {
    case ExtremalCase::petersen_block: return "petersen_block";
    case ExtremalCase::subdivided_block: return "subdivided_block";
    case ExtremalCase::complement_blocks: return "complement_blocks";
    case ExtremalCase::clique_blocks: return "clique_blocks";
    }
    return "unknown";
}

ExtremalCase extremal_case(int n, const StParams& params)
{
    const Decomposition d = decompose(n, params);
    const int beta = params.beta();
    if (d.r == 2 && params.t == 8 && beta == 1) return ExtremalCase::petersen_block;
    if (d.r == 2 && beta == 2) return ExtremalCase::subdivided_block;
    if (d.r <= 2 * (beta - 1)) return ExtremalCase::complement_blocks;
    return ExtremalCase::clique_blocks;
}

Graph extremal_gstar(int n, const StParams& params)
{
    check_order(n);
    const Decomposition d = decompose(n, params);
    const Graph clique = complete(params.s - 1);
    const Graph kt = complete(params.t);
    const auto need = [&](int blocks) {
        if (d.p < blocks) {
            throw ContractError("n=" + std::to_string(n) + " too small for this case: p=" + std::to_string(d.p) +
                                " but " + std::to_string(blocks) + " blocks are replaced");
        }
    };
    switch (extremal_case(n, params)) {
    case ExtremalCase::petersen_block:
        need(1);
        return join(clique, disjoint_union(k_copies(kt, d.p - 1), petersen_complement()));
    case ExtremalCase::subdivided_block:
        need(1);
        return join(clique, disjoint_union(k_copies(kt, d.p - 1), subdivide_min_edge(h_st_complement(params))));
    case ExtremalCase::complement_blocks:
        need(d.r);
        return join(clique, disjoint_union(k_copies(kt, d.p - d.r), k_copies(h_st_complement(params), d.r)));
    case ExtremalCase::clique_blocks:
        break;
    }
    return f_st(n, params);
}

}  // namespace kst
