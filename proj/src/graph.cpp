#include "kst/graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

namespace kst {

namespace {

void check_capacity(long n, const char* what)
{
    if (n < 0 || n > kMaxVertices) {
        throw CapacityError(std::string(what) + ": " + std::to_string(n) + " vertices exceeds capacity " +
                            std::to_string(kMaxVertices));
    }
}

void check_vertex(const Graph& g, int v, const char* what)
{
    if (v < 0 || v >= g.order()) {
        throw ContractError(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
    }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> vertices)
{
    for (int v : vertices) {
        if (v < 0 || v >= kMaxVertices) throw ContractError("VertexSet: vertex out of range");
        mask_ |= bit(v);
    }
}

VertexSet VertexSet::range(int begin, int end)
{
    if (begin < 0 || end > kMaxVertices || begin > end) throw ContractError("VertexSet::range: bad bounds");
    return VertexSet(low_bits(end) & ~low_bits(begin));
}

std::vector<int> VertexSet::to_vector() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each_bit(mask_, [&](int v) { out.push_back(v); });
    return out;
}

DegreeSequence DegreeSequence::from_unsorted(std::vector<int> degrees)
{
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    return DegreeSequence{std::move(degrees)};
}

long DegreeSequence::sum() const
{
    long total = 0;
    for (int d : values) total += d;
    return total;
}

Graph::Graph(int n)
{
    check_capacity(n, "Graph");
    n_ = n;
}

Graph Graph::from_rows(std::span<const Mask> rows)
{
    check_capacity(static_cast<long>(rows.size()), "Graph::from_rows");
    Graph g(static_cast<int>(rows.size()));
    const Mask inside = low_bits(g.n_);
    for (int i = 0; i < g.n_; ++i) {
        const Mask r = rows[static_cast<std::size_t>(i)];
        if (r & ~inside) throw ContractError("Graph::from_rows: bit beyond vertex count");
        if ((r >> i) & 1U) throw ContractError("Graph::from_rows: loop at vertex " + std::to_string(i));
        g.adj_[static_cast<std::size_t>(i)] = r;
    }
    for (int i = 0; i < g.n_; ++i) {
        for_each_bit(g.row(i), [&](int j) {
            if (!g.has_edge(j, i)) throw ContractError("Graph::from_rows: asymmetric rows");
        });
    }
    return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.set_edge(u, v);
    return b.finish();
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges)
{
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

int Graph::edge_count() const noexcept
{
    int twice = 0;
    for (int i = 0; i < n_; ++i) twice += degree(i);
    return twice / 2;
}

int Graph::max_degree() const noexcept
{
    int d = 0;
    for (int i = 0; i < n_; ++i) d = std::max(d, degree(i));
    return d;
}

int Graph::min_degree() const noexcept
{
    if (n_ == 0) return 0;
    int d = std::numeric_limits<int>::max();
    for (int i = 0; i < n_; ++i) d = std::min(d, degree(i));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i) {
        for_each_bit(row(i) & ~low_bits(i + 1), [&](int j) { out.emplace_back(i, j); });
    }
    return out;
}

bool operator==(const Graph& a, const Graph& b) noexcept
{
    if (a.n_ != b.n_) return false;
    return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

void GraphBuilder::set_edge(int u, int v)
{
    check_vertex(g_, u, "set_edge");
    check_vertex(g_, v, "set_edge");
    if (u == v) throw ContractError("set_edge: loops are not allowed");
    g_.adj_[static_cast<std::size_t>(u)] |= bit(v);
    g_.adj_[static_cast<std::size_t>(v)] |= bit(u);
}

void GraphBuilder::clear_edge(int u, int v)
{
    check_vertex(g_, u, "clear_edge");
    check_vertex(g_, v, "clear_edge");
    g_.adj_[static_cast<std::size_t>(u)] &= ~bit(v);
    g_.adj_[static_cast<std::size_t>(v)] &= ~bit(u);
}

Graph complete(int n)
{
    check_capacity(n, "complete");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.set_edge(i, j);
    return b.finish();
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_bipartite(int m, int n)
{
    if (m < 0 || n < 0) throw ContractError("complete_bipartite: negative part");
    check_capacity(static_cast<long>(m) + n, "complete_bipartite");
    GraphBuilder b(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) b.set_edge(i, m + j);
    return b.finish();
}

Graph cycle(int n)
{
    if (n < 3) throw ContractError("cycle: needs at least 3 vertices");
    check_capacity(n, "cycle");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.set_edge(i, (i + 1) % n);
    return b.finish();
}

Graph path(int n)
{
    check_capacity(n, "path");
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.set_edge(i, i + 1);
    return b.finish();
}

Graph circulant(int n, std::span<const int> offsets)
{
    check_capacity(n, "circulant");
    GraphBuilder b(n);
    for (int d : offsets) {
        if (d <= 0 || 2 * d > n) throw ContractError("circulant: offset must lie in [1, n/2]");
        for (int i = 0; i < n; ++i) b.set_edge(i, (i + d) % n);
    }
    return b.finish();
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    const long total = static_cast<long>(g.order()) + h.order();
    check_capacity(total, "disjoint_union");
    std::vector<Mask> rows(static_cast<std::size_t>(total));
    for (int i = 0; i < g.order(); ++i) rows[static_cast<std::size_t>(i)] = g.row(i);
    for (int i = 0; i < h.order(); ++i) rows[static_cast<std::size_t>(g.order() + i)] = h.row(i) << g.order();
    return Graph::from_rows(rows);
}

Graph k_copies(const Graph& g, int k)
{
    if (k < 0) throw ContractError("k_copies: negative count");
    check_capacity(static_cast<long>(g.order()) * k, "k_copies");
    Graph out(0);
    for (int i = 0; i < k; ++i) out = disjoint_union(out, g);
    return out;
}

Graph join(const Graph& g, const Graph& h)
{
    const long total = static_cast<long>(g.order()) + h.order();
    check_capacity(total, "join");
    const int ng = g.order();
    const Mask left = low_bits(ng);
    const Mask right = low_bits(static_cast<int>(total)) & ~left;
    std::vector<Mask> rows(static_cast<std::size_t>(total));
    for (int i = 0; i < ng; ++i) rows[static_cast<std::size_t>(i)] = g.row(i) | right;
    for (int i = 0; i < h.order(); ++i) rows[static_cast<std::size_t>(ng + i)] = (h.row(i) << ng) | left;
    return Graph::from_rows(rows);
}

Graph complement(const Graph& g)
{
    const Mask all = low_bits(g.order());
    std::vector<Mask> rows(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) rows[static_cast<std::size_t>(i)] = ~g.row(i) & all & ~bit(i);
    return Graph::from_rows(rows);
}

Graph add_edge(const Graph& g, int u, int v)
{
    check_vertex(g, u, "add_edge");
    check_vertex(g, v, "add_edge");
    if (u == v) throw ContractError("add_edge: loops are not allowed");
    if (g.has_edge(u, v)) throw ContractError("add_edge: edge already present");
    GraphBuilder b(g);
    b.set_edge(u, v);
    return b.finish();
}

Graph delete_edge(const Graph& g, int u, int v)
{
    check_vertex(g, u, "delete_edge");
    check_vertex(g, v, "delete_edge");
    if (!g.has_edge(u, v)) throw ContractError("delete_edge: not an edge");
    GraphBuilder b(g);
    b.clear_edge(u, v);
    return b.finish();
}

Graph subdivide_min_edge(const Graph& g)
{
    if (g.order() >= kMaxVertices) throw CapacityError("subdivide_min_edge: no room for the new vertex");
    int best_u = -1, best_v = -1, best_sum = std::numeric_limits<int>::max();
    for (auto [u, v] : g.edges()) {  // lexicographic order
        const int sum = g.degree(u) + g.degree(v);
        if (sum < best_sum) {
            best_sum = sum;
            best_u = u;
            best_v = v;
        }
    }
    if (best_u < 0) throw ContractError("subdivide_min_edge: graph has no edges");
    const int z = g.order();
    std::vector<Mask> rows(static_cast<std::size_t>(z + 1));
    for (int i = 0; i < z; ++i) rows[static_cast<std::size_t>(i)] = g.row(i);
    GraphBuilder b(Graph::from_rows(rows));
    b.clear_edge(best_u, best_v);
    b.set_edge(best_u, z);
    b.set_edge(z, best_v);
    return b.finish();
}

Graph contract_edge(const Graph& g, int u, int v)
{
    check_vertex(g, u, "contract_edge");
    check_vertex(g, v, "contract_edge");
    if (!g.has_edge(u, v)) throw ContractError("contract_edge: not an edge");
    GraphBuilder b(g);
    for_each_bit(g.row(v), [&](int w) {
        if (w != u) b.set_edge(u, w);
    });
    const Graph merged = b.finish();
    return induced(merged, VertexSet(low_bits(g.order()) & ~bit(v)));
}

Graph induced(const Graph& g, VertexSet s)
{
    if (s.mask() & ~low_bits(g.order())) throw ContractError("induced: set contains non-vertices");
    const std::vector<int> keep = s.to_vector();
    std::array<int, kMaxVertices> index{};
    for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    std::vector<Mask> rows(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        Mask r = 0;
        for_each_bit(g.row(keep[i]) & s.mask(), [&](int w) { r |= bit(index[static_cast<std::size_t>(w)]); });
        rows[i] = r;
    }
    return Graph::from_rows(rows);
}

Mask reach(const Graph& g, Mask start, Mask within) noexcept
{
    Mask seen = start & within;
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.row(v); });
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<VertexSet> components(const Graph& g)
{
    std::vector<VertexSet> out;
    Mask left = low_bits(g.order());
    while (left) {
        const Mask comp = reach(g, left & (~left + 1), left);
        out.emplace_back(comp);
        left &= ~comp;
    }
    return out;
}

bool is_connected(const Graph& g)
{
    if (g.order() == 0) return true;
    return reach(g, 1, low_bits(g.order())) == low_bits(g.order());
}

bool induces_connected(const Graph& g, Mask s) noexcept
{
    if (!s) return false;
    return reach(g, s & (~s + 1), s) == s;
}

DegreeSequence degree_sequence(const Graph& g)
{
    std::vector<int> d(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) d[static_cast<std::size_t>(i)] = g.degree(i);
    return DegreeSequence::from_unsorted(std::move(d));
}

bool is_regular(const Graph& g, int d)
{
    for (int i = 0; i < g.order(); ++i)
        if (g.degree(i) != d) return false;
    return true;
}

int girth(const Graph& g)
{
    // Shortest cycle through BFS from every vertex.
    int best = 0;
    const int n = g.order();
    std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            for_each_bit(g.row(v), [&](int w) {
                auto& dw = dist[static_cast<std::size_t>(w)];
                if (dw < 0) {
                    dw = dist[static_cast<std::size_t>(v)] + 1;
                    parent[static_cast<std::size_t>(w)] = v;
                    queue.push_back(w);
                } else if (parent[static_cast<std::size_t>(v)] != w) {
                    const int len = dw + dist[static_cast<std::size_t>(v)] + 1;
                    if (best == 0 || len < best) best = len;
                }
            });
        }
    }
    return best;
}

}  // namespace kst
