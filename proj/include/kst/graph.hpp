#pragma once

// Small simple graphs (at most 64 vertices) stored as one adjacency bit mask
// per vertex. Values are immutable: every operator returns a new graph.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "kst/error.hpp"

namespace kst {

inline constexpr int kMaxVertices = 64;

using Mask = std::uint64_t;

/// Mask with the low `n` bits set.
constexpr Mask low_bits(int n) noexcept
{
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr Mask bit(int v) noexcept { return Mask{1} << v; }

/// Calls f(v) for every set bit v of m, in increasing order.
template <class F>
constexpr void for_each_bit(Mask m, F&& f)
{
    while (m) {
        f(std::countr_zero(m));
        m &= m - 1;
    }
}

class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Mask mask) : mask_(mask) {}
    VertexSet(std::initializer_list<int> vertices);

    static VertexSet range(int begin, int end);

    constexpr Mask mask() const noexcept { return mask_; }
    constexpr int size() const noexcept { return std::popcount(mask_); }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    constexpr bool contains(int v) const noexcept { return (mask_ >> v) & 1U; }
    /// Smallest member; -1 when empty.
    constexpr int min() const noexcept { return mask_ ? std::countr_zero(mask_) : -1; }
    std::vector<int> to_vector() const;

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.mask_ | b.mask_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & b.mask_); }

private:
    Mask mask_ = 0;
};

/// Non-increasing degree sequence.
struct DegreeSequence {
    std::vector<int> values;

    /// Sorts `degrees` into non-increasing order.
    static DegreeSequence from_unsorted(std::vector<int> degrees);

    long sum() const;
    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Builds from per-vertex rows, validating symmetry, loops and stray bits.
    static Graph from_rows(std::span<const Mask> rows);
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    int order() const noexcept { return n_; }
    Mask row(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet neighbours(int v) const noexcept { return VertexSet(row(v)); }
    VertexSet vertices() const noexcept { return VertexSet(low_bits(n_)); }
    bool has_edge(int u, int v) const noexcept { return (row(u) >> v) & 1U; }
    int degree(int v) const noexcept { return std::popcount(row(v)); }
    int edge_count() const noexcept;
    int max_degree() const noexcept;
    int min_degree() const noexcept;
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) noexcept;

private:
    friend class GraphBuilder;

    int n_ = 0;
    std::array<Mask, kMaxVertices> adj_{};
};

/// Mutable scratch used by the constructors; produces a Graph on finish().
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(const Graph& g) : g_(g) {}

    int order() const noexcept { return g_.n_; }
    bool has_edge(int u, int v) const noexcept { return g_.has_edge(u, v); }
    void set_edge(int u, int v);
    void clear_edge(int u, int v);
    Graph finish() const { return g_; }

private:
    Graph g_;
};

// -- constructors -----------------------------------------------------------

Graph complete(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int m, int n);
Graph cycle(int n);
Graph path(int n);
/// Circulant graph: i ~ i±d (mod n) for each offset d.
Graph circulant(int n, std::span<const int> offsets);

// -- operators --------------------------------------------------------------

/// Disjoint union; vertices of h follow those of g.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph k_copies(const Graph& g, int k);
/// Join: disjoint union plus every edge between g and h.
Graph join(const Graph& g, const Graph& h);
Graph complement(const Graph& g);
Graph add_edge(const Graph& g, int u, int v);
Graph delete_edge(const Graph& g, int u, int v);
/// Replaces the edge uv of minimum degree sum (ties: lexicographically
/// smallest (min, max) pair) by a path u-z-v through a new last vertex z.
Graph subdivide_min_edge(const Graph& g);
/// Merges v into u; the merged vertex keeps u's index among the survivors.
Graph contract_edge(const Graph& g, int u, int v);
/// Induced subgraph; vertices renumbered in increasing order.
Graph induced(const Graph& g, VertexSet s);

// -- queries ----------------------------------------------------------------

/// Connected components in ascending order of their minimum vertex.
std::vector<VertexSet> components(const Graph& g);
/// Vertices reachable from `start` inside `within` (start must be in within).
Mask reach(const Graph& g, Mask start, Mask within) noexcept;
bool is_connected(const Graph& g);
/// True iff `s` is non-empty and induces a connected subgraph.
bool induces_connected(const Graph& g, Mask s) noexcept;
DegreeSequence degree_sequence(const Graph& g);
bool is_regular(const Graph& g, int d);
/// Girth; 0 when acyclic.
int girth(const Graph& g);

}  // namespace kst
