#pragma once

// Exhaustive searches over small graphs: the A_alpha maximiser among
// K_{s,t}-minor-free graphs, and the edge-count checks for graphs with the
// (s,t)-property.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kst/constructions.hpp"
#include "kst/graph.hpp"

namespace kst {

enum class SearchMode {
    /// Every minor-free labelled graph is evaluated.
    full,
    /// Only edge-maximal minor-free labelled graphs are evaluated.
    pruned,
    /// K_{s-1} joined to every unlabelled H on n-s+1 vertices with the
    /// (s,t)-property. Not a full scan; needs n-s+1 <= 9.
    dominated,
};

const char* to_string(SearchMode m) noexcept;

struct SearchOptions {
    SearchMode mode = SearchMode::pruned;
    int jobs = 1;
};

struct SearchResult {
    int n = 0, s = 0, t = 0;
    double alpha = 0.0;
    SearchMode mode = SearchMode::pruned;
    Graph best_graph;
    double best_rho = 0.0;
    long graphs_scanned = 0;
    long minor_free_count = 0;
    long rho_evaluations = 0;
    /// The best graph passed a fresh generic minor search.
    bool best_reverified = false;
    /// extremal_gstar exists at this order.
    bool construction_available = false;
    double construction_rho = 0.0;
    /// best_rho >= construction_rho - 1e-10.
    bool dominates_construction = false;
    /// Equal rho, degree sequence, edge count, and an explicit isomorphism.
    bool matches_construction = false;
};

/// Largest rho_alpha over K_{s,t}-minor-free graphs on n vertices.
/// full/pruned need n <= 8; dominated needs n - s + 1 <= 9.
/// Ties go to the smallest edge mask (graph6 bit order).
SearchResult brute_force_extremal(int n, int s, int t, double alpha, const SearchOptions& options = {});

struct EdgeMaximumReport {
    int s = 0, t = 0;
    long graphs = 0;
    long connected_with_property = 0;
    int expected_edges = 0;
    int max_edges = -1;
    long maximizers = 0;
    /// Maximisers whose complement is a forest with beta components.
    long maximizers_with_forest_complement = 0;
    /// Inclusion-maximal property graphs, and those among them below the maximum.
    long inclusion_maximal = 0;
    long inclusion_maximal_below_maximum = 0;
    std::string example_below_maximum;  // graph6
    bool ok = false;
};

/// Connected graphs on t+1 vertices with the (s,t)-property: the maximum edge
/// count is C(t,2)+beta-1 and every graph attaining it has a forest complement
/// with beta components. Exhaustive over labelled graphs, t <= 5.
EdgeMaximumReport verify_property_edge_maximum(int t, int s);

struct TwoExtraVertexReport {
    int s = 0, t = 0;
    long classes = 0;
    long connected_with_property = 0;
    int bound = 0;
    int max_edges = -1;
    long violations = 0;
    long equality_graphs = 0;
    long equality_matched = 0;
    std::vector<std::string> unmatched;  // graph6 of equality complements matching no family member
    bool ok = false;
};

/// Connected graphs on t+2 vertices with the (s,t)-property have at most
/// C(t,2)+2 edges; equality complements are isomorphic to h_abc(a,b,c) with
/// a+b+c = t-1 (or the Petersen graph). Exhaustive over isomorphism classes,
/// t <= 5 and beta <= 2.
TwoExtraVertexReport verify_two_extra_vertex_bound(int t, int s);

struct LocalMaximalityReport {
    int s = 0, t = 0;
    int max_part = 0;
    long parts_checked = 0;
    long alternatives = 0;
    long violations = 0;
    bool ok = false;
};

/// For every component H of g - K (and every pair of components) with at most
/// max_part vertices, no graph on |H| vertices with the (s,t)-property has
/// more edges than H.
LocalMaximalityReport verify_local_edge_maximality(const Graph& g, VertexSet k, int s, int t, int max_part);

/// Same parts; no equal-size property graph with e(H) edges has a degree
/// sequence strictly above pi(H) in the majorization order.
LocalMaximalityReport verify_degree_majorization_maximality(const Graph& g, VertexSet k, int s, int t, int max_part);

struct ComponentCensus {
    int below_t = 0;   // H_{<t}
    int t = 0;         // H_t
    int t_plus_1 = 0;  // H_{t+1}
    int t_plus_2 = 0;  // H_{t+2}
    int t_plus_3 = 0;  // H_{t+3}
    int above = 0;     // H_{>t+3}

    int total() const noexcept { return below_t + t + t_plus_1 + t_plus_2 + t_plus_3 + above; }
};

ComponentCensus component_census(const Graph& g, VertexSet k, int t);

struct StructureReport {
    int n = 0, s = 0, t = 0;
    VertexSet k;
    ComponentCensus census;
    bool no_large_components = false;       // H_{>t+3} and H_{t+3} empty
    bool at_most_one_irregular = false;     // |H_{<t} u H_{t+2}| <= 1
    bool bounded_t_plus_1 = false;          // |H_{t+1}| <= 2(beta-1)
    bool exclusive_t_plus_1 = false;        // H_{t+1} nonempty => H_{t+2} u H_{<t} empty
    bool t_plus_1_shapes = false;           // each is the star-forest complement
    bool t_plus_2_shapes = false;           // subdivided complement or Petersen complement
    bool ok = false;
};

/// Component structure of g - K for K the first s-1 full-degree vertices.
/// Throws ContractError when g has no such K.
StructureReport verify_structure(const Graph& g, int s, int t);

}  // namespace kst
