#pragma once

// Minor containment by branch-set search, specialised to K_{s,t}.

#include <optional>
#include <string>
#include <vector>

#include "kst/constructions.hpp"
#include "kst/graph.hpp"

namespace kst {

/// Largest host the generic search accepts.
inline constexpr int kMaxMinorHost = 14;

/// branch_sets[i] is the host vertex set contracted onto pattern vertex i.
struct MinorWitness {
    std::vector<VertexSet> branch_sets;
};

/// Disjoint, connected, non-empty branch sets with a host edge for every
/// pattern edge.
bool is_valid_witness(const Graph& host, const Graph& pattern, const MinorWitness& w);

/// Exhaustive branch-set search. Throws CapacityError when the host has more
/// than kMaxMinorHost vertices.
std::optional<MinorWitness> has_minor(const Graph& host, const Graph& pattern);

/// K_{1,b} minor test: some connected C has at least b neighbours outside C.
/// Works for any host order but enumerates connected sets.
bool has_star_minor(const Graph& g, int b);

/// No K_{a,b} minor. a = 1 uses has_star_minor; otherwise each component is
/// searched generically (components above kMaxMinorHost throw CapacityError).
bool is_kab_minor_free(const Graph& g, int a, int b);

inline bool is_kst_minor_free(const Graph& g, int s, int t) { return is_kab_minor_free(g, s, t); }

/// K_{a,t+1-a}-minor free for every 1 <= a <= gamma.
bool has_st_property(const Graph& g, const StParams& params);

/// First `size` vertices of degree n-1, if there are that many.
std::optional<VertexSet> clique_dominating_set(const Graph& g, int size);

/// Decides K_{s,t}-minor-freeness of g through g - k, which must have the
/// (s,t)-property. k must be a clique dominating set of size s-1
/// (ContractError otherwise). Reaches hosts beyond kMaxMinorHost as long as
/// the components of g - k stay within it.
bool minor_free_by_clique_reduction(const Graph& g, VertexSet k, int s, int t);

struct CliqueReductionReport {
    int s = 0, t = 0;
    VertexSet k;
    bool minor_free = false;
    bool remainder_has_property = false;
    bool ok = false;
};

/// With K a clique dominating set of size s-1, compares K_{s,t}-minor-freeness
/// of g (direct search) with the (s,t)-property of g - K.
CliqueReductionReport verify_clique_reduction(const Graph& g, int s, int t);

struct ComplementCriterionReport {
    int s = 0, t = 0;
    long graphs = 0;
    long connected = 0;
    long with_property = 0;
    long counterexamples = 0;
    std::string first_counterexample;  // graph6
    bool ok = false;
};

/// Over all labelled connected graphs on t+1 vertices: (s,t)-property iff
/// every component of the complement has at least gamma+1 vertices. t <= 6.
ComplementCriterionReport verify_complement_component_criterion(int t, int s);

struct StarMinorEdgeReport {
    int t = 0, n = 0;
    long graphs = 0;
    long connected_free = 0;
    int bound = 0;
    int max_edges = -1;
    std::string witness;  // graph6 of an extremal graph attaining max_edges
    long violations = 0;
    bool equality_attained = false;
    bool ok = false;
};

/// Every connected K_{1,t}-minor-free graph on n vertices has at most
/// C(t,2)+n-t edges, and some graph attains it. Exhaustive, n <= 8.
StarMinorEdgeReport verify_star_minor_edge_bound(int t, int n);

}  // namespace kst
