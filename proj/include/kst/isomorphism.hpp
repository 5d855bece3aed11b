#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kst/graph.hpp"

namespace kst {

/// Iterated degree refinement. Colours are ranks of sorted signatures, so
/// isomorphic graphs receive identical colour names.
std::vector<int> refine_colors(const Graph& g);

struct CanonicalForm {
    Graph graph;
    /// labelling[p] is the original vertex placed at position p.
    std::vector<int> labelling;
};

/// Lexicographically minimal graph6-order adjacency string over all
/// relabellings that respect the refined colour order.
CanonicalForm canonical_form(const Graph& g);

inline constexpr int kMaxKeyedOrder = 11;

/// Packs the canonical form into 64 bits (edge bits plus the order).
/// Requires order <= kMaxKeyedOrder.
std::uint64_t canonical_key(const Graph& g);

/// One representative per isomorphism class on n vertices (n <= 10), each in
/// canonical form, sorted by edge count then canonical key.
std::vector<Graph> unlabeled_graphs(int n);

/// Isomorphism g -> h as a vertex map, if one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

inline bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace kst
