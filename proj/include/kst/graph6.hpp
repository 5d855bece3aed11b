#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "kst/graph.hpp"

namespace kst {

/// McKay's graph6 text encoding (no header, no trailing newline).
std::string to_graph6(const Graph& g);

/// Parses one graph6 record. An optional ">>graph6<<" header and trailing
/// whitespace are accepted; anything else malformed throws ParseError.
Graph from_graph6(std::string_view text);

/// Index of the pair (i, j), i < j, in graph6 bit order:
/// x(0,1), x(0,2), x(1,2), x(0,3), ...
constexpr int pair_index(int i, int j) noexcept { return j * (j - 1) / 2 + i; }

/// Largest order whose pair set fits one 64-bit word.
inline constexpr int kMaxPairMaskOrder = 11;

/// Edge set as a bit mask indexed by pair_index (order <= 11).
std::uint64_t pair_mask(const Graph& g);
Graph graph_from_pair_mask(int n, std::uint64_t mask);

}  // namespace kst
