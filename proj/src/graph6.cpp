#include "kst/graph6.hpp"

#include <array>
#include <vector>

namespace kst {

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph from_graph6(std::string_view text)
{
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty input");

    auto value = [&](std::size_t pos) {
        const int c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw ParseError("graph6: character out of range at offset " + std::to_string(pos));
        return c - 63;
    };

    std::size_t pos = 0;
    long n = value(pos++);
    if (n == 63) {
        if (text.size() < 4) throw ParseError("graph6: truncated size field");
        if (static_cast<unsigned char>(text[1]) == 126) throw ParseError("graph6: graphs this large are unsupported");
        n = (static_cast<long>(value(1)) << 12) | (value(2) << 6) | value(3);
        pos = 4;
        if (n <= 62) throw ParseError("graph6: non-canonical size field");
    }
    if (n > kMaxVertices) throw CapacityError("graph6: " + std::to_string(n) + " vertices exceeds capacity");

    const long bits = n * (n - 1) / 2;
    const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != expected) {
        throw ParseError("graph6: expected " + std::to_string(expected) + " characters, got " +
                         std::to_string(text.size()));
    }

    GraphBuilder b(static_cast<int>(n));
    long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int chunk = value(pos + static_cast<std::size_t>(k / 6));
            if ((chunk >> (5 - k % 6)) & 1) b.set_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        const int last = value(expected - 1);
        if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("graph6: non-zero padding bits");
    }
    return b.finish();
}

std::uint64_t pair_mask(const Graph& g)
{
    if (g.order() > kMaxPairMaskOrder) throw CapacityError("pair_mask: order above 11");
    std::uint64_t m = 0;
    for (int j = 1; j < g.order(); ++j)
        for_each_bit(g.row(j) & low_bits(j), [&](int i) { m |= std::uint64_t{1} << pair_index(i, j); });
    return m;
}

Graph graph_from_pair_mask(int n, std::uint64_t mask)
{
    if (n < 0 || n > kMaxPairMaskOrder) throw CapacityError("graph_from_pair_mask: order above 11");
    std::array<Mask, kMaxPairMaskOrder> rows{};
    int k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if ((mask >> k) & 1U) {
                rows[static_cast<std::size_t>(i)] |= bit(j);
                rows[static_cast<std::size_t>(j)] |= bit(i);
            }
        }
    }
    if (n * (n - 1) / 2 < 64 && (mask >> (n * (n - 1) / 2)) != 0) throw ContractError("graph_from_pair_mask: stray bits");
    return Graph::from_rows(std::span<const Mask>(rows.data(), static_cast<std::size_t>(n)));
}

}  // namespace kst
