#include "kst/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

#include "kst/graph6.hpp"

namespace kst {

std::vector<int> refine_colors(const Graph& g)
{
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n));
    if (n == 0) return color;

    // Initial colours: rank of degree.
    std::vector<int> degs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) degs[static_cast<std::size_t>(v)] = g.degree(v);
    std::vector<int> distinct = degs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
        color[static_cast<std::size_t>(v)] = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), degs[static_cast<std::size_t>(v)]) - distinct.begin());
    }
    int classes = static_cast<int>(distinct.size());

    std::vector<int> sig;
    std::vector<int> order(static_cast<std::size_t>(n));
    while (classes < n) {
        const int width = classes + 1;
        sig.assign(static_cast<std::size_t>(n * width), 0);
        for (int v = 0; v < n; ++v) {
            int* row = &sig[static_cast<std::size_t>(v * width)];
            row[0] = color[static_cast<std::size_t>(v)];
            for_each_bit(g.row(v), [&](int w) { ++row[1 + color[static_cast<std::size_t>(w)]]; });
        }
        auto less = [&](int a, int b) {
            return std::lexicographical_compare(&sig[static_cast<std::size_t>(a * width)],
                                                &sig[static_cast<std::size_t>(a * width + width)],
                                                &sig[static_cast<std::size_t>(b * width)],
                                                &sig[static_cast<std::size_t>(b * width + width)]);
        };
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), less);
        int next = 0;
        std::vector<int> fresh(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            if (i > 0 && less(order[static_cast<std::size_t>(i - 1)], order[static_cast<std::size_t>(i)])) ++next;
            fresh[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = next;
        }
        const int new_classes = next + 1;
        color.swap(fresh);
        if (new_classes == classes) break;
        classes = new_classes;
    }
    return color;
}

namespace {

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order())
    {
        const std::vector<int> color = refine_colors(g);
        const int classes = n_ == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
        for (int c = 0; c < classes; ++c) {
            Mask cell = 0;
            for (int v = 0; v < n_; ++v)
                if (color[static_cast<std::size_t>(v)] == c) cell |= bit(v);
            for (int k = std::popcount(cell); k > 0; --k) cell_of_pos_[static_cast<std::size_t>(pos_count_++)] = cell;
        }
    }

    CanonicalForm run()
    {
        descend(0, false);
        CanonicalForm out;
        out.labelling.assign(best_perm_.begin(), best_perm_.begin() + n_);
        std::vector<Mask> rows(static_cast<std::size_t>(n_));
        for (int p = 0; p < n_; ++p) {
            for (int q = 0; q < n_; ++q) {
                if (g_.has_edge(best_perm_[static_cast<std::size_t>(p)], best_perm_[static_cast<std::size_t>(q)]))
                    rows[static_cast<std::size_t>(p)] |= bit(q);
            }
        }
        out.graph = Graph::from_rows(rows);
        return out;
    }

private:
    // Column p of the adjacency string, first pair in the most significant bit.
    Mask column(int p, int v) const
    {
        Mask col = 0;
        for (int i = 0; i < p; ++i)
            if (g_.has_edge(perm_[static_cast<std::size_t>(i)], v)) col |= Mask{1} << (63 - i);
        return col;
    }

    // `less` records that the current prefix is already smaller than the best.
    void descend(int p, bool less)
    {
        if (p == n_) {
            if (!have_best_ || less) {
                best_cols_ = cols_;
                best_perm_ = perm_;
                have_best_ = true;
                ++version_;
            }
            return;
        }
        const Mask cell = cell_of_pos_[static_cast<std::size_t>(p)] & ~used_;
        for_each_bit(cell, [&](int v) {
            const Mask col = column(p, v);
            bool child_less = less || !have_best_;
            if (have_best_ && !less) {
                if (col > best_cols_[static_cast<std::size_t>(p)]) return;
                child_less = col < best_cols_[static_cast<std::size_t>(p)];
            }
            perm_[static_cast<std::size_t>(p)] = v;
            cols_[static_cast<std::size_t>(p)] = col;
            used_ |= bit(v);
            const unsigned long before = version_;
            descend(p + 1, child_less);
            used_ &= ~bit(v);
            // A new best below shares this prefix exactly.
            if (version_ != before) less = false;
        });
    }

    const Graph& g_;
    int n_;
    int pos_count_ = 0;
    std::array<Mask, kMaxVertices> cell_of_pos_{};
    std::array<int, kMaxVertices> perm_{};
    std::array<Mask, kMaxVertices> cols_{};
    std::array<int, kMaxVertices> best_perm_{};
    std::array<Mask, kMaxVertices> best_cols_{};
    Mask used_ = 0;
    bool have_best_ = false;
    unsigned long version_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return CanonicalSearch(g).run(); }

std::uint64_t canonical_key(const Graph& g)
{
    if (g.order() > kMaxKeyedOrder) throw CapacityError("canonical_key: order above keyed limit");
    const Graph c = canonical_form(g).graph;
    std::uint64_t key = static_cast<std::uint64_t>(c.order()) << 56;
    for (int j = 1; j < c.order(); ++j)
        for (int i = 0; i < j; ++i)
            if (c.has_edge(i, j)) key |= std::uint64_t{1} << pair_index(i, j);
    return key;
}

std::vector<Graph> unlabeled_graphs(int n)
{
    if (n < 0 || n > 10) throw RangeError("unlabeled_graphs: order must be in 0..10");
    std::vector<Graph> level{Graph(0)};
    for (int m = 1; m <= n; ++m) {
        // Every graph on m vertices is some graph on m-1 vertices plus a vertex.
        std::vector<std::pair<std::pair<int, std::uint64_t>, Graph>> next;
        std::unordered_set<std::uint64_t> seen;
        for (const Graph& g : level) {
            for (Mask nb = 0; nb < (Mask{1} << (m - 1)); ++nb) {
                std::vector<Mask> rows(static_cast<std::size_t>(m));
                for (int v = 0; v < m - 1; ++v) rows[static_cast<std::size_t>(v)] = g.row(v) | (((nb >> v) & 1U) << (m - 1));
                rows[static_cast<std::size_t>(m - 1)] = nb;
                const Graph h = Graph::from_rows(rows);
                const CanonicalForm c = canonical_form(h);
                const std::uint64_t key = canonical_key(c.graph);
                if (seen.insert(key).second) next.push_back({{c.graph.edge_count(), key}, c.graph});
            }
        }
        std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        level.clear();
        for (auto& entry : next) level.push_back(entry.second);
    }
    return level;
}

namespace {

class IsoSearch {
public:
    IsoSearch(const Graph& g, const Graph& h, std::vector<int> cg, std::vector<int> ch)
        : g_(g), h_(h), cg_(std::move(cg)), ch_(std::move(ch)), n_(g.order())
    {
        // Map small colour classes first, then follow adjacency.
        std::vector<int> class_size(static_cast<std::size_t>(n_ + 1), 0);
        for (int c : cg_) ++class_size[static_cast<std::size_t>(c)];
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            const int sa = class_size[static_cast<std::size_t>(cg_[static_cast<std::size_t>(a)])];
            const int sb = class_size[static_cast<std::size_t>(cg_[static_cast<std::size_t>(b)])];
            return sa != sb ? sa < sb : cg_[static_cast<std::size_t>(a)] < cg_[static_cast<std::size_t>(b)];
        });
        map_.assign(static_cast<std::size_t>(n_), -1);
    }

    bool run() { return extend(0); }
    std::vector<int> mapping() const { return map_; }

private:
    bool extend(int depth)
    {
        if (depth == n_) return true;
        const int v = order_[static_cast<std::size_t>(depth)];
        for (int w = 0; w < n_; ++w) {
            if ((used_ >> w) & 1U) continue;
            if (ch_[static_cast<std::size_t>(w)] != cg_[static_cast<std::size_t>(v)]) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                const int u = order_[static_cast<std::size_t>(d)];
                ok = g_.has_edge(u, v) == h_.has_edge(map_[static_cast<std::size_t>(u)], w);
            }
            if (!ok) continue;
            map_[static_cast<std::size_t>(v)] = w;
            used_ |= bit(w);
            if (extend(depth + 1)) return true;
            used_ &= ~bit(w);
            map_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<int> cg_, ch_;
    int n_;
    std::vector<int> order_;
    std::vector<int> map_;
    Mask used_ = 0;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h)
{
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
    if (!(degree_sequence(g) == degree_sequence(h))) return std::nullopt;
    std::vector<int> cg = refine_colors(g);
    std::vector<int> ch = refine_colors(h);
    std::vector<int> sg = cg, sh = ch;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return std::nullopt;
    IsoSearch search(g, h, std::move(cg), std::move(ch));
    if (!search.run()) return std::nullopt;
    return search.mapping();
}

}  // namespace kst
