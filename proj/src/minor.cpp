#include "kst/minor.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "kst/graph6.hpp"

namespace kst {

bool is_valid_witness(const Graph& host, const Graph& pattern, const MinorWitness& w)
{
    if (static_cast<int>(w.branch_sets.size()) != pattern.order()) return false;
    Mask used = 0;
    for (const VertexSet& b : w.branch_sets) {
        if (b.empty() || (b.mask() & used) || (b.mask() & ~low_bits(host.order()))) return false;
        if (!induces_connected(host, b.mask())) return false;
        used |= b.mask();
    }
    for (auto [i, j] : pattern.edges()) {
        Mask nb = 0;
        for_each_bit(w.branch_sets[static_cast<std::size_t>(i)].mask(), [&](int v) { nb |= host.row(v); });
        if (!(nb & w.branch_sets[static_cast<std::size_t>(j)].mask())) return false;
    }
    return true;
}

namespace {

constexpr int kMaxLabels = kMaxMinorHost;

// Labels host vertices with pattern vertices (or leaves them unused when
// allowed) depth first; every partial state is checked for connectivity and
// adjacency feasibility before descending.
class BranchSearch {
public:
    BranchSearch(const Graph& host, const Graph& pattern, bool allow_unused)
        : g_(host), n_(host.order()), k_(pattern.order()), allow_unused_(allow_unused)
    {
        // Pattern labels by descending degree.
        label_to_pattern_.resize(static_cast<std::size_t>(k_));
        std::iota(label_to_pattern_.begin(), label_to_pattern_.end(), 0);
        std::stable_sort(label_to_pattern_.begin(), label_to_pattern_.end(),
                         [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
        std::array<int, kMaxLabels> pattern_to_label{};
        for (int l = 0; l < k_; ++l) pattern_to_label[static_cast<std::size_t>(label_to_pattern_[static_cast<std::size_t>(l)])] = l;
        for (int l = 0; l < k_; ++l) {
            const int pv = label_to_pattern_[static_cast<std::size_t>(l)];
            Mask m = 0;
            for_each_bit(pattern.row(pv), [&](int q) { m |= bit(pattern_to_label[static_cast<std::size_t>(q)]); });
            padj_[static_cast<std::size_t>(l)] = m;
            pdeg_[static_cast<std::size_t>(l)] = pattern.degree(pv);
        }
        // Twin labels are interchangeable: open them in order.
        for (int l = 0; l < k_; ++l) {
            twin_prev_[static_cast<std::size_t>(l)] = -1;
            for (int m = l - 1; m >= 0; --m) {
                if ((padj_[static_cast<std::size_t>(l)] & ~bit(m)) == (padj_[static_cast<std::size_t>(m)] & ~bit(l))) {
                    twin_prev_[static_cast<std::size_t>(l)] = m;
                    break;
                }
            }
        }
        build_visit_order();
    }

    std::optional<MinorWitness> run()
    {
        undecided_ = low_bits(n_);
        if (!descend(0)) return std::nullopt;
        MinorWitness w;
        w.branch_sets.resize(static_cast<std::size_t>(k_));
        for (int l = 0; l < k_; ++l)
            w.branch_sets[static_cast<std::size_t>(label_to_pattern_[static_cast<std::size_t>(l)])] =
                VertexSet(sets_[static_cast<std::size_t>(l)]);
        return w;
    }

private:
    // Breadth-first from a maximum-degree vertex, neighbours by descending degree.
    void build_visit_order()
    {
        Mask seen = 0;
        while (static_cast<int>(order_.size()) < n_) {
            int root = -1;
            for (int v = 0; v < n_; ++v)
                if (!((seen >> v) & 1U) && (root < 0 || g_.degree(v) > g_.degree(root))) root = v;
            std::vector<int> queue{root};
            seen |= bit(root);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const int v = queue[head];
                order_.push_back(v);
                std::vector<int> next;
                for_each_bit(g_.row(v) & ~seen, [&](int w) { next.push_back(w); });
                std::stable_sort(next.begin(), next.end(), [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
                for (int w : next) {
                    seen |= bit(w);
                    queue.push_back(w);
                }
            }
        }
    }

    Mask closed_neighbourhood_union(Mask s) const
    {
        Mask nb = 0;
        for_each_bit(s, [&](int v) { nb |= g_.row(v); });
        return nb;
    }

    bool feasible() const
    {
        int empties = 0;
        for (int l = 0; l < k_; ++l)
            if (!sets_[static_cast<std::size_t>(l)]) ++empties;
        const int free_count = std::popcount(undecided_);
        if (empties > free_count) return false;

        std::array<Mask, kMaxLabels> region{};
        std::array<Mask, kMaxLabels> near{};
        for (int l = 0; l < k_; ++l) {
            const Mask b = sets_[static_cast<std::size_t>(l)];
            if (!b) continue;
            const Mask r = reach(g_, b & (~b + 1), b | undecided_);
            if ((r & b) != b) return false;
            region[static_cast<std::size_t>(l)] = r;
            near[static_cast<std::size_t>(l)] = closed_neighbourhood_union(r);
        }
        for (int l = 0; l < k_; ++l) {
            if (!sets_[static_cast<std::size_t>(l)]) continue;
            const Mask nb = near[static_cast<std::size_t>(l)];
            int reachable_labels = 0;
            for (int m = 0; m < k_; ++m) {
                if (m == l) continue;
                const bool open = sets_[static_cast<std::size_t>(m)] != 0;
                const bool touch = open && (nb & region[static_cast<std::size_t>(m)]);
                if (open && touch) ++reachable_labels;
                if (open && !touch && ((padj_[static_cast<std::size_t>(l)] >> m) & 1U)) return false;
            }
            const Mask spare = nb & undecided_;
            if (empties > 0) {
                if (!spare) {
                    // An unopened pattern neighbour could never touch this set.
                    for (int m = 0; m < k_; ++m)
                        if (!sets_[static_cast<std::size_t>(m)] && ((padj_[static_cast<std::size_t>(l)] >> m) & 1U))
                            return false;
                }
                reachable_labels += std::min(empties, std::popcount(spare));
            }
            if (reachable_labels < pdeg_[static_cast<std::size_t>(l)]) return false;
        }
        return true;
    }

    bool descend(int idx)
    {
        if (idx == n_) {
            for (int l = 0; l < k_; ++l)
                if (!sets_[static_cast<std::size_t>(l)]) return false;
            return true;
        }
        const int v = order_[static_cast<std::size_t>(idx)];
        undecided_ &= ~bit(v);
        for (int l = 0; l < k_; ++l) {
            Mask& set = sets_[static_cast<std::size_t>(l)];
            if (!set) {
                const int prev = twin_prev_[static_cast<std::size_t>(l)];
                if (prev >= 0 && !sets_[static_cast<std::size_t>(prev)]) continue;
            }
            set |= bit(v);
            if (feasible() && descend(idx + 1)) return true;
            set &= ~bit(v);
        }
        if (allow_unused_ && feasible() && descend(idx + 1)) return true;
        undecided_ |= bit(v);
        return false;
    }

    const Graph& g_;
    int n_;
    int k_;
    bool allow_unused_;
    std::vector<int> label_to_pattern_;
    std::array<Mask, kMaxLabels> padj_{};
    std::array<int, kMaxLabels> pdeg_{};
    std::array<int, kMaxLabels> twin_prev_{};
    std::vector<int> order_;
    std::array<Mask, kMaxLabels> sets_{};
    Mask undecided_ = 0;
};

std::optional<MinorWitness> search_connected_pattern(const Graph& host, const Graph& pattern)
{
    for (const VertexSet& comp : components(host)) {
        if (comp.size() < pattern.order()) continue;
        const Graph sub = induced(host, comp);
        if (sub.edge_count() < pattern.edge_count()) continue;
        auto w = BranchSearch(sub, pattern, false).run();
        if (!w) continue;
        const std::vector<int> original = comp.to_vector();
        for (VertexSet& b : w->branch_sets) {
            Mask m = 0;
            for_each_bit(b.mask(), [&](int v) { m |= bit(original[static_cast<std::size_t>(v)]); });
            b = VertexSet(m);
        }
        return w;
    }
    return std::nullopt;
}

}  // namespace

std::optional<MinorWitness> has_minor(const Graph& host, const Graph& pattern)
{
    if (host.order() > kMaxMinorHost) {
        throw CapacityError("has_minor: host has " + std::to_string(host.order()) + " vertices, search is limited to " +
                            std::to_string(kMaxMinorHost));
    }
    if (pattern.order() < 1) throw ContractError("has_minor: empty pattern");
    if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count()) return std::nullopt;

    std::optional<MinorWitness> w;
    if (is_connected(host)) {
        w = BranchSearch(host, pattern, false).run();
    } else if (is_connected(pattern)) {
        w = search_connected_pattern(host, pattern);
    } else {
        w = BranchSearch(host, pattern, true).run();
    }
    if (w && !is_valid_witness(host, pattern, *w)) throw std::logic_error("has_minor: produced an invalid witness");
    return w;
}

namespace {

class StarSearch {
public:
    StarSearch(const Graph& g, int b) : g_(g), b_(b), n_(g.order()) {}

    bool run()
    {
        for (int v = 0; v < n_; ++v) {
            allowed_ = low_bits(n_) & ~low_bits(v + 1);
            if (grow(bit(v), 0)) return true;
        }
        return false;
    }

private:
    bool grow(Mask c, Mask excluded)
    {
        Mask nb = 0;
        for_each_bit(c, [&](int v) { nb |= g_.row(v); });
        nb &= ~c;
        if (std::popcount(nb) >= b_) return true;
        if (n_ - std::popcount(c) - 1 < b_) return false;
        Mask cand = nb & allowed_ & ~excluded;
        while (cand) {
            const int u = std::countr_zero(cand);
            cand &= cand - 1;
            if (grow(c | bit(u), excluded)) return true;
            excluded |= bit(u);
        }
        return false;
    }

    const Graph& g_;
    int b_;
    int n_;
    Mask allowed_ = 0;
};

}  // namespace

bool has_star_minor(const Graph& g, int b)
{
    if (b <= 0) return g.order() >= 1;
    if (g.order() < b + 1) return false;
    if (g.max_degree() >= b) return true;
    return StarSearch(g, b).run();
}

bool is_kab_minor_free(const Graph& g, int a, int b)
{
    if (a < 1 || b < 1) throw ContractError("K_{a,b} needs a, b >= 1");
    if (a > b) std::swap(a, b);
    if (a == 1) return !has_star_minor(g, b);
    const Graph pattern = complete_bipartite(a, b);
    for (const VertexSet& comp : components(g)) {
        if (comp.size() < a + b) continue;
        if (has_minor(induced(g, comp), pattern)) return false;
    }
    return true;
}

bool has_st_property(const Graph& g, const StParams& params)
{
    for (int a = 1; a <= params.gamma(); ++a)
        if (!is_kab_minor_free(g, a, params.t + 1 - a)) return false;
    return true;
}

std::optional<VertexSet> clique_dominating_set(const Graph& g, int size)
{
    if (size < 0) throw ContractError("clique_dominating_set: negative size");
    Mask k = 0;
    int found = 0;
    for (int v = 0; v < g.order() && found < size; ++v) {
        if (g.degree(v) == g.order() - 1) {
            k |= bit(v);
            ++found;
        }
    }
    if (found < size) return std::nullopt;
    return VertexSet(k);
}

bool minor_free_by_clique_reduction(const Graph& g, VertexSet k, int s, int t)
{
    const StParams params(s, t);
    if (k.size() != s - 1) throw ContractError("k must have s-1 vertices");
    if ((k.mask() & ~g.vertices().mask()) != 0) throw ContractError("k is not a vertex subset");
    for_each_bit(k.mask(), [&](int v) {
        if (g.degree(v) != g.order() - 1) throw ContractError("k is not a clique dominating set");
    });
    return has_st_property(induced(g, VertexSet(g.vertices().mask() & ~k.mask())), params);
}

CliqueReductionReport verify_clique_reduction(const Graph& g, int s, int t)
{
    const StParams params(s, t);
    const auto k = clique_dominating_set(g, s - 1);
    if (!k) throw ContractError("graph has no clique dominating set of size s-1");
    CliqueReductionReport rep;
    rep.s = s;
    rep.t = t;
    rep.k = *k;
    rep.minor_free = is_kst_minor_free(g, s, t);
    rep.remainder_has_property = has_st_property(induced(g, VertexSet(low_bits(g.order()) & ~k->mask())), params);
    rep.ok = rep.minor_free == rep.remainder_has_property;
    return rep;
}

namespace {

int smallest_component(const Graph& g)
{
    int best = g.order();
    for (const VertexSet& c : components(g)) best = std::min(best, c.size());
    return best;
}

}  // namespace

ComplementCriterionReport verify_complement_component_criterion(int t, int s)
{
    const StParams params(s, t);
    if (t + 1 > 7) throw RangeError("exhaustive mode covers t <= 6");
    const int n = t + 1;
    const int pairs = n * (n - 1) / 2;
    ComplementCriterionReport rep;
    rep.s = s;
    rep.t = t;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
        ++rep.graphs;
        const Graph g = graph_from_pair_mask(n, m);
        if (!is_connected(g)) continue;
        ++rep.connected;
        const bool property = has_st_property(g, params);
        if (property) ++rep.with_property;
        const bool criterion = smallest_component(complement(g)) >= params.gamma() + 1;
        if (property != criterion) {
            if (rep.counterexamples++ == 0) rep.first_counterexample = to_graph6(g);
        }
    }
    rep.ok = rep.counterexamples == 0;
    return rep;
}

StarMinorEdgeReport verify_star_minor_edge_bound(int t, int n)
{
    if (t < 3) throw RangeError("need t >= 3");
    if (n < t || n > 8) throw RangeError("exhaustive mode covers t <= n <= 8");
    const int pairs = n * (n - 1) / 2;
    StarMinorEdgeReport rep;
    rep.t = t;
    rep.n = n;
    rep.bound = t * (t - 1) / 2 + n - t;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
        ++rep.graphs;
        const int e = std::popcount(m);
        if (e < n - 1) continue;  // cannot be connected
        // Build rows directly; a vertex of degree >= t already gives K_{1,t}.
        std::array<Mask, 8> rows{};
        int k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k)
                if ((m >> k) & 1U) {
                    rows[static_cast<std::size_t>(i)] |= bit(j);
                    rows[static_cast<std::size_t>(j)] |= bit(i);
                }
        bool high = false;
        for (int v = 0; v < n; ++v) high = high || std::popcount(rows[static_cast<std::size_t>(v)]) >= t;
        if (high) continue;
        const Graph g = Graph::from_rows(std::span<const Mask>(rows.data(), static_cast<std::size_t>(n)));
        if (!is_connected(g) || has_star_minor(g, t)) continue;
        ++rep.connected_free;
        if (e > rep.bound) ++rep.violations;
        if (e > rep.max_edges) {
            rep.max_edges = e;
            rep.witness = to_graph6(g);
        }
    }
    rep.equality_attained = rep.max_edges == rep.bound;
    rep.ok = rep.violations == 0 && rep.equality_attained;
    return rep;
}

}  // namespace kst
