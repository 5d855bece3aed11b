#include "kst/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>
#include <unordered_map>

#include "kst/graph6.hpp"
#include "kst/isomorphism.hpp"
#include "kst/majorization.hpp"
#include "kst/minor.hpp"
#include "kst/spectral.hpp"

namespace kst {

const char* to_string(SearchMode m) noexcept
{
    switch (m) {
    case SearchMode::full: return "full";
    case SearchMode::pruned: return "pruned";
    case SearchMode::dominated: return "dominated";
    }
    return "?";
}

namespace {

// Two rho values this close are treated as a tie (roundoff between isomorphs).
constexpr double kTieTol = 1e-12;

int choose2(int n) { return n * (n - 1) / 2; }

// One bit per labelled graph, indexed by edge mask.
class MaskBitmap {
public:
    explicit MaskBitmap(std::uint64_t size) : words_((size + 63) / 64, 0) {}
    bool test(std::uint64_t m) const { return (words_[m >> 6] >> (m & 63)) & 1U; }
    void set(std::uint64_t m) { words_[m >> 6] |= std::uint64_t{1} << (m & 63); }

private:
    std::vector<std::uint64_t> words_;
};

// Labelled graphs on n vertices failing a minor-closed property. The property
// is monotone under edge deletion, so a mask fails as soon as some one-edge
// deletion fails; only the rest need the real test, memoised per class.
template <class Test>
MaskBitmap failing_masks(int n, Test&& passes_property)
{
    const int edges = choose2(n);
    const std::uint64_t total = std::uint64_t{1} << edges;
    MaskBitmap fails(total);
    std::unordered_map<std::uint64_t, bool> memo;
    for (std::uint64_t m = 0; m < total; ++m) {
        bool inherited = false;
        for (std::uint64_t rest = m; rest; rest &= rest - 1) {
            if (fails.test(m & ~(rest & -rest))) {
                inherited = true;
                break;
            }
        }
        if (inherited) {
            fails.set(m);
            continue;
        }
        const Graph g = graph_from_pair_mask(n, m);
        const std::uint64_t key = canonical_key(g);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, passes_property(g)).first;
        if (!it->second) fails.set(m);
    }
    return fails;
}

struct Candidate {
    double rho = -1.0;
    std::uint64_t mask = 0;
    bool valid = false;
};

bool beats(double rho, std::uint64_t mask, const Candidate& best)
{
    if (!best.valid) return true;
    if (rho > best.rho + kTieTol) return true;
    return std::abs(rho - best.rho) <= kTieTol && mask < best.mask;
}

struct ChunkResult {
    Candidate best;
    long minor_free = 0;
    long evaluations = 0;
};

void compare_with_construction(SearchResult& res)
{
    const StParams params(res.s, res.t);
    Graph gstar;
    try {
        gstar = extremal_gstar(res.n, params);
    } catch (const ContractError&) {
        return;
    }
    res.construction_available = true;
    res.construction_rho = rho_alpha(gstar, res.alpha);
    res.dominates_construction = res.best_rho >= res.construction_rho - 1e-10;
    res.matches_construction = std::abs(res.best_rho - res.construction_rho) <= 1e-10 &&
                               res.best_graph.edge_count() == gstar.edge_count() &&
                               degree_sequence(res.best_graph) == degree_sequence(gstar) &&
                               are_isomorphic(res.best_graph, gstar);
}

void labelled_scan(SearchResult& res, bool pruned, int jobs)
{
    const int n = res.n, s = res.s, t = res.t;
    const double alpha = res.alpha;
    const int edges = choose2(n);
    const std::uint64_t total = std::uint64_t{1} << edges;

    // Pass 1 (serial): masks containing a K_{s,t} minor.
    const MaskBitmap has_minor_bits = failing_masks(n, [&](const Graph& g) {
        if (g.edge_count() < s * t || n < s + t) return true;
        return is_kst_minor_free(g, s, t);
    });

    // Pass 2: rho over the survivors. A fixed chunk count keeps the merge
    // order, and so the tie-breaking, independent of the thread count.
    constexpr int kChunks = 64;
    std::vector<ChunkResult> chunks(kChunks);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int c = next++; c < kChunks; c = next++) {
            ChunkResult& out = chunks[static_cast<std::size_t>(c)];
            const std::uint64_t lo = total * static_cast<std::uint64_t>(c) / kChunks;
            const std::uint64_t hi = total * static_cast<std::uint64_t>(c + 1) / kChunks;
            for (std::uint64_t m = lo; m < hi; ++m) {
                if (has_minor_bits.test(m)) continue;
                ++out.minor_free;
                if (pruned) {
                    // Adding an edge never lowers rho, so only edge-maximal masks matter.
                    bool maximal = true;
                    const std::uint64_t missing = ~m & (total - 1);
                    for (std::uint64_t rest = missing; rest && maximal; rest &= rest - 1)
                        maximal = has_minor_bits.test(m | (rest & -rest));
                    if (!maximal) continue;
                }
                ++out.evaluations;
                const double rho = rho_alpha(graph_from_pair_mask(n, m), alpha);
                if (beats(rho, m, out.best)) out.best = {rho, m, true};
            }
        }
    };
    const int threads = std::max(1, std::min(jobs, kChunks));
    std::vector<std::thread> pool;
    for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    Candidate best;
    for (const ChunkResult& c : chunks) {
        res.minor_free_count += c.minor_free;
        res.rho_evaluations += c.evaluations;
        if (c.best.valid && beats(c.best.rho, c.best.mask, best)) best = c.best;
    }
    res.graphs_scanned = static_cast<long>(total);
    res.best_graph = graph_from_pair_mask(n, best.mask);
    res.best_rho = best.rho;
}

void dominated_scan(SearchResult& res)
{
    const int m = res.n - res.s + 1;
    if (m < 1 || m > 9) throw RangeError("dominated search needs 1 <= n-s+1 <= 9");
    const StParams params(res.s, res.t);
    const Graph k = complete(res.s - 1);
    Candidate best;
    Graph best_graph;
    long index = 0;
    for (const Graph& h : unlabeled_graphs(m)) {
        ++res.graphs_scanned;
        if (!has_st_property(h, params)) {
            ++index;
            continue;
        }
        ++res.minor_free_count;
        ++res.rho_evaluations;
        const Graph g = join(k, h);
        const double rho = rho_alpha(g, res.alpha);
        if (beats(rho, static_cast<std::uint64_t>(index), best)) {
            best = {rho, static_cast<std::uint64_t>(index), true};
            best_graph = g;
        }
        ++index;
    }
    res.best_graph = best_graph;
    res.best_rho = best.rho;
}

}  // namespace

SearchResult brute_force_extremal(int n, int s, int t, double alpha, const SearchOptions& options)
{
    check_alpha(alpha);
    StParams{s, t};  // validates 2 <= s <= t
    SearchResult res;
    res.n = n;
    res.s = s;
    res.t = t;
    res.alpha = alpha;
    res.mode = options.mode;
    if (options.jobs < 1) throw RangeError("jobs must be positive");
    if (options.mode == SearchMode::dominated) {
        if (n < s) throw RangeError("dominated search needs n >= s");
        dominated_scan(res);
    } else {
        if (n < 1 || n > 8) throw CapacityError("labelled search covers 1 <= n <= 8");
        labelled_scan(res, options.mode == SearchMode::pruned, options.jobs);
    }
    // Fresh generic search, not the memo that selected it.
    res.best_reverified = !has_minor(res.best_graph, complete_bipartite(s, t)).has_value();
    compare_with_construction(res);
    return res;
}

namespace {

bool complement_is_forest_with(const Graph& g, int parts)
{
    const Graph c = complement(g);
    const int comps = static_cast<int>(components(c).size());
    return comps == parts && c.edge_count() == c.order() - comps;
}

}  // namespace

EdgeMaximumReport verify_property_edge_maximum(int t, int s)
{
    if (t < 2 || t > 5) throw RangeError("edge-maximum check covers 2 <= t <= 5");
    const StParams params(s, t);
    const int n = t + 1;
    const int edges = choose2(n);
    const std::uint64_t total = std::uint64_t{1} << edges;
    const MaskBitmap lacks = failing_masks(n, [&](const Graph& g) { return has_st_property(g, params); });

    EdgeMaximumReport rep;
    rep.s = s;
    rep.t = t;
    rep.expected_edges = choose2(t) + params.beta() - 1;
    std::vector<std::uint64_t> maximal;
    for (std::uint64_t m = 0; m < total; ++m) {
        ++rep.graphs;
        if (lacks.test(m)) continue;
        const Graph g = graph_from_pair_mask(n, m);
        if (!is_connected(g)) continue;
        ++rep.connected_with_property;
        rep.max_edges = std::max(rep.max_edges, g.edge_count());
        bool inclusion_max = true;
        for (std::uint64_t rest = ~m & (total - 1); rest && inclusion_max; rest &= rest - 1)
            inclusion_max = lacks.test(m | (rest & -rest));
        if (inclusion_max) maximal.push_back(m);
    }
    for (std::uint64_t m = 0; m < total; ++m) {
        if (lacks.test(m)) continue;
        const Graph g = graph_from_pair_mask(n, m);
        if (g.edge_count() != rep.max_edges || !is_connected(g)) continue;
        ++rep.maximizers;
        if (complement_is_forest_with(g, params.beta())) ++rep.maximizers_with_forest_complement;
    }
    rep.inclusion_maximal = static_cast<long>(maximal.size());
    for (std::uint64_t m : maximal) {
        const Graph g = graph_from_pair_mask(n, m);
        if (g.edge_count() < rep.max_edges) {
            if (rep.inclusion_maximal_below_maximum++ == 0) rep.example_below_maximum = to_graph6(g);
        }
    }
    rep.ok = rep.connected_with_property > 0 && rep.max_edges == rep.expected_edges &&
             rep.maximizers > 0 && rep.maximizers == rep.maximizers_with_forest_complement;
    return rep;
}

TwoExtraVertexReport verify_two_extra_vertex_bound(int t, int s)
{
    if (t < 2 || t > 5) throw RangeError("two-extra-vertex check covers 2 <= t <= 5");
    const StParams params(s, t);
    if (params.beta() > 2) throw RangeError("two-extra-vertex check needs beta <= 2");
    const int n = t + 2;

    std::vector<Graph> family;
    for (int a = 0; a <= t - 3; ++a)
        for (int b = 1; a + b <= t - 2; ++b) family.push_back(h_abc(a, b, t - 1 - a - b));

    TwoExtraVertexReport rep;
    rep.s = s;
    rep.t = t;
    rep.bound = choose2(t) + 2;
    for (const Graph& g : unlabeled_graphs(n)) {
        ++rep.classes;
        if (!is_connected(g) || !has_st_property(g, params)) continue;
        ++rep.connected_with_property;
        const int e = g.edge_count();
        rep.max_edges = std::max(rep.max_edges, e);
        if (e > rep.bound) ++rep.violations;
        if (e != rep.bound) continue;
        ++rep.equality_graphs;
        const Graph c = complement(g);
        const bool matched =
            std::any_of(family.begin(), family.end(), [&](const Graph& f) { return are_isomorphic(c, f); });
        if (matched)
            ++rep.equality_matched;
        else
            rep.unmatched.push_back(to_graph6(c));
    }
    rep.ok = rep.violations == 0 && rep.unmatched.empty();
    return rep;
}

namespace {

struct CatalogEntry {
    int edges;
    DegreeSequence degrees;
};

// Property graphs on m vertices, one per isomorphism class.
class PropertyCatalog {
public:
    explicit PropertyCatalog(const StParams& params) : params_(params) {}

    const std::vector<CatalogEntry>& on(int m)
    {
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
        std::vector<CatalogEntry> list;
        for (const Graph& g : unlabeled_graphs(m))
            if (has_st_property(g, params_)) list.push_back({g.edge_count(), degree_sequence(g)});
        return cache_.emplace(m, std::move(list)).first->second;
    }

private:
    StParams params_;
    std::map<int, std::vector<CatalogEntry>> cache_;
};

// Components of g - k, then pairs of components, up to max_part vertices.
std::vector<Graph> small_parts(const Graph& g, VertexSet k, int max_part)
{
    if (max_part < 1 || max_part > 7) throw RangeError("max_part must be in 1..7");
    if ((k.mask() & ~g.vertices().mask()) != 0) throw ContractError("k is not a vertex subset");
    const Graph rest = induced(g, VertexSet(g.vertices().mask() & ~k.mask()));
    const std::vector<VertexSet> comps = components(rest);
    std::vector<Graph> parts;
    for (const VertexSet& c : comps)
        if (c.size() <= max_part) parts.push_back(induced(rest, c));
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = i + 1; j < comps.size(); ++j)
            if (comps[i].size() + comps[j].size() <= max_part) parts.push_back(induced(rest, comps[i] | comps[j]));
    return parts;
}

}  // namespace

LocalMaximalityReport verify_local_edge_maximality(const Graph& g, VertexSet k, int s, int t, int max_part)
{
    const StParams params(s, t);
    PropertyCatalog catalog(params);
    LocalMaximalityReport rep;
    rep.s = s;
    rep.t = t;
    rep.max_part = max_part;
    for (const Graph& h : small_parts(g, k, max_part)) {
        ++rep.parts_checked;
        for (const CatalogEntry& alt : catalog.on(h.order())) {
            ++rep.alternatives;
            if (alt.edges > h.edge_count()) ++rep.violations;
        }
    }
    rep.ok = rep.violations == 0;
    return rep;
}

LocalMaximalityReport verify_degree_majorization_maximality(const Graph& g, VertexSet k, int s, int t, int max_part)
{
    const StParams params(s, t);
    PropertyCatalog catalog(params);
    LocalMaximalityReport rep;
    rep.s = s;
    rep.t = t;
    rep.max_part = max_part;
    for (const Graph& h : small_parts(g, k, max_part)) {
        ++rep.parts_checked;
        const DegreeSequence pi = degree_sequence(h);
        for (const CatalogEntry& alt : catalog.on(h.order())) {
            if (alt.edges != h.edge_count()) continue;
            ++rep.alternatives;
            if (majorizes(alt.degrees, pi) && !(alt.degrees == pi)) ++rep.violations;
        }
    }
    rep.ok = rep.violations == 0;
    return rep;
}

ComponentCensus component_census(const Graph& g, VertexSet k, int t)
{
    if ((k.mask() & ~g.vertices().mask()) != 0) throw ContractError("k is not a vertex subset");
    const Graph rest = induced(g, VertexSet(g.vertices().mask() & ~k.mask()));
    ComponentCensus c;
    for (const VertexSet& comp : components(rest)) {
        const int size = comp.size();
        if (size < t) ++c.below_t;
        else if (size == t) ++c.t;
        else if (size == t + 1) ++c.t_plus_1;
        else if (size == t + 2) ++c.t_plus_2;
        else if (size == t + 3) ++c.t_plus_3;
        else ++c.above;
    }
    return c;
}

StructureReport verify_structure(const Graph& g, int s, int t)
{
    const StParams params(s, t);
    const std::optional<VertexSet> k = clique_dominating_set(g, s - 1);
    if (!k) throw ContractError("graph has no clique dominating set of size s-1");
    StructureReport rep;
    rep.n = g.order();
    rep.s = s;
    rep.t = t;
    rep.k = *k;
    rep.census = component_census(g, *k, t);
    const ComponentCensus& c = rep.census;
    const int beta = params.beta();
    rep.no_large_components = c.above == 0 && c.t_plus_3 == 0;
    rep.at_most_one_irregular = c.below_t + c.t_plus_2 <= 1;
    rep.bounded_t_plus_1 = c.t_plus_1 <= 2 * (beta - 1);
    rep.exclusive_t_plus_1 = c.t_plus_1 == 0 || c.t_plus_2 + c.below_t == 0;

    const Graph block = h_st_complement(params);
    std::optional<Graph> t2_shape;
    if (beta == 2) t2_shape = subdivide_min_edge(block);
    else if (beta == 1 && t == 8) t2_shape = petersen_complement();
    rep.t_plus_1_shapes = true;
    rep.t_plus_2_shapes = true;
    const Graph rest = induced(g, VertexSet(g.vertices().mask() & ~k->mask()));
    for (const VertexSet& comp : components(rest)) {
        const Graph h = induced(rest, comp);
        if (h.order() == t + 1 && !are_isomorphic(h, block)) rep.t_plus_1_shapes = false;
        if (h.order() == t + 2 && !(t2_shape && are_isomorphic(h, *t2_shape))) rep.t_plus_2_shapes = false;
    }
    rep.ok = rep.no_large_components && rep.at_most_one_irregular && rep.bounded_t_plus_1 &&
             rep.exclusive_t_plus_1 && rep.t_plus_1_shapes && rep.t_plus_2_shapes;
    return rep;
}

}  // namespace kst
