// kstminor: constructions, spectra, minor checks, verifiers and searches.
// Exit status: 0 ok, 1 a verification failed, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "kst/constructions.hpp"
#include "kst/graph6.hpp"
#include "kst/majorization.hpp"
#include "kst/minor.hpp"
#include "kst/report.hpp"
#include "kst/search.hpp"
#include "kst/spectral.hpp"
#include "kst/spectral_bounds.hpp"

using nlohmann::json;
using namespace kst;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Params {
    int n = -1, s = -1, t = -1;
    double alpha = 0.5;
    int a = 0, b = 0, c = 0;
    std::string family;
    std::string graph6, file;
    std::string format = "json";
    std::string lemma;
    std::string pattern;
    int max_part = 7;
    int max_order = 7;
    long trials = 1000;
    std::uint64_t seed = 1;
    int samples = 8;
    std::optional<double> constant;
    int copies = -1;
    bool exploratory = false;
    bool full = false;
    bool dominated = false;
    int jobs = 1;
};

int require(int value, const char* flag)
{
    if (value < 0) throw UsageError(std::string("missing ") + flag);
    return value;
}

std::string trim(std::string s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

Graph read_graph(const Params& p)
{
    std::string text;
    if (!p.graph6.empty()) {
        text = p.graph6;
    } else if (!p.file.empty()) {
        std::ifstream in(p.file);
        if (!in) throw UsageError("cannot open " + p.file);
        std::getline(in, text);
    } else {
        std::getline(std::cin, text);
    }
    text = trim(text);
    if (text.empty()) throw UsageError("no graph6 input");
    return from_graph6(text);
}

bool has_graph_input(const Params& p) { return !p.graph6.empty() || !p.file.empty(); }

// Explicit graph when given, otherwise extremal_gstar(n, s, t).
Graph graph_or_gstar(const Params& p)
{
    if (has_graph_input(p)) return read_graph(p);
    return extremal_gstar(require(p.n, "--n"), StParams(require(p.s, "--s"), require(p.t, "--t")));
}

VertexSet clique_or_fail(const Graph& g, int s)
{
    const auto k = clique_dominating_set(g, s - 1);
    if (!k) throw UsageError("graph has no clique dominating set of size s-1");
    return *k;
}

void emit(const json& j, const std::string& format)
{
    if (format == "csv")
        std::cout << to_csv(j);
    else
        std::cout << j.dump(2) << "\n";
}

int emit_report(const json& j, const std::string& format)
{
    emit(j, format);
    return j.at("ok").get<bool>() ? kOk : kFailed;
}

Graph build_family(const Params& p)
{
    const std::string& f = p.family;
    if (f == "complete") return complete(require(p.n, "--n"));
    if (f == "cycle") return cycle(require(p.n, "--n"));
    if (f == "path") return path(require(p.n, "--n"));
    if (f == "kab") return complete_bipartite(p.a, p.b);
    if (f == "petersen") return petersen();
    if (f == "petersen-complement") return petersen_complement();
    if (f == "habc") return h_abc(p.a, p.b, p.c);
    const StParams params(require(p.s, "--s"), require(p.t, "--t"));
    if (f == "fst") return f_st(require(p.n, "--n"), params);
    if (f == "gstar") return extremal_gstar(require(p.n, "--n"), params);
    if (f == "hst") return h_st(params);
    if (f == "hst-complement") return h_st_complement(params);
    throw UsageError("unknown family " + f);
}

int cmd_construct(const Params& p)
{
    const Graph g = build_family(p);
    if (p.format == "graph6") {
        std::cout << to_graph6(g) << "\n";
        return kOk;
    }
    json j = {{"family", p.family},
              {"graph6", to_graph6(g)},
              {"order", g.order()},
              {"edges", g.edge_count()},
              {"degrees", degree_sequence(g).values}};
    emit(j, p.format);
    return kOk;
}

int cmd_rho(const Params& p)
{
    const Graph g = read_graph(p);
    const SpectralResult r = spectral_radius(g, p.alpha);
    if (p.format == "text") {
        std::cout << json(round12(r.rho)).dump() << "\n";
        return kOk;
    }
    json j = {{"alpha", round12(p.alpha)},
              {"rho", round12(r.rho)},
              {"residual", round12(r.residual)},
              {"iterations", r.iterations},
              {"converged", r.converged}};
    emit(j, p.format);
    return kOk;
}

json witness_json(const MinorWitness& w)
{
    json sets = json::array();
    for (const VertexSet& b : w.branch_sets) sets.push_back(b.to_vector());
    return sets;
}

int cmd_minor_check(const Params& p)
{
    const Graph g = read_graph(p);
    json j = {{"graph6", to_graph6(g)}, {"order", g.order()}};
    if (!p.pattern.empty()) {
        const Graph pattern = from_graph6(p.pattern);
        const auto w = has_minor(g, pattern);
        j["pattern"] = p.pattern;
        j["method"] = "branch-set search";
        j["has_minor"] = w.has_value();
        j["witness"] = w ? witness_json(*w) : json(nullptr);
        emit(j, p.format);
        return kOk;
    }
    const int s = require(p.s, "--s"), t = require(p.t, "--t");
    j["s"] = s;
    j["t"] = t;
    const auto k = clique_dominating_set(g, s - 1);
    const bool components_fit = [&] {
        for (const VertexSet& c : components(g))
            if (c.size() > kMaxMinorHost) return false;
        return true;
    }();
    if (components_fit) {
        const auto w = has_minor(g, complete_bipartite(s, t));
        j["method"] = "branch-set search";
        j["minor_free"] = !w.has_value();
        j["witness"] = w ? witness_json(*w) : json(nullptr);
    } else if (k) {
        j["method"] = "clique reduction";
        j["k"] = k->to_vector();
        j["minor_free"] = minor_free_by_clique_reduction(g, *k, s, t);
    } else {
        throw UsageError("host too large for the direct search and no clique dominating set of size s-1");
    }
    emit(j, p.format);
    return kOk;
}

using Verifier = std::function<json(const Params&)>;

struct LemmaEntry {
    std::string id;
    std::string alias;
    Verifier run;
};

int regular_copies(const Params& p, int s, int t)
{
    if (p.copies > 0) return p.copies;
    // Smallest number of K_t blocks meeting the order threshold.
    const double c = p.constant.value_or(default_threshold_constant(p.alpha));
    const long need = regular_join_threshold(s, t, p.alpha, c) - (s - 1);
    long copies = std::max<long>(1, (need + t - 1) / t);
    if (p.exploratory) copies = 1;
    if (copies * t + s - 1 > kMaxVertices) throw UsageError("threshold order exceeds 64 vertices; pass --copies and --exploratory");
    return static_cast<int>(copies);
}

const std::vector<LemmaEntry>& lemmas()
{
    static const std::vector<LemmaEntry> table = {
        {"2.1", "join-lower-bound",
         [](const Params& p) { return json(verify_join_lower_bound(require(p.n, "--n"), require(p.s, "--s"), p.alpha)); }},
        {"2.3", "fst-sandwich",
         [](const Params& p) {
             return json(verify_fst_root_sandwich(require(p.n, "--n"), require(p.s, "--s"), require(p.t, "--t"), p.alpha,
                                                  p.exploratory));
         }},
        {"2.4", "star-minor-edges",
         [](const Params& p) { return json(verify_star_minor_edge_bound(require(p.t, "--t"), require(p.n, "--n"))); }},
        {"2.5", "near-clique-cubic",
         [](const Params& p) { return json(verify_near_clique_join_cubic(require(p.n, "--n"), require(p.s, "--s"), p.alpha)); }},
        {"2.6", "regular-join",
         [](const Params& p) {
             const int s = require(p.s, "--s"), t = require(p.t, "--t");
             const Graph h = has_graph_input(p) ? read_graph(p) : k_copies(complete(t), regular_copies(p, s, t));
             return json(verify_regular_join_bound(s, t, p.alpha, h, p.samples, p.seed, p.constant, p.exploratory));
         }},
        {"2.8", "norm-monotonicity", [](const Params& p) { return json(verify_norm_monotonicity(p.trials, p.seed)); }},
        {"2.9", "inner-product", [](const Params& p) { return json(verify_inner_product_monotonicity(p.trials, p.seed)); }},
        {"2.10", "clique-reduction",
         [](const Params& p) { return json(verify_clique_reduction(graph_or_gstar(p), require(p.s, "--s"), require(p.t, "--t"))); }},
        {"2.11", "complement-criterion",
         [](const Params& p) { return json(verify_complement_component_criterion(require(p.t, "--t"), require(p.s, "--s"))); }},
        {"2.12", "edge-maximum",
         [](const Params& p) { return json(verify_property_edge_maximum(require(p.t, "--t"), require(p.s, "--s"))); }},
        {"2.13", "rotation", [](const Params& p) { return json(verify_rotation_majorization(p.max_order)); }},
        {"2.15", "two-extra-vertex",
         [](const Params& p) { return json(verify_two_extra_vertex_bound(require(p.t, "--t"), require(p.s, "--s"))); }},
        {"3.2", "local-edge-maximality",
         [](const Params& p) {
             const Graph g = graph_or_gstar(p);
             return json(verify_local_edge_maximality(g, clique_or_fail(g, p.s), p.s, require(p.t, "--t"), p.max_part));
         }},
        {"3.1", "perron-bounds",
         [](const Params& p) {
             const Graph g = graph_or_gstar(p);
             return json(verify_perron_component_bounds(g, clique_or_fail(g, p.s), p.s, require(p.t, "--t"), p.alpha));
         }},
        {"3.4", "degree-majorization",
         [](const Params& p) {
             const Graph g = graph_or_gstar(p);
             return json(
                 verify_degree_majorization_maximality(g, clique_or_fail(g, p.s), p.s, require(p.t, "--t"), p.max_part));
         }},
        {"structure", "structure",
         [](const Params& p) { return json(verify_structure(graph_or_gstar(p), require(p.s, "--s"), require(p.t, "--t"))); }},
    };
    return table;
}

int cmd_verify(const Params& p)
{
    for (const LemmaEntry& e : lemmas()) {
        if (p.lemma != e.id && p.lemma != e.alias) continue;
        json j = e.run(p);
        j["lemma"] = e.alias;
        return emit_report(j, p.format);
    }
    throw UsageError("unknown lemma id " + p.lemma);
}

int cmd_search(const Params& p)
{
    SearchOptions opts;
    opts.mode = p.dominated ? SearchMode::dominated : (p.full ? SearchMode::full : SearchMode::pruned);
    opts.jobs = p.jobs;
    const SearchResult r =
        brute_force_extremal(require(p.n, "--n"), require(p.s, "--s"), require(p.t, "--t"), p.alpha, opts);
    if (p.format == "graph6") {
        std::cout << to_graph6(r.best_graph) << "\n";
        return r.best_reverified ? kOk : kFailed;
    }
    return emit_report(json(r), p.format);
}

// Summary of one graph: invariants, spectra, and the minor/structure view when
// s and t are given.
int cmd_report(const Params& p)
{
    const Graph g = has_graph_input(p) || p.family.empty() ? graph_or_gstar(p) : build_family(p);
    json j = {{"graph6", to_graph6(g)},
              {"order", g.order()},
              {"edges", g.edge_count()},
              {"degrees", degree_sequence(g).values},
              {"connected", is_connected(g)},
              {"components", components(g).size()},
              {"girth", girth(g)},
              {"alpha", round12(p.alpha)},
              {"rho", round12(rho_alpha(g, p.alpha))},
              {"q_index", round12(q_index(g))}};
    bool ok = true;
    if (p.s > 0 && p.t > 0) {
        j["s"] = p.s;
        j["t"] = p.t;
        const auto k = clique_dominating_set(g, p.s - 1);
        if (k) {
            j["k"] = k->to_vector();
            j["minor_free"] = minor_free_by_clique_reduction(g, *k, p.s, p.t);
            const StructureReport st = verify_structure(g, p.s, p.t);
            j["census"] = st.census;
            j["structure_ok"] = st.ok;
            ok = st.ok;
        } else if (g.order() <= kMaxMinorHost) {
            j["minor_free"] = is_kst_minor_free(g, p.s, p.t);
        }
    }
    j["ok"] = ok;
    return emit_report(j, p.format);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"K_{s,t}-minor-free graphs: constructions, A_alpha spectra, minor checks and exhaustive verifiers"};
    app.require_subcommand(1);
    Params p;

    auto add_nst = [&](CLI::App* sub) {
        sub->add_option("--n", p.n, "order")->check(CLI::NonNegativeNumber);
        sub->add_option("--s", p.s, "s")->check(CLI::PositiveNumber);
        sub->add_option("--t", p.t, "t")->check(CLI::PositiveNumber);
    };
    auto add_alpha = [&](CLI::App* sub) {
        sub->add_option("--alpha", p.alpha, "alpha in [0,1)")->check(CLI::Range(0.0, 1.0));
    };
    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("--graph6", p.graph6, "graph6 string (stdin when neither --graph6 nor --file)");
        sub->add_option("--file", p.file, "file whose first line is graph6")->check(CLI::ExistingFile);
    };
    auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", p.format, "output format")->check(CLI::IsMember(std::move(allowed)));
    };

    auto* construct = app.add_subcommand("construct", "build a graph family, print graph6");
    construct->add_option("--family", p.family, "family")
        ->required()
        ->check(CLI::IsMember({"fst", "gstar", "hst", "hst-complement", "petersen", "petersen-complement", "habc",
                               "complete", "cycle", "path", "kab"}));
    add_nst(construct);
    construct->add_option("--a", p.a)->check(CLI::NonNegativeNumber);
    construct->add_option("--b", p.b)->check(CLI::NonNegativeNumber);
    construct->add_option("--c", p.c)->check(CLI::NonNegativeNumber);
    p.format = "graph6";
    add_format(construct, {"graph6", "json", "csv"});

    auto* rho = app.add_subcommand("rho", "A_alpha spectral radius");
    add_graph(rho);
    add_alpha(rho);
    add_format(rho, {"text", "json", "csv"});

    auto* minor = app.add_subcommand("minor-check", "K_{s,t} (or --pattern) minor test");
    add_graph(minor);
    minor->add_option("--s", p.s)->check(CLI::PositiveNumber);
    minor->add_option("--t", p.t)->check(CLI::PositiveNumber);
    minor->add_option("--pattern", p.pattern, "pattern graph in graph6");
    add_format(minor, {"json", "csv"});

    auto* verify = app.add_subcommand("verify", "run one verifier; exit 1 when it fails");
    verify->add_option("--lemma", p.lemma, "verifier id (numeric id or alias)")->required();
    add_nst(verify);
    add_alpha(verify);
    add_graph(verify);
    verify->add_option("--max-part", p.max_part)->check(CLI::Range(1, 7));
    verify->add_option("--max-order", p.max_order)->check(CLI::Range(1, 8));
    verify->add_option("--trials", p.trials)->check(CLI::PositiveNumber);
    verify->add_option("--seed", p.seed);
    verify->add_option("--samples", p.samples)->check(CLI::NonNegativeNumber);
    verify->add_option("--c", p.constant, "order-threshold constant (default ceil(1/alpha))");
    verify->add_option("--copies", p.copies, "K_t blocks in the regular H")->check(CLI::PositiveNumber);
    verify->add_flag("--exploratory", p.exploratory, "run below the order hypothesis");
    add_format(verify, {"json", "csv"});

    auto* search = app.add_subcommand("search", "exhaustive A_alpha maximiser among minor-free graphs");
    add_nst(search);
    add_alpha(search);
    auto* full = search->add_flag("--full", p.full, "evaluate every minor-free graph");
    search->add_flag("--pruned", "evaluate edge-maximal graphs only (default)")->excludes(full);
    search->add_flag("--dominated", p.dominated, "K_{s-1} joined to property graphs (n-s+1 <= 9)")->excludes(full);
    search->add_option("--jobs", p.jobs)->check(CLI::Range(1, 256));
    add_format(search, {"json", "csv", "graph6"});

    auto* report = app.add_subcommand("report", "invariants, spectra and structure of one graph");
    add_graph(report);
    add_nst(report);
    add_alpha(report);
    report->add_option("--family", p.family, "build a family instead of reading a graph");
    report->add_option("--a", p.a);
    report->add_option("--b", p.b);
    report->add_option("--c", p.c);
    add_format(report, {"json", "csv"});

    // construct prints graph6 and rho a bare number unless told otherwise.
    for (auto* sub : {rho, minor, verify, search, report})
        sub->preparse_callback([&](std::size_t) { p.format = "json"; });
    rho->preparse_callback([&](std::size_t) { p.format = "text"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (construct->parsed()) return cmd_construct(p);
        if (rho->parsed()) return cmd_rho(p);
        if (minor->parsed()) return cmd_minor_check(p);
        if (verify->parsed()) return cmd_verify(p);
        if (search->parsed()) return cmd_search(p);
        if (report->parsed()) return cmd_report(p);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        // Library contract, range, capacity and parse errors are input problems.
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
