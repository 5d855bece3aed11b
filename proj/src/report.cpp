#include "kst/report.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "kst/graph6.hpp"

namespace kst {

using nlohmann::json;

double round12(double x)
{
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

namespace {

json vertex_list(VertexSet s) { return s.to_vector(); }

}  // namespace

void to_json(json& j, const FstSandwichReport& r)
{
    j = {{"n", r.n},
         {"s", r.s},
         {"t", r.t},
         {"alpha", round12(r.alpha)},
         {"p", r.p},
         {"r", r.r},
         {"threshold", r.threshold},
         {"hypothesis_met", r.hypothesis_met},
         {"root_h", round12(r.root_h)},
         {"root_g", round12(r.root_g)},
         {"rho", round12(r.rho)},
         {"rho_direct", r.rho_direct ? json(round12(*r.rho_direct)) : json(nullptr)},
         {"direct_ok", r.direct_ok},
         {"lower_ok", r.lower_ok},
         {"upper_ok", r.upper_ok},
         {"equality_case", r.equality_case},
         {"equality_ok", r.equality_ok},
         {"sandwich_ok", r.ok},
         {"ok", r.ok}};
}

void to_json(json& j, const NearCliqueCubicReport& r)
{
    j = {{"n", r.n},
         {"s", r.s},
         {"alpha", round12(r.alpha)},
         {"rho_cubic", round12(r.rho_cubic)},
         {"rho_quotient", round12(r.rho_quotient)},
         {"rho_direct", r.rho_direct ? json(round12(*r.rho_direct)) : json(nullptr)},
         {"agreement_ok", r.agreement_ok},
         {"lower_bound", round12(r.lower_bound)},
         {"bound_ok", r.bound_ok},
         {"ok", r.ok}};
}

void to_json(json& j, const RegularJoinReport& r)
{
    j = {{"n", r.n},
         {"s", r.s},
         {"t", r.t},
         {"alpha", round12(r.alpha)},
         {"c", round12(r.c)},
         {"threshold", r.threshold},
         {"hypothesis_met", r.hypothesis_met},
         {"rho_regular", round12(r.rho_regular)},
         {"rho_quotient", round12(r.rho_quotient)},
         {"quotient_ok", r.quotient_ok},
         {"root_h", round12(r.root_h)},
         {"below_root_ok", r.below_root_ok},
         {"samples", r.samples},
         {"max_sample_rho", round12(r.max_sample_rho)},
         {"samples_ok", r.samples_ok},
         {"ok", r.ok}};
}

void to_json(json& j, const JoinLowerBoundReport& r)
{
    j = {{"n", r.n},
         {"s", r.s},
         {"alpha", round12(r.alpha)},
         {"rho", round12(r.rho)},
         {"bound", round12(r.bound)},
         {"ok", r.ok}};
}

void to_json(json& j, const PerronBoundsReport& r)
{
    j = {{"s", r.s},
         {"t", r.t},
         {"alpha", round12(r.alpha)},
         {"rho", round12(r.rho)},
         {"x0", round12(r.x0)},
         {"x1", round12(r.x1)},
         {"x2", round12(r.x2)},
         {"upper", round12(r.upper)},
         {"lower", round12(r.lower)},
         {"denominator_ok", r.denominator_ok},
         {"upper_ok", r.upper_ok},
         {"lower_ok", r.lower_ok},
         {"ok", r.ok}};
}

void to_json(json& j, const CliqueReductionReport& r)
{
    j = {{"s", r.s},
         {"t", r.t},
         {"k", vertex_list(r.k)},
         {"minor_free", r.minor_free},
         {"remainder_has_property", r.remainder_has_property},
         {"ok", r.ok}};
}

void to_json(json& j, const ComplementCriterionReport& r)
{
    j = {{"s", r.s},
         {"t", r.t},
         {"graphs", r.graphs},
         {"connected", r.connected},
         {"with_property", r.with_property},
         {"counterexamples", r.counterexamples},
         {"first_counterexample", r.first_counterexample},
         {"ok", r.ok}};
}

void to_json(json& j, const StarMinorEdgeReport& r)
{
    j = {{"t", r.t},
         {"n", r.n},
         {"graphs", r.graphs},
         {"connected_free", r.connected_free},
         {"bound", r.bound},
         {"max_edges", r.max_edges},
         {"witness", r.witness},
         {"violations", r.violations},
         {"equality_attained", r.equality_attained},
         {"ok", r.ok}};
}

void to_json(json& j, const MajorizationSuiteReport& r)
{
    j = {{"trials", r.trials}, {"violations", r.violations}, {"ok", r.ok}};
}

void to_json(json& j, const RotationSuiteReport& r)
{
    j = {{"max_order", r.max_order},
         {"graphs", r.graphs},
         {"rotations", r.rotations},
         {"violations", r.violations},
         {"ok", r.ok}};
}

void to_json(json& j, const SearchResult& r)
{
    j = {{"n", r.n},
         {"s", r.s},
         {"t", r.t},
         {"alpha", round12(r.alpha)},
         {"mode", to_string(r.mode)},
         {"best_graph", to_graph6(r.best_graph)},
         {"best_rho", round12(r.best_rho)},
         {"best_edges", r.best_graph.edge_count()},
         {"best_degrees", degree_sequence(r.best_graph).values},
         {"graphs_scanned", r.graphs_scanned},
         {"minor_free_count", r.minor_free_count},
         {"rho_evaluations", r.rho_evaluations},
         {"best_reverified", r.best_reverified},
         {"construction_available", r.construction_available},
         {"construction_rho", r.construction_available ? json(round12(r.construction_rho)) : json(nullptr)},
         {"dominates_construction", r.dominates_construction},
         {"matches_construction", r.matches_construction},
         {"ok", r.best_reverified && (!r.construction_available || r.dominates_construction)}};
}

void to_json(json& j, const EdgeMaximumReport& r)
{
    j = {{"s", r.s},
         {"t", r.t},
         {"graphs", r.graphs},
         {"connected_with_property", r.connected_with_property},
         {"expected_edges", r.expected_edges},
         {"max_edges", r.max_edges},
         {"maximizers", r.maximizers},
         {"maximizers_with_forest_complement", r.maximizers_with_forest_complement},
         {"inclusion_maximal", r.inclusion_maximal},
         {"inclusion_maximal_below_maximum", r.inclusion_maximal_below_maximum},
         {"example_below_maximum", r.example_below_maximum},
         {"ok", r.ok}};
}

void to_json(json& j, const TwoExtraVertexReport& r)
{
    j = {{"s", r.s},
         {"t", r.t},
         {"classes", r.classes},
         {"connected_with_property", r.connected_with_property},
         {"bound", r.bound},
         {"max_edges", r.max_edges},
         {"violations", r.violations},
         {"equality_graphs", r.equality_graphs},
         {"equality_matched", r.equality_matched},
         {"unmatched", r.unmatched},
         {"ok", r.ok}};
}

void to_json(json& j, const LocalMaximalityReport& r)
{
    j = {{"s", r.s},
         {"t", r.t},
         {"max_part", r.max_part},
         {"parts_checked", r.parts_checked},
         {"alternatives", r.alternatives},
         {"violations", r.violations},
         {"ok", r.ok}};
}

void to_json(json& j, const ComponentCensus& c)
{
    j = {{"below_t", c.below_t},
         {"t", c.t},
         {"t_plus_1", c.t_plus_1},
         {"t_plus_2", c.t_plus_2},
         {"t_plus_3", c.t_plus_3},
         {"above", c.above},
         {"total", c.total()}};
}

void to_json(json& j, const StructureReport& r)
{
    j = {{"n", r.n},
         {"s", r.s},
         {"t", r.t},
         {"k", vertex_list(r.k)},
         {"census", r.census},
         {"no_large_components", r.no_large_components},
         {"at_most_one_irregular", r.at_most_one_irregular},
         {"bounded_t_plus_1", r.bounded_t_plus_1},
         {"exclusive_t_plus_1", r.exclusive_t_plus_1},
         {"t_plus_1_shapes", r.t_plus_1_shapes},
         {"t_plus_2_shapes", r.t_plus_2_shapes},
         {"ok", r.ok}};
}

std::string to_csv(const json& report)
{
    std::string header, row;
    auto cell = [](const json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_null()) return std::string();
        return v.dump();
    };
    for (auto it = report.begin(); it != report.end(); ++it) {
        if (it->is_structured()) continue;
        if (!header.empty()) {
            header += ',';
            row += ',';
        }
        header += it.key();
        row += cell(*it);
    }
    return header + "\n" + row + "\n";
}

}  // namespace kst
