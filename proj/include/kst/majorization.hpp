#pragma once

#include <cstdint>
#include <vector>

#include "kst/graph.hpp"

namespace kst {

/// Non-increasing real vector (validated on construction).
class RealVector {
public:
    explicit RealVector(std::vector<double> values);
    /// Sorts into non-increasing order.
    static RealVector sorted(std::vector<double> values);

    const std::vector<double>& values() const noexcept { return v_; }
    std::size_t size() const noexcept { return v_.size(); }

private:
    std::vector<double> v_;
};

inline constexpr double kMajorizationSlack = 1e-12;

/// x <_w y: every prefix sum of x is at most that of y.
bool weakly_majorizes(const RealVector& y, const RealVector& x);
/// x < y: weak majorization with equal totals.
bool majorizes(const RealVector& y, const RealVector& x);

/// Exact versions on degree sequences.
bool weakly_majorizes(const DegreeSequence& y, const DegreeSequence& x);
bool majorizes(const DegreeSequence& y, const DegreeSequence& x);

/// g - vw + uw. Requires vw an edge, uw a non-edge, u != w, d(u) >= d(v).
Graph rotate_edge(const Graph& g, int v, int w, int u);

struct MajorizationSuiteReport {
    long trials = 0;
    long violations = 0;
    bool ok = false;
};

/// x <_w y (non-negative) implies ||x||_k <= ||y||_k for k = 2, 3, 4, strictly when x != y.
MajorizationSuiteReport verify_norm_monotonicity(long trials, std::uint64_t seed);
/// x < y and z non-increasing imply x.z <= y.z.
MajorizationSuiteReport verify_inner_product_monotonicity(long trials, std::uint64_t seed);

struct RotationSuiteReport {
    int max_order = 0;
    long graphs = 0;
    long rotations = 0;
    long violations = 0;
    bool ok = false;
};

/// Every legal rotation on every labelled graph with at most max_order
/// vertices strictly raises the degree sequence in the majorization order.
RotationSuiteReport verify_rotation_majorization(int max_order);

}  // namespace kst
