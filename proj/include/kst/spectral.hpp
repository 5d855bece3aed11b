#pragma once

// Spectral radius of A_alpha(G) = alpha D(G) + (1 - alpha) A(G).

#include <span>
#include <vector>

#include "kst/graph.hpp"

namespace kst {

/// Throws ContractError unless 0 <= alpha < 1.
double check_alpha(double alpha);

struct SpectralResult {
    double rho = 0.0;
    /// Non-negative, unit length. For a disconnected graph it is supported on
    /// the first component attaining rho.
    std::vector<double> perron;
    /// Euclidean norm of A_alpha x - rho x.
    double residual = 0.0;
    long iterations = 0;
    bool converged = true;
};

struct SolverOptions {
    double residual_tol = 1e-11;
    double stall_change = 1e-13;
    double stall_residual = 1e-9;
    long max_iterations = 200000;
};

/// alpha d(v) x_v + (1 - alpha) sum_{u ~ v} x_u for every v.
std::vector<double> a_alpha_apply(const Graph& g, double alpha, std::span<const double> x);

/// Shifted power iteration from the all-ones vector, one component at a time.
SpectralResult spectral_radius(const Graph& g, double alpha, const SolverOptions& options = {});

inline double rho_alpha(const Graph& g, double alpha) { return spectral_radius(g, alpha).rho; }

/// Signless Laplacian spectral radius, 2 rho_{1/2}.
double q_index(const Graph& g);

/// Quotient of an equitable partition: b[i][j] is the number of neighbours a
/// vertex of part i has in part j. Part sizes may exceed 64 when the matrix is
/// assembled from closed-form counts.
struct QuotientMatrix {
    std::vector<std::vector<double>> b;
    std::vector<double> part_sizes;

    int parts() const noexcept { return static_cast<int>(b.size()); }
};

/// Checks that `parts` partition V(g) equitably (ContractError otherwise).
QuotientMatrix quotient_matrix(const Graph& g, std::span<const VertexSet> parts);

/// Largest eigenvalue of alpha diag(row sums of b) + (1 - alpha) b.
double quotient_spectral_radius(const QuotientMatrix& q, double alpha);
double quotient_spectral_radius(const Graph& g, std::span<const VertexSet> parts, double alpha);

}  // namespace kst
