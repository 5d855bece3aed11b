#pragma once

// Numerical checks of the polynomial bounds on rho_alpha for the join
// families K_{s-1} v H and (K_{s-1} - e) v H.

#include <cstdint>
#include <optional>

#include "kst/constructions.hpp"
#include "kst/polynomial.hpp"
#include "kst/spectral.hpp"

namespace kst {

inline constexpr double kStrictMargin = 1e-10;
inline constexpr double kAgreementTol = 1e-8;
inline constexpr double kEqualityTol = 1e-9;

/// The quadratics h, g bracketing rho_alpha(F_{s,t}(n)); g = h - (1-alpha)^2 (s-1).
struct FstQuadratics {
    Polynomial h;
    Polynomial g;
};
FstQuadratics fst_quadratics(long n, int s, int t, double alpha);

/// Smallest n with n >= s - 1 + (t^2 - 1)/alpha.
long fst_sandwich_threshold(int s, int t, double alpha);

/// Closed-form quotient of F_{s,t}(n) over the parts {K_{s-1}, p K_t, K_r}
/// (the middle part is omitted when p = 0). Valid for any n >= s.
QuotientMatrix fst_quotient(long n, const StParams& params);

struct FstSandwichReport {
    long n = 0;
    int s = 0, t = 0;
    double alpha = 0.0;
    long p = 0;
    int r = 0;
    long threshold = 0;
    bool hypothesis_met = false;
    double root_h = 0.0;
    double root_g = 0.0;
    double rho = 0.0;
    /// Direct power iteration on the explicit graph (n <= 64 only).
    std::optional<double> rho_direct;
    bool direct_ok = true;
    bool lower_ok = false;
    bool upper_ok = false;
    /// r == t: rho must equal root_g; otherwise rho must be strictly below it.
    bool equality_case = false;
    bool equality_ok = false;
    bool ok = false;
};

/// root_h < rho_alpha(F_{s,t}(n)) <= root_g, with equality exactly when r = t.
/// Below the order threshold the call is refused unless `exploratory` is set;
/// exploratory reports carry hypothesis_met = false.
FstSandwichReport verify_fst_root_sandwich(long n, int s, int t, double alpha, bool exploratory = false);

/// The cubic whose largest root is rho_alpha((K_{s-1} - e) v complement(K_{n-s+1})).
Polynomial near_clique_join_cubic(long n, int s, double alpha);

/// Graph (K_{s-1} - e) v H; vertices 0..s-4 have full degree, s-3 and s-2 are
/// the non-adjacent pair, H follows.
Graph near_clique_join(int s, const Graph& h);

struct NearCliqueCubicReport {
    long n = 0;
    int s = 0;
    double alpha = 0.0;
    double rho_cubic = 0.0;
    double rho_quotient = 0.0;
    std::optional<double> rho_direct;
    bool agreement_ok = false;
    double lower_bound = 0.0;
    bool bound_ok = false;
    bool ok = false;
};

/// Cubic root, 3-part quotient and (n <= 64) direct value agree within 1e-8,
/// and rho > alpha(n-1) + (1-alpha)(s-4).
NearCliqueCubicReport verify_near_clique_join_cubic(long n, int s, double alpha);

/// max{2s-3+(t-s+4)/alpha, (1-alpha)(s-1)(C(s+t)+2)/2 + s + t}, rounded up.
long regular_join_threshold(int s, int t, double alpha, double c);
double default_threshold_constant(double alpha);

struct RegularJoinReport {
    long n = 0;
    int s = 0, t = 0;
    double alpha = 0.0;
    double c = 0.0;
    long threshold = 0;
    bool hypothesis_met = false;
    double rho_regular = 0.0;
    double rho_quotient = 0.0;
    bool quotient_ok = false;
    double root_h = 0.0;
    bool below_root_ok = false;
    int samples = 0;
    double max_sample_rho = 0.0;
    bool samples_ok = true;
    bool ok = false;
};

/// For G' = (K_{s-1} - e) v H with H (t-1)-regular: rho(G') < largest root of
/// h, and every sampled non-regular H' with max degree <= t-1 on the same
/// vertex set gives a strictly smaller rho. Sub-threshold runs are refused
/// unless `exploratory` is set.
RegularJoinReport verify_regular_join_bound(int s, int t, double alpha, const Graph& h_regular, int samples = 8,
                                            std::uint64_t seed = 1, std::optional<double> c = std::nullopt,
                                            bool exploratory = false);

struct JoinLowerBoundReport {
    long n = 0;
    int s = 0;
    double alpha = 0.0;
    double rho = 0.0;
    double bound = 0.0;
    bool ok = false;
};

/// rho(K_{s-1} v complement(K_{n-s+1})) >= alpha(n-1) + (1-alpha)(s-2).
JoinLowerBoundReport verify_join_lower_bound(int n, int s, double alpha);

struct PerronBoundsReport {
    int s = 0, t = 0;
    double alpha = 0.0;
    double rho = 0.0;
    double x0 = 0.0, x1 = 0.0, x2 = 0.0;
    double upper = 0.0;  // bound on x1
    double lower = 0.0;  // bound on x2
    bool denominator_ok = false;
    bool upper_ok = false;
    bool lower_ok = false;
    bool ok = false;
};

/// Max and min Perron entries outside a clique dominating set K of size s-1,
/// against (1-alpha)x0/(rho - (alpha(t+s-1) + (1-alpha)t)) and
/// (1-alpha)x0/(rho - alpha(s-1)), where x0 is the Perron mass on K.
PerronBoundsReport verify_perron_component_bounds(const Graph& g, VertexSet k, int s, int t, double alpha);

}  // namespace kst
