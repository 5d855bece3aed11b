#pragma once

#include "kst/graph.hpp"

namespace kst {

/// Parameters of the K_{s,t} problem and the quantities derived from them.
struct StParams {
    int s = 2;
    int t = 2;

    /// Throws ContractError unless 2 <= s <= t.
    StParams(int s_, int t_);

    /// floor((t+1)/(s+1)).
    int beta() const noexcept { return (t + 1) / (s + 1); }
    /// min{s, floor((t+1)/2)}.
    int gamma() const noexcept { return s < (t + 1) / 2 ? s : (t + 1) / 2; }
    /// Size of the last star in h_st: t-(beta-1)(s+1).
    int alpha_star() const noexcept { return t - (beta() - 1) * (s + 1); }
};

/// n-s+1 = p*t + r with 1 <= r <= t.
struct Decomposition {
    int p = 0;
    int r = 1;
};

Decomposition decompose(long n, const StParams& params);

/// K_{s-1} v (p K_t u K_r); clique on 0..s-2, then the K_t blocks, then K_r.
Graph f_st(int n, const StParams& params);

/// (beta-1) K_{1,s} u K_{1,alpha_star}; each star lists its centre first.
Graph h_st(const StParams& params);
Graph h_st_complement(const StParams& params);

/// Kneser graph K(5,2).
Graph petersen();
Graph petersen_complement();

/// Independent sets A, B, C (sizes a, b, c) followed by w, u1, u2 with
/// w ~ A u B, u1 ~ A u C, u2 ~ B u C and the edge w-u1.
Graph h_abc(int a, int b, int c);

enum class ExtremalCase { petersen_block, subdivided_block, complement_blocks, clique_blocks };

const char* to_string(ExtremalCase c) noexcept;

/// Which branch of the extremal family applies at order n.
ExtremalCase extremal_case(int n, const StParams& params);

/// Extremal K_{s,t}-minor-free graph of order n for the given parameters.
/// Throws ContractError when the selected case needs more blocks than n allows.
Graph extremal_gstar(int n, const StParams& params);

}  // namespace kst
