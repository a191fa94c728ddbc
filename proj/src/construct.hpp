#ifndef BMP_CONSTRUCT_HPP
#define BMP_CONSTRUCT_HPP

#include <optional>

#include "certify.hpp"
#include "distance.hpp"
#include "graph.hpp"

namespace bmp {

// Two-path skeleton for the lower-bound construction: u and v at distance
// 6k with midpoint x, and y at distance 3k+3k' from x.
struct Configuration {
    int x = 0, y = 0, u = 0, v = 0;
    int k = 0;
    int k_prime = 0;
    int alpha = 0; // diameter - 6k, in [0,5]
    int beta = 0;  // radius - 3k - 3k', in [0,2] before clamping
    PathWitness path_uv; // length 6k, passes through x at position 3k
    PathWitness path_xy; // length 3k+3k', starts at x
};

struct ConstructionTrace {
    std::vector<int> p1;
    std::vector<int> p2;
    int k = 0;
    int k_prime = 0;
    int alpha = 0;
    int beta = 0;
    bool fallback_used = false;
    int guarantee = 0; // claimed lower bound on the packing size
};

// Every third vertex of an isometric path, starting at its first vertex;
// size floor(L/3)+1. Throws PreconditionError on a non-isometric path.
Multipacking third_vertex_packing(const DistanceMatrix& dm, const PathWitness& path);

// The 2k+k' packing: P1 = every third vertex of path_uv, P2 = every third
// vertex of path_xy starting at offset 3k+6 (empty when k' = 1).
// Requires k ≥ 1, 1 ≤ k' ≤ k and all configuration distance equalities;
// a PreconditionError names the first failing one.
ConstructionTrace theorem2_construct(const DistanceMatrix& dm, const Configuration& cfg);

std::vector<int> trace_members(const ConstructionTrace& t);

// Derive k, k', alpha, beta from diameter and radius and pick the four
// anchor vertices deterministically. nullopt = fallback (k = 0): callers
// should use a plain diametral-path packing instead. k' is clamped to
// [0, k]; k' = 0 configurations are returned (P1-only mode).
std::optional<Configuration> find_configuration(const Graph& g);

struct ApproxResult {
    Multipacking packing;
    ConstructionTrace trace;
};

// Polynomial-time construction with guarantee
// |P| ≥ max(1, ceil(d/6 + r/3 - 3/2)) ≥ (mp(G)-3)/2 on connected graphs.
ApproxResult approx_multipacking(const Graph& g);

// ceil(d/6 + r/3 - 3/2) clamped below at 1.
int approx_guarantee(int diameter, int radius);

} // namespace bmp

#endif
