#ifndef BMP_EXACT_HPP
#define BMP_EXACT_HPP

#include <chrono>
#include <cstdint>

#include "certify.hpp"
#include "graph.hpp"

namespace bmp {

// Exponential desk-scale oracles; the cap is configuration, not logic.
inline constexpr int kDefaultSolverCap = 24;

struct SolveStats {
    int64_t nodes = 0;
    std::chrono::milliseconds elapsed{0};
};

struct MpResult {
    int value = 0;
    Multipacking witness;
    SolveStats stats;
};

struct GbResult {
    int value = 0;
    Broadcast witness;
    SolveStats stats;
};

// Maximum multipacking by branch and bound; disconnected graphs are solved
// per component and summed (balls never cross components).
MpResult mp_exact(const Graph& g, int cap = kDefaultSolverCap);

// Minimum-cost dominating broadcast as exact weighted cover over balls
// (v, r), 1 ≤ r ≤ ecc(v); per component and summed.
GbResult gb_exact(const Graph& g, int cap = kDefaultSolverCap);

} // namespace bmp

#endif
