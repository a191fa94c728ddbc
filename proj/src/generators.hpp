#ifndef BMP_GENERATORS_HPP
#define BMP_GENERATORS_HPP

#include <cstdint>
#include <string_view>

#include "graph.hpp"

namespace bmp {

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_complete(int n);
Graph gen_grid(int w, int h);

// Two-path skeleton: a path of length 6k (vertices 0..6k, midpoint x at
// index 3k) plus a branch of length 3k+3k' attached at x (branch vertices
// 6k+1..9k+3k', ordered by distance from x). 9k + 3k' + 1 vertices total.
Graph gen_spider(int k, int k_prime);

// Small extremal graphs with mp = 2 and broadcast number 4.
// fig3a: inner 6-cycle 0..5, outer 6-cycle 6..11, spokes 0-6, 2-8, 4-10.
// fig3b: inner 6-cycle 0..5, outer 6-cycle 6..11 (a..f), chords 1-8, 2-7,
//        4-11, 5-10, plus subdivision vertices 12 (on 0..6) and 13 (on 3..9).
// fig3c: two 8-cycles 0..7 and 8..15 with cross edges 0-9, 8-1, 2-11, 10-3,
//        4-13, 12-5, 6-15, 7-14.
Graph gen_fig3a();
Graph gen_fig3b();
Graph gen_fig3c();

// Erdos–Renyi G(n,p); deterministic for a given seed (SplitMix64 over pairs
// (u,v) with u < v in lexicographic order; edge present iff draw < p).
Graph gen_gnp(int n, double p, uint64_t seed);

// Dispatch by "kind:params" string, e.g. "cycle:5", "grid:3,4",
// "spider:2,2", "gnp:40,0.1,7", "fig3c". Throws ParseError / ValidationError.
Graph generate(std::string_view desc);

} // namespace bmp

#endif
