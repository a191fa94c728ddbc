#ifndef BMP_DISTANCE_HPP
#define BMP_DISTANCE_HPP

#include <vector>

#include "graph.hpp"

namespace bmp {

// Distances are small non-negative ints; a pair in different components is
// marked kUnreachable (never a large finite stand-in).
inline constexpr int kUnreachable = -1;

class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> dist) : n_(n), dist_(std::move(dist)) {}

    int order() const { return n_; }
    int at(int u, int v) const;
    bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }
    bool connected() const;

    // Max finite distance from v (its eccentricity within its component).
    int eccentricity(int v) const;
    // Max finite entry overall; 0 on the empty/edgeless graph.
    int max_finite() const;

private:
    int n_ = 0;
    std::vector<int> dist_;
};

std::vector<int> bfs_distances(const Graph& g, int source);
DistanceMatrix all_pairs(const Graph& g);

struct Metrics {
    int radius = 0;
    int diameter = 0;
    int center = 0;     // smallest-index vertex of minimum eccentricity
    int diam_u = 0;     // lexicographically first diametral pair
    int diam_v = 0;
};

// Throws DisconnectedError when any entry is unreachable.
Metrics radius_diameter(const DistanceMatrix& dm);

// A path realizing the graph distance between its endpoints.
struct PathWitness {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
    int front() const { return vertices.front(); }
    int back() const { return vertices.back(); }
};

// Deterministic: each BFS parent is the smallest-index neighbor one level
// closer to u. Throws if v is unreachable from u.
PathWitness shortest_path(const Graph& g, int u, int v);

bool is_isometric(const DistanceMatrix& dm, const PathWitness& path);

} // namespace bmp

#endif
