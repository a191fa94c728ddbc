#include "distance.hpp"

#include <algorithm>
#include <queue>

#include "errors.hpp"

namespace bmp {

int DistanceMatrix::at(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw IndexError("distance query out of range");
    return dist_[static_cast<size_t>(u) * n_ + v];
}

bool DistanceMatrix::connected() const {
    return std::find(dist_.begin(), dist_.end(), kUnreachable) == dist_.end();
}

int DistanceMatrix::eccentricity(int v) const {
    int ecc = 0;
    for (int u = 0; u < n_; ++u) {
        int d = at(v, u);
        if (d != kUnreachable) ecc = std::max(ecc, d);
    }
    return ecc;
}

int DistanceMatrix::max_finite() const {
    int m = 0;
    for (int d : dist_)
        if (d != kUnreachable) m = std::max(m, d);
    return m;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    const int n = g.order();
    if (source < 0 || source >= n)
        throw IndexError("bfs source out of range: " + std::to_string(source));
    std::vector<int> dist(n, kUnreachable);
    dist[source] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

DistanceMatrix all_pairs(const Graph& g) {
    const int n = g.order();
    std::vector<int> dist;
    dist.reserve(static_cast<size_t>(n) * n);
    for (int v = 0; v < n; ++v) {
        auto row = bfs_distances(g, v);
        dist.insert(dist.end(), row.begin(), row.end());
    }
    return DistanceMatrix(n, std::move(dist));
}

Metrics radius_diameter(const DistanceMatrix& dm) {
    const int n = dm.order();
    if (n == 0) throw DisconnectedError("empty graph has no radius/diameter");
    if (!dm.connected()) throw DisconnectedError();

    Metrics m;
    m.radius = -1;
    m.diameter = -1;
    for (int v = 0; v < n; ++v) {
        int ecc = dm.eccentricity(v);
        if (m.radius == -1 || ecc < m.radius) {
            m.radius = ecc;
            m.center = v;
        }
        if (ecc > m.diameter) m.diameter = ecc;
    }
    // Lexicographically first pair attaining the diameter.
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (dm.at(u, v) == m.diameter) {
                m.diam_u = u;
                m.diam_v = v;
                return m;
            }
        }
    }
    // n == 1: diameter 0, pair degenerates to the single vertex.
    m.diam_u = m.diam_v = 0;
    return m;
}

PathWitness shortest_path(const Graph& g, int u, int v) {
    auto dist = bfs_distances(g, u);
    if (v < 0 || v >= g.order()) throw IndexError("path target out of range");
    if (dist[v] == kUnreachable)
        throw DisconnectedError("no path between " + std::to_string(u) + " and " + std::to_string(v));

    // Walk back from v; adjacency lists are sorted, so the first neighbor
    // one level closer is the smallest-index parent.
    std::vector<int> rev{v};
    int cur = v;
    while (cur != u) {
        for (int w : g.neighbors(cur)) {
            if (dist[w] == dist[cur] - 1) {
                rev.push_back(w);
                cur = w;
                break;
            }
        }
    }
    std::reverse(rev.begin(), rev.end());
    return PathWitness{std::move(rev)};
}

bool is_isometric(const DistanceMatrix& dm, const PathWitness& path) {
    if (path.vertices.empty()) return false;
    for (size_t i = 0; i + 1 < path.vertices.size(); ++i)
        if (dm.at(path.vertices[i], path.vertices[i + 1]) != 1) return false;
    return dm.at(path.front(), path.back()) == path.length();
}

} // namespace bmp
