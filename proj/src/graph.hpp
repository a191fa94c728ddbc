#ifndef BMP_GRAPH_HPP
#define BMP_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bmp {

// Simple undirected graph on vertices 0..n-1, sorted adjacency lists.
// Immutable once built; all operations on it are pure.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int order() const { return n_; }
    int edge_count() const;
    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    // Throws ValidationError on self-loops/duplicates, IndexError on range.
    void add_edge(int u, int v);
    void finalize();

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Line-oriented "u v" edge list, optional "n <count>" header, '#' comments.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// Sorted components, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

} // namespace bmp

#endif
