#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "errors.hpp"

namespace bmp {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(std::max(n, 0))) {
    if (n < 0) throw ValidationError("vertex count must be non-negative");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw IndexError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                         std::to_string(v) + ") with n = " + std::to_string(n_));
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    if (std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end())
        throw ValidationError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

void Graph::finalize() {
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    g.finalize();
    return g;
}

int Graph::edge_count() const {
    size_t deg_sum = 0;
    for (const auto& nb : adj_) deg_sum += nb.size();
    return static_cast<int>(deg_sum / 2);
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw IndexError("vertex out of range: " + std::to_string(v));
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = neighbors(u);
    if (v < 0 || v >= n_) throw IndexError("vertex out of range: " + std::to_string(v));
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

bool parse_int(std::string_view tok, int& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> toks;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    int header_n = -1;
    int max_index = -1;
    bool first_data_line = true;

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;

        if (first_data_line && toks[0] == "n") {
            if (toks.size() != 2 || !parse_int(toks[1], header_n) || header_n < 0)
                throw ParseError("line " + std::to_string(line_no) + ": malformed header");
            first_data_line = false;
            continue;
        }
        first_data_line = false;

        int u, v;
        if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v) || u < 0 || v < 0)
            throw ParseError("line " + std::to_string(line_no) + ": expected \"u v\" with non-negative integers");
        edges.emplace_back(u, v);
        max_index = std::max({max_index, u, v});
    }

    int n = header_n >= 0 ? header_n : max_index + 1;
    if (header_n >= 0 && max_index >= header_n)
        throw ParseError("vertex index " + std::to_string(max_index) +
                         " exceeds declared count " + std::to_string(header_n));
    return Graph::from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out; // components are discovered by smallest member, so already ordered
}

bool is_connected(const Graph& g) {
    return g.order() == 0 || connected_components(g).size() == 1;
}

} // namespace bmp
