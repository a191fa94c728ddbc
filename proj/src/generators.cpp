#include "generators.hpp"

#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"

namespace bmp {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

void require(bool cond, const char* msg) {
    if (!cond) throw ValidationError(msg);
}

} // namespace

Graph gen_path(int n) {
    require(n >= 1, "path: n must be positive");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph gen_cycle(int n) {
    require(n >= 3, "cycle: n must be at least 3");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(n - 1, 0);
    return Graph::from_edges(n, e);
}

Graph gen_complete(int n) {
    require(n >= 1, "complete: n must be positive");
    EdgeList e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph gen_grid(int w, int h) {
    require(w >= 1 && h >= 1, "grid: dimensions must be positive");
    EdgeList e;
    auto id = [w](int r, int c) { return r * w + c; };
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            if (c + 1 < w) e.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < h) e.emplace_back(id(r, c), id(r + 1, c));
        }
    }
    return Graph::from_edges(w * h, e);
}

Graph gen_spider(int k, int k_prime) {
    require(k >= 1, "spider: k must be positive");
    require(k_prime >= 0, "spider: k' must be non-negative");
    const int spine_len = 6 * k;
    const int branch_len = 3 * k + 3 * k_prime;
    const int x = 3 * k;
    EdgeList e;
    for (int i = 0; i < spine_len; ++i) e.emplace_back(i, i + 1);
    // Branch vertex at distance j from x has index 6k + j.
    int prev = x;
    for (int j = 1; j <= branch_len; ++j) {
        e.emplace_back(prev, spine_len + j);
        prev = spine_len + j;
    }
    return Graph::from_edges(spine_len + branch_len + 1, e);
}

Graph gen_fig3a() {
    EdgeList e;
    for (int i = 0; i < 6; ++i) {
        e.emplace_back(i, (i + 1) % 6);
        e.emplace_back(6 + i, 6 + (i + 1) % 6);
    }
    e.emplace_back(0, 6);
    e.emplace_back(2, 8);
    e.emplace_back(4, 10);
    return Graph::from_edges(12, e);
}

Graph gen_fig3b() {
    EdgeList e;
    for (int i = 0; i < 6; ++i) {
        e.emplace_back(i, (i + 1) % 6);
        e.emplace_back(6 + i, 6 + (i + 1) % 6);
    }
    // Chords between the rings (inner 1,2,4,5 to outer c,b,f,e).
    e.emplace_back(1, 8);
    e.emplace_back(2, 7);
    e.emplace_back(4, 11);
    e.emplace_back(5, 10);
    // Degree-2 subdivision vertices between 0-a and 3-d.
    e.emplace_back(0, 12);
    e.emplace_back(12, 6);
    e.emplace_back(3, 13);
    e.emplace_back(13, 9);
    return Graph::from_edges(14, e);
}

Graph gen_fig3c() {
    EdgeList e;
    for (int i = 0; i < 8; ++i) {
        e.emplace_back(i, (i + 1) % 8);
        e.emplace_back(8 + i, 8 + (i + 1) % 8);
    }
    // x0-y1, y0-x1, x2-y3, y2-x3, x4-y5, y4-x5, x6-y7, x7-y6.
    e.emplace_back(0, 9);
    e.emplace_back(8, 1);
    e.emplace_back(2, 11);
    e.emplace_back(10, 3);
    e.emplace_back(4, 13);
    e.emplace_back(12, 5);
    e.emplace_back(6, 15);
    e.emplace_back(7, 14);
    return Graph::from_edges(16, e);
}

Graph gen_gnp(int n, double p, uint64_t seed) {
    require(n >= 0, "gnp: n must be non-negative");
    require(p >= 0.0 && p <= 1.0, "gnp: p must be in [0,1]");
    SplitMix64 rng(seed);
    EdgeList e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < p) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

namespace {

std::vector<std::string> split_params(std::string_view s) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string_view::npos) {
            out.emplace_back(s.substr(pos));
            break;
        }
        out.emplace_back(s.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return out;
}

int to_int(const std::string& s) {
    int v;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("bad integer parameter: \"" + s + "\"");
    return v;
}

uint64_t to_u64(const std::string& s) {
    uint64_t v;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("bad seed parameter: \"" + s + "\"");
    return v;
}

double to_double(const std::string& s) {
    try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad real parameter: \"" + s + "\"");
    }
}

} // namespace

Graph generate(std::string_view desc) {
    std::string kind;
    std::vector<std::string> params;
    if (auto colon = desc.find(':'); colon != std::string_view::npos) {
        kind = desc.substr(0, colon);
        params = split_params(desc.substr(colon + 1));
    } else {
        kind = desc;
    }
    auto arity = [&](size_t want) {
        if (params.size() != want)
            throw ParseError("generator \"" + kind + "\" expects " + std::to_string(want) +
                             " parameter(s), got " + std::to_string(params.size()));
    };

    if (kind == "path") { arity(1); return gen_path(to_int(params[0])); }
    if (kind == "cycle") { arity(1); return gen_cycle(to_int(params[0])); }
    if (kind == "complete") { arity(1); return gen_complete(to_int(params[0])); }
    if (kind == "grid") { arity(2); return gen_grid(to_int(params[0]), to_int(params[1])); }
    if (kind == "spider") { arity(2); return gen_spider(to_int(params[0]), to_int(params[1])); }
    if (kind == "fig3a") { arity(0); return gen_fig3a(); }
    if (kind == "fig3b") { arity(0); return gen_fig3b(); }
    if (kind == "fig3c") { arity(0); return gen_fig3c(); }
    if (kind == "gnp") {
        arity(3);
        return gen_gnp(to_int(params[0]), to_double(params[1]), to_u64(params[2]));
    }
    throw ParseError("unknown generator kind: \"" + kind + "\"");
}

} // namespace bmp
