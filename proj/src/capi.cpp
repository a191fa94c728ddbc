#include "bmp.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "certify.hpp"
#include "construct.hpp"
#include "distance.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "serialize.hpp"

struct bmp_graph {
    bmp::Graph g;
};

namespace {

thread_local std::string g_last_error = "no error";

void set_error(const std::string& msg) { g_last_error = msg; }

char* alloc_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn, translating the C++ error taxonomy to status codes.
template <typename Fn>
bmp_status guarded(Fn&& fn) {
    try {
        fn();
        return BMP_OK;
    } catch (const bmp::ParseError& e) {
        set_error(e.what());
        return BMP_ERR_PARSE;
    } catch (const bmp::FormatError& e) {
        set_error(e.what());
        return BMP_ERR_FORMAT;
    } catch (const bmp::IndexError& e) {
        set_error(e.what());
        return BMP_ERR_INDEX;
    } catch (const bmp::DisconnectedError& e) {
        set_error(e.what());
        return BMP_ERR_DISCONNECTED;
    } catch (const bmp::CapExceededError& e) {
        set_error(e.what());
        return BMP_ERR_CAP;
    } catch (const bmp::PreconditionError& e) {
        set_error(e.what());
        return BMP_ERR_PRECONDITION;
    } catch (const bmp::ValidationError& e) {
        set_error(e.what());
        return BMP_ERR_INVALID;
    } catch (const std::exception& e) {
        set_error(e.what());
        return BMP_ERR_INVALID;
    }
}

bmp_status require_nonnull(const void* p, const char* what) {
    if (p) return BMP_OK;
    set_error(std::string("null argument: ") + what);
    return BMP_ERR_NULL;
}

} // namespace

extern "C" {

const char* bmp_last_error(void) { return g_last_error.c_str(); }

void bmp_string_free(char* s) { std::free(s); }

bmp_status bmp_graph_from_edgelist(const char* text, bmp_graph** out) {
    if (auto s = require_nonnull(text, "text"); s != BMP_OK) return s;
    if (auto s = require_nonnull(out, "out"); s != BMP_OK) return s;
    return guarded([&] { *out = new bmp_graph{bmp::parse_edge_list(text)}; });
}

bmp_status bmp_graph_from_graph6(const char* line, bmp_graph** out) {
    if (auto s = require_nonnull(line, "line"); s != BMP_OK) return s;
    if (auto s = require_nonnull(out, "out"); s != BMP_OK) return s;
    return guarded([&] { *out = new bmp_graph{bmp::parse_graph6(line)}; });
}

bmp_status bmp_graph_generate(const char* desc, bmp_graph** out) {
    if (auto s = require_nonnull(desc, "desc"); s != BMP_OK) return s;
    if (auto s = require_nonnull(out, "out"); s != BMP_OK) return s;
    return guarded([&] { *out = new bmp_graph{bmp::generate(desc)}; });
}

bmp_status bmp_graph_create(int n, const int* endpoints, int edge_count, bmp_graph** out) {
    if (edge_count > 0) {
        if (auto s = require_nonnull(endpoints, "endpoints"); s != BMP_OK) return s;
    }
    if (auto s = require_nonnull(out, "out"); s != BMP_OK) return s;
    return guarded([&] {
        std::vector<std::pair<int, int>> edges;
        edges.reserve(static_cast<size_t>(std::max(edge_count, 0)));
        for (int i = 0; i < edge_count; ++i)
            edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
        *out = new bmp_graph{bmp::Graph::from_edges(n, edges)};
    });
}

void bmp_graph_free(bmp_graph* g) { delete g; }

int bmp_graph_order(const bmp_graph* g) { return g ? g->g.order() : 0; }

int bmp_graph_edge_count(const bmp_graph* g) { return g ? g->g.edge_count() : 0; }

int bmp_graph_component_count(const bmp_graph* g) {
    return g ? static_cast<int>(bmp::connected_components(g->g).size()) : 0;
}

bmp_status bmp_graph_to_graph6(const bmp_graph* g, char** out) {
    if (auto s = require_nonnull(g, "graph"); s != BMP_OK) return s;
    if (auto s = require_nonnull(out, "out"); s != BMP_OK) return s;
    return guarded([&] { *out = alloc_string(bmp::encode_graph6(g->g)); });
}

bmp_status bmp_graph_to_edgelist(const bmp_graph* g, char** out) {
    if (auto s = require_nonnull(g, "graph"); s != BMP_OK) return s;
    if (auto s = require_nonnull(out, "out"); s != BMP_OK) return s;
    return guarded([&] { *out = alloc_string(bmp::to_edge_list(g->g)); });
}

bmp_status bmp_graph_distances(const bmp_graph* g, int source, int* row) {
    if (auto s = require_nonnull(g, "graph"); s != BMP_OK) return s;
    if (auto s = require_nonnull(row, "row"); s != BMP_OK) return s;
    return guarded([&] {
        auto dist = bmp::bfs_distances(g->g, source);
        std::copy(dist.begin(), dist.end(), row);
    });
}

bmp_status bmp_graph_metrics(const bmp_graph* g, int* radius, int* diameter,
                             int* center, int* diam_u, int* diam_v) {
    if (auto s = require_nonnull(g, "graph"); s != BMP_OK) return s;
    return guarded([&] {
        auto m = bmp::radius_diameter(bmp::all_pairs(g->g));
        if (radius) *radius = m.radius;
        if (diameter) *diameter = m.diameter;
        if (center) *center = m.center;
        if (diam_u) *diam_u = m.diam_u;
        if (diam_v) *diam_v = m.diam_v;
    });
}

bmp_status bmp_solve_mp(const bmp_graph* g, int cap, char** result_json) {
    if (auto s = require_nonnull(g, "graph"); s != BMP_OK) return s;
    if (auto s = require_nonnull(result_json, "result_json"); s != BMP_OK) return s;
    return guarded([&] {
        auto r = bmp::mp_exact(g->g, cap > 0 ? cap : bmp::kDefaultSolverCap);
        *result_json = alloc_string(bmp::mp_result_to_json(r).dump());
    });
}

bmp_status bmp_solve_gb(const bmp_graph* g, int cap, char** result_json) {
    if (auto s = require_nonnull(g, "graph"); s != BMP_OK) return s;
    if (auto s = require_nonnull(result_json, "result_json"); s != BMP_OK) return s;
    return guarded([&] {
        auto r = bmp::gb_exact(g->g, cap > 0 ? cap : bmp::kDefaultSolverCap);
        *result_json = alloc_string(bmp::gb_result_to_json(r).dump());
    });
}

bmp_status bmp_approx_multipacking(const bmp_graph* g, char** result_json) {
    if (auto s = require_nonnull(g, "graph"); s != BMP_OK) return s;
    if (auto s = require_nonnull(result_json, "result_json"); s != BMP_OK) return s;
    return guarded([&] {
        auto r = bmp::approx_multipacking(g->g);
        auto dm = bmp::all_pairs(g->g);
        bool verified = !bmp::verify_multipacking(dm, r.packing).has_value();
        bmp::json out{
            {"multipacking", r.packing.members},
            {"size", r.packing.size()},
            {"verified", verified},
            {"trace", bmp::trace_to_json(r.trace)},
        };
        *result_json = alloc_string(out.dump());
    });
}

bmp_status bmp_verify(const bmp_graph* g, const char* certificate_json, char** verdict_json) {
    if (auto s = require_nonnull(g, "graph"); s != BMP_OK) return s;
    if (auto s = require_nonnull(certificate_json, "certificate_json"); s != BMP_OK) return s;
    if (auto s = require_nonnull(verdict_json, "verdict_json"); s != BMP_OK) return s;
    return guarded([&] {
        bmp::json cert;
        try {
            cert = bmp::json::parse(certificate_json);
        } catch (const bmp::json::parse_error& e) {
            throw bmp::ParseError(std::string("certificate JSON: ") + e.what());
        }
        auto dm = bmp::all_pairs(g->g);
        std::optional<bmp::Violation> violation;
        if (cert.is_object() && cert.contains("multipacking")) {
            violation = bmp::verify_multipacking(dm, bmp::multipacking_from_json(cert));
        } else if (cert.is_object() && cert.contains("broadcast")) {
            violation = bmp::verify_broadcast(dm, bmp::broadcast_from_json(cert));
        } else {
            throw bmp::ParseError("certificate must contain \"multipacking\" or \"broadcast\"");
        }
        *verdict_json = alloc_string(bmp::verdict_to_json(violation).dump());
    });
}

} // extern "C"
