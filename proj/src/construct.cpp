#include "construct.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace bmp {

Multipacking third_vertex_packing(const DistanceMatrix& dm, const PathWitness& path) {
    if (!is_isometric(dm, path))
        throw PreconditionError("third_vertex_packing: path is not isometric");
    std::vector<int> members;
    for (size_t i = 0; i < path.vertices.size(); i += 3) members.push_back(path.vertices[i]);
    return Multipacking::of(std::move(members));
}

namespace {

void require_distance(const DistanceMatrix& dm, int a, int b, int want, const char* name) {
    if (dm.at(a, b) != want)
        throw PreconditionError(std::string("theorem2_construct: ") + name + " = " +
                                std::to_string(want) + " fails (actual " +
                                std::to_string(dm.at(a, b)) + ")");
}

} // namespace

ConstructionTrace theorem2_construct(const DistanceMatrix& dm, const Configuration& cfg) {
    const int k = cfg.k, kp = cfg.k_prime;
    if (k < 1) throw PreconditionError("theorem2_construct: k must be at least 1");
    if (kp < 1 || kp > k) throw PreconditionError("theorem2_construct: k' must satisfy 1 <= k' <= k");

    require_distance(dm, cfg.x, cfg.u, 3 * k, "d(x,u)");
    require_distance(dm, cfg.x, cfg.v, 3 * k, "d(x,v)");
    require_distance(dm, cfg.u, cfg.v, 6 * k, "d(u,v)");
    require_distance(dm, cfg.x, cfg.y, 3 * k + 3 * kp, "d(x,y)");

    if (!is_isometric(dm, cfg.path_uv) || cfg.path_uv.length() != 6 * k ||
        cfg.path_uv.front() != cfg.u || cfg.path_uv.back() != cfg.v ||
        cfg.path_uv.vertices[static_cast<size_t>(3 * k)] != cfg.x)
        throw PreconditionError("theorem2_construct: path_uv is not an isometric u-v path through x");
    if (!is_isometric(dm, cfg.path_xy) || cfg.path_xy.length() != 3 * k + 3 * kp ||
        cfg.path_xy.front() != cfg.x || cfg.path_xy.back() != cfg.y)
        throw PreconditionError("theorem2_construct: path_xy is not an isometric x-y path");

    ConstructionTrace trace;
    trace.k = k;
    trace.k_prime = kp;
    trace.alpha = cfg.alpha;
    trace.beta = cfg.beta;
    trace.guarantee = 2 * k + kp;
    for (int i = 0; i <= 6 * k; i += 3) trace.p1.push_back(cfg.path_uv.vertices[i]);
    for (int i = 0; i <= kp - 2; ++i)
        trace.p2.push_back(cfg.path_xy.vertices[static_cast<size_t>(3 * k + 3 * (i + 2))]);

    if (static_cast<int>(trace_members(trace).size()) != 2 * k + kp)
        throw PreconditionError("theorem2_construct: P1 and P2 are not disjoint");
    return trace;
}

std::vector<int> trace_members(const ConstructionTrace& t) {
    std::vector<int> all = t.p1;
    all.insert(all.end(), t.p2.begin(), t.p2.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

std::optional<Configuration> find_configuration(const Graph& g) {
    auto dm = all_pairs(g);
    auto metrics = radius_diameter(dm);
    const int d = metrics.diameter;
    const int r = metrics.radius;

    Configuration cfg;
    cfg.k = d / 6;
    cfg.alpha = d - 6 * cfg.k;
    int raw_kp = (r - 3 * cfg.k) / 3; // r ≥ ceil(d/2) ≥ 3k, so never negative
    cfg.k_prime = std::clamp(raw_kp, 0, cfg.k);
    cfg.beta = r - 3 * cfg.k - 3 * cfg.k_prime;

    if (cfg.k == 0) return std::nullopt;

    // Trim a diametral path to length 6k from the far end.
    auto diam_path = shortest_path(g, metrics.diam_u, metrics.diam_v);
    cfg.path_uv.vertices.assign(diam_path.vertices.begin(),
                                diam_path.vertices.begin() + 6 * cfg.k + 1);
    cfg.u = cfg.path_uv.front();
    cfg.v = cfg.path_uv.back();
    cfg.x = cfg.path_uv.vertices[static_cast<size_t>(3 * cfg.k)];

    // y sits at distance exactly 3k+3k' on a shortest path from x towards
    // the smallest-index vertex eccentric for x (ecc(x) ≥ r ≥ 3k+3k').
    const int ecc_x = dm.eccentricity(cfg.x);
    int target = 0;
    while (dm.at(cfg.x, target) != ecc_x) ++target;
    auto xy_full = shortest_path(g, cfg.x, target);
    cfg.path_xy.vertices.assign(xy_full.vertices.begin(),
                                xy_full.vertices.begin() + 3 * cfg.k + 3 * cfg.k_prime + 1);
    cfg.y = cfg.path_xy.back();
    return cfg;
}

namespace {

// When r >= 6k+3 the derived k' lands at k+1, one past the range the
// two-path construction covers; its clamped form can then fall one member
// short of the d/6 + r/3 - 3/2 target. Try the extra P2 member anyway and
// keep the set only if it re-verifies as a multipacking.
std::optional<ApproxResult> extended_packing(const Graph& g, const DistanceMatrix& dm,
                                             const Configuration& cfg, int radius) {
    const int k = cfg.k, kp = k + 1;
    if (radius < 6 * k + 3) return std::nullopt;
    const int ecc_x = dm.eccentricity(cfg.x);
    if (ecc_x < 3 * k + 3 * kp) return std::nullopt;
    int target = 0;
    while (dm.at(cfg.x, target) != ecc_x) ++target;
    auto xy = shortest_path(g, cfg.x, target);

    ApproxResult out;
    for (int i = 0; i <= 6 * k; i += 3) out.trace.p1.push_back(cfg.path_uv.vertices[i]);
    for (int i = 0; i <= kp - 2; ++i)
        out.trace.p2.push_back(xy.vertices[static_cast<size_t>(3 * k + 3 * (i + 2))]);
    out.packing = Multipacking::of(trace_members(out.trace));
    if (out.packing.size() != 2 * k + kp) return std::nullopt;
    if (verify_multipacking(dm, out.packing)) return std::nullopt;
    out.trace.k = k;
    out.trace.k_prime = kp;
    return out;
}

} // namespace

int approx_guarantee(int diameter, int radius) {
    int num = diameter + 2 * radius - 9; // 6*(d/6 + r/3 - 3/2)
    if (num <= 0) return 1;
    return std::max(1, (num + 5) / 6);
}

ApproxResult approx_multipacking(const Graph& g) {
    if (g.order() == 0) throw ValidationError("approx_multipacking: empty graph");
    auto dm = all_pairs(g);
    auto metrics = radius_diameter(dm); // throws on disconnected input

    // Baseline: every third vertex of a full diametral path.
    auto diam_path = shortest_path(g, metrics.diam_u, metrics.diam_v);
    ApproxResult fallback;
    fallback.packing = third_vertex_packing(dm, diam_path);
    fallback.trace.p1 = fallback.packing.members;
    fallback.trace.fallback_used = true;

    ApproxResult chosen = fallback;
    if (auto cfg = find_configuration(g)) {
        ApproxResult built;
        if (cfg->k_prime >= 1) {
            built.trace = theorem2_construct(dm, *cfg);
            built.packing = Multipacking::of(trace_members(built.trace));
        } else {
            // k' = 0: P1 alone, size 2k+1, still dominates 2k+k'.
            built.packing = third_vertex_packing(dm, cfg->path_uv);
            built.trace.p1 = built.packing.members;
            built.trace.k = cfg->k;
            built.trace.k_prime = 0;
            built.trace.alpha = cfg->alpha;
            built.trace.beta = cfg->beta;
            built.trace.guarantee = 2 * cfg->k + 1;
        }
        if (built.packing.size() >= chosen.packing.size()) chosen = built;
        if (auto ext = extended_packing(g, dm, *cfg, metrics.radius);
            ext && ext->packing.size() > chosen.packing.size())
            chosen = *ext;
        if (chosen.trace.fallback_used) {
            chosen.trace.k = cfg->k;
            chosen.trace.k_prime = cfg->k_prime;
        }
        chosen.trace.alpha = cfg->alpha;
        chosen.trace.beta = cfg->beta;
    }
    chosen.trace.guarantee = approx_guarantee(metrics.diameter, metrics.radius);
    return chosen;
}

} // namespace bmp
