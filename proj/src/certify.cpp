#include "certify.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "errors.hpp"

namespace bmp {

Multipacking Multipacking::of(std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return Multipacking{std::move(members)};
}

int Broadcast::cost() const {
    int c = 0;
    for (auto [v, r] : powers) c += r;
    return c;
}

namespace {

void check_members_in_range(const DistanceMatrix& dm, const Multipacking& p) {
    for (int m : p.members)
        if (m < 0 || m >= dm.order())
            throw IndexError("multipacking member out of range: " + std::to_string(m));
}

} // namespace

std::optional<Violation> verify_multipacking(const DistanceMatrix& dm, const Multipacking& p) {
    check_members_in_range(dm, p);
    const int n = dm.order();
    const int r_max = p.size() - 1; // for r ≥ |P| the constraint is vacuous
    for (int v = 0; v < n; ++v) {
        for (int r = 1; r <= r_max; ++r) {
            std::vector<int> inside;
            for (int m : p.members) {
                int d = dm.at(v, m);
                if (d != kUnreachable && d <= r) inside.push_back(m);
            }
            if (static_cast<int>(inside.size()) > r)
                return Violation{ViolationKind::BallOverfull, v, r, std::move(inside)};
        }
    }
    return std::nullopt;
}

bool multipacking_ok_sorted(const DistanceMatrix& dm, const Multipacking& p) {
    check_members_in_range(dm, p);
    const int n = dm.order();
    std::vector<int> dists;
    for (int v = 0; v < n; ++v) {
        dists.clear();
        for (int m : p.members) {
            int d = dm.at(v, m);
            if (d != kUnreachable) dists.push_back(d);
        }
        std::sort(dists.begin(), dists.end());
        for (size_t i = 1; i < dists.size(); ++i)
            if (dists[i] < static_cast<int>(i) + 1) return false;
    }
    return true;
}

std::optional<Violation> verify_broadcast(const DistanceMatrix& dm, const Broadcast& f) {
    for (auto [v, power] : f.powers) {
        if (v < 0 || v >= dm.order())
            throw IndexError("broadcast vertex out of range: " + std::to_string(v));
        if (power <= 0)
            throw ValidationError("broadcast power must be positive at vertex " + std::to_string(v));
    }
    std::vector<int> uncovered;
    for (int u = 0; u < dm.order(); ++u) {
        bool covered = false;
        for (auto [v, power] : f.powers) {
            int d = dm.at(u, v);
            if (d != kUnreachable && d <= power) {
                covered = true;
                break;
            }
        }
        if (!covered) uncovered.push_back(u);
    }
    if (uncovered.empty()) return std::nullopt;
    return Violation{ViolationKind::Uncovered, -1, 0, std::move(uncovered)};
}

BallScanReport lemma1_bound_check(const DistanceMatrix& dm, const PathWitness& path,
                                  int stride_start) {
    if (stride_start < 0 || stride_start > 2)
        throw PreconditionError("stride_start must be 0, 1 or 2");
    if (!is_isometric(dm, path))
        throw PreconditionError("path is not isometric");

    std::vector<int> members;
    for (size_t i = stride_start; i < path.vertices.size(); i += 3)
        members.push_back(path.vertices[i]);

    BallScanReport report;
    const int r_max = std::max(1, dm.max_finite());
    for (int v = 0; v < dm.order(); ++v) {
        for (int r = 1; r <= r_max; ++r) {
            int count = 0;
            for (int m : members) {
                int d = dm.at(v, m);
                if (d != kUnreachable && d <= r) ++count;
            }
            int bound = (2 * r + 3) / 3; // ceil((2r+1)/3)
            double ratio = static_cast<double>(count) / bound;
            if (ratio > report.max_ratio) {
                report.max_ratio = ratio;
                report.worst_center = v;
                report.worst_radius = r;
                report.worst_count = count;
                report.bound_at_worst = bound;
            }
            if (count > bound) report.ok = false;
        }
    }
    return report;
}

bool pairwise_sufficient_condition(const DistanceMatrix& dm, const Multipacking& p) {
    check_members_in_range(dm, p);
    const int k = p.size();
    if (k > 12) throw CapExceededError("pairwise condition limited to |P| <= 12");
    if (k < 2) return true;

    // Pair distances once; unreachable pairs satisfy any threshold.
    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<int> pd(static_cast<size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            int d = dm.at(p.members[i], p.members[j]);
            pd[i * k + j] = (d == kUnreachable) ? kInf : d;
        }
    }

    for (uint32_t mask = 1; mask < (1u << k); ++mask) {
        int size = std::popcount(mask);
        if (size < 2) continue;
        int far = 0;
        for (int i = 0; i < k && far < 2 * size - 1; ++i) {
            if (!(mask & (1u << i))) continue;
            for (int j = i + 1; j < k; ++j)
                if (mask & (1u << j)) far = std::max(far, pd[i * k + j]);
        }
        if (far < 2 * size - 1) return false;
    }
    return true;
}

} // namespace bmp
