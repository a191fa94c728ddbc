#include "exact.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "errors.hpp"

namespace bmp {

namespace {

using Clock = std::chrono::steady_clock;

// The cap guards the per-component exponential search; isolated parts of a
// large disconnected graph stay solvable.
void check_cap(size_t comp_order, int cap, const char* what) {
    if (static_cast<int>(comp_order) > cap)
        throw CapExceededError(std::string(what) + ": component order " +
                               std::to_string(comp_order) + " exceeds cap " + std::to_string(cap));
}

// --- maximum multipacking ------------------------------------------------

// Branch and bound over one component. Candidates are tried in a fixed
// order (descending eccentricity, then index); feasibility of a partial set
// is maintained incrementally via per-center sorted member-distance lists
// (the d_i ≥ i criterion).
class MpSearch {
public:
    MpSearch(const DistanceMatrix& dm, const std::vector<int>& comp)
        : dm_(dm), comp_(comp), lists_(comp.size()) {
        order_ = comp_;
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            int ea = comp_ecc(a), eb = comp_ecc(b);
            return ea != eb ? ea > eb : a < b;
        });
        // mp ≤ γb ≤ rad on a connected component with ≥ 2 vertices.
        int rad = comp_ecc(comp_[0]);
        for (int v : comp_) rad = std::min(rad, comp_ecc(v));
        ub_ = comp_.size() == 1 ? 1 : rad;
    }

    void run() {
        branch(0);
    }

    std::vector<int> best;
    int64_t nodes = 0;

private:
    int comp_ecc(int v) const {
        int e = 0;
        for (int u : comp_) e = std::max(e, dm_.at(v, u));
        return e;
    }

    bool add_member(int m) {
        size_t undo = 0;
        bool ok = true;
        for (size_t i = 0; i < comp_.size() && ok; ++i) {
            auto& list = lists_[i];
            int d = dm_.at(comp_[i], m);
            list.insert(std::lower_bound(list.begin(), list.end(), d), d);
            ++undo;
            for (size_t j = 1; j < list.size(); ++j) {
                if (list[j] < static_cast<int>(j) + 1) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) {
            for (size_t i = 0; i < undo; ++i) {
                auto& list = lists_[i];
                int d = dm_.at(comp_[i], m);
                list.erase(std::lower_bound(list.begin(), list.end(), d));
            }
        }
        return ok;
    }

    void remove_member(int m) {
        for (size_t i = 0; i < comp_.size(); ++i) {
            auto& list = lists_[i];
            int d = dm_.at(comp_[i], m);
            list.erase(std::lower_bound(list.begin(), list.end(), d));
        }
    }

    void branch(size_t idx) {
        ++nodes;
        if (chosen_.size() > best.size()) best = chosen_;
        if (best.size() >= static_cast<size_t>(ub_)) return;
        for (size_t i = idx; i < order_.size(); ++i) {
            if (chosen_.size() + (order_.size() - i) <= best.size()) break;
            int m = order_[i];
            if (!add_member(m)) continue;
            chosen_.push_back(m);
            branch(i + 1);
            chosen_.pop_back();
            remove_member(m);
            if (best.size() >= static_cast<size_t>(ub_)) return;
        }
    }

    const DistanceMatrix& dm_;
    const std::vector<int>& comp_;
    std::vector<std::vector<int>> lists_; // sorted member distances per center
    std::vector<int> order_;
    std::vector<int> chosen_;
    int ub_ = 0;
};

// --- minimum dominating broadcast ---------------------------------------

struct BallCandidate {
    int center;
    int radius;
    uint64_t mask;
};

class GbSearch {
public:
    GbSearch(const DistanceMatrix& dm, const std::vector<int>& comp) : comp_(comp) {
        const int m = static_cast<int>(comp.size());
        if (m > 64) throw CapExceededError("gb_exact: component larger than 64 vertices");
        full_ = (m == 64) ? ~0ULL : (1ULL << m) - 1;

        std::vector<int> ecc(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) ecc[i] = std::max(ecc[i], dm.at(comp[i], comp[j]));

        int center = 0;
        for (int i = 1; i < m; ++i)
            if (ecc[i] < ecc[center]) center = i;
        const int rad = ecc[center];

        // Powers above eccentricity are never useful.
        for (int i = 0; i < m; ++i) {
            for (int r = 1; r <= ecc[i]; ++r) {
                uint64_t mask = 0;
                for (int j = 0; j < m; ++j)
                    if (dm.at(comp[i], comp[j]) <= r) mask |= 1ULL << j;
                cands_.push_back({i, r, mask});
            }
        }
        drop_dominated();

        // Incumbent: single ball of radius rad at the center.
        best_cost_ = rad;
        best_sel_ = {{center, rad}};

        // Duality floor: any greedy multipacking bounds γb from below.
        lb_ = greedy_multipacking_size(dm);
    }

    void run() {
        if (best_cost_ > lb_) branch(0, 0, {});
    }

    Broadcast witness() const {
        Broadcast f;
        for (auto [local, r] : best_sel_) {
            int v = comp_[local];
            auto it = f.powers.find(v);
            if (it == f.powers.end() || it->second < r) f.powers[v] = r;
        }
        return f;
    }

    int best_cost() const { return best_cost_; }
    int64_t nodes = 0;

private:
    int greedy_multipacking_size(const DistanceMatrix& dm) const {
        std::vector<std::vector<int>> lists(comp_.size());
        int size = 0;
        for (int v : comp_) {
            bool ok = true;
            for (size_t i = 0; i < comp_.size() && ok; ++i) {
                auto& list = lists[i];
                int d = dm.at(comp_[i], v);
                auto pos = std::lower_bound(list.begin(), list.end(), d);
                size_t at = static_cast<size_t>(pos - list.begin());
                // Would inserting d keep d_i ≥ i for all i ≥ 2?
                for (size_t j = at; j < list.size() && ok; ++j)
                    if (list[j] < static_cast<int>(j) + 2) ok = false;
                if (ok && at > 0 && d < static_cast<int>(at) + 1) ok = false;
            }
            if (!ok) continue;
            for (size_t i = 0; i < comp_.size(); ++i) {
                auto& list = lists[i];
                int d = dm.at(comp_[i], v);
                list.insert(std::lower_bound(list.begin(), list.end(), d), d);
            }
            ++size;
        }
        return size;
    }

    void drop_dominated() {
        std::vector<BallCandidate> kept;
        for (size_t i = 0; i < cands_.size(); ++i) {
            bool dominated = false;
            for (size_t j = 0; j < cands_.size() && !dominated; ++j) {
                if (j == i) continue;
                const auto& a = cands_[i];
                const auto& b = cands_[j];
                if ((a.mask & ~b.mask) != 0) continue; // not a subset
                if (b.radius < a.radius) dominated = true;
                else if (b.radius == a.radius && (b.mask != a.mask || j < i)) dominated = true;
            }
            if (!dominated) kept.push_back(cands_[i]);
        }
        cands_ = std::move(kept);
    }

    void branch(uint64_t covered, int cost, std::vector<std::pair<int, int>> sel) {
        ++nodes;
        if (covered == full_) {
            if (cost < best_cost_) {
                best_cost_ = cost;
                best_sel_ = sel;
            }
            return;
        }
        if (cost + 1 >= best_cost_ || best_cost_ <= lb_) return;

        // Branch on the uncovered vertex with fewest covering balls.
        int pick = -1, pick_count = 0;
        for (int j = 0; j < static_cast<int>(comp_.size()); ++j) {
            if (covered & (1ULL << j)) continue;
            int count = 0;
            for (const auto& c : cands_)
                if (c.mask & (1ULL << j)) ++count;
            if (pick == -1 || count < pick_count) {
                pick = j;
                pick_count = count;
            }
        }
        if (pick_count == 0) return; // cannot happen on a connected component

        for (const auto& c : cands_) {
            if (!(c.mask & (1ULL << pick))) continue;
            if (cost + c.radius >= best_cost_) continue;
            sel.push_back({c.center, c.radius});
            branch(covered | c.mask, cost + c.radius, sel);
            sel.pop_back();
            if (best_cost_ <= lb_) return;
        }
    }

    const std::vector<int>& comp_;
    std::vector<BallCandidate> cands_;
    uint64_t full_ = 0;
    int best_cost_ = 0;
    int lb_ = 0;
    std::vector<std::pair<int, int>> best_sel_;
};

} // namespace

MpResult mp_exact(const Graph& g, int cap) {
    auto start = Clock::now();
    auto dm = all_pairs(g);

    MpResult result;
    std::vector<int> members;
    for (const auto& comp : connected_components(g)) {
        check_cap(comp.size(), cap, "mp_exact");
        MpSearch search(dm, comp);
        search.run();
        result.stats.nodes += search.nodes;
        members.insert(members.end(), search.best.begin(), search.best.end());
    }
    result.witness = Multipacking::of(std::move(members));
    result.value = result.witness.size();
    result.stats.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return result;
}

GbResult gb_exact(const Graph& g, int cap) {
    auto start = Clock::now();
    auto dm = all_pairs(g);

    GbResult result;
    for (const auto& comp : connected_components(g)) {
        check_cap(comp.size(), std::min(cap, 64), "gb_exact"); // coverage masks are uint64_t
        if (comp.size() == 1) {
            // A lone vertex still needs a unit-power broadcast.
            result.witness.powers[comp[0]] = 1;
            continue;
        }
        GbSearch search(dm, comp);
        search.run();
        result.stats.nodes += search.nodes;
        for (auto [v, r] : search.witness().powers) result.witness.powers[v] = r;
    }
    result.value = result.witness.cost();
    result.stats.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return result;
}

} // namespace bmp
