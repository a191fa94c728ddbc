#ifndef BMP_CERTIFY_HPP
#define BMP_CERTIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "distance.hpp"

namespace bmp {

// Vertex set P claimed to satisfy |N_r(v) ∩ P| ≤ r for all v and r ≥ 1.
struct Multipacking {
    std::vector<int> members; // sorted, unique

    static Multipacking of(std::vector<int> members);
    int size() const { return static_cast<int>(members.size()); }
};

// Partial map vertex -> power ≥ 1; cost is the sum of powers.
struct Broadcast {
    std::map<int, int> powers;

    int cost() const;
};

enum class ViolationKind { BallOverfull, Uncovered };

// A re-checkable counterexample. For BallOverfull: the ball N_radius(center)
// holds the listed witness members (more than radius of them). For
// Uncovered: witness lists every vertex missed by the broadcast.
struct Violation {
    ViolationKind kind;
    int center = -1;
    int radius = 0;
    std::vector<int> witness;
};

// Direct definition check over r in [1, |P|-1] (constraints with r ≥ |P|
// are vacuous). Returns nullopt iff P is a multipacking.
std::optional<Violation> verify_multipacking(const DistanceMatrix& dm, const Multipacking& p);

// Independent route: for every center, the sorted finite distances
// d_1 ≤ d_2 ≤ ... to members must satisfy d_i ≥ i for all i ≥ 2.
// Must agree with verify_multipacking on every input.
bool multipacking_ok_sorted(const DistanceMatrix& dm, const Multipacking& p);

std::optional<Violation> verify_broadcast(const DistanceMatrix& dm, const Broadcast& f);

// Exhaustive ball scan for the every-third-vertex set of an isometric path:
// checks |N_r(v) ∩ P| ≤ ceil((2r+1)/3) for all centers and r up to the
// largest finite distance.
struct BallScanReport {
    bool ok = true;
    double max_ratio = 0.0; // count / bound, over all scanned balls
    int worst_center = -1;
    int worst_radius = 0;
    int worst_count = 0;
    int bound_at_worst = 0;
};

BallScanReport lemma1_bound_check(const DistanceMatrix& dm, const PathWitness& path,
                                  int stride_start);

// True iff every subset U of P with |U| ≥ 2 has two members at distance
// ≥ 2|U|-1 (unreachable counts as infinite). Sufficient for P to be a
// multipacking; not necessary. |P| ≤ 12 (subset scan).
bool pairwise_sufficient_condition(const DistanceMatrix& dm, const Multipacking& p);

} // namespace bmp

#endif
