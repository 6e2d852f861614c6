#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cantor/point.hpp"
#include "cantor/prefix_injection.hpp"
#include "cantor/prefix_map.hpp"

namespace cantor {

/// A fat point: a core together with a tissue embedding sending (0) to the
/// core.  Considered up to agreement of tissues on a cylinder around (0).
struct FatPoint {
    Point core;
    PrefixInjection tissue;

    /// Syntax: "<point> @ <injection>", e.g. "1(0) @ e->1".
    static FatPoint parse(std::string_view text);
    std::string str() const;

    friend bool operator==(const FatPoint&, const FatPoint&) = default;
};

/// Validates tissue((0)) = core.  Throws on mismatch.
FatPoint make_fat_point(const Point& core, const PrefixInjection& tissue);

/// The group action g.(x,h) = (g(x), g o h).
FatPoint act(const PrefixMap& g, const FatPoint& p);

/// True iff the cores are equal and the tissues agree on some cylinder
/// C(0^N); decided exactly at N = max piece level of both tissues.
bool equivalent(const FatPoint& p, const FatPoint& q);

struct DisjointnessWitness {
    bool disjoint;
    // Present when disjoint: equivalent representatives with image-disjoint
    // tissues, realizing the relation constructively.
    PrefixInjection p_tissue;
    PrefixInjection q_tissue;
};

/// The generic relation: true iff the cores differ; returns squeezed
/// representatives witnessing image disjointness.
DisjointnessWitness disjoint(const FatPoint& p, const FatPoint& q);

/// A tuple of pairwise disjoint fat points.  Throws when two cores agree.
std::vector<FatPoint> make_fat_tuple(std::vector<FatPoint> points);

/// An element g of V with g.(src[i]) equivalent to dst[i] for all i, built
/// piecewise from normalized tissues and a complement bijection; the
/// postcondition is re-verified before returning.
PrefixMap fat_transitivity_witness(const std::vector<FatPoint>& src,
                                   const std::vector<FatPoint>& dst);

/// A fat point disjoint from every member of F, found deterministically:
/// its core is 0^m 1 (0) for the least m >= 1 avoiding the cores of F
/// (no constraint means (0)), and its tissue is a prepend embedding into a
/// cylinder separated from all F cores.
FatPoint fresh_fat_point(const std::vector<FatPoint>& F);

}  // namespace cantor
