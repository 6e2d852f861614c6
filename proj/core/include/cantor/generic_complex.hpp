#pragma once

#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "cantor/fat_point.hpp"
#include "cantor/point.hpp"
#include "cantor/prefix_map.hpp"

namespace cantor {

using Rat = boost::rational<long long>;

std::string rat_str(const Rat& r);

/// The two generic relations the complex is built over: distinct dyadic
/// points, and pairwise disjoint fat points.
enum class Relation { DistinctDyadic, FatDisjoint };

/// A point of the tuple space under either relation.
using Element = std::variant<Point, FatPoint>;

std::string element_str(const Element& e);

/// Pairwise relation check.  Tuple arity is the point count k >= 1; a
/// k-tuple here corresponds to the (k-1)-simplices of the associated
/// semi-simplicial set (whose n-th level is made of (n+1)-tuples).
bool is_generic_tuple(Relation rel, std::span<const Element> tuple);
bool related(Relation rel, const Element& a, const Element& b);

/// Deterministic fresh point generic over the finite family F: for
/// DistinctDyadic the point 0^m 1 (0) for the least m >= 1 avoiding F
/// ((0) when F is empty); for FatDisjoint a fat point built by the same
/// core rule with a separated prepend tissue.
Element fresh_point(Relation rel, const std::vector<Element>& F);

/// An exactly evaluable bounded function on generic k-tuples, built from a
/// closed constructor algebra: constants, the lexicographic-order
/// indicator, pullbacks along elements of V, rational linear combinations,
/// coboundaries and homotopies.  Evaluation is pure and returns an exact
/// rational of absolute value at most bound().
/// Arity 0 is the augmentation corner: a scalar, whose coboundary is the
/// constant 1-tuple cochain with that value.
class Cochain {
public:
    static Cochain constant(std::size_t arity, Rat value);

    /// f(x,y) = 1 when x < y lexicographically (cores for fat points).
    static Cochain lex_indicator();

    /// f(g(x_1), ..., g(x_k)).
    Cochain pullback(PrefixMap g) const;

    static Cochain linear(std::vector<std::pair<Rat, Cochain>> terms);

    /// df(x_0..x_k) = sum_i (-1)^i f(..omit x_i..); arity k -> k+1.
    Cochain coboundary() const;

    /// Qf(x_1..x_(k-1)) = f(base, x_1..x_(k-1)); arity k -> k-1.  The
    /// evaluation throws when the base collides with an argument (the tuple
    /// would leave the generic locus).
    Cochain homotopy(Element base) const;

    std::size_t arity() const { return arity_; }
    Rat bound() const { return bound_; }

    Rat eval(std::span<const Element> tuple) const;
    Rat eval(const std::vector<Element>& tuple) const { return eval(std::span(tuple)); }

private:
    struct Node;
    Cochain(std::size_t arity, Rat bound, std::shared_ptr<const Node> node);
    std::size_t arity_;
    Rat bound_;
    std::shared_ptr<const Node> node_;
};

/// Checks (dQ + Qd)f = f exactly at each sampled tuple, with the homotopy
/// base point chosen fresh over every point in the samples (the finite
/// stage standing in for the ultrafilter).
bool verify_homotopy_identity(Relation rel, const Cochain& f,
                              const std::vector<std::vector<Element>>& tuples);

struct DeltaPatternRow {
    std::size_t arity;
    bool vanishes;       // d(const) == 0 at this arity
    Rat sample_value;    // d(const 1) evaluated at a generic tuple
};

/// d(const) alternates 0 (odd arity, even term count) / const (even
/// arity) — the invariant-subcomplex computation.  Checked by direct
/// evaluation on fresh dyadic tuples up to kmax.
std::vector<DeltaPatternRow> invariant_delta_pattern(std::size_t kmax);

}  // namespace cantor
