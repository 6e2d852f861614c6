#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/bitword.hpp"
#include "cantor/point.hpp"

namespace cantor {

/// One substitution rule r -> s: every sequence r.x maps to s.x.
struct Piece {
    BitWord from;
    BitWord to;

    friend bool operator==(const Piece&, const Piece&) = default;
    friend std::strong_ordering operator<=>(const Piece&, const Piece&) = default;
};

/// The fixed set of a prefix map, exactly: whole cylinders from pieces with
/// r = s, plus at most one eventually periodic point per moving piece
/// (solving the prefix equation r.w^inf = s.w^inf).
struct FixedSet {
    std::vector<BitWord> cylinders;
    std::vector<Point> points;

    bool contains(const Point& x) const;
};

/// F/T/V classification of an element together with the permutation induced
/// on the canonically sorted piece list by the range codes.
struct MembershipClass {
    enum class Kind { F, TOnly, VOnly };
    Kind kind = Kind::F;
    std::vector<std::size_t> sigma;  // sigma[i] = rank of range word i (0-based)

    static const char* name(Kind k);
};

/// An element of Thompson's group V: a finite bijection between two complete
/// prefix codes, acting by prefix substitution.  Always held in canonical
/// form (full sibling pairs merged, pieces sorted by domain word), so group
/// equality is structural equality.
class PrefixMap {
public:
    /// The identity {e -> e}.
    PrefixMap();

    /// Validates that domain and range words each form a complete prefix
    /// code and returns the reduced element.  Throws std::invalid_argument
    /// on incomplete or overlapping codes.
    static PrefixMap make(std::vector<Piece> pieces);

    static PrefixMap identity();

    /// Parses comma-separated "r->s" pairs; "e" denotes the empty word and
    /// whitespace is ignored.
    static PrefixMap parse(std::string_view text);

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool is_identity() const;

    /// Applies the map: locate the unique piece with x in C(r_i), return
    /// s_i . tail(x).
    Point operator()(const Point& x) const;

    /// Index of the piece whose domain cylinder contains x.
    std::size_t piece_index_at(const Point& x) const;

    PrefixMap inverse() const;

    /// Words whose cylinders disjointly union to g(C(r)).
    std::vector<BitWord> image_of_cylinder(const BitWord& r) const;

    FixedSet fixed_set() const;
    bool fixes_point(const Point& x) const;
    /// True iff x lies in a whole cylinder fixed pointwise.
    bool fixes_neighborhood(const Point& x) const;
    /// True iff the whole cylinder C(w) is fixed pointwise.
    bool fixes_cylinder(const BitWord& w) const;
    /// True iff supp(g) is contained in C(w), i.e. everything outside C(w)
    /// is fixed pointwise.
    bool supported_in(const BitWord& w) const;

    MembershipClass membership_class() const;

    std::string str() const;

    friend bool operator==(const PrefixMap&, const PrefixMap&) = default;

private:
    std::vector<Piece> pieces_;
};

/// Composition f * g = x -> f(g(x)) (g acts first).
PrefixMap compose(const PrefixMap& f, const PrefixMap& g);
inline PrefixMap operator*(const PrefixMap& f, const PrefixMap& g) { return compose(f, g); }

/// [a,b] = a^-1 b^-1 a b.
PrefixMap commutator(const PrefixMap& a, const PrefixMap& b);

PrefixMap power(const PrefixMap& g, long long n);

/// The element acting as r.x -> r.(g(x)) on C(r) and the identity
/// elsewhere; a group homomorphism in g for fixed r.
PrefixMap localize(const PrefixMap& g, const BitWord& r);

/// Generator tables from the standard tree-pair diagrams.
PrefixMap generator_a();  // {00->0, 01->10, 1->11}
PrefixMap generator_b();  // {0->0, 10->100, 110->101, 111->11}
PrefixMap generator_c();  // {0->11, 10->0, 11->10}
PrefixMap generator_d();  // {0->10, 10->0, 11->11}

/// Evaluates a whitespace-separated word over A,B,C,D (suffix ' or ^-1 for
/// inverses) by left-to-right composition; the rightmost letter acts first.
PrefixMap word_eval(std::string_view word);

}  // namespace cantor
