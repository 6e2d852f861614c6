#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/bitword.hpp"
#include "cantor/point.hpp"
#include "cantor/prefix_map.hpp"

namespace cantor {

/// A clopen embedding of the space into itself by prefix substitution: the
/// domain words form a complete prefix code while the range words are only
/// pairwise disjoint, so the image is the clopen set union C(s_i).  Held in
/// canonical form (sibling pairs merged, sorted by domain word).
class PrefixInjection {
public:
    /// The identity embedding {e -> e}.
    PrefixInjection();

    static PrefixInjection make(std::vector<Piece> pieces);

    /// The single-piece embedding y -> r.y.
    static PrefixInjection prepend(const BitWord& r);

    /// Parses the same "r->s,..." grammar as PrefixMap.
    static PrefixInjection parse(std::string_view text);

    const std::vector<Piece>& pieces() const { return pieces_; }

    Point operator()(const Point& x) const;

    /// Range words; their cylinders disjointly union to the image.
    std::vector<BitWord> image_words() const;

    bool image_contains(const Point& x) const;
    bool image_disjoint_from(const PrefixInjection& other) const;

    /// Preimage of a point in the image.  Throws when x is outside.
    Point preimage(const Point& x) const;

    /// Largest piece level of the domain and range codes.
    std::size_t max_level() const;

    /// The injection restricted to C(0^n), as the single word it prepends:
    /// on C(0^n) the map is y -> w.y for a fixed w.
    BitWord restriction_to_zero_cylinder(std::size_t n) const;

    std::string str() const;

    friend bool operator==(const PrefixInjection&, const PrefixInjection&) = default;

private:
    std::vector<Piece> pieces_;
};

/// g . h: apply the injection, then the group element.
PrefixInjection compose(const PrefixMap& g, const PrefixInjection& h);

/// The shrinking y -> r.y onto C(r); iterated images have diameter
/// 2^-(n|r|+1) -> 0.  Throws when r is empty (the image would be everything).
PrefixInjection shrinking_to(const BitWord& r);

/// The unique fixed point r^inf of the shrinking y -> r.y.
Point shrinking_fixed_point(const BitWord& r);

struct SqueezeResult {
    PrefixInjection injection;
    std::size_t agreement_level;  // agrees with the input on C(0^N)
};

/// Replaces h by an equivalent embedding (agreeing with h on a cylinder
/// C(0^N) around the all-zeros point) whose image lies inside the target
/// cylinders.  Throws when no target cylinder contains h((0)).
SqueezeResult squeeze(const PrefixInjection& h, const std::vector<BitWord>& target);

}  // namespace cantor
