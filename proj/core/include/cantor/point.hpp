#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "cantor/bitword.hpp"

namespace cantor {

/// An exact ultrametric distance value: either 0 or 2^-N for some N >= 1.
class Dist {
public:
    static Dist zero() { return Dist{0}; }
    static Dist pow2(std::uint64_t neg_exponent) { return Dist{neg_exponent}; }

    bool is_zero() const { return k_ == 0; }
    /// N with value 2^-N; only valid when nonzero.
    std::uint64_t neg_exponent() const { return k_; }

    std::string str() const;

    friend bool operator==(const Dist&, const Dist&) = default;
    friend std::strong_ordering operator<=>(const Dist& a, const Dist& b) {
        if (a.k_ == b.k_) return std::strong_ordering::equal;
        if (a.k_ == 0) return std::strong_ordering::less;     // 0 < 2^-k
        if (b.k_ == 0) return std::strong_ordering::greater;
        return b.k_ <=> a.k_;  // larger exponent = smaller value
    }

private:
    explicit Dist(std::uint64_t k) : k_(k) {}
    std::uint64_t k_;  // 0 encodes distance 0, else the value is 2^-k_
};

/// An eventually periodic binary sequence preperiod . period^inf — the
/// computable points of the dyadic Cantor space.  Always held in canonical
/// form: the period is primitive and the preperiod is minimal (its last
/// bit differs from the corresponding bit of the rotated period), so two
/// Points denote the same sequence iff they compare equal.
class Point {
public:
    /// The all-zeros point (0).
    Point();

    /// Canonicalizes preperiod . period^inf.  Throws on an empty period.
    static Point make(const BitWord& preperiod, const BitWord& period);

    /// Parses the external syntax PRE "(" PER ")", e.g. "(0)", "1(0)", "(01)".
    static Point parse(std::string_view text);

    const BitWord& preperiod() const { return pre_; }
    const BitWord& period() const { return per_; }

    /// Bit at 1-based index n.
    int bit(std::uint64_t n) const;

    /// The level-n prefix x|_n.
    BitWord prefix(std::uint64_t n) const;

    /// True iff the sequence is eventually zero (canonical period "0"),
    /// i.e. the point lies in Z[1/2].
    bool is_dyadic() const { return per_.level() == 1 && per_.bit(0) == 0; }

    /// The point w . x.
    Point with_prefix(const BitWord& w) const;

    /// The tail after dropping the first n bits.
    Point drop(std::uint64_t n) const;

    /// True iff w is a prefix of the sequence, i.e. x lies in C(w).
    bool in_cylinder(const BitWord& w) const;

    std::string str() const;

    friend bool operator==(const Point&, const Point&) = default;
    /// An arbitrary but total order for use in containers (not the
    /// lexicographic order on sequences; see lex_compare).
    friend std::strong_ordering operator<=>(const Point&, const Point&) = default;

private:
    BitWord pre_, per_;
};

/// Canonical form of preperiod . period^inf (same as Point::make).
Point canonicalize(const BitWord& preperiod, const BitWord& period);

/// 1-based index of the first differing bit, or nullopt when equal.
std::optional<std::uint64_t> first_difference(const Point& x, const Point& y);

/// The ultrametric d(x,y) = 2^-N with N the first differing index; 0 when
/// the points are equal.
Dist metric(const Point& x, const Point& y);

/// Lexicographic order on sequences, decided by the bit at the first
/// differing index.
std::strong_ordering lex_compare(const Point& x, const Point& y);

/// Coordinatewise sum mod 2 of the two sequences.
Point xor_add(const Point& x, const Point& y);

}  // namespace cantor
