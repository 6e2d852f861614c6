#include "cantor/point.hpp"

#include <numeric>
#include <stdexcept>

namespace cantor {

std::string Dist::str() const {
    if (k_ == 0) return "0";
    if (k_ <= 62) return "1/" + std::to_string(1ULL << k_);
    return "2^-" + std::to_string(k_);
}

namespace {

// Smallest d dividing |w| with w = (w|_d)^(|w|/d).
std::size_t primitive_root_length(const std::string& w) {
    const std::size_t n = w.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
        if (ok) return d;
    }
    return n;
}

}  // namespace

Point::Point() : pre_{}, per_{BitWord("0")} {}

Point Point::make(const BitWord& preperiod, const BitWord& period) {
    if (period.empty()) throw std::invalid_argument("Point: empty period");
    std::string per = period.str().substr(0, primitive_root_length(period.str()));
    std::string pre = preperiod.str();
    // Absorb preperiod bits that agree with the rotated period.
    while (!pre.empty() && pre.back() == per.back()) {
        per.insert(per.begin(), per.back());
        per.pop_back();
        pre.pop_back();
    }
    Point p;
    p.pre_ = BitWord{pre};
    p.per_ = BitWord{per};
    return p;
}

Point Point::parse(std::string_view text) {
    auto open = text.find('(');
    auto close = text.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos ||
        close != text.size() - 1 || close <= open + 1) {
        throw std::invalid_argument("Point: expected PRE(PER), got '" + std::string(text) + "'");
    }
    BitWord pre{text.substr(0, open)};
    BitWord per{text.substr(open + 1, close - open - 1)};
    return make(pre, per);
}

int Point::bit(std::uint64_t n) const {
    if (n == 0) throw std::invalid_argument("Point::bit: indices are 1-based");
    const std::uint64_t p = pre_.level();
    if (n <= p) return pre_.bit(n - 1);
    return per_.bit((n - p - 1) % per_.level());
}

BitWord Point::prefix(std::uint64_t n) const {
    std::string bits;
    bits.reserve(n);
    for (std::uint64_t i = 1; i <= n; ++i) bits.push_back(bit(i) ? '1' : '0');
    return BitWord{bits};
}

Point Point::with_prefix(const BitWord& w) const {
    return make(w.concat(pre_), per_);
}

Point Point::drop(std::uint64_t n) const {
    const std::uint64_t p = pre_.level();
    if (n <= p) return make(pre_.suffix_from(n), per_);
    const std::uint64_t k = (n - p) % per_.level();
    // Rotate the period left by k.
    BitWord rotated = per_.suffix_from(k).concat(per_.prefix(k));
    return make(BitWord{}, rotated);
}

bool Point::in_cylinder(const BitWord& w) const {
    for (std::size_t i = 0; i < w.level(); ++i) {
        if (bit(i + 1) != w.bit(i)) return false;
    }
    return true;
}

std::string Point::str() const {
    return pre_.str() + "(" + per_.str() + ")";
}

Point canonicalize(const BitWord& preperiod, const BitWord& period) {
    return Point::make(preperiod, period);
}

std::optional<std::uint64_t> first_difference(const Point& x, const Point& y) {
    if (x == y) return std::nullopt;
    // Beyond both preperiods the sequences are jointly periodic with the
    // lcm of the period lengths, so a difference shows up within that window.
    const std::uint64_t p = std::max(x.preperiod().level(), y.preperiod().level());
    const std::uint64_t l = std::lcm<std::uint64_t>(x.period().level(), y.period().level());
    for (std::uint64_t n = 1; n <= p + l; ++n) {
        if (x.bit(n) != y.bit(n)) return n;
    }
    throw std::logic_error("first_difference: canonical forms differ but sequences agree");
}

Dist metric(const Point& x, const Point& y) {
    auto n = first_difference(x, y);
    return n ? Dist::pow2(*n) : Dist::zero();
}

std::strong_ordering lex_compare(const Point& x, const Point& y) {
    auto n = first_difference(x, y);
    if (!n) return std::strong_ordering::equal;
    return x.bit(*n) < y.bit(*n) ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
}

Point xor_add(const Point& x, const Point& y) {
    const std::uint64_t p = std::max(x.preperiod().level(), y.preperiod().level());
    const std::uint64_t l = std::lcm<std::uint64_t>(x.period().level(), y.period().level());
    std::string pre(p, '0'), per(l, '0');
    for (std::uint64_t n = 1; n <= p; ++n) {
        pre[n - 1] = (x.bit(n) ^ y.bit(n)) ? '1' : '0';
    }
    for (std::uint64_t n = p + 1; n <= p + l; ++n) {
        per[n - p - 1] = (x.bit(n) ^ y.bit(n)) ? '1' : '0';
    }
    return Point::make(BitWord{pre}, BitWord{per});
}

}  // namespace cantor
