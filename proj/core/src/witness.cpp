#include "cantor/witness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cantor {

Generators generators() {
    return Generators{
        generator_a(),
        generator_b(),
        generator_c(),
        generator_d(),
        PrefixMap::parse("00->0,01->11,1->10"),
    };
}

namespace {

// Least M with all given sequences constantly zero from index M on.
std::uint64_t zero_tail_level(const std::vector<Point>& points) {
    std::uint64_t m = 1;
    for (const auto& x : points) {
        if (!x.is_dyadic()) {
            throw std::invalid_argument("transitivity witness: point is not dyadic");
        }
        m = std::max(m, x.preperiod().level() + 1);
    }
    return m;
}

}  // namespace

PrefixMap transitivity_witness(const Point& x, const Point& y) {
    if (!x.is_dyadic() || !y.is_dyadic()) {
        throw std::invalid_argument("transitivity_witness: points must be dyadic");
    }
    if (x == y) return PrefixMap::identity();
    const std::uint64_t m = zero_tail_level({x, y});
    BitWord xr = x.prefix(m);
    BitWord yr = y.prefix(m);
    std::vector<Piece> pieces{Piece{xr, yr}, Piece{yr, xr}};
    for (const auto& w : complement_cylinders({xr, yr})) pieces.push_back(Piece{w, w});
    PrefixMap g = PrefixMap::make(std::move(pieces));
    if (g(x) != y) throw std::logic_error("transitivity_witness: postcondition failed");
    return g;
}

PrefixMap tuple_transitivity_witness(const std::vector<Point>& xs,
                                     const std::vector<Point>& ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("tuple_transitivity_witness: length mismatch");
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (xs[i] == xs[j] || ys[i] == ys[j]) {
                throw std::invalid_argument("tuple_transitivity_witness: duplicate points");
            }
        }
    }
    if (xs.empty()) return PrefixMap::identity();

    std::vector<Point> all = xs;
    all.insert(all.end(), ys.begin(), ys.end());
    const std::uint64_t m = zero_tail_level(all);

    // Partial injection x_i|_M -> y_i|_M on the level-M words, closed into a
    // permutation by routing each maximal chain back to its start.
    std::map<BitWord, BitWord> next;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        next[xs[i].prefix(m)] = ys[i].prefix(m);
    }
    std::set<BitWord> images;
    for (const auto& [from, to] : next) images.insert(to);

    std::map<BitWord, BitWord> perm = next;
    for (const auto& [start, unused] : next) {
        (void)unused;
        if (images.count(start)) continue;  // not a chain head
        BitWord end = start;
        while (perm.count(end)) end = perm.at(end);
        if (end != start) perm[end] = start;
    }

    std::vector<Piece> pieces;
    for (const auto& [from, to] : perm) pieces.push_back(Piece{from, to});
    std::vector<BitWord> moved;
    for (const auto& [from, unused] : perm) {
        (void)unused;
        moved.push_back(from);
    }
    for (const auto& w : complement_cylinders(moved)) pieces.push_back(Piece{w, w});
    PrefixMap g = PrefixMap::make(std::move(pieces));

    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (g(xs[i]) != ys[i]) {
            throw std::logic_error("tuple_transitivity_witness: postcondition failed");
        }
    }
    return g;
}

CommutatorFixReport commutator_fix_check(const PrefixMap& g, const PrefixMap& h,
                                         const Point& z) {
    if (!g.fixes_point(z) || !h.fixes_point(z)) {
        throw std::invalid_argument("commutator_fix_check: both elements must fix z");
    }
    const std::size_t n = g.pieces()[g.piece_index_at(z)].to.level();
    const std::size_t nbar = h.pieces()[h.piece_index_at(z)].to.level();
    CommutatorFixReport report;
    report.L = n + nbar + 1;
    report.fixed_cylinder = z.prefix(report.L);
    // The range-root bound L belongs to the commutator in the orientation
    // g h g^-1 h^-1; for a^-1 b^-1 a b the same bound holds with domain
    // roots (substitute the inverses).
    const PrefixMap c = g * h * g.inverse() * h.inverse();
    report.verified = c.fixes_cylinder(report.fixed_cylinder);
    return report;
}

DerivedWitness derived_witness(const PrefixMap& h, const BitWord& u, const Point& z) {
    if (!z.in_cylinder(u)) {
        throw std::invalid_argument("derived_witness: z outside C(U)");
    }
    if (!h.fixes_cylinder(u)) {
        throw std::invalid_argument("derived_witness: h must fix C(U) pointwise");
    }

    std::size_t max_level = 0;
    for (const auto& p : h.pieces()) max_level = std::max(max_level, p.from.level());
    const std::size_t m = std::max(u.level(), max_level + 1);

    const BitWord r_prime = z.prefix(m);
    const int next_bit = z.bit(m + 1);
    const BitWord r = r_prime.append(next_bit);
    const BitWord eta_root = r_prime.append(1 - next_bit);

    const std::vector<BitWord> others = complement_cylinders({r_prime});
    const std::size_t n = others.size();
    if (n == 0) throw std::logic_error("derived_witness: empty complement");

    // Exchange the complement of C(r') with staircase cylinders below
    // r'.eta, keeping C(r) fixed.
    std::vector<Piece> pieces{Piece{r, r}};
    for (std::size_t j = 1; j <= n; ++j) {
        BitWord dj = j == 1 ? BitWord::zeros(n - 1) : BitWord::zeros(n - j).append(1);
        BitWord sj = eta_root.concat(dj);
        pieces.push_back(Piece{others[j - 1], sj});
        pieces.push_back(Piece{sj, others[j - 1]});
    }
    DerivedWitness witness{r, PrefixMap::make(std::move(pieces))};

    // (i) z in C(r) inside C(U).
    if (!z.in_cylinder(witness.r) || !u.is_prefix_of(witness.r)) {
        throw std::logic_error("derived_witness: postcondition (i) failed");
    }
    // (ii) h and [h',h] agree outside C(U): their difference fixes the
    // complement pointwise.
    const PrefixMap diff = compose(commutator(witness.h_prime, h), h.inverse());
    for (const auto& w : complement_cylinders({u})) {
        if (!diff.fixes_cylinder(w)) {
            throw std::logic_error("derived_witness: postcondition (ii) failed");
        }
    }
    // (iii) h' fixes C(r) pointwise.
    if (!witness.h_prime.fixes_cylinder(witness.r)) {
        throw std::logic_error("derived_witness: postcondition (iii) failed");
    }
    return witness;
}

PrefixMap stab_h(std::size_t m) {
    if (m < 2) throw std::invalid_argument("stab_h: requires M >= 2");
    auto t = [m](std::size_t k) {  // t_0 = 0^M, t_k = 0^(M-k) 1
        return k == 0 ? BitWord::zeros(m) : BitWord::zeros(m - k).append(1);
    };
    std::vector<Piece> pieces;
    pieces.push_back(Piece{BitWord::zeros(m + 1), BitWord::zeros(m + 1)});
    for (std::size_t k = 0; k < m; ++k) {
        pieces.push_back(Piece{t(0).append(1).concat(t(k)), BitWord("0").concat(t(k + 1))});
    }
    pieces.push_back(Piece{t(0).append(1).concat(t(m)), BitWord("11")});
    for (std::size_t k = 1; k <= m; ++k) {
        pieces.push_back(Piece{t(k), BitWord("1").concat(t(k - 1))});
    }
    PrefixMap h = PrefixMap::make(std::move(pieces));

    for (std::size_t k = 1; k <= m; ++k) {
        for (const auto& w : h.image_of_cylinder(t(k))) {
            if (!BitWord("10").is_prefix_of(w)) {
                throw std::logic_error("stab_h: image of C(t_k) must lie in C(10)");
            }
        }
    }
    return h;
}

ConjugationResult conjugate_into_support(const std::vector<PrefixMap>& gs) {
    std::size_t m = 2;
    for (const auto& g : gs) {
        if (!g.fixes_neighborhood(Point())) {
            throw std::invalid_argument(
                "conjugate_into_support: element does not fix a neighborhood of (0)");
        }
        // The fixed piece containing (0) has an all-zeros root 0^a.
        m = std::max(m, g.pieces()[g.piece_index_at(Point())].from.level());
    }

    ConjugationResult result;
    result.M = m;
    result.h = stab_h(m);
    result.h_prime = derived_witness(result.h, BitWord::zeros(m + 1), Point()).h_prime;
    result.conjugator = commutator(result.h_prime, result.h);
    result.factors_fix_zero =
        result.h.fixes_point(Point()) && result.h_prime.fixes_point(Point());

    const BitWord x0{"10"};
    result.ok = true;
    for (const auto& g : gs) {
        PrefixMap conjugated = result.conjugator * g * result.conjugator.inverse();
        result.ok = result.ok && conjugated.supported_in(x0);
    }
    return result;
}

bool displacement_check(const PrefixMap& g, const BitWord& x0, std::size_t kmax) {
    PrefixMap gk = PrefixMap::identity();
    for (std::size_t k = 1; k <= kmax; ++k) {
        gk = gk * g;
        for (const auto& w : gk.image_of_cylinder(x0)) {
            if (!cylinders_disjoint(w, x0)) return false;
        }
    }
    return true;
}

}  // namespace cantor
