#include "cantor/fat_point.hpp"

#include <algorithm>
#include <stdexcept>

namespace cantor {

FatPoint FatPoint::parse(std::string_view text) {
    auto at = text.find('@');
    if (at == std::string_view::npos) {
        throw std::invalid_argument("FatPoint: expected '<point> @ <injection>'");
    }
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    Point core = Point::parse(trim(text.substr(0, at)));
    PrefixInjection tissue = PrefixInjection::parse(trim(text.substr(at + 1)));
    return make_fat_point(core, tissue);
}

std::string FatPoint::str() const {
    return core.str() + " @ " + tissue.str();
}

FatPoint make_fat_point(const Point& core, const PrefixInjection& tissue) {
    if (tissue(Point()) != core) {
        throw std::invalid_argument("FatPoint: tissue does not send (0) to the core");
    }
    return FatPoint{core, tissue};
}

FatPoint act(const PrefixMap& g, const FatPoint& p) {
    return FatPoint{g(p.core), compose(g, p.tissue)};
}

bool equivalent(const FatPoint& p, const FatPoint& q) {
    if (p.core != q.core) return false;
    // Restricted to C(0^N) each tissue is a single prepend word; agreement
    // on any smaller cylinder is equivalent to word equality at this N.
    const std::size_t n = std::max(p.tissue.max_level(), q.tissue.max_level());
    return p.tissue.restriction_to_zero_cylinder(n) ==
           q.tissue.restriction_to_zero_cylinder(n);
}

DisjointnessWitness disjoint(const FatPoint& p, const FatPoint& q) {
    if (p.core == q.core) return DisjointnessWitness{false, {}, {}};
    const std::uint64_t d = *first_difference(p.core, q.core);
    BitWord pw = p.core.prefix(d);
    BitWord qw = q.core.prefix(d);
    PrefixInjection pr = squeeze(p.tissue, {pw}).injection;
    PrefixInjection qr = squeeze(q.tissue, {qw}).injection;
    if (!pr.image_disjoint_from(qr)) {
        throw std::logic_error("disjoint: squeezed witnesses still overlap");
    }
    return DisjointnessWitness{true, pr, qr};
}

std::vector<FatPoint> make_fat_tuple(std::vector<FatPoint> points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].core == points[j].core) {
                throw std::invalid_argument("FatTuple: cores must be pairwise distinct");
            }
        }
    }
    return points;
}

namespace {

// Compose a partial prefix substitution (prefix-free domain) with a second
// one whose domain covers the first's ranges.
std::vector<Piece> chain_pieces(const std::vector<Piece>& first,
                                const std::vector<Piece>& second) {
    std::vector<Piece> out;
    for (const auto& a : first) {
        for (const auto& b : second) {
            switch (cylinder_relation(b.from, a.to)) {
                case CylinderRelation::Equal:
                    out.push_back(Piece{a.from, b.to});
                    break;
                case CylinderRelation::Contains: {
                    BitWord u = a.to.suffix_from(b.from.level());
                    out.push_back(Piece{a.from, b.to.concat(u)});
                    break;
                }
                case CylinderRelation::ContainedIn: {
                    BitWord u = b.from.suffix_from(a.to.level());
                    out.push_back(Piece{a.from.concat(u), b.to});
                    break;
                }
                case CylinderRelation::Disjoint:
                    break;
            }
        }
    }
    return out;
}

bool tissues_usable(const std::vector<FatPoint>& pts) {
    std::vector<BitWord> all;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (!pts[i].tissue.image_disjoint_from(pts[j].tissue)) return false;
        }
        auto words = pts[i].tissue.image_words();
        all.insert(all.end(), words.begin(), words.end());
    }
    return !complement_cylinders(all).empty();
}

// Squeeze every tissue into a proper cylinder around its core so the
// images are pairwise disjoint and miss part of the space.
std::vector<FatPoint> normalize(const std::vector<FatPoint>& pts) {
    std::uint64_t level = 1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            level = std::max(level, *first_difference(pts[i].core, pts[j].core));
        }
    }
    level += 1;  // proper cylinders, so a complement remains
    std::vector<FatPoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        BitWord target = p.core.prefix(level);
        out.push_back(FatPoint{p.core, squeeze(p.tissue, {target}).injection});
    }
    return out;
}

// A prefix bijection between two nonempty disjoint-cylinder sets covering
// complementary parts of the space: split words until the counts agree,
// then pair in order.
std::vector<Piece> complement_bijection(std::vector<BitWord> from, std::vector<BitWord> to) {
    std::sort(from.begin(), from.end());
    std::sort(to.begin(), to.end());
    while (from.size() < to.size()) {
        BitWord w = from.front();
        from.erase(from.begin());
        from.push_back(w.append(0));
        from.push_back(w.append(1));
        std::sort(from.begin(), from.end());
    }
    while (to.size() < from.size()) {
        BitWord w = to.front();
        to.erase(to.begin());
        to.push_back(w.append(0));
        to.push_back(w.append(1));
        std::sort(to.begin(), to.end());
    }
    std::vector<Piece> out;
    for (std::size_t i = 0; i < from.size(); ++i) out.push_back(Piece{from[i], to[i]});
    return out;
}

}  // namespace

PrefixMap fat_transitivity_witness(const std::vector<FatPoint>& src,
                                   const std::vector<FatPoint>& dst) {
    if (src.size() != dst.size()) {
        throw std::invalid_argument("fat_transitivity_witness: size mismatch");
    }
    if (src.empty()) return PrefixMap::identity();
    make_fat_tuple(src);
    make_fat_tuple(dst);

    std::vector<FatPoint> s = tissues_usable(src) ? src : normalize(src);
    std::vector<FatPoint> t = tissues_usable(dst) ? dst : normalize(dst);

    std::vector<Piece> pieces;
    std::vector<BitWord> src_images, dst_images;
    for (std::size_t i = 0; i < s.size(); ++i) {
        // h_bar o h^-1 on im(h): invert the source pieces, then chain.
        std::vector<Piece> inverted;
        for (const auto& p : s[i].tissue.pieces()) inverted.push_back(Piece{p.to, p.from});
        auto part = chain_pieces(inverted, t[i].tissue.pieces());
        pieces.insert(pieces.end(), part.begin(), part.end());

        auto si = s[i].tissue.image_words();
        auto ti = t[i].tissue.image_words();
        src_images.insert(src_images.end(), si.begin(), si.end());
        dst_images.insert(dst_images.end(), ti.begin(), ti.end());
    }
    auto rest = complement_bijection(complement_cylinders(src_images),
                                     complement_cylinders(dst_images));
    pieces.insert(pieces.end(), rest.begin(), rest.end());
    PrefixMap g = PrefixMap::make(std::move(pieces));

    for (std::size_t i = 0; i < src.size(); ++i) {
        if (!equivalent(act(g, src[i]), dst[i])) {
            throw std::logic_error("fat_transitivity_witness: postcondition failed");
        }
    }
    return g;
}

FatPoint fresh_fat_point(const std::vector<FatPoint>& F) {
    std::vector<Point> cores;
    cores.reserve(F.size());
    for (const auto& p : F) cores.push_back(p.core);

    Point core;  // (0) when unconstrained
    if (!cores.empty()) {
        for (std::uint64_t m = 1;; ++m) {
            core = Point().with_prefix(BitWord::zeros(m).append(1));
            if (std::find(cores.begin(), cores.end(), core) == cores.end()) break;
        }
    }
    // Separate the tissue cylinder from every F core.
    std::uint64_t level = core.preperiod().level() + 1;
    for (const auto& y : cores) level = std::max(level, *first_difference(core, y));
    return make_fat_point(core, PrefixInjection::prepend(core.prefix(level)));
}

}  // namespace cantor
