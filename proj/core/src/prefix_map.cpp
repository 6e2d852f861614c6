#include "cantor/prefix_map.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cantor {

bool FixedSet::contains(const Point& x) const {
    for (const auto& w : cylinders) {
        if (x.in_cylinder(w)) return true;
    }
    for (const auto& p : points) {
        if (p == x) return true;
    }
    return false;
}

const char* MembershipClass::name(Kind k) {
    switch (k) {
        case Kind::F: return "F";
        case Kind::TOnly: return "T_only";
        case Kind::VOnly: return "V_only";
    }
    return "?";
}

namespace {

// Merge full sibling pairs (r0 -> s0, r1 -> s1) into (r -> s) until no pair
// is left, then sort by domain word.
std::vector<Piece> reduce_pieces(std::vector<Piece> pieces) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(pieces.begin(), pieces.end());
        for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
            const Piece& a = pieces[i];
            const Piece& b = pieces[i + 1];
            if (a.from.empty() || b.from.empty() || a.to.empty() || b.to.empty()) continue;
            if (a.from.back() != 0 || b.from.back() != 1) continue;
            if (a.to.back() != 0 || b.to.back() != 1) continue;
            if (a.from.pop_back() != b.from.pop_back()) continue;
            if (a.to.pop_back() != b.to.pop_back()) continue;
            pieces[i] = Piece{a.from.pop_back(), a.to.pop_back()};
            pieces.erase(pieces.begin() + static_cast<long>(i) + 1);
            changed = true;
            break;
        }
    }
    return pieces;
}

}  // namespace

PrefixMap::PrefixMap() : pieces_{Piece{BitWord{}, BitWord{}}} {}

PrefixMap PrefixMap::identity() { return PrefixMap{}; }

PrefixMap PrefixMap::make(std::vector<Piece> pieces) {
    if (pieces.empty()) throw std::invalid_argument("PrefixMap: no pieces");
    std::vector<BitWord> dom, ran;
    dom.reserve(pieces.size());
    ran.reserve(pieces.size());
    for (const auto& p : pieces) {
        dom.push_back(p.from);
        ran.push_back(p.to);
    }
    if (!is_complete_prefix_code(dom)) {
        throw std::invalid_argument("PrefixMap: domain words are not a complete prefix code");
    }
    if (!is_complete_prefix_code(ran)) {
        throw std::invalid_argument("PrefixMap: range words are not a complete prefix code");
    }
    PrefixMap g;
    g.pieces_ = reduce_pieces(std::move(pieces));
    return g;
}

PrefixMap PrefixMap::parse(std::string_view text) {
    std::string cleaned;
    for (char c : text) {
        if (c != ' ' && c != '\t' && c != '\n') cleaned.push_back(c);
    }
    std::vector<Piece> pieces;
    std::size_t pos = 0;
    while (pos <= cleaned.size()) {
        std::size_t comma = cleaned.find(',', pos);
        std::string item = cleaned.substr(pos, comma == std::string::npos ? std::string::npos
                                                                          : comma - pos);
        std::size_t arrow = item.find("->");
        if (arrow == std::string::npos) {
            throw std::invalid_argument("PrefixMap: expected r->s in '" + item + "'");
        }
        pieces.push_back(Piece{BitWord::parse(item.substr(0, arrow)),
                               BitWord::parse(item.substr(arrow + 2))});
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return make(std::move(pieces));
}

bool PrefixMap::is_identity() const {
    return pieces_.size() == 1 && pieces_[0].from.empty() && pieces_[0].to.empty();
}

std::size_t PrefixMap::piece_index_at(const Point& x) const {
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (x.in_cylinder(pieces_[i].from)) return i;
    }
    throw std::logic_error("PrefixMap: no piece contains the point");
}

Point PrefixMap::operator()(const Point& x) const {
    const Piece& p = pieces_[piece_index_at(x)];
    return x.drop(p.from.level()).with_prefix(p.to);
}

PrefixMap PrefixMap::inverse() const {
    std::vector<Piece> swapped;
    swapped.reserve(pieces_.size());
    for (const auto& p : pieces_) swapped.push_back(Piece{p.to, p.from});
    return make(std::move(swapped));
}

std::vector<BitWord> PrefixMap::image_of_cylinder(const BitWord& r) const {
    std::vector<BitWord> out;
    for (const auto& p : pieces_) {
        switch (cylinder_relation(p.from, r)) {
            case CylinderRelation::Equal:
                out.push_back(p.to);
                break;
            case CylinderRelation::ContainedIn:  // piece inside C(r)
                out.push_back(p.to);
                break;
            case CylinderRelation::Contains:     // C(r) strictly inside piece
                out.push_back(p.to.concat(r.suffix_from(p.from.level())));
                break;
            case CylinderRelation::Disjoint:
                break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FixedSet PrefixMap::fixed_set() const {
    FixedSet fs;
    for (const auto& p : pieces_) {
        if (p.from == p.to) {
            fs.cylinders.push_back(p.from);
            continue;
        }
        // The piece r -> s fixes r.w^inf when one word extends the other by
        // w; otherwise the domain and range cylinders are disjoint and
        // nothing is fixed.
        if (p.from.is_prefix_of(p.to)) {
            BitWord w = p.to.suffix_from(p.from.level());
            fs.points.push_back(Point::make(p.from, w));
        } else if (p.to.is_prefix_of(p.from)) {
            BitWord w = p.from.suffix_from(p.to.level());
            fs.points.push_back(Point::make(p.from, w));
        }
    }
    return fs;
}

bool PrefixMap::fixes_point(const Point& x) const {
    return fixed_set().contains(x);
}

bool PrefixMap::fixes_neighborhood(const Point& x) const {
    const Piece& p = pieces_[piece_index_at(x)];
    return p.from == p.to;
}

bool PrefixMap::fixes_cylinder(const BitWord& w) const {
    for (const auto& p : pieces_) {
        if (cylinders_disjoint(p.from, w) || p.from == p.to) continue;
        // A moving piece fixes at most one point, never a whole cylinder.
        return false;
    }
    return true;
}

bool PrefixMap::supported_in(const BitWord& w) const {
    for (const auto& p : pieces_) {
        if (p.from == p.to) continue;
        if (!w.is_prefix_of(p.from)) return false;
    }
    return true;
}

MembershipClass PrefixMap::membership_class() const {
    const std::size_t n = pieces_.size();
    std::vector<BitWord> ranges;
    ranges.reserve(n);
    for (const auto& p : pieces_) ranges.push_back(p.to);
    std::vector<BitWord> sorted = ranges;
    std::sort(sorted.begin(), sorted.end());

    MembershipClass mc;
    mc.sigma.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        mc.sigma[i] = static_cast<std::size_t>(
            std::lower_bound(sorted.begin(), sorted.end(), ranges[i]) - sorted.begin());
    }

    bool ident = true;
    for (std::size_t i = 0; i < n; ++i) ident = ident && mc.sigma[i] == i;
    if (ident) {
        mc.kind = MembershipClass::Kind::F;
        return mc;
    }
    const std::size_t shift = mc.sigma[0];
    bool cyclic = true;
    for (std::size_t i = 0; i < n; ++i) cyclic = cyclic && mc.sigma[i] == (i + shift) % n;
    mc.kind = cyclic ? MembershipClass::Kind::TOnly : MembershipClass::Kind::VOnly;
    return mc;
}

std::string PrefixMap::str() const {
    std::string out;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (i) out += ',';
        out += pieces_[i].from.display();
        out += "->";
        out += pieces_[i].to.display();
    }
    return out;
}

PrefixMap compose(const PrefixMap& f, const PrefixMap& g) {
    // Refine g's range code against f's domain code and chain substitutions.
    std::vector<Piece> pieces;
    for (const auto& pg : g.pieces()) {
        for (const auto& pf : f.pieces()) {
            switch (cylinder_relation(pf.from, pg.to)) {
                case CylinderRelation::Equal:
                    pieces.push_back(Piece{pg.from, pf.to});
                    break;
                case CylinderRelation::Contains: {
                    // g's range word extends f's domain word by u.
                    BitWord u = pg.to.suffix_from(pf.from.level());
                    pieces.push_back(Piece{pg.from, pf.to.concat(u)});
                    break;
                }
                case CylinderRelation::ContainedIn: {
                    // f's domain word splits this g piece by u.
                    BitWord u = pf.from.suffix_from(pg.to.level());
                    pieces.push_back(Piece{pg.from.concat(u), pf.to});
                    break;
                }
                case CylinderRelation::Disjoint:
                    break;
            }
        }
    }
    return PrefixMap::make(std::move(pieces));
}

PrefixMap commutator(const PrefixMap& a, const PrefixMap& b) {
    return a.inverse() * b.inverse() * a * b;
}

PrefixMap power(const PrefixMap& g, long long n) {
    if (n < 0) return power(g.inverse(), -n);
    PrefixMap acc = PrefixMap::identity();
    for (long long i = 0; i < n; ++i) acc = acc * g;
    return acc;
}

PrefixMap localize(const PrefixMap& g, const BitWord& r) {
    std::vector<Piece> pieces;
    for (const auto& p : g.pieces()) {
        pieces.push_back(Piece{r.concat(p.from), r.concat(p.to)});
    }
    for (const auto& w : complement_cylinders({r})) {
        pieces.push_back(Piece{w, w});
    }
    return PrefixMap::make(std::move(pieces));
}

PrefixMap generator_a() { return PrefixMap::parse("00->0,01->10,1->11"); }
PrefixMap generator_b() { return PrefixMap::parse("0->0,10->100,110->101,111->11"); }
PrefixMap generator_c() { return PrefixMap::parse("0->11,10->0,11->10"); }
PrefixMap generator_d() { return PrefixMap::parse("0->10,10->0,11->11"); }

PrefixMap word_eval(std::string_view word) {
    PrefixMap acc = PrefixMap::identity();
    std::size_t i = 0;
    while (i < word.size()) {
        if (word[i] == ' ' || word[i] == '\t') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < word.size() && word[j] != ' ' && word[j] != '\t') ++j;
        std::string token{word.substr(i, j - i)};
        i = j;

        bool inverse = false;
        for (const char* suffix : {"'", "^-1", "-1", "\xe2\x81\xbb\xc2\xb9"}) {
            std::string s{suffix};
            if (token.size() > s.size() && token.compare(token.size() - s.size(), s.size(), s) == 0) {
                inverse = true;
                token.resize(token.size() - s.size());
                break;
            }
        }
        PrefixMap g;
        if (token == "A") g = generator_a();
        else if (token == "B") g = generator_b();
        else if (token == "C") g = generator_c();
        else if (token == "D") g = generator_d();
        else throw std::invalid_argument("word_eval: unknown letter '" + token + "'");
        if (inverse) g = g.inverse();
        acc = acc * g;
    }
    return acc;
}

}  // namespace cantor
