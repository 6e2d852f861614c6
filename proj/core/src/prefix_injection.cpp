#include "cantor/prefix_injection.hpp"

#include <algorithm>
#include <stdexcept>

namespace cantor {

namespace {

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

PrefixInjection::PrefixInjection() : pieces_{Piece{BitWord{}, BitWord{}}} {}

PrefixInjection PrefixInjection::make(std::vector<Piece> pieces) {
    if (pieces.empty()) throw std::invalid_argument("PrefixInjection: no pieces");
    std::vector<BitWord> dom, ran;
    for (const auto& p : pieces) {
        dom.push_back(p.from);
        ran.push_back(p.to);
    }
    if (!is_complete_prefix_code(dom)) {
        throw std::invalid_argument("PrefixInjection: domain words are not a complete prefix code");
    }
    if (!pairwise_disjoint(ran)) {
        throw std::invalid_argument("PrefixInjection: range words overlap");
    }
    PrefixInjection h;
    h.pieces_ = reduce_pieces(std::move(pieces));
    return h;
}

PrefixInjection PrefixInjection::prepend(const BitWord& r) {
    PrefixInjection h;
    h.pieces_ = {Piece{BitWord{}, r}};
    return h;
}

PrefixInjection PrefixInjection::parse(std::string_view text) {
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
            throw std::invalid_argument("PrefixInjection: expected r->s in '" + item + "'");
        }
        pieces.push_back(Piece{BitWord::parse(item.substr(0, arrow)),
                               BitWord::parse(item.substr(arrow + 2))});
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return make(std::move(pieces));
}

Point PrefixInjection::operator()(const Point& x) const {
    for (const auto& p : pieces_) {
        if (x.in_cylinder(p.from)) return x.drop(p.from.level()).with_prefix(p.to);
    }
    throw std::logic_error("PrefixInjection: no piece contains the point");
}

std::vector<BitWord> PrefixInjection::image_words() const {
    std::vector<BitWord> out;
    out.reserve(pieces_.size());
    for (const auto& p : pieces_) out.push_back(p.to);
    std::sort(out.begin(), out.end());
    return out;
}

bool PrefixInjection::image_contains(const Point& x) const {
    for (const auto& p : pieces_) {
        if (x.in_cylinder(p.to)) return true;
    }
    return false;
}

bool PrefixInjection::image_disjoint_from(const PrefixInjection& other) const {
    for (const auto& a : image_words()) {
        for (const auto& b : other.image_words()) {
            if (!cylinders_disjoint(a, b)) return false;
        }
    }
    return true;
}

Point PrefixInjection::preimage(const Point& x) const {
    for (const auto& p : pieces_) {
        if (x.in_cylinder(p.to)) return x.drop(p.to.level()).with_prefix(p.from);
    }
    throw std::invalid_argument("PrefixInjection: point outside the image");
}

std::size_t PrefixInjection::max_level() const {
    std::size_t m = 0;
    for (const auto& p : pieces_) m = std::max({m, p.from.level(), p.to.level()});
    return m;
}

BitWord PrefixInjection::restriction_to_zero_cylinder(std::size_t n) const {
    // The piece containing (0) has an all-zeros domain word 0^a with a <= n;
    // on C(0^n) the injection prepends to.0^(n-a).
    for (const auto& p : pieces_) {
        if (Point().in_cylinder(p.from)) {
            if (p.from.level() > n) {
                throw std::invalid_argument("restriction_to_zero_cylinder: n below piece level");
            }
            return p.to.concat(BitWord::zeros(n - p.from.level()));
        }
    }
    throw std::logic_error("PrefixInjection: no piece contains (0)");
}

std::string PrefixInjection::str() const {
    std::string out;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (i) out += ',';
        out += pieces_[i].from.display();
        out += "->";
        out += pieces_[i].to.display();
    }
    return out;
}

PrefixInjection compose(const PrefixMap& g, const PrefixInjection& h) {
    std::vector<Piece> pieces;
    for (const auto& ph : h.pieces()) {
        for (const auto& pg : g.pieces()) {
            switch (cylinder_relation(pg.from, ph.to)) {
                case CylinderRelation::Equal:
                    pieces.push_back(Piece{ph.from, pg.to});
                    break;
                case CylinderRelation::Contains: {
                    BitWord u = ph.to.suffix_from(pg.from.level());
                    pieces.push_back(Piece{ph.from, pg.to.concat(u)});
                    break;
                }
                case CylinderRelation::ContainedIn: {
                    BitWord u = pg.from.suffix_from(ph.to.level());
                    pieces.push_back(Piece{ph.from.concat(u), pg.to});
                    break;
                }
                case CylinderRelation::Disjoint:
                    break;
            }
        }
    }
    return PrefixInjection::make(std::move(pieces));
}

PrefixInjection shrinking_to(const BitWord& r) {
    if (r.empty()) {
        throw std::invalid_argument("shrinking_to: empty word gives no shrinking");
    }
    return PrefixInjection::prepend(r);
}

Point shrinking_fixed_point(const BitWord& r) {
    if (r.empty()) throw std::invalid_argument("shrinking_fixed_point: empty word");
    return Point::make(BitWord{}, r);
}

SqueezeResult squeeze(const PrefixInjection& h, const std::vector<BitWord>& target) {
    if (!pairwise_disjoint(target)) {
        throw std::invalid_argument("squeeze: target cylinders overlap");
    }
    auto inside_target = [&](const BitWord& w) {
        for (const auto& t : target) {
            if (t.is_prefix_of(w)) return true;
        }
        return false;
    };

    bool already = true;
    for (const auto& w : h.image_words()) already = already && inside_target(w);
    if (already) return SqueezeResult{h, 0};

    const Point core = h(Point());
    const BitWord* hit = nullptr;
    for (const auto& t : target) {
        if (core.in_cylinder(t)) {
            hit = &t;
            break;
        }
    }
    if (!hit) {
        throw std::invalid_argument("squeeze: no target cylinder contains the core");
    }

    // Zero piece 0^a -> s0 of h; agree with h on C(0^(n0+1)) and tuck the
    // rest of the space below core|_m . 1.
    std::size_t a = 0, s0_level = 0;
    for (const auto& p : h.pieces()) {
        if (Point().in_cylinder(p.from)) {
            a = p.from.level();
            s0_level = p.to.level();
            break;
        }
    }
    const std::size_t n0 = a + (hit->level() > s0_level ? hit->level() - s0_level : 0);
    const std::size_t m = s0_level + n0 - a;  // core|_m extends the target word
    const BitWord agreed = core.prefix(m);

    std::vector<Piece> pieces;
    pieces.push_back(Piece{BitWord::zeros(n0 + 1), agreed.append(0)});
    const BitWord off = agreed.append(1);
    for (std::size_t j = 0; j <= n0; ++j) {
        BitWord dj = j == 0 ? BitWord::zeros(n0) : BitWord::zeros(n0 - j).append(1);
        pieces.push_back(Piece{BitWord::zeros(j).append(1), off.concat(dj)});
    }
    SqueezeResult result{PrefixInjection::make(std::move(pieces)), n0 + 1};

    // The construction must agree with h on the witness cylinder.
    const BitWord expect = h.restriction_to_zero_cylinder(result.agreement_level);
    const BitWord got = result.injection.restriction_to_zero_cylinder(result.agreement_level);
    if (expect != got) throw std::logic_error("squeeze: agreement check failed");
    return result;
}

}  // namespace cantor
