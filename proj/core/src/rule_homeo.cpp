#include "cantor/rule_homeo.hpp"

#include <stdexcept>
#include <variant>
#include <vector>

namespace cantor {

DissipatorOrbits::DissipatorOrbits(int m) : M(m) {
    if (m < 3) throw std::invalid_argument("dissipator: requires M >= 3");
    plus_prefix = BitWord::zeros(static_cast<std::size_t>(m) - 2).append(1).append(1);
    minus_prefix = BitWord::zeros(static_cast<std::size_t>(m) - 2).append(1).append(0);
    plus_fixed = shrinking_fixed_point(plus_prefix);
    minus_fixed = shrinking_fixed_point(minus_prefix);
}

bool DissipatorOrbits::in_xu(const Point& x) const {
    for (int k = 1; k <= M - 2; ++k) {
        if (x.bit(static_cast<std::uint64_t>(k)) == 1) return true;
    }
    return false;
}

std::vector<BitWord> DissipatorOrbits::xu_cylinders() const {
    std::vector<BitWord> out;
    for (int j = 0; j <= M - 3; ++j) {
        out.push_back(BitWord::zeros(static_cast<std::size_t>(j)).append(1));
    }
    return out;
}

DissipatorOrbits::Region DissipatorOrbits::classify(const Point& x) const {
    using Kind = Region::Kind;
    if (x == plus_fixed) return {Kind::PlusInfinity, 0};
    if (x == minus_fixed) return {Kind::MinusInfinity, 0};

    // P_+-inf are the only points that strip forever, so this terminates.
    const std::uint64_t budget =
        10 * (x.preperiod().level() + x.period().level() + static_cast<std::uint64_t>(M));
    for (int sign : {+1, -1}) {
        const BitWord& prefix = sign > 0 ? plus_prefix : minus_prefix;
        Point y = x;
        std::uint64_t k = 0;
        while (y.in_cylinder(prefix)) {
            y = y.drop(prefix.level());
            if (++k > budget) throw std::logic_error("dissipator: step budget exceeded");
        }
        if (k > 0) {
            if (in_xu(y)) return {Kind::Orbit, sign * static_cast<long long>(k)};
            return {Kind::Outside, 0};
        }
    }
    if (in_xu(x)) return {Kind::Orbit, 0};
    return {Kind::Outside, 0};
}

namespace {

Point dissipator_apply(const DissipatorOrbits& d, const Point& x, bool inverse) {
    using Kind = DissipatorOrbits::Region::Kind;
    auto region = d.classify(x);
    if (region.kind != Kind::Orbit) return x;
    if (!inverse) {
        // g_U: prepend on P_n (n >= 0), drop M coordinates on P_-n (n >= 1).
        if (region.n >= 0) return x.with_prefix(d.plus_prefix);
        return x.drop(d.minus_prefix.level());
    }
    if (region.n >= 1) return x.drop(d.plus_prefix.level());
    return x.with_prefix(d.minus_prefix);
}

Point phi_apply(const DissipatorOrbits& d, const PrefixMap& g, const Point& x) {
    using Kind = DissipatorOrbits::Region::Kind;
    auto region = d.classify(x);
    if (region.kind != Kind::Orbit || region.n < 1) return x;
    // On P_k this is g_U^k g g_U^-k; supp(g) in X_U keeps the conjugate
    // inside P_k.
    Point y = x;
    for (long long i = 0; i < region.n; ++i) y = y.drop(d.plus_prefix.level());
    y = g(y);
    for (long long i = 0; i < region.n; ++i) y = y.with_prefix(d.plus_prefix);
    return y;
}

}  // namespace

Point interleave_with_zeros(const Point& x) {
    std::string pre, per;
    for (char c : x.preperiod().str()) {
        pre.push_back('0');
        pre.push_back(c);
    }
    for (char c : x.period().str()) {
        per.push_back('0');
        per.push_back(c);
    }
    return Point::make(BitWord{pre}, BitWord{per});
}

CylinderProbe interleave_image_contains_cylinder(const BitWord& r) {
    // r.(1) has ones from position |r|+1 on; one of any two consecutive
    // positions is odd, so the zeros-at-odd-positions pattern breaks.
    return CylinderProbe{false, Point::make(r, BitWord("1"))};
}

struct RuleHomeo::Node {
    struct Lift {
        PrefixMap g;
    };
    struct Dissipator {
        DissipatorOrbits orbits;
        bool inverse;
    };
    struct Phi {
        DissipatorOrbits orbits;
        PrefixMap g;
    };
    struct Xor {
        Point mask;
    };
    struct Interleave {};
    struct Chain {
        // Application order: fs[0] acts first.
        std::vector<RuleHomeo> fs;
    };

    std::variant<Lift, Dissipator, Phi, Xor, Interleave, Chain> data;
};

RuleHomeo RuleHomeo::lift(PrefixMap g) {
    return RuleHomeo{std::make_shared<Node>(Node{Node::Lift{std::move(g)}})};
}

RuleHomeo RuleHomeo::dissipator(int m) {
    return RuleHomeo{std::make_shared<Node>(Node{Node::Dissipator{DissipatorOrbits{m}, false}})};
}

RuleHomeo RuleHomeo::binate_phi(PrefixMap g, int m) {
    DissipatorOrbits orbits{m};
    BitWord u = BitWord::zeros(static_cast<std::size_t>(m) - 2);
    if (!g.fixes_cylinder(u)) {
        throw std::invalid_argument("binate_phi: support of g must lie in X_U");
    }
    return RuleHomeo{std::make_shared<Node>(Node{Node::Phi{std::move(orbits), std::move(g)}})};
}

RuleHomeo RuleHomeo::binate_psi(PrefixMap g, int m) {
    return binate_phi(g.inverse(), m);
}

RuleHomeo RuleHomeo::xor_translation(Point mask) {
    return RuleHomeo{std::make_shared<Node>(Node{Node::Xor{std::move(mask)}})};
}

RuleHomeo RuleHomeo::interleave_zeros() {
    return RuleHomeo{std::make_shared<Node>(Node{Node::Interleave{}})};
}

Point RuleHomeo::operator()(const Point& x) const {
    const Node& n = *node_;
    if (auto* lift = std::get_if<Node::Lift>(&n.data)) return lift->g(x);
    if (auto* d = std::get_if<Node::Dissipator>(&n.data)) {
        return dissipator_apply(d->orbits, x, d->inverse);
    }
    if (auto* p = std::get_if<Node::Phi>(&n.data)) return phi_apply(p->orbits, p->g, x);
    if (auto* m = std::get_if<Node::Xor>(&n.data)) return xor_add(m->mask, x);
    if (std::get_if<Node::Interleave>(&n.data)) return interleave_with_zeros(x);
    const auto& chain = std::get<Node::Chain>(n.data);
    Point y = x;
    for (const auto& f : chain.fs) y = f(y);
    return y;
}

RuleHomeo RuleHomeo::inverse() const {
    const Node& n = *node_;
    if (auto* lift = std::get_if<Node::Lift>(&n.data)) return RuleHomeo::lift(lift->g.inverse());
    if (auto* d = std::get_if<Node::Dissipator>(&n.data)) {
        return RuleHomeo{std::make_shared<Node>(Node{Node::Dissipator{d->orbits, !d->inverse}})};
    }
    if (auto* p = std::get_if<Node::Phi>(&n.data)) {
        // phi(g)^-1 = phi(g^-1)
        return RuleHomeo{std::make_shared<Node>(Node{Node::Phi{p->orbits, p->g.inverse()}})};
    }
    if (auto* m = std::get_if<Node::Xor>(&n.data)) return RuleHomeo::xor_translation(m->mask);
    if (std::get_if<Node::Interleave>(&n.data)) {
        throw std::invalid_argument("interleave_zeros is an embedding, not invertible");
    }
    const auto& chain = std::get<Node::Chain>(n.data);
    std::vector<RuleHomeo> rev;
    for (auto it = chain.fs.rbegin(); it != chain.fs.rend(); ++it) rev.push_back(it->inverse());
    return RuleHomeo{std::make_shared<Node>(Node{Node::Chain{std::move(rev)}})};
}

RuleHomeo RuleHomeo::after(const RuleHomeo& g) const {
    return RuleHomeo{std::make_shared<Node>(Node{Node::Chain{{g, *this}}})};
}

RuleHomeo RuleHomeo::commutator(const RuleHomeo& a, const RuleHomeo& b) {
    // Application order b, a, b^-1, a^-1.
    return RuleHomeo{std::make_shared<Node>(
        Node{Node::Chain{{b, a, b.inverse(), a.inverse()}}})};
}

std::string RuleHomeo::describe() const {
    const Node& n = *node_;
    if (auto* lift = std::get_if<Node::Lift>(&n.data)) return "lift(" + lift->g.str() + ")";
    if (auto* d = std::get_if<Node::Dissipator>(&n.data)) {
        std::string s = "dissipator M=" + std::to_string(d->orbits.M);
        return d->inverse ? s + " inverse" : s;
    }
    if (auto* p = std::get_if<Node::Phi>(&n.data)) {
        return "phi g=" + p->g.str() + " M=" + std::to_string(p->orbits.M);
    }
    if (auto* m = std::get_if<Node::Xor>(&n.data)) return "xor mask=" + m->mask.str();
    if (std::get_if<Node::Interleave>(&n.data)) return "interleave";
    const auto& chain = std::get<Node::Chain>(n.data);
    std::string s = "chain[";
    for (std::size_t i = 0; i < chain.fs.size(); ++i) {
        if (i) s += "; ";
        s += chain.fs[i].describe();
    }
    return s + "]";
}

}  // namespace cantor
