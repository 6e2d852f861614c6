#include "cantor/generic_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace cantor {

std::string rat_str(const Rat& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string element_str(const Element& e) {
    if (const auto* p = std::get_if<Point>(&e)) return p->str();
    return std::get<FatPoint>(e).str();
}

namespace {

const Point& core_of(const Element& e) {
    if (const auto* p = std::get_if<Point>(&e)) return *p;
    return std::get<FatPoint>(e).core;
}

}  // namespace

bool related(Relation rel, const Element& a, const Element& b) {
    switch (rel) {
        case Relation::DistinctDyadic: {
            const auto* pa = std::get_if<Point>(&a);
            const auto* pb = std::get_if<Point>(&b);
            if (!pa || !pb) return false;
            return pa->is_dyadic() && pb->is_dyadic() && *pa != *pb;
        }
        case Relation::FatDisjoint: {
            const auto* fa = std::get_if<FatPoint>(&a);
            const auto* fb = std::get_if<FatPoint>(&b);
            if (!fa || !fb) return false;
            return disjoint(*fa, *fb).disjoint;
        }
    }
    return false;
}

bool is_generic_tuple(Relation rel, std::span<const Element> tuple) {
    if (tuple.empty()) return false;
    for (const auto& e : tuple) {
        // Arity-one tuples still have to live in the space.
        if (rel == Relation::DistinctDyadic) {
            const auto* p = std::get_if<Point>(&e);
            if (!p || !p->is_dyadic()) return false;
        } else if (!std::holds_alternative<FatPoint>(e)) {
            return false;
        }
    }
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        for (std::size_t j = i + 1; j < tuple.size(); ++j) {
            if (!related(rel, tuple[i], tuple[j])) return false;
        }
    }
    return true;
}

Element fresh_point(Relation rel, const std::vector<Element>& F) {
    if (rel == Relation::FatDisjoint) {
        std::vector<FatPoint> fps;
        for (const auto& e : F) fps.push_back(std::get<FatPoint>(e));
        return fresh_fat_point(fps);
    }
    std::vector<Point> points;
    for (const auto& e : F) points.push_back(std::get<Point>(e));
    if (points.empty()) return Point();
    for (std::uint64_t m = 1;; ++m) {
        Point candidate = Point().with_prefix(BitWord::zeros(m).append(1));
        if (std::find(points.begin(), points.end(), candidate) == points.end()) {
            return candidate;
        }
    }
}

struct Cochain::Node {
    struct Constant {
        Rat value;
    };
    struct LexIndicator {};
    struct Pullback {
        PrefixMap g;
        Cochain inner;
    };
    struct Linear {
        std::vector<std::pair<Rat, Cochain>> terms;
    };
    struct Coboundary {
        Cochain inner;
    };
    struct Homotopy {
        Element base;
        Cochain inner;
    };
    std::variant<Constant, LexIndicator, Pullback, Linear, Coboundary, Homotopy> data;
};

Cochain::Cochain(std::size_t arity, Rat bound, std::shared_ptr<const Node> node)
    : arity_(arity), bound_(std::move(bound)), node_(std::move(node)) {}

Cochain Cochain::constant(std::size_t arity, Rat value) {
    Rat bound = value < Rat(0) ? -value : value;
    return Cochain(arity, bound, std::make_shared<Node>(Node{Node::Constant{std::move(value)}}));
}

Cochain Cochain::lex_indicator() {
    return Cochain(2, Rat(1), std::make_shared<Node>(Node{Node::LexIndicator{}}));
}

Cochain Cochain::pullback(PrefixMap g) const {
    return Cochain(arity_, bound_,
                   std::make_shared<Node>(Node{Node::Pullback{std::move(g), *this}}));
}

Cochain Cochain::linear(std::vector<std::pair<Rat, Cochain>> terms) {
    if (terms.empty()) throw std::invalid_argument("Cochain::linear: no terms");
    const std::size_t arity = terms.front().second.arity();
    Rat bound(0);
    for (const auto& [coeff, f] : terms) {
        if (f.arity() != arity) {
            throw std::invalid_argument("Cochain::linear: mixed arities");
        }
        bound += (coeff < Rat(0) ? -coeff : coeff) * f.bound();
    }
    return Cochain(arity, bound, std::make_shared<Node>(Node{Node::Linear{std::move(terms)}}));
}

Cochain Cochain::coboundary() const {
    // k+1 alternating terms of a bound-b cochain.
    Rat bound = Rat(static_cast<long long>(arity_) + 1) * bound_;
    return Cochain(arity_ + 1, bound, std::make_shared<Node>(Node{Node::Coboundary{*this}}));
}

Cochain Cochain::homotopy(Element base) const {
    if (arity_ < 1) throw std::invalid_argument("Cochain::homotopy: arity must be >= 1");
    return Cochain(arity_ - 1, bound_,
                   std::make_shared<Node>(Node{Node::Homotopy{std::move(base), *this}}));
}

Rat Cochain::eval(std::span<const Element> tuple) const {
    if (tuple.size() != arity_) {
        throw std::invalid_argument("Cochain: arity mismatch in evaluation");
    }
    if (auto* c = std::get_if<Node::Constant>(&node_->data)) return c->value;
    if (std::get_if<Node::LexIndicator>(&node_->data)) {
        const Point& x = core_of(tuple[0]);
        const Point& y = core_of(tuple[1]);
        return lex_compare(x, y) == std::strong_ordering::less ? Rat(1) : Rat(0);
    }
    if (auto* p = std::get_if<Node::Pullback>(&node_->data)) {
        std::vector<Element> mapped;
        mapped.reserve(tuple.size());
        for (const auto& e : tuple) {
            if (const auto* pt = std::get_if<Point>(&e)) {
                mapped.emplace_back(p->g(*pt));
            } else {
                mapped.emplace_back(act(p->g, std::get<FatPoint>(e)));
            }
        }
        return p->inner.eval(std::span<const Element>(mapped));
    }
    if (auto* l = std::get_if<Node::Linear>(&node_->data)) {
        Rat total(0);
        for (const auto& [coeff, f] : l->terms) total += coeff * f.eval(tuple);
        return total;
    }
    if (auto* d = std::get_if<Node::Coboundary>(&node_->data)) {
        Rat total(0);
        int sign = 1;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            std::vector<Element> face;
            face.reserve(tuple.size() - 1);
            for (std::size_t j = 0; j < tuple.size(); ++j) {
                if (j != i) face.push_back(tuple[j]);
            }
            total += Rat(sign) * d->inner.eval(std::span<const Element>(face));
            sign = -sign;
        }
        return total;
    }
    const auto& h = std::get<Node::Homotopy>(node_->data);
    for (const auto& e : tuple) {
        if (core_of(h.base) == core_of(e)) {
            throw std::domain_error("Cochain::homotopy: base point collides with an argument");
        }
    }
    std::vector<Element> extended;
    extended.reserve(tuple.size() + 1);
    extended.push_back(h.base);
    extended.insert(extended.end(), tuple.begin(), tuple.end());
    return h.inner.eval(std::span<const Element>(extended));
}

bool verify_homotopy_identity(Relation rel, const Cochain& f,
                              const std::vector<std::vector<Element>>& tuples) {
    std::vector<Element> pool;
    for (const auto& t : tuples) pool.insert(pool.end(), t.begin(), t.end());
    const Element base = fresh_point(rel, pool);

    const Cochain left = f.homotopy(base).coboundary();   // d(Qf)
    const Cochain right = f.coboundary().homotopy(base);  // Q(df)
    for (const auto& t : tuples) {
        if (t.size() != f.arity()) {
            throw std::invalid_argument("verify_homotopy_identity: tuple arity mismatch");
        }
        if (left.eval(t) + right.eval(t) != f.eval(t)) return false;
    }
    return true;
}

std::vector<DeltaPatternRow> invariant_delta_pattern(std::size_t kmax) {
    std::vector<DeltaPatternRow> rows;
    for (std::size_t k = 1; k <= kmax; ++k) {
        Cochain d = Cochain::constant(k, Rat(1)).coboundary();
        // Evaluate at a fresh generic (k+1)-tuple of dyadic points.
        std::vector<Element> tuple;
        for (std::size_t i = 0; i <= k; ++i) {
            tuple.push_back(fresh_point(Relation::DistinctDyadic, tuple));
        }
        Rat value = d.eval(tuple);
        rows.push_back(DeltaPatternRow{k, value == Rat(0), value});
    }
    return rows;
}

}  // namespace cantor
