#pragma once

#include <memory>
#include <string>

#include "cantor/bitword.hpp"
#include "cantor/point.hpp"
#include "cantor/prefix_injection.hpp"
#include "cantor/prefix_map.hpp"

namespace cantor {

/// Orbit data for the dyadic dissipator with parameter M >= 3.
///
/// Frozen conventions (the index bookkeeping of the construction, derived
/// once): with U = C(0^(M-2)) and X_U its complement,
///   tau_plus  prepends 0^(M-2) 1 1, so O+ = C(0^(M-2)11),
///   tau_minus prepends 0^(M-2) 1 0, so O- = C(0^(M-2)10);
/// both shift coordinates by M places.  P_0 = X_U, P_n = tau_plus^n(X_U),
/// P_-n = tau_minus^n(X_U), and P_+-inf are the shrinking fixed points
/// (0^(M-2)11)^inf and (0^(M-2)10)^inf.
struct DissipatorOrbits {
    explicit DissipatorOrbits(int m);

    int M;
    BitWord plus_prefix;    // 0^(M-2)11
    BitWord minus_prefix;   // 0^(M-2)10
    Point plus_fixed;       // P_+inf
    Point minus_fixed;      // P_-inf

    /// True iff x lies in X_U, i.e. some bit among the first M-2 is 1.
    bool in_xu(const Point& x) const;

    /// Minimal cylinders of X_U (the staircase complement of 0^(M-2)).
    std::vector<BitWord> xu_cylinders() const;

    struct Region {
        enum class Kind { Orbit, PlusInfinity, MinusInfinity, Outside };
        Kind kind;
        long long n = 0;  // orbit index for Kind::Orbit
    };

    /// Classifies an eventually periodic point into P_n, P_+-inf or the
    /// identity region I, by stripping tau prefixes.
    Region classify(const Point& x) const;
};

/// A lazily-evaluated homeomorphism (or clopen embedding) of the dyadic
/// model with possibly infinite piece structure.  The constructor set is
/// closed, so evaluation terminates on every eventually periodic point
/// within the declared step budget; exceeding the budget is an internal
/// defect and throws std::logic_error.
class RuleHomeo {
public:
    /// A finite prefix-substitution map, lifted.
    static RuleHomeo lift(PrefixMap g);

    /// The dissipator g_U for U = C(0^(M-2)): tau_plus on P_n (n >= 0),
    /// tau_minus^-1 (drop M coordinates) on P_-n (n >= 1), identity
    /// elsewhere.  Requires M >= 3.
    static RuleHomeo dissipator(int m);

    /// phi(g) = g_U^k g g_U^-k on g_U^k(X_U) for k >= 1, identity
    /// elsewhere.  Requires supp(g) inside X_U (complement of C(0^(M-2))
    /// fixed pointwise), checked via the fixed set.
    static RuleHomeo binate_phi(PrefixMap g, int m);

    /// psi(g) = phi(g)^-1 = phi(g^-1).
    static RuleHomeo binate_psi(PrefixMap g, int m);

    /// Coordinatewise z -> mask + z mod 2; an isometric involution.  With
    /// mask = x + y it swaps x and y.
    static RuleHomeo xor_translation(Point mask);

    /// The embedding x -> (0, x1, 0, x2, ...); not invertible on the whole
    /// space (image has empty interior).
    static RuleHomeo interleave_zeros();

    Point operator()(const Point& x) const;

    /// Inverse as a rule homeomorphism; throws for embeddings
    /// (interleave_zeros and compositions containing it).
    RuleHomeo inverse() const;

    /// this after other: (f.after(g))(x) = f(g(x)).
    RuleHomeo after(const RuleHomeo& g) const;

    /// [a,b] = a^-1 b^-1 a b.
    static RuleHomeo commutator(const RuleHomeo& a, const RuleHomeo& b);

    std::string describe() const;

private:
    struct Node;
    explicit RuleHomeo(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// x -> (0, x1, 0, x2, ...) directly.
Point interleave_with_zeros(const Point& x);

struct CylinderProbe {
    bool contains;   // always false: the image has empty interior
    Point witness;   // a point of C(r) outside the image
};

/// Witness that no cylinder C(r) lies inside the interleaving image: the
/// returned point extends r but breaks the zeros-at-odd-positions pattern.
CylinderProbe interleave_image_contains_cylinder(const BitWord& r);

}  // namespace cantor
