#pragma once

#include <cstddef>
#include <vector>

#include "cantor/bitword.hpp"
#include "cantor/point.hpp"
#include "cantor/prefix_map.hpp"

namespace cantor {

struct Generators {
    PrefixMap A, B, C, D, E;
};

/// The five standard elements; E = C^2 D C A = {00->0, 01->11, 1->10}.
Generators generators();

/// An element of V sending x to y (both dyadic): swap C(x|_M) and C(y|_M)
/// for the least M with both tails zero from index M on, identity
/// elsewhere.  Throws on non-dyadic input.
PrefixMap transitivity_witness(const Point& x, const Point& y);

/// An element of V sending xs[i] to ys[i] for all i (dyadic, pairwise
/// distinct on each side): level-M cylinder swaps routed through the
/// induced injections into the 2^M level-M words.
PrefixMap tuple_transitivity_witness(const std::vector<Point>& xs,
                                     const std::vector<Point>& ys);

struct CommutatorFixReport {
    std::size_t L = 0;
    BitWord fixed_cylinder;  // z|_L
    bool verified = false;
};

/// For g, h fixing z: the commutator g h g^-1 h^-1 fixes C(z|_L) pointwise
/// with L = N + Nbar + 1, where N, Nbar are the levels of the range roots
/// of the pieces of g, h containing z.  (The bound pairs with this
/// orientation; for a^-1 b^-1 a b swap in the domain-root levels.)  Throws
/// when a precondition fails; verified records the exact piecewise check.
CommutatorFixReport commutator_fix_check(const PrefixMap& g, const PrefixMap& h,
                                         const Point& z);

struct DerivedWitness {
    BitWord r;
    PrefixMap h_prime;
};

/// The exchange-element construction: for h fixing C(U) pointwise and z in
/// C(U), produces a subroot r and h' in V with (i) z in C(r) inside C(U),
/// (ii) h and [h',h] agreeing outside C(U), (iii) h' fixing C(r) pointwise.
/// All three postconditions are re-verified before returning.
DerivedWitness derived_witness(const PrefixMap& h, const BitWord& u, const Point& z);

/// The 2M+2-piece element h (M >= 2) with t_0 = 0^M, t_k = 0^(M-k) 1:
/// fixes C(0^(M+1)) pointwise and maps every C(t_k), k >= 1, into C(10).
/// Pieces are paired in the in-order reading of the two displayed codes:
///   0.t_0 -> 0.t_0,  t_0.1.t_k -> 0.t_(k+1) (k < M),  t_0.1.t_M -> 11,
///   t_k -> 1.t_(k-1) (k >= 1).
PrefixMap stab_h(std::size_t m);

struct ConjugationResult {
    PrefixMap conjugator;        // c = [h', h]
    PrefixMap h;                 // stab_h(M)
    PrefixMap h_prime;           // derived witness for h on C(0^(M+1))
    std::size_t M = 0;
    bool ok = false;             // supp(c g c^-1) inside C(10) for every g
    bool factors_fix_zero = false;  // both commutator factors fix (0)
};

/// Conjugates a finite family fixing a neighborhood of (0) into C(10) by a
/// single commutator of stabilizer elements.  Throws when some element does
/// not fix a neighborhood of (0).
ConjugationResult conjugate_into_support(const std::vector<PrefixMap>& gs);

/// True iff g^k(C(x0)) is disjoint from C(x0) for all 1 <= k <= kmax.
bool displacement_check(const PrefixMap& g, const BitWord& x0, std::size_t kmax);

}  // namespace cantor
