#ifndef ALTEXT_BIEXT_HPP
#define ALTEXT_BIEXT_HPP

#include <optional>

#include "altext/cochain.hpp"
#include "altext/report.hpp"

namespace altext {

/// Cocycle pair of a biextension of B x B by A with trivial underlying
/// torsor: g(b1,b2;b') describes the first partial law, h(b;b'1,b'2) the
/// second.  Both are arity-3 cochains over the same B and A.  A raw pair may
/// violate the biextension axioms; check_biext_pair verifies them.
struct BiextPair {
    Cochain g;
    Cochain h;

    const FinAbGroup& base() const { return g.base(); }
    const FinAbGroup& coeff() const { return g.coeff(); }
};

/// The (g, h, phi, u) presentation of an alternating biextension.
struct AltQuadruple {
    BiextPair pair;
    Cochain phi;  // arity 2, anti-symmetry map
    Cochain u;    // arity 1, diagonal trivialization
};

BiextPair make_biext_pair(Cochain g, Cochain h);

/// Verifies the per-slice 2-cocycle conditions for g and h and their
/// compatibility; with require_commutative also the symmetry of both laws.
CheckReport check_biext_pair(const BiextPair& p, bool require_commutative);

/// lambda(b1,b2) = g(b1,b2;b1+b2) + h(b1;b1,b2) + h(b2;b1,b2).  Computed by
/// both equivalent formulas; a disagreement signals a compatibility
/// violation in the pair and throws.
Cochain lambda_of(const BiextPair& p);

/// Second difference of a 1-cochain:
/// u(b1+b2+b3) + u(b1) + u(b2) + u(b3) - u(b1+b2) - u(b1+b3) - u(b2+b3).
Cochain second_difference(const Cochain& u);

/// Verifies the two conditions making (g, h, u) an alternating biextension
/// triple: the diagonal symmetry equation and the cube compatibility of u.
CheckReport check_alt_triple(const BiextPair& p, const Cochain& u);

/// Anti-symmetry map of a valid triple: phi(b,b') = u(b+b') - u(b) - u(b')
/// - lambda(b,b').  The returned quadruple satisfies check_alt_quadruple.
AltQuadruple triple_to_quadruple(const BiextPair& p, const Cochain& u);

/// Verifies, in order: the base pair conditions, that phi trivializes the
/// induced symmetric biextension, the symmetry of phi, the 2-cocycle lemma
/// for c = lambda + phi together with its symmetry, c = delta-type
/// difference of u, and 2 u(b) = phi(b,b).
CheckReport check_alt_quadruple(const AltQuadruple& q);

/// A map k with g(b1,b2;b') = k(b1+b2,b') - k(b1,b') - k(b2,b') and the
/// analogous family for h, or absence when the biextension class is
/// nontrivial.  Absence is a normal outcome, not an error.
std::optional<Cochain> trivialize_biext(const BiextPair& p);

/// Trivialization respecting the alternating structure: the two families
/// above plus k(x,x) = u(x) and k(x,y) + k(y,x) = phi(x,y).
std::optional<Cochain> trivialize_alternating(const AltQuadruple& q);

}  // namespace altext

#endif
