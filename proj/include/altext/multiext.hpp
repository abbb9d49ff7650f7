#ifndef ALTEXT_MULTIEXT_HPP
#define ALTEXT_MULTIEXT_HPP

#include <optional>

#include "altext/biext.hpp"
#include "altext/cochain.hpp"
#include "altext/obstruction.hpp"

namespace altext {

/// Triextension of B^3 by A with trivial underlying torsor: one arity-4
/// cochain per partial law.
///   g1(x1,x2, y, z)  — first law, adding the x slot;
///   g2(x, y1,y2, z)  — second law, adding the y slot;
///   g3(x, y, z1,z2)  — third law, adding the z slot.
struct TriextData {
    Cochain g1, g2, g3;

    const FinAbGroup& base() const { return g1.base(); }
    const FinAbGroup& coeff() const { return g1.coeff(); }
};

/// Triextension plus the two diagonal sections of the alternating
/// structure: u1(x,z) sits over (x,x,z), u2(x,z) over (x,z,z).
struct AltTriextData {
    TriextData base;
    Cochain u1, u2;  // arity 2
};

/// A monoidal 2-category with invariants B and A, encoded by its associator
/// 4-cocycle; the constructor rejects non-cocycles.
class FourCocycleData {
public:
    explicit FourCocycleData(Cochain f);

    const Cochain& f() const { return f_; }
    const FinAbGroup& base() const { return f_.base(); }
    const FinAbGroup& coeff() const { return f_.coeff(); }

private:
    Cochain f_;
};

TriextData make_triext(Cochain g1, Cochain g2, Cochain g3);

/// Signed sum of f over all 24 slot permutations; vanishing gates the
/// triextension derivation.  Multilinearity and alternation are verified.
Cochain quadralinear_map(const FourCocycleData& c);

struct DerivedFamilies {
    Cochain psi;  // psi(x1,x2,x3 | x4): associator of the first partial law
    Cochain phi;  // phi(x1 | x2,x3,x4): associator of the second partial law
    Cochain chi;  // chi(x1,x2 | x3,x4): the compatibility (2|2) cochain
};

/// The three shuffle symmetrizations of a 4-cocycle.  psi restricted to a
/// fixed last slot and phi restricted to a fixed first slot are 3-cocycles.
DerivedFamilies derive_22ext_families(const FourCocycleData& c);

/// The derived triextension (g, h = gamma, eta) when the quadralinear map
/// vanishes; throws ObstructionError carrying it otherwise.
TriextData derive_triext(const FourCocycleData& c);

/// Per-law slice 2-cocycle conditions and symmetry, plus the three pairwise
/// compatibility families.
CheckReport check_triext(const TriextData& t);

/// All alternating-triextension axioms: the sliced alternating-triple
/// conditions for u1 (z fixed) and u2 (x fixed), linearity of each section
/// in its spectator variable, the diagonal identity u1(x,x) = u2(x,x), the
/// mixed compatibility in its s-map form, and the quadraticity identities of
/// the induced anti-symmetry maps.
CheckReport check_alt_triext(const AltTriextData& a);

struct T3Result {
    Cochain t3;          // induced diagonal section over (x, y, x)
    CheckReport report;  // agreement of both construction routes and the
                         // reconstruction identities
};

/// Third diagonal section of a valid alternating triextension.
T3Result derive_t3(const AltTriextData& a);

/// A map theta with each partial law the corresponding difference of theta
/// and theta vanishing on both diagonals, or absence.
std::optional<Cochain> solve_theta(const TriextData& t);

/// Residuals of the five theta equation families for a candidate theta.
CheckReport check_theta(const TriextData& t, const Cochain& theta);

/// For every fixed last slot w, (psi(.,.,.|w), theta(.,.,w)) must satisfy
/// the hexagon conditions, symmetry and the vanishing-diagonal condition;
/// mirror statement for every fixed first slot with phi and theta slices.
CheckReport check_picard_family(const FourCocycleData& c, const Cochain& theta);

}  // namespace altext

#endif
