#ifndef ALTEXT_COMMUTATOR_HPP
#define ALTEXT_COMMUTATOR_HPP

#include <optional>
#include <vector>

#include "altext/biext.hpp"
#include "altext/cochain.hpp"
#include "altext/obstruction.hpp"

namespace altext {

/// A group-like monoidal groupoid with invariants B and A, encoded by its
/// associator 3-cocycle; the constructor rejects non-cocycles.
class GrCategoryData {
public:
    explicit GrCategoryData(Cochain f);

    const Cochain& f() const { return f_; }
    const FinAbGroup& base() const { return f_.base(); }
    const FinAbGroup& coeff() const { return f_.coeff(); }

private:
    Cochain f_;
};

/// A candidate braiding g2 on top of the associator data; validity against
/// the hexagon conditions is established by classify_braiding.
struct BraidingData {
    GrCategoryData base;
    Cochain g2;  // arity 2
};

/// Commutator cocycle pair of the category: g by shuffling the last slot
/// through the first two, h by shuffling the first slot through the last two
/// in the opposite direction.  The result is a weak biextension pair for
/// every 3-cocycle f.
BiextPair derive_commutator_pair(const GrCategoryData& c);

/// Signed sum of f over all six slot permutations; the obstruction to
/// commutativity of the commutator pair.  Multilinearity and alternation of
/// the output are verified before returning.
Cochain trilinear_map(const GrCategoryData& c);

/// The quadruple (g, h, 0, 0) when trilinear_map(c) vanishes; throws
/// ObstructionError carrying the trilinear map otherwise.
AltQuadruple alt_quadruple_of(const GrCategoryData& c);

struct BraidingSolutions {
    bool solvable = false;
    bool complete = false;           // `all` is the entire solution set
    std::vector<Cochain> all;        // complete case only; deterministic order
    std::optional<Cochain> particular;
    std::vector<Cochain> kernel;     // generators of the homogeneous part
};

/// All normalized solutions of the hexagon conditions for f.  The full list
/// is materialized when the solution set has at most `bound` elements;
/// otherwise a particular solution plus kernel generators is returned.
BraidingSolutions solve_braiding(const GrCategoryData& c, std::int64_t bound = 512);

enum class BraidingClass { braided, symmetric, strict_picard };

/// Strongest applicable label; throws when the hexagon conditions fail.
BraidingClass classify_braiding(const BraidingData& b);

/// Solves { f = delta(l), c(x,y) = l(x,y) - l(y,x) } for l.
std::optional<Cochain> solve_splitting_with_commutator(const Cochain& f, const Cochain& c);

/// Picard trivialization h with f = delta(h) and g2(x,y) = h(x,y) - h(y,x).
/// Requires strict Picard input; absence would contradict the vanishing of
/// Ext^2 for abstract abelian groups and is surfaced to the caller rather
/// than swallowed.
std::optional<Cochain> solve_picard_trivialization(const BraidingData& b);

}  // namespace altext

#endif
