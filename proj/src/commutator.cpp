#include "altext/commutator.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "altext/detail/table_system.hpp"

namespace altext {

namespace {

void require_cocycle(const Cochain& f, int arity) {
    if (f.arity() != arity)
        throw std::invalid_argument("expected a cochain of arity " + std::to_string(arity));
    CheckReport r = is_cocycle(f);
    if (!r.ok()) throw std::invalid_argument("not a cocycle: " + r.summary());
}

// Residuals of the two hexagon conditions for (f, g2) at (x, y, z).
GroupElem braid_residual_1(const Cochain& f, const Cochain& g2, const GroupElem& x, const GroupElem& y,
                           const GroupElem& z) {
    const FinAbGroup& B = f.base();
    const FinAbGroup& A = f.coeff();
    GroupElem lhs = A.add(A.sub(f(x, y, z), f(x, z, y)), f(z, x, y));
    GroupElem rhs = A.sub(g2(B.add(x, y), z), A.add(g2(x, z), g2(y, z)));
    return A.sub(lhs, rhs);
}

GroupElem braid_residual_2(const Cochain& f, const Cochain& g2, const GroupElem& x, const GroupElem& y,
                           const GroupElem& z) {
    const FinAbGroup& B = f.base();
    const FinAbGroup& A = f.coeff();
    GroupElem lhs = A.sub(f(y, x, z), A.add(f(x, y, z), f(y, z, x)));
    GroupElem rhs = A.sub(g2(x, B.add(y, z)), A.add(g2(x, y), g2(x, z)));
    return A.sub(lhs, rhs);
}

bool braiding_holds(const Cochain& f, const Cochain& g2) {
    const auto el = f.base().enumerate();
    for (const auto& x : el)
        for (const auto& y : el)
            for (const auto& z : el)
                if (!braid_residual_1(f, g2, x, y, z).is_zero() ||
                    !braid_residual_2(f, g2, x, y, z).is_zero())
                    return false;
    return true;
}

}  // namespace

GrCategoryData::GrCategoryData(Cochain f) : f_(std::move(f)) {
    require_cocycle(f_, 3);
}

BiextPair derive_commutator_pair(const GrCategoryData& c) {
    // g(x,x';y) = f(x,x',y) - f(x,y,x') + f(y,x,x')
    Cochain g = partial_shuffle_sym(c.f(), 0, 2, 1, +1);
    // h(x;y,y') = f(y,x,y') - f(x,y,y') - f(y,y',x)
    Cochain h = partial_shuffle_sym(c.f(), 0, 1, 2, -1);
    return BiextPair{std::move(g), std::move(h)};
}

Cochain trilinear_map(const GrCategoryData& c) {
    const FinAbGroup& B = c.base();
    const FinAbGroup& A = c.coeff();
    const auto el = B.enumerate();
    const Cochain& f = c.f();

    Cochain phi(B, A, 3);
    for (const auto& x : el)
        for (const auto& y : el)
            for (const auto& z : el) {
                GroupElem plus = A.add(f(x, y, z), A.add(f(z, x, y), f(y, z, x)));
                GroupElem minus = A.add(f(x, z, y), A.add(f(z, y, x), f(y, x, z)));
                phi.set_value({x, y, z}, A.sub(plus, minus));
            }

    for (const auto& x : el)
        for (const auto& y : el)
            for (const auto& z : el) {
                if (!(phi(x, x, y).is_zero() && phi(x, y, x).is_zero() && phi(y, x, x).is_zero()))
                    throw std::logic_error("trilinear map fails to be alternating");
                for (const auto& w : el) {
                    GroupElem lin = A.sub(phi(B.add(x, w), y, z), A.add(phi(x, y, z), phi(w, y, z)));
                    if (!lin.is_zero()) throw std::logic_error("trilinear map fails to be linear");
                }
            }
    return phi;
}

AltQuadruple alt_quadruple_of(const GrCategoryData& c) {
    Cochain phi = trilinear_map(c);
    if (!phi.is_zero())
        throw ObstructionError("commutator pair is not commutative: nonzero trilinear obstruction",
                               std::move(phi));
    BiextPair pair = derive_commutator_pair(c);
    return AltQuadruple{std::move(pair), Cochain(c.base(), c.coeff(), 2), Cochain(c.base(), c.coeff(), 1)};
}

BraidingSolutions solve_braiding(const GrCategoryData& c, std::int64_t bound) {
    const FinAbGroup& B = c.base();
    const FinAbGroup& A = c.coeff();
    const auto el = B.enumerate();
    const Cochain& f = c.f();

    detail::TableSystem sys(B, A, 2);
    for (const auto& x : el) {
        if (x.is_zero()) continue;
        for (const auto& y : el) {
            if (y.is_zero()) continue;
            for (const auto& z : el) {
                if (z.is_zero()) continue;
                sys.term({B.add(x, y), z}, 1);
                sys.term({x, z}, -1);
                sys.term({y, z}, -1);
                sys.finish_row(A.add(A.sub(f(x, y, z), f(x, z, y)), f(z, x, y)));

                sys.term({x, B.add(y, z)}, 1);
                sys.term({x, y}, -1);
                sys.term({x, z}, -1);
                sys.finish_row(A.sub(f(y, x, z), A.add(f(x, y, z), f(y, z, x))));
            }
        }
    }

    BraidingSolutions out;
    auto solved = sys.solve_with_kernel();
    if (!solved) {
        out.complete = true;  // the empty list is the whole solution set
        return out;
    }
    out.solvable = true;
    out.particular = solved->first;
    out.kernel = solved->second;

    // Closure of the affine solution set, abandoned once it exceeds `bound`.
    std::set<std::vector<Residue>> seen;
    std::vector<Cochain> frontier{solved->first};
    seen.insert(flat_table(solved->first));
    bool complete = true;
    while (!frontier.empty() && complete) {
        Cochain cur = frontier.back();
        frontier.pop_back();
        for (const auto& gen : out.kernel) {
            Cochain next = cur + gen;
            if (seen.insert(flat_table(next)).second) {
                if (static_cast<std::int64_t>(seen.size()) > bound) {
                    complete = false;
                    break;
                }
                frontier.push_back(std::move(next));
            }
        }
    }
    if (complete) {
        out.complete = true;
        for (const auto& table : seen) {
            Cochain g2(B, A, 2);
            for (std::int64_t t = 0; t < g2.tuple_count(); ++t) {
                std::vector<Residue> coords(A.rank());
                for (std::size_t k = 0; k < A.rank(); ++k)
                    coords[k] = table[t * static_cast<std::int64_t>(A.rank()) + static_cast<std::int64_t>(k)];
                g2.set_value_flat(t, GroupElem(std::move(coords)));
            }
            out.all.push_back(std::move(g2));
        }
    }
    return out;
}

BraidingClass classify_braiding(const BraidingData& b) {
    if (b.g2.arity() != 2) throw std::invalid_argument("braiding must have arity 2");
    if (!braiding_holds(b.base.f(), b.g2))
        throw std::invalid_argument("hexagon conditions violated: not a braiding");

    const FinAbGroup& A = b.base.coeff();
    const auto el = b.base.base().enumerate();
    bool symmetric = true;
    for (const auto& x : el)
        for (const auto& y : el)
            if (!A.sub(b.g2(x, y), b.g2(y, x)).is_zero()) symmetric = false;
    bool diag_zero = true;
    for (const auto& x : el)
        if (!b.g2(x, x).is_zero()) diag_zero = false;

    // Strict Picard demands both; the diagonal condition alone is not
    // taken on faith to imply symmetry.
    if (symmetric && diag_zero) return BraidingClass::strict_picard;
    if (symmetric) return BraidingClass::symmetric;
    return BraidingClass::braided;
}

std::optional<Cochain> solve_splitting_with_commutator(const Cochain& f, const Cochain& c) {
    if (f.arity() != 3 || c.arity() != 2) throw std::invalid_argument("expected arities 3 and 2");
    const FinAbGroup& B = f.base();
    const FinAbGroup& A = f.coeff();
    const auto el = B.enumerate();

    detail::TableSystem sys(B, A, 2);
    for (const auto& x : el) {
        if (x.is_zero()) continue;
        for (const auto& y : el) {
            if (y.is_zero()) continue;
            sys.term({x, y}, 1);
            sys.term({y, x}, -1);
            sys.finish_row(c(x, y));
            for (const auto& z : el) {
                if (z.is_zero()) continue;
                // f(x,y,z) = l(y,z) - l(x+y,z) + l(x,y+z) - l(x,y)
                sys.term({y, z}, 1);
                sys.term({B.add(x, y), z}, -1);
                sys.term({x, B.add(y, z)}, 1);
                sys.term({x, y}, -1);
                sys.finish_row(f(x, y, z));
            }
        }
    }
    return sys.solve();
}

std::optional<Cochain> solve_picard_trivialization(const BraidingData& b) {
    if (classify_braiding(b) != BraidingClass::strict_picard)
        throw std::invalid_argument("braiding does not classify as strict Picard");
    return solve_splitting_with_commutator(b.base.f(), b.g2);
}

}  // namespace altext
