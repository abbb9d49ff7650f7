#ifndef ALTEXT_COCHAIN_HPP
#define ALTEXT_COCHAIN_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "altext/abelian.hpp"
#include "altext/report.hpp"

namespace altext {

/// A normalized A-valued cochain on B^n, stored as a dense table over all
/// |B|^n argument tuples (entries at tuples containing 0 are identically
/// zero and cannot be set otherwise).
class Cochain {
public:
    Cochain(FinAbGroup base, FinAbGroup coeff, int arity);

    const FinAbGroup& base() const { return base_; }
    const FinAbGroup& coeff() const { return coeff_; }
    int arity() const { return arity_; }

    std::int64_t tuple_count() const { return tuples_; }

    GroupElem value_at(std::span<const GroupElem> args) const;
    GroupElem value_at(std::initializer_list<GroupElem> args) const;
    template <class... Es>
    GroupElem operator()(const Es&... args) const {
        const GroupElem arr[] = {args...};
        return value_at(std::span<const GroupElem>(arr, sizeof...(args)));
    }

    /// Throws when arguments are malformed, the value is not in A, or the
    /// assignment would violate normalization.
    void set_value(std::span<const GroupElem> args, const GroupElem& value);
    void set_value(std::initializer_list<GroupElem> args, const GroupElem& value);

    /// Flat storage view: tuple-major, coefficient-factor-minor.
    std::int64_t flat_index(std::span<const std::int64_t> arg_indices) const;
    GroupElem value_flat(std::int64_t flat) const;
    void set_value_flat(std::int64_t flat, const GroupElem& value);
    Residue raw(std::int64_t flat, std::size_t factor) const {
        return table_[flat * static_cast<std::int64_t>(coeff_.rank()) + static_cast<std::int64_t>(factor)];
    }

    bool is_zero() const;
    bool same_shape(const Cochain& other) const;

    Cochain operator+(const Cochain& rhs) const;
    Cochain operator-(const Cochain& rhs) const;
    Cochain operator-() const;
    bool operator==(const Cochain&) const = default;

private:
    FinAbGroup base_, coeff_;
    int arity_;
    std::int64_t tuples_;
    std::vector<Residue> table_;
};

/// Flat copy of the full value table (tuple-major, factor-minor).
std::vector<Residue> flat_table(const Cochain& c);

/// Bar differential with trivial action:
/// (dc)(x_1..x_{n+1}) = c(x_2..x_{n+1})
///                      + sum_i (-1)^i c(..., x_i + x_{i+1}, ...)
///                      + (-1)^{n+1} c(x_1..x_n).
Cochain coboundary(const Cochain& c);

/// Pass, or the first violating tuple of the cocycle condition in
/// enumeration order together with its residual.
CheckReport is_cocycle(const Cochain& c);

/// Signed sum over (p, n-p)-shuffles: the last n-p argument slots are
/// shuffled through the first p, order preserved inside each block, each
/// term weighted by the permutation sign, the total scaled by `sign`.
Cochain shuffle_sym(const Cochain& f, int p, int sign);

/// Same shuffle applied to the window of slots [first, first+p+q); slots
/// outside the window are untouched.
Cochain partial_shuffle_sym(const Cochain& f, int first, int p, int q, int sign);

/// Restricts chosen argument slots to fixed elements, producing a cochain of
/// lower arity on the remaining slots (in their original order).
Cochain fix_slots(const Cochain& c, const std::vector<std::pair<int, GroupElem>>& fixed);

enum class CohomologyMethod { snf, enumeration };

struct CohomologyOptions {
    std::int64_t enumeration_bound = 1'000'000;  // max tables enumerated per degree
    std::int64_t snf_row_cap = 200'000;          // max rows in the cocycle system
};

/// Invariant factors of H^degree(B, A) computed on the normalized complex,
/// either by exact integer linear algebra (snf) or by exhaustive enumeration
/// of cochain tables (enumeration; the test oracle).  Factors are listed in
/// ascending divisibility order; the trivial group is the empty list.
std::vector<std::int64_t> cohomology(const FinAbGroup& B, const FinAbGroup& A, int degree,
                                     CohomologyMethod method, const CohomologyOptions& opts = {});

enum class RandomClass { any, coboundary };

/// Deterministic seeded sampling: `coboundary` returns the differential of a
/// uniformly random normalized (n-1)-cochain; `any` samples uniformly from
/// the group of normalized n-cocycles.
Cochain random_cochain(const FinAbGroup& B, const FinAbGroup& A, int arity,
                       std::uint64_t seed, RandomClass cls);

}  // namespace altext

#endif
