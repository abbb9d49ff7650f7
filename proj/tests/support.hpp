#ifndef ALTEXT_TESTS_SUPPORT_HPP
#define ALTEXT_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "altext/abelian.hpp"
#include "altext/cochain.hpp"
#include "altext/zlin.hpp"

namespace testsupport {

using altext::Cochain;
using altext::FinAbGroup;
using altext::GroupElem;
using altext::Int;
using altext::IntMatrix;
using altext::Residue;

inline GroupElem E(std::initializer_list<Residue> coords) {
    return GroupElem(std::vector<Residue>(coords));
}

inline std::vector<FinAbGroup> pool_groups() {
    return {FinAbGroup({2}), FinAbGroup({3}), FinAbGroup({4}), FinAbGroup({2, 2})};
}

/// Uniformly random normalized cochain (arbitrary table, not a cocycle).
inline Cochain uniform_cochain(const FinAbGroup& B, const FinAbGroup& A, int arity, std::mt19937_64& rng) {
    Cochain c(B, A, arity);
    const std::int64_t free = B.order() - 1;
    if (free == 0) return c;
    std::int64_t spots = 1;
    for (int i = 0; i < arity; ++i) spots *= free;
    std::vector<GroupElem> args(arity);
    for (std::int64_t s = 0; s < spots; ++s) {
        std::int64_t rem = s;
        std::vector<std::int64_t> digits(arity);
        for (std::size_t i = digits.size(); i-- > 0;) {
            digits[i] = rem % free + 1;
            rem /= free;
        }
        for (int i = 0; i < arity; ++i) args[i] = B.element_at(digits[i]);
        c.set_value(std::span<const GroupElem>(args.data(), args.size()),
                    A.element_at(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(A.order()))));
    }
    return c;
}

/// Indicator cochain: `value` at `args`, zero elsewhere.
inline Cochain indicator(const FinAbGroup& B, const FinAbGroup& A, std::vector<GroupElem> args,
                         const GroupElem& value) {
    Cochain c(B, A, static_cast<int>(args.size()));
    c.set_value(std::span<const GroupElem>(args.data(), args.size()), value);
    return c;
}

/// Fraction-free determinant (Bareiss); exact on integer matrices.
inline Int bareiss_det(IntMatrix m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("det needs a square matrix");
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m.at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

}  // namespace testsupport

#endif
