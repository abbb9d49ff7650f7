#ifndef ALTEXT_ZLIN_HPP
#define ALTEXT_ZLIN_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace altext {

using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

struct SmithResult {
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix d;  // diagonal, d1 | d2 | ... >= 0
    IntMatrix v;  // unimodular, cols x cols
};

/// U * M * V = D with U, V unimodular and D diagonal with a nonnegative
/// divisibility chain.  Pivoting is deterministic: smallest nonzero absolute
/// value, ties broken by lowest row then lowest column index.
SmithResult smith_normal_form(const IntMatrix& m);

/// A linear system  M x = b  read componentwise modulo row_moduli (a modulus
/// of 0 means the equation holds over the integers), where the unknown x_j
/// ranges over Z/col_moduli[j].  Changing the integer lift of x_j by
/// col_moduli[j] is absorbed internally, so solvability never depends on the
/// choice of lifts.
struct CongruenceSystem {
    IntMatrix matrix;             // r x c
    std::vector<Int> rhs;         // r
    std::vector<Int> row_moduli;  // r entries, each >= 0
    std::vector<Int> col_moduli;  // c entries, each >= 1
};

struct CongruenceSolution {
    std::vector<Int> particular;           // one solution, reduced mod col_moduli
    std::vector<std::vector<Int>> kernel;  // generators of the homogeneous solution
                                           // subgroup of prod Z/col_moduli[j]
};

/// Returns a particular solution plus kernel generators, or nullopt when the
/// system has no solution.  Unsolvable is a normal outcome, not an error;
/// only dimension mismatches throw.
std::optional<CongruenceSolution> solve_congruence(const CongruenceSystem& s);

/// Invariant factors (each > 1, each dividing the next) of the quotient of
/// prod Z/ambient_moduli[i] by the subgroup generated by the columns of
/// `relations`.
std::vector<Int> quotient_invariants(const IntMatrix& relations,
                                     const std::vector<Int>& ambient_moduli);

}  // namespace altext

#endif
