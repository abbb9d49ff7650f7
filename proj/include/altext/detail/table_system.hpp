#ifndef ALTEXT_DETAIL_TABLE_SYSTEM_HPP
#define ALTEXT_DETAIL_TABLE_SYSTEM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "altext/abelian.hpp"
#include "altext/cochain.hpp"

namespace altext::detail {

/// A linear system whose unknowns are the free entries (all arguments
/// nonzero) of one normalized cochain of the given shape.  Rows are built
/// term by term; the system is solved independently per coefficient factor
/// and reassembled into a Cochain.
class TableSystem {
public:
    TableSystem(FinAbGroup base, FinAbGroup coeff, int arity);

    /// Adds `coefficient` times the unknown at `args` to the pending row.
    /// Arguments containing zero contribute nothing (normalized unknowns).
    void term(std::span<const GroupElem> args, std::int64_t coefficient);
    void term(std::initializer_list<GroupElem> args, std::int64_t coefficient);

    /// Closes the pending row as  (terms) = rhs.
    void finish_row(const GroupElem& rhs);

    std::optional<Cochain> solve() const;
    std::optional<std::pair<Cochain, std::vector<Cochain>>> solve_with_kernel() const;

private:
    FinAbGroup base_, coeff_;
    int arity_;
    std::int64_t unknowns_;
    std::map<std::int64_t, std::int64_t> pending_;
    std::vector<std::map<std::int64_t, std::int64_t>> rows_;
    std::vector<GroupElem> rhs_;
};

}  // namespace altext::detail

#endif
