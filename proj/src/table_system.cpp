#include "altext/detail/table_system.hpp"

#include <stdexcept>

#include "altext/zlin.hpp"

namespace altext::detail {

TableSystem::TableSystem(FinAbGroup base, FinAbGroup coeff, int arity)
    : base_(std::move(base)), coeff_(std::move(coeff)), arity_(arity) {
    if (arity_ < 1) throw std::invalid_argument("table system arity must be >= 1");
    unknowns_ = 1;
    for (int i = 0; i < arity_; ++i) unknowns_ *= base_.order() - 1;
}

void TableSystem::term(std::span<const GroupElem> args, std::int64_t coefficient) {
    if (args.size() != static_cast<std::size_t>(arity_))
        throw std::invalid_argument("wrong number of unknown arguments");
    std::int64_t col = 0;
    for (const auto& a : args) {
        const std::int64_t idx = base_.index_of(a);
        if (idx == 0) return;  // normalized unknown vanishes there
        col = col * (base_.order() - 1) + (idx - 1);
    }
    pending_[col] += coefficient;
}

void TableSystem::term(std::initializer_list<GroupElem> args, std::int64_t coefficient) {
    term(std::span<const GroupElem>(args.begin(), args.size()), coefficient);
}

void TableSystem::finish_row(const GroupElem& rhs) {
    coeff_.require(rhs);
    rows_.push_back(std::move(pending_));
    pending_.clear();
    rhs_.push_back(rhs);
}

std::optional<std::pair<Cochain, std::vector<Cochain>>> TableSystem::solve_with_kernel() const {
    const std::int64_t order = base_.order();
    if (unknowns_ == 0) {  // trivial base group: solvable iff every rhs vanishes
        for (const auto& v : rhs_)
            if (!v.is_zero()) return std::nullopt;
        return std::make_pair(Cochain(base_, coeff_, arity_), std::vector<Cochain>{});
    }
    IntMatrix m(rows_.size(), static_cast<std::size_t>(unknowns_));
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [col, coefficient] : rows_[r]) m.at(r, static_cast<std::size_t>(col)) = coefficient;

    // Decodes a dense unknown index back into the all-nonzero argument tuple.
    auto tuple_of = [&](std::int64_t col) {
        std::vector<std::int64_t> digits(arity_);
        for (std::size_t i = digits.size(); i-- > 0;) {
            digits[i] = col % (order - 1) + 1;
            col /= order - 1;
        }
        std::int64_t flat = 0;
        for (std::int64_t d : digits) flat = flat * order + d;
        return flat;
    };

    Cochain particular(base_, coeff_, arity_);
    std::vector<Cochain> kernel;
    for (std::size_t f = 0; f < coeff_.rank(); ++f) {
        const Int modulus(coeff_.orders()[f]);
        CongruenceSystem sys{m, std::vector<Int>(rows_.size()), std::vector<Int>(rows_.size(), modulus),
                              std::vector<Int>(static_cast<std::size_t>(unknowns_), modulus)};
        for (std::size_t r = 0; r < rows_.size(); ++r) sys.rhs[r] = rhs_[r][f];
        auto sol = solve_congruence(sys);
        if (!sol) return std::nullopt;
        for (std::int64_t col = 0; col < unknowns_; ++col) {
            const Residue v = sol->particular[static_cast<std::size_t>(col)].convert_to<Residue>();
            if (v == 0) continue;
            GroupElem cur = particular.value_flat(tuple_of(col));
            std::vector<Residue> coords = cur.coords();
            coords[f] = v;
            particular.set_value_flat(tuple_of(col), GroupElem(std::move(coords)));
        }
        for (const auto& gen : sol->kernel) {
            Cochain k(base_, coeff_, arity_);
            for (std::int64_t col = 0; col < unknowns_; ++col) {
                const Residue v = gen[static_cast<std::size_t>(col)].convert_to<Residue>();
                if (v == 0) continue;
                std::vector<Residue> coords(coeff_.rank(), 0);
                coords[f] = v;
                k.set_value_flat(tuple_of(col), GroupElem(std::move(coords)));
            }
            kernel.push_back(std::move(k));
        }
    }
    return std::make_pair(std::move(particular), std::move(kernel));
}

std::optional<Cochain> TableSystem::solve() const {
    auto full = solve_with_kernel();
    if (!full) return std::nullopt;
    return std::move(full->first);
}

}  // namespace altext::detail
