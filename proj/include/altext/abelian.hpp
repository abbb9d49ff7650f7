#ifndef ALTEXT_ABELIAN_HPP
#define ALTEXT_ABELIAN_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace altext {

using Residue = std::int64_t;

/// Element of a finite abelian group, stored as one residue per cyclic factor.
class GroupElem {
public:
    GroupElem() = default;
    explicit GroupElem(std::vector<Residue> coords) : coords_(std::move(coords)) {}

    const std::vector<Residue>& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    Residue operator[](std::size_t i) const { return coords_[i]; }

    bool is_zero() const;
    std::string to_string() const;

    bool operator==(const GroupElem&) const = default;

private:
    std::vector<Residue> coords_;
};

/// A finite abelian group presented as a product of cyclic factors
/// Z/n1 x ... x Z/nk.  Factors of order 1 are dropped on construction
/// (the trivial group keeps an empty factor list), but the given factor
/// ordering is otherwise preserved: Z/2 x Z/3 and Z/3 x Z/2 are distinct
/// presentations and address cochain tables differently.
class FinAbGroup {
public:
    explicit FinAbGroup(std::vector<Residue> factor_orders);

    static FinAbGroup trivial() { return FinAbGroup({}); }

    /// Parses the group literal syntax "n1,n2,...,nk"; the trivial group is "1".
    static FinAbGroup parse(std::string_view text);
    std::string to_string() const;

    const std::vector<Residue>& orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }
    std::int64_t order() const { return order_; }

    GroupElem zero() const;
    bool contains(const GroupElem& x) const;
    /// Throws std::invalid_argument when x is not a well-formed element of
    /// this group (wrong length or residue out of range).
    void require(const GroupElem& x) const;

    GroupElem add(const GroupElem& x, const GroupElem& y) const;
    GroupElem neg(const GroupElem& x) const;
    GroupElem sub(const GroupElem& x, const GroupElem& y) const;
    GroupElem scale(std::int64_t n, const GroupElem& x) const;

    /// Bijection onto [0, |G|): lexicographic mixed-radix position of x, the
    /// first factor being the most significant digit.
    std::int64_t index_of(const GroupElem& x) const;
    GroupElem element_at(std::int64_t index) const;

    /// All |G| elements in index order, starting with zero.
    std::vector<GroupElem> enumerate() const;

    bool operator==(const FinAbGroup&) const = default;

private:
    std::vector<Residue> orders_;
    std::int64_t order_ = 1;
};

/// Precomputed index-level arithmetic for one group; used by the table-heavy
/// cochain loops where element indices are cheaper than coordinate vectors.
class GroupTable {
public:
    explicit GroupTable(const FinAbGroup& g);

    std::int64_t size() const { return n_; }
    std::int64_t add(std::int64_t i, std::int64_t j) const { return add_[i * n_ + j]; }
    std::int64_t neg(std::int64_t i) const { return neg_[i]; }

private:
    std::int64_t n_;
    std::vector<std::int64_t> add_;
    std::vector<std::int64_t> neg_;
};

}  // namespace altext

#endif
