#include "altext/abelian.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace altext {

bool GroupElem::is_zero() const {
    for (Residue c : coords_)
        if (c != 0) return false;
    return true;
}

std::string GroupElem::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ',';
        os << coords_[i];
    }
    os << ')';
    return os.str();
}

FinAbGroup::FinAbGroup(std::vector<Residue> factor_orders) {
    for (Residue n : factor_orders) {
        if (n < 1) throw std::invalid_argument("group factor order must be >= 1");
        if (n == 1) continue;  // canonical form drops order-1 factors
        orders_.push_back(n);
        order_ *= n;
    }
}

FinAbGroup FinAbGroup::parse(std::string_view text) {
    std::vector<Residue> orders;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a == std::string_view::npos)
            throw std::invalid_argument("empty factor in group literal");
        item = item.substr(a, b - a + 1);
        Residue value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc() || ptr != item.data() + item.size())
            throw std::invalid_argument("bad group literal factor: " + std::string(item));
        orders.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return FinAbGroup(std::move(orders));
}

std::string FinAbGroup::to_string() const {
    if (orders_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (i) os << ',';
        os << orders_[i];
    }
    return os.str();
}

GroupElem FinAbGroup::zero() const {
    return GroupElem(std::vector<Residue>(orders_.size(), 0));
}

bool FinAbGroup::contains(const GroupElem& x) const {
    if (x.size() != orders_.size()) return false;
    for (std::size_t i = 0; i < orders_.size(); ++i)
        if (x[i] < 0 || x[i] >= orders_[i]) return false;
    return true;
}

void FinAbGroup::require(const GroupElem& x) const {
    if (x.size() != orders_.size())
        throw std::invalid_argument("element has " + std::to_string(x.size()) +
                                    " coordinates, group has " + std::to_string(orders_.size()) + " factors");
    for (std::size_t i = 0; i < orders_.size(); ++i)
        if (x[i] < 0 || x[i] >= orders_[i])
            throw std::invalid_argument("coordinate " + std::to_string(i) + " of " + x.to_string() +
                                        " out of range for Z/" + std::to_string(orders_[i]));
}

GroupElem FinAbGroup::add(const GroupElem& x, const GroupElem& y) const {
    require(x);
    require(y);
    std::vector<Residue> c(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i)
        c[i] = (x[i] + y[i]) % orders_[i];
    return GroupElem(std::move(c));
}

GroupElem FinAbGroup::neg(const GroupElem& x) const {
    require(x);
    std::vector<Residue> c(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i)
        c[i] = x[i] == 0 ? 0 : orders_[i] - x[i];
    return GroupElem(std::move(c));
}

GroupElem FinAbGroup::sub(const GroupElem& x, const GroupElem& y) const {
    return add(x, neg(y));
}

GroupElem FinAbGroup::scale(std::int64_t n, const GroupElem& x) const {
    require(x);
    std::vector<Residue> c(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        Residue r = (n % orders_[i]) * (x[i] % orders_[i]) % orders_[i];
        c[i] = r < 0 ? r + orders_[i] : r;
    }
    return GroupElem(std::move(c));
}

std::int64_t FinAbGroup::index_of(const GroupElem& x) const {
    require(x);
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i)
        idx = idx * orders_[i] + x[i];
    return idx;
}

GroupElem FinAbGroup::element_at(std::int64_t index) const {
    if (index < 0 || index >= order_)
        throw std::invalid_argument("element index out of range");
    std::vector<Residue> c(orders_.size());
    for (std::size_t i = orders_.size(); i-- > 0;) {
        c[i] = index % orders_[i];
        index /= orders_[i];
    }
    return GroupElem(std::move(c));
}

std::vector<GroupElem> FinAbGroup::enumerate() const {
    std::vector<GroupElem> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (std::int64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
    return out;
}

GroupTable::GroupTable(const FinAbGroup& g) : n_(g.order()) {
    const auto elems = g.enumerate();
    add_.resize(static_cast<std::size_t>(n_ * n_));
    neg_.resize(static_cast<std::size_t>(n_));
    for (std::int64_t i = 0; i < n_; ++i) {
        neg_[i] = g.index_of(g.neg(elems[i]));
        for (std::int64_t j = 0; j < n_; ++j)
            add_[i * n_ + j] = g.index_of(g.add(elems[i], elems[j]));
    }
}

}  // namespace altext
