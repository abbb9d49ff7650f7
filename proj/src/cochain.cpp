#include "altext/cochain.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "altext/zlin.hpp"

namespace altext {

std::string CheckIssue::to_string() const {
    std::ostringstream os;
    os << condition;
    if (!context.empty()) os << " [" << context << "]";
    os << " at (";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) os << ',';
        os << args[i].to_string();
    }
    os << "), residual " << residual.to_string();
    return os.str();
}

bool CheckReport::failed(const std::string& condition) const {
    for (const auto& issue : issues)
        if (issue.condition == condition) return true;
    return false;
}

void CheckReport::merge(const CheckReport& sub, const std::string& context) {
    for (const auto& cond : sub.conditions)
        if (std::find(conditions.begin(), conditions.end(), cond) == conditions.end())
            conditions.push_back(cond);
    for (CheckIssue issue : sub.issues) {
        if (failed(issue.condition)) continue;  // keep only the first offending tuple
        if (issue.context.empty())
            issue.context = context;
        else
            issue.context = context + ", " + issue.context;
        issues.push_back(std::move(issue));
    }
}

std::string CheckReport::summary() const {
    std::ostringstream os;
    if (ok()) {
        os << "pass (" << conditions.size() << " conditions)";
        return os.str();
    }
    os << issues.size() << " condition(s) violated:";
    for (const auto& issue : issues) os << "\n  " << issue.to_string();
    return os.str();
}

namespace {

std::int64_t power(std::int64_t base, int exp) {
    std::int64_t out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

void decode_tuple(std::int64_t flat, std::int64_t order, std::span<std::int64_t> out) {
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = flat % order;
        flat /= order;
    }
}

std::int64_t encode_tuple(std::span<const std::int64_t> digits, std::int64_t order) {
    std::int64_t flat = 0;
    for (std::int64_t d : digits) flat = flat * order + d;
    return flat;
}

// Dense index over tuples with all digits nonzero (digits shifted down by 1).
std::int64_t encode_free(std::span<const std::int64_t> digits, std::int64_t order) {
    std::int64_t flat = 0;
    for (std::int64_t d : digits) flat = flat * (order - 1) + (d - 1);
    return flat;
}

struct Accumulator {
    explicit Accumulator(const FinAbGroup& a) : coeff(&a), acc(a.rank(), 0) {}

    void add(const Cochain& c, std::int64_t flat, std::int64_t sign) {
        for (std::size_t f = 0; f < acc.size(); ++f) acc[f] += sign * c.raw(flat, f);
    }

    void add_elem(const GroupElem& e, std::int64_t sign) {
        for (std::size_t f = 0; f < acc.size(); ++f) acc[f] += sign * e[f];
    }

    GroupElem finish() const {
        std::vector<Residue> out(acc.size());
        for (std::size_t f = 0; f < acc.size(); ++f) {
            Residue m = coeff->orders()[f];
            Residue r = acc[f] % m;
            out[f] = r < 0 ? r + m : r;
        }
        return GroupElem(std::move(out));
    }

    const FinAbGroup* coeff;
    std::vector<std::int64_t> acc;
};

// All interleavings of the blocks [0,p) and [p,p+q) preserving internal
// order, with the permutation sign of each arrangement.
std::vector<std::pair<std::vector<int>, int>> shuffle_arrangements(int p, int q) {
    std::vector<std::pair<std::vector<int>, int>> out;
    const int n = p + q;
    // iterate the position subsets of the second block in lexicographic order
    std::vector<int> where(q);
    for (int i = 0; i < q; ++i) where[i] = i;
    for (;;) {
        std::vector<int> arr(n, -1);
        for (int i = 0; i < q; ++i) arr[where[i]] = p + i;
        int next = 0;
        for (int j = 0; j < n; ++j)
            if (arr[j] < 0) arr[j] = next++;
        int inversions = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (arr[a] > arr[b]) ++inversions;
        out.emplace_back(arr, inversions % 2 == 0 ? 1 : -1);
        int i = q - 1;
        while (i >= 0 && where[i] == n - q + i) --i;
        if (i < 0) break;
        ++where[i];
        for (int j = i + 1; j < q; ++j) where[j] = where[j - 1] + 1;
    }
    return out;
}

}  // namespace

Cochain::Cochain(FinAbGroup base, FinAbGroup coeff, int arity)
    : base_(std::move(base)), coeff_(std::move(coeff)), arity_(arity) {
    if (arity_ < 1) throw std::invalid_argument("cochain arity must be >= 1");
    tuples_ = power(base_.order(), arity_);
    table_.assign(tuples_ * static_cast<std::int64_t>(coeff_.rank()), 0);
}

std::int64_t Cochain::flat_index(std::span<const std::int64_t> arg_indices) const {
    if (arg_indices.size() != static_cast<std::size_t>(arity_))
        throw std::invalid_argument("wrong number of cochain arguments");
    return encode_tuple(arg_indices, base_.order());
}

GroupElem Cochain::value_at(std::span<const GroupElem> args) const {
    if (args.size() != static_cast<std::size_t>(arity_))
        throw std::invalid_argument("wrong number of cochain arguments");
    std::int64_t flat = 0;
    for (const auto& a : args) flat = flat * base_.order() + base_.index_of(a);
    return value_flat(flat);
}

GroupElem Cochain::value_at(std::initializer_list<GroupElem> args) const {
    return value_at(std::span<const GroupElem>(args.begin(), args.size()));
}

GroupElem Cochain::value_flat(std::int64_t flat) const {
    std::vector<Residue> coords(coeff_.rank());
    for (std::size_t f = 0; f < coords.size(); ++f) coords[f] = raw(flat, f);
    return GroupElem(std::move(coords));
}

void Cochain::set_value_flat(std::int64_t flat, const GroupElem& value) {
    coeff_.require(value);
    if (!value.is_zero()) {
        std::vector<std::int64_t> digits(arity_);
        decode_tuple(flat, base_.order(), digits);
        for (std::int64_t d : digits)
            if (d == 0) throw std::invalid_argument("normalization violated: nonzero value on a tuple containing 0");
    }
    for (std::size_t f = 0; f < coeff_.rank(); ++f)
        table_[flat * static_cast<std::int64_t>(coeff_.rank()) + static_cast<std::int64_t>(f)] = value[f];
}

void Cochain::set_value(std::span<const GroupElem> args, const GroupElem& value) {
    if (args.size() != static_cast<std::size_t>(arity_))
        throw std::invalid_argument("wrong number of cochain arguments");
    std::int64_t flat = 0;
    for (const auto& a : args) flat = flat * base_.order() + base_.index_of(a);
    set_value_flat(flat, value);
}

void Cochain::set_value(std::initializer_list<GroupElem> args, const GroupElem& value) {
    set_value(std::span<const GroupElem>(args.begin(), args.size()), value);
}

bool Cochain::is_zero() const {
    return std::all_of(table_.begin(), table_.end(), [](Residue r) { return r == 0; });
}

bool Cochain::same_shape(const Cochain& other) const {
    return base_ == other.base_ && coeff_ == other.coeff_ && arity_ == other.arity_;
}

Cochain Cochain::operator+(const Cochain& rhs) const {
    if (!same_shape(rhs)) throw std::invalid_argument("cochain shape mismatch");
    Cochain out(base_, coeff_, arity_);
    for (std::int64_t t = 0; t < tuples_; ++t)
        for (std::size_t f = 0; f < coeff_.rank(); ++f) {
            Residue m = coeff_.orders()[f];
            out.table_[t * coeff_.rank() + f] = (raw(t, f) + rhs.raw(t, f)) % m;
        }
    return out;
}

Cochain Cochain::operator-(const Cochain& rhs) const {
    return *this + (-rhs);
}

Cochain Cochain::operator-() const {
    Cochain out(base_, coeff_, arity_);
    for (std::int64_t t = 0; t < tuples_; ++t)
        for (std::size_t f = 0; f < coeff_.rank(); ++f) {
            Residue m = coeff_.orders()[f];
            out.table_[t * coeff_.rank() + f] = (m - raw(t, f)) % m;
        }
    return out;
}

std::vector<Residue> flat_table(const Cochain& c) {
    std::vector<Residue> t(c.tuple_count() * static_cast<std::int64_t>(c.coeff().rank()));
    for (std::int64_t flat = 0; flat < c.tuple_count(); ++flat)
        for (std::size_t f = 0; f < c.coeff().rank(); ++f)
            t[flat * static_cast<std::int64_t>(c.coeff().rank()) + static_cast<std::int64_t>(f)] = c.raw(flat, f);
    return t;
}

Cochain coboundary(const Cochain& c) {
    const int n = c.arity();
    const std::int64_t order = c.base().order();
    const GroupTable gt(c.base());
    Cochain out(c.base(), c.coeff(), n + 1);

    std::vector<std::int64_t> t(n + 1), sub(n);
    const std::int64_t total = power(order, n + 1);
    for (std::int64_t flat = 0; flat < total; ++flat) {
        decode_tuple(flat, order, t);
        Accumulator acc(c.coeff());
        std::copy(t.begin() + 1, t.end(), sub.begin());
        acc.add(c, encode_tuple(sub, order), 1);
        std::int64_t sign = -1;
        for (int i = 0; i < n; ++i) {
            std::size_t k = 0;
            for (int j = 0; j <= n; ++j) {
                if (j == i + 1) continue;
                sub[k++] = j == i ? gt.add(t[i], t[i + 1]) : t[j];
            }
            acc.add(c, encode_tuple(sub, order), sign);
            sign = -sign;
        }
        std::copy(t.begin(), t.end() - 1, sub.begin());
        acc.add(c, encode_tuple(sub, order), sign);
        out.set_value_flat(flat, acc.finish());
    }
    return out;
}

CheckReport is_cocycle(const Cochain& c) {
    CheckReport report;
    report.conditions.push_back("cocycle");
    const Cochain d = coboundary(c);
    const auto elems = c.base().enumerate();
    const std::int64_t order = c.base().order();
    std::vector<std::int64_t> t(c.arity() + 1);
    for (std::int64_t flat = 0; flat < d.tuple_count(); ++flat) {
        GroupElem v = d.value_flat(flat);
        if (v.is_zero()) continue;
        decode_tuple(flat, order, t);
        CheckIssue issue;
        issue.condition = "cocycle";
        for (std::int64_t idx : t) issue.args.push_back(elems[idx]);
        issue.residual = v;
        report.issues.push_back(std::move(issue));
        break;
    }
    return report;
}

Cochain partial_shuffle_sym(const Cochain& f, int first, int p, int q, int sign) {
    const int n = f.arity();
    if (p < 1 || q < 1 || first < 0 || first + p + q > n)
        throw std::invalid_argument("invalid shuffle window");
    if (sign != 1 && sign != -1) throw std::invalid_argument("shuffle sign must be +-1");

    const auto arrangements = shuffle_arrangements(p, q);
    const std::int64_t order = f.base().order();
    Cochain out(f.base(), f.coeff(), n);

    std::vector<std::int64_t> t(n), arg(n);
    for (std::int64_t flat = 0; flat < f.tuple_count(); ++flat) {
        decode_tuple(flat, order, t);
        Accumulator acc(f.coeff());
        for (const auto& [arr, eps] : arrangements) {
            arg = t;
            for (int j = 0; j < p + q; ++j) arg[first + j] = t[first + arr[j]];
            acc.add(f, encode_tuple(arg, order), sign * eps);
        }
        out.set_value_flat(flat, acc.finish());
    }
    return out;
}

Cochain shuffle_sym(const Cochain& f, int p, int sign) {
    if (p < 1 || p >= f.arity()) throw std::invalid_argument("shuffle block size out of range");
    return partial_shuffle_sym(f, 0, p, f.arity() - p, sign);
}

Cochain fix_slots(const Cochain& c, const std::vector<std::pair<int, GroupElem>>& fixed) {
    const int n = c.arity();
    std::vector<std::int64_t> pin(n, -1);
    int remaining = n;
    for (const auto& [slot, value] : fixed) {
        if (slot < 0 || slot >= n || pin[slot] >= 0) throw std::invalid_argument("bad slot to fix");
        pin[slot] = c.base().index_of(value);
        --remaining;
    }
    if (remaining < 1) throw std::invalid_argument("cannot fix every slot of a cochain");

    const std::int64_t order = c.base().order();
    Cochain out(c.base(), c.coeff(), remaining);
    std::vector<std::int64_t> t(remaining), full(n);
    for (std::int64_t flat = 0; flat < out.tuple_count(); ++flat) {
        decode_tuple(flat, order, t);
        std::size_t k = 0;
        for (int j = 0; j < n; ++j) full[j] = pin[j] >= 0 ? pin[j] : t[k++];
        out.set_value_flat(flat, c.value_flat(encode_tuple(full, order)));
    }
    return out;
}

namespace {

// Integer matrix of the bar differential from normalized n-cochains to
// normalized (n+1)-cochains, both indexed by their all-nonzero tuples.
IntMatrix normalized_delta_matrix(const FinAbGroup& B, int arity_in) {
    const std::int64_t order = B.order();
    const std::int64_t free = order - 1;
    if (free == 0) return IntMatrix(0, 0);
    const GroupTable gt(B);
    const std::int64_t rows = power(free, arity_in + 1);
    const std::int64_t cols = power(free, arity_in);
    IntMatrix m(rows, cols);

    std::vector<std::int64_t> t(arity_in + 1), sub(arity_in);
    for (std::int64_t r = 0; r < rows; ++r) {
        std::int64_t rem = r;
        for (std::size_t i = t.size(); i-- > 0;) {
            t[i] = rem % free + 1;
            rem /= free;
        }
        auto touch = [&](std::int64_t sign) {
            for (std::int64_t d : sub)
                if (d == 0) return;  // normalized: value is 0 there
            m.at(r, encode_free(sub, order)) += sign;
        };
        std::copy(t.begin() + 1, t.end(), sub.begin());
        touch(1);
        std::int64_t sign = -1;
        for (int i = 0; i < arity_in; ++i) {
            std::size_t k = 0;
            for (int j = 0; j <= arity_in; ++j) {
                if (j == i + 1) continue;
                sub[k++] = j == i ? gt.add(t[i], t[i + 1]) : t[j];
            }
            touch(sign);
            sign = -sign;
        }
        std::copy(t.begin(), t.end() - 1, sub.begin());
        touch(sign);
    }
    return m;
}

std::vector<std::int64_t> merge_invariant_factors(std::vector<std::int64_t> factors) {
    std::map<std::int64_t, std::vector<int>> prime_exponents;
    for (std::int64_t d : factors) {
        for (std::int64_t p = 2; p * p <= d; ++p) {
            int e = 0;
            while (d % p == 0) {
                d /= p;
                ++e;
            }
            if (e) prime_exponents[p].push_back(e);
        }
        if (d > 1) prime_exponents[d].push_back(1);
    }
    std::size_t chain = 0;
    for (auto& [p, es] : prime_exponents) {
        std::sort(es.begin(), es.end(), std::greater<>());
        chain = std::max(chain, es.size());
    }
    std::vector<std::int64_t> out(chain, 1);
    for (auto& [p, es] : prime_exponents)
        for (std::size_t i = 0; i < es.size(); ++i) out[i] *= power(p, es[i]);
    std::reverse(out.begin(), out.end());  // ascending divisibility
    return out;
}

std::vector<std::int64_t> cohomology_snf(const FinAbGroup& B, const FinAbGroup& A, int degree,
                                         const CohomologyOptions& opts) {
    const std::int64_t free = B.order() - 1;
    if (free == 0 || A.rank() == 0) return {};
    const std::int64_t rows = power(free, degree + 1);
    if (rows > opts.snf_row_cap)
        throw std::invalid_argument("cocycle system exceeds the configured row cap");

    const IntMatrix delta_n = normalized_delta_matrix(B, degree);
    const IntMatrix delta_prev =
        degree >= 2 ? normalized_delta_matrix(B, degree - 1) : IntMatrix(0, 0);
    const std::int64_t n_cols = delta_n.cols();

    std::vector<std::int64_t> collected;
    for (Residue m_res : A.orders()) {
        const Int m(m_res);
        const std::size_t r = delta_n.rows(), c = delta_n.cols();
        CongruenceSystem cocycle{delta_n, std::vector<Int>(r, 0), std::vector<Int>(r, m),
                                 std::vector<Int>(c, m)};
        auto kernel = solve_congruence(cocycle);
        if (!kernel) throw std::logic_error("homogeneous system reported unsolvable");
        const auto& gens = kernel->kernel;
        if (gens.empty()) continue;  // no nonzero cocycles for this factor

        IntMatrix k(n_cols, gens.size());
        for (std::size_t j = 0; j < gens.size(); ++j)
            for (std::int64_t i = 0; i < n_cols; ++i) k.at(i, j) = gens[j][i];

        CongruenceSystem syz{k, std::vector<Int>(n_cols, 0), std::vector<Int>(n_cols, m),
                              std::vector<Int>(gens.size(), m)};
        auto syzygies = solve_congruence(syz);
        if (!syzygies) throw std::logic_error("syzygy system reported unsolvable");

        std::vector<std::vector<Int>> relation_cols = syzygies->kernel;
        if (degree >= 2) {
            for (std::size_t j = 0; j < delta_prev.cols(); ++j) {
                std::vector<Int> b(n_cols);
                for (std::int64_t i = 0; i < n_cols; ++i) b[i] = delta_prev.at(i, j);
                CongruenceSystem coord{k, b, std::vector<Int>(n_cols, m),
                                        std::vector<Int>(gens.size(), m)};
                auto sol = solve_congruence(coord);
                if (!sol) throw std::logic_error("coboundary is not in the cocycle span");
                relation_cols.push_back(sol->particular);
            }
        }

        IntMatrix relations(gens.size(), relation_cols.size());
        for (std::size_t j = 0; j < relation_cols.size(); ++j)
            for (std::size_t i = 0; i < gens.size(); ++i) relations.at(i, j) = relation_cols[j][i];
        for (const Int& d : quotient_invariants(relations, std::vector<Int>(gens.size(), m)))
            collected.push_back(static_cast<std::int64_t>(d));
    }
    return merge_invariant_factors(std::move(collected));
}

using Table = std::vector<Residue>;  // full flat cochain table

Table add_tables(const Table& a, const Table& b, const FinAbGroup& A) {
    Table out(a.size());
    const std::size_t rank = A.rank();
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % A.orders()[i % rank];
    return out;
}

std::vector<std::int64_t> cohomology_enumeration(const FinAbGroup& B, const FinAbGroup& A, int degree,
                                                 const CohomologyOptions& opts) {
    const std::int64_t free = B.order() - 1;
    if (free == 0 || A.rank() == 0) return {};

    const std::int64_t a_order = A.order();
    auto count_tables = [&](int arity) -> std::int64_t {
        const std::int64_t spots = power(free, arity);
        std::int64_t total = 1;
        for (std::int64_t i = 0; i < spots; ++i) {
            if (total > opts.enumeration_bound / a_order + 1) return -1;
            total *= a_order;
        }
        return total;
    };
    const std::int64_t n_tables = count_tables(degree);
    const std::int64_t prev_tables = degree >= 2 ? count_tables(degree - 1) : 1;
    if (n_tables < 0 || prev_tables < 0 || n_tables > opts.enumeration_bound ||
        prev_tables > opts.enumeration_bound)
        throw std::invalid_argument("enumeration bound exceeded");

    // Enumerate all normalized cochains of a given arity as Cochain values.
    auto enumerate_cochains = [&](int arity, auto&& visit) {
        const std::int64_t spots = power(free, arity);
        std::vector<std::int64_t> choice(spots, 0);
        const std::int64_t order = B.order();
        std::vector<std::int64_t> digits(arity);
        for (;;) {
            Cochain c(B, A, arity);
            for (std::int64_t s = 0; s < spots; ++s) {
                std::int64_t rem = s;
                for (std::size_t i = digits.size(); i-- > 0;) {
                    digits[i] = rem % free + 1;
                    rem /= free;
                }
                c.set_value_flat(encode_tuple(digits, order), A.element_at(choice[s]));
            }
            visit(c);
            std::int64_t i = spots - 1;
            while (i >= 0 && choice[i] == a_order - 1) choice[i--] = 0;
            if (i < 0) break;
            ++choice[i];
        }
    };

    std::vector<Table> cocycles;
    enumerate_cochains(degree, [&](const Cochain& c) {
        if (is_cocycle(c).ok()) cocycles.push_back(flat_table(c));
    });

    std::set<Table> boundary_set;
    if (degree >= 2)
        enumerate_cochains(degree - 1, [&](const Cochain& c) { boundary_set.insert(flat_table(coboundary(c))); });
    else
        boundary_set.insert(Table(cocycles.empty() ? 0 : cocycles.front().size(), 0));

    // Quotient structure by iterated extraction of a maximal-order element.
    std::vector<Table> modded(boundary_set.begin(), boundary_set.end());
    auto rep_of = [&](const Table& z) {
        Table best = add_tables(z, modded.front(), A);
        for (const auto& s : modded) {
            Table cand = add_tables(z, s, A);
            if (cand < best) best = cand;
        }
        return best;
    };

    std::vector<std::int64_t> factors;
    for (;;) {
        std::set<Table> reps;
        for (const auto& z : cocycles) reps.insert(rep_of(z));
        if (reps.size() <= 1) break;
        const Table zero(cocycles.front().size(), 0);
        std::int64_t best_order = 1;
        Table best;
        for (const auto& h : reps) {
            Table cur = h;
            std::int64_t ord = 1;
            while (rep_of(cur) != zero) {
                cur = add_tables(cur, h, A);
                ++ord;
            }
            if (ord > best_order) {
                best_order = ord;
                best = h;
            }
        }
        factors.push_back(best_order);
        std::set<Table> closure(modded.begin(), modded.end());
        Table step(best.size(), 0);
        for (std::int64_t t = 1; t < best_order; ++t) {
            step = add_tables(step, best, A);
            for (const auto& s : modded) closure.insert(add_tables(s, step, A));
        }
        modded.assign(closure.begin(), closure.end());
    }
    std::reverse(factors.begin(), factors.end());  // ascending divisibility
    return factors;
}

}  // namespace

std::vector<std::int64_t> cohomology(const FinAbGroup& B, const FinAbGroup& A, int degree,
                                     CohomologyMethod method, const CohomologyOptions& opts) {
    if (degree < 1) throw std::invalid_argument("cohomology degree must be >= 1");
    return method == CohomologyMethod::snf ? cohomology_snf(B, A, degree, opts)
                                           : cohomology_enumeration(B, A, degree, opts);
}

Cochain random_cochain(const FinAbGroup& B, const FinAbGroup& A, int arity, std::uint64_t seed,
                       RandomClass cls) {
    if (arity < 1) throw std::invalid_argument("cochain arity must be >= 1");
    std::mt19937_64 rng(seed);
    const std::int64_t order = B.order();
    const std::int64_t free = order - 1;

    if (cls == RandomClass::coboundary) {
        if (arity == 1) return Cochain(B, A, 1);  // differentials of 0-cochains vanish
        Cochain prev(B, A, arity - 1);
        const std::int64_t spots = power(free, arity - 1);
        std::vector<std::int64_t> digits(arity - 1);
        for (std::int64_t s = 0; s < spots; ++s) {
            std::int64_t rem = s;
            for (std::size_t i = digits.size(); i-- > 0;) {
                digits[i] = rem % free + 1;
                rem /= free;
            }
            prev.set_value_flat(encode_tuple(digits, order),
                                A.element_at(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(A.order()))));
        }
        return coboundary(prev);
    }

    // Uniform sample from the group of normalized cocycles: independent
    // uniform multiples of each kernel generator convolve to the uniform
    // distribution on the subgroup they generate.
    Cochain out(B, A, arity);
    if (free == 0 || A.rank() == 0) return out;
    const IntMatrix delta = normalized_delta_matrix(B, arity);
    const std::int64_t spots = delta.cols();
    std::vector<std::int64_t> digits(arity);
    std::vector<std::vector<std::int64_t>> columns(A.rank(), std::vector<std::int64_t>(spots, 0));
    for (std::size_t f = 0; f < A.rank(); ++f) {
        const Int m(A.orders()[f]);
        CongruenceSystem sys{delta, std::vector<Int>(delta.rows(), 0),
                              std::vector<Int>(delta.rows(), m), std::vector<Int>(spots, m)};
        auto sol = solve_congruence(sys);
        if (!sol) throw std::logic_error("homogeneous system reported unsolvable");
        for (const auto& gen : sol->kernel) {
            Int content = 0;
            for (const Int& e : gen) content = gcd(content, e);
            const Int ord = m / gcd(m, content);
            const std::uint64_t bound = ord.convert_to<std::uint64_t>();
            const std::int64_t alpha = static_cast<std::int64_t>(rng() % bound);
            for (std::int64_t i = 0; i < spots; ++i) {
                Int v = (Int(columns[f][i]) + Int(alpha) * gen[i]) % m;
                columns[f][i] = v.convert_to<std::int64_t>();
            }
        }
    }
    for (std::int64_t s = 0; s < spots; ++s) {
        std::int64_t rem = s;
        for (std::size_t i = digits.size(); i-- > 0;) {
            digits[i] = rem % free + 1;
            rem /= free;
        }
        std::vector<Residue> coords(A.rank());
        for (std::size_t f = 0; f < A.rank(); ++f) coords[f] = columns[f][s];
        out.set_value_flat(encode_tuple(digits, order), GroupElem(std::move(coords)));
    }
    return out;
}

}  // namespace altext
