#include "altext/zlin.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace altext {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Int& b = rhs.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    return out;
}

namespace {

// In-place diagonalization working state.  Row operations are mirrored on
// `u` and `rhs` when present, column operations on `v`.
struct Eliminator {
    IntMatrix& d;
    IntMatrix* u = nullptr;
    IntMatrix* v = nullptr;
    std::vector<Int>* rhs = nullptr;

    std::size_t rows() const { return d.rows(); }
    std::size_t cols() const { return d.cols(); }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
        if (u)
            for (std::size_t j = 0; j < u->cols(); ++j) std::swap(u->at(a, j), u->at(b, j));
        if (rhs) std::swap((*rhs)[a], (*rhs)[b]);
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
        if (v)
            for (std::size_t i = 0; i < v->rows(); ++i) std::swap(v->at(i, a), v->at(i, b));
    }

    // row[a] -= q * row[b]
    void row_axpy(std::size_t a, std::size_t b, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < cols(); ++j)
            if (d.at(b, j) != 0) d.at(a, j) -= q * d.at(b, j);
        if (u)
            for (std::size_t j = 0; j < u->cols(); ++j)
                if (u->at(b, j) != 0) u->at(a, j) -= q * u->at(b, j);
        if (rhs) (*rhs)[a] -= q * (*rhs)[b];
    }

    // col[a] -= q * col[b]
    void col_axpy(std::size_t a, std::size_t b, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < rows(); ++i)
            if (d.at(i, b) != 0) d.at(i, a) -= q * d.at(i, b);
        if (v)
            for (std::size_t i = 0; i < v->rows(); ++i)
                if (v->at(i, b) != 0) v->at(i, a) -= q * v->at(i, b);
    }

    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < cols(); ++j) d.at(a, j) = -d.at(a, j);
        if (u)
            for (std::size_t j = 0; j < u->cols(); ++j) u->at(a, j) = -u->at(a, j);
        if (rhs) (*rhs)[a] = -(*rhs)[a];
    }

    // Deterministic pivot: smallest nonzero |entry| in the trailing block,
    // ties resolved by lowest row index, then lowest column index.
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best;
        for (std::size_t i = t; i < rows(); ++i)
            for (std::size_t j = t; j < cols(); ++j) {
                const Int& e = d.at(i, j);
                if (e == 0) continue;
                Int a = abs(e);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    std::size_t run() {
        std::size_t t = 0;
        const std::size_t limit = std::min(rows(), cols());
        while (t < limit) {
            std::size_t pi = 0, pj = 0;
            if (!find_pivot(t, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            for (;;) {
                bool dirty = false;
                for (std::size_t i = t + 1; i < rows(); ++i) {
                    if (d.at(i, t) == 0) continue;
                    Int q = d.at(i, t) / d.at(t, t);
                    row_axpy(i, t, q);
                    if (d.at(i, t) != 0) {  // remainder is a strictly smaller pivot
                        swap_rows(t, i);
                        dirty = true;
                    }
                }
                if (dirty) continue;
                for (std::size_t j = t + 1; j < cols(); ++j) {
                    if (d.at(t, j) == 0) continue;
                    Int q = d.at(t, j) / d.at(t, t);
                    col_axpy(j, t, q);
                    if (d.at(t, j) != 0) {
                        swap_cols(t, j);
                        dirty = true;
                    }
                }
                if (dirty) continue;
                // Pull in any trailing entry the pivot does not divide yet, so
                // that the diagonal ends up as a divisibility chain.
                bool pulled = false;
                for (std::size_t i = t + 1; i < rows() && !pulled; ++i)
                    for (std::size_t j = t + 1; j < cols() && !pulled; ++j)
                        if (d.at(i, j) % d.at(t, t) != 0) {
                            row_axpy(t, i, Int(-1));  // row_t += row_i
                            pulled = true;
                        }
                if (!pulled) break;
            }
            if (d.at(t, t) < 0) negate_row(t);
            ++t;
        }
        return t;  // rank
    }
};

Int positive_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// g = gcd(a, m) and x with a*x == g (mod m), for m > 0.
Int modular_gcd_inverse(const Int& a, const Int& m, Int& g) {
    Int old_r = positive_mod(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = std::exchange(r, tmp);
        tmp = old_s - q * s;
        old_s = std::exchange(s, tmp);
    }
    g = old_r;
    return positive_mod(old_s, m);
}

struct LinearSolveResult {
    std::vector<Int> x;                    // integer solution of the prepared system
    std::vector<std::vector<Int>> kernel;  // integer kernel generators (columns of V)
};

// Solves A x = b over Z, where row i is read mod `uniform_modulus` when that
// is nonzero (all rows share it) and exactly otherwise.  The caller prepares
// the matrix so that this covers both solve paths below.
std::optional<LinearSolveResult> solve_prepared(IntMatrix a, std::vector<Int> b, const Int& uniform_modulus) {
    const std::size_t r = a.rows(), c = a.cols();
    IntMatrix v = IntMatrix::identity(c);
    Eliminator elim{a, nullptr, &v, &b};
    const std::size_t rank = elim.run();

    std::vector<Int> z(c, 0);
    const Int& m = uniform_modulus;
    for (std::size_t i = 0; i < rank; ++i) {
        const Int& di = a.at(i, i);
        if (m != 0) {
            Int g;
            Int inv = modular_gcd_inverse(di, m, g);
            if (b[i] % g != 0) return std::nullopt;
            // di * z == b (mod m)  <=>  z == (b/g) * inv(di/g) (mod m/g)
            Int mg = m / g;
            Int g2;
            Int inv2 = modular_gcd_inverse(di / g, mg, g2);
            z[i] = positive_mod((b[i] / g) * inv2, mg);
        } else {
            if (b[i] % di != 0) return std::nullopt;
            z[i] = b[i] / di;
        }
    }
    for (std::size_t i = rank; i < r; ++i) {
        if (m != 0) {
            if (b[i] % m != 0) return std::nullopt;
        } else if (b[i] != 0) {
            return std::nullopt;
        }
    }

    LinearSolveResult out;
    out.x.assign(c, 0);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t k = 0; k < c; ++k)
            if (z[k] != 0 && v.at(i, k) != 0) out.x[i] += v.at(i, k) * z[k];

    auto v_column = [&](std::size_t k, const Int& scale) {
        std::vector<Int> g(c, 0);
        for (std::size_t i = 0; i < c; ++i) g[i] = v.at(i, k) * scale;
        return g;
    };
    if (m != 0) {
        for (std::size_t i = 0; i < rank; ++i) {
            Int g = gcd(a.at(i, i), m);
            if (g > 1) out.kernel.push_back(v_column(i, m / g));
        }
    }
    for (std::size_t k = rank; k < c; ++k) out.kernel.push_back(v_column(k, Int(1)));
    return out;
}

std::vector<Int> reduce_mod(const std::vector<Int>& x, const std::vector<Int>& moduli) {
    std::vector<Int> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = positive_mod(x[i], moduli[i]);
    return out;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    SmithResult res{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    Eliminator elim{res.d, &res.u, &res.v, nullptr};
    elim.run();
    return res;
}

std::optional<CongruenceSolution> solve_congruence(const CongruenceSystem& s) {
    const std::size_t r = s.matrix.rows(), c = s.matrix.cols();
    if (s.rhs.size() != r || s.row_moduli.size() != r || s.col_moduli.size() != c)
        throw std::invalid_argument("congruence system dimension mismatch");
    for (const Int& m : s.row_moduli)
        if (m < 0) throw std::invalid_argument("row modulus must be >= 0");
    for (const Int& m : s.col_moduli)
        if (m < 1) throw std::invalid_argument("column modulus must be >= 1");

    bool uniform = r > 0 && c > 0;
    const Int* m0 = r ? &s.row_moduli[0] : nullptr;
    for (const Int& m : s.row_moduli)
        if (m != *m0 || m == 0) uniform = false;
    if (uniform)
        for (const Int& m : s.col_moduli)
            if (m != *m0) uniform = false;

    if (uniform) {
        const Int& m = *m0;
        // Reduce and deduplicate rows; identical congruences are frequent in
        // the cochain-derived systems and cost SNF time.
        std::map<std::vector<Int>, std::size_t> seen;
        std::vector<std::vector<Int>> rows;
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<Int> row(c + 1);
            bool all_zero = true;
            for (std::size_t j = 0; j < c; ++j) {
                row[j] = positive_mod(s.matrix.at(i, j), m);
                if (row[j] != 0) all_zero = false;
            }
            row[c] = positive_mod(s.rhs[i], m);
            if (all_zero) {
                if (row[c] != 0) return std::nullopt;
                continue;
            }
            if (seen.emplace(row, i).second) rows.push_back(std::move(row));
        }
        IntMatrix a(rows.size(), c);
        std::vector<Int> b(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < c; ++j) a.at(i, j) = rows[i][j];
            b[i] = rows[i][c];
        }
        auto lin = solve_prepared(std::move(a), std::move(b), m);
        if (!lin) return std::nullopt;
        CongruenceSolution out;
        out.particular = reduce_mod(lin->x, s.col_moduli);
        for (auto& g : lin->kernel) {
            auto red = reduce_mod(g, s.col_moduli);
            bool zero = std::all_of(red.begin(), red.end(), [](const Int& e) { return e == 0; });
            if (!zero) out.kernel.push_back(std::move(red));
        }
        return out;
    }

    // General path: make the congruences exact by adjoining slack unknowns.
    // Columns M * diag(col_moduli) absorb changes of integer lift of x, and a
    // column m_i * e_i per nonzero row modulus absorbs that congruence.
    std::vector<std::size_t> slack_rows;
    for (std::size_t i = 0; i < r; ++i)
        if (s.row_moduli[i] != 0) slack_rows.push_back(i);
    const std::size_t cc = 2 * c + slack_rows.size();
    IntMatrix a(r, cc);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            a.at(i, j) = s.matrix.at(i, j);
            a.at(i, c + j) = s.matrix.at(i, j) * s.col_moduli[j];
        }
    for (std::size_t k = 0; k < slack_rows.size(); ++k)
        a.at(slack_rows[k], 2 * c + k) = s.row_moduli[slack_rows[k]];

    auto lin = solve_prepared(std::move(a), s.rhs, Int(0));
    if (!lin) return std::nullopt;
    CongruenceSolution out;
    std::vector<Int> x(lin->x.begin(), lin->x.begin() + c);
    out.particular = reduce_mod(x, s.col_moduli);
    for (auto& g : lin->kernel) {
        std::vector<Int> proj(g.begin(), g.begin() + c);
        auto red = reduce_mod(proj, s.col_moduli);
        bool zero = std::all_of(red.begin(), red.end(), [](const Int& e) { return e == 0; });
        if (!zero) out.kernel.push_back(std::move(red));
    }
    return out;
}

std::vector<Int> quotient_invariants(const IntMatrix& relations, const std::vector<Int>& ambient_moduli) {
    const std::size_t r = ambient_moduli.size();
    if (relations.rows() != r && relations.cols() != 0)
        throw std::invalid_argument("relations rows must match ambient rank");
    for (const Int& m : ambient_moduli)
        if (m < 1) throw std::invalid_argument("ambient modulus must be >= 1");

    const std::size_t k = relations.cols();
    IntMatrix w(r, k + r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < k; ++j) w.at(i, j) = positive_mod(relations.at(i, j), ambient_moduli[i]);
        w.at(i, k + i) = ambient_moduli[i];
    }
    Eliminator elim{w, nullptr, nullptr, nullptr};
    std::size_t rank = elim.run();
    std::vector<Int> out;
    for (std::size_t t = 0; t < rank; ++t)
        if (w.at(t, t) > 1) out.push_back(w.at(t, t));
    return out;
}

}  // namespace altext
