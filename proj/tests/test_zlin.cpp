#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace altext;
using testsupport::bareiss_det;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

void check_snf_postconditions(const IntMatrix& m) {
    auto [u, d, v] = smith_normal_form(m);
    CHECK(u * m * v == d);
    CHECK(abs(bareiss_det(u)) == 1);
    CHECK(abs(bareiss_det(v)) == 1);
    const std::size_t k = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j) CHECK(d.at(i, j) == 0);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        CHECK(d.at(i, i) >= 0);
        if (d.at(i + 1, i + 1) != 0) {
            CHECK(d.at(i, i) != 0);
            CHECK(d.at(i + 1, i + 1) % d.at(i, i) == 0);
        }
    }
}

}  // namespace

TEST_CASE("snf identity") {
    auto [u, d, v] = smith_normal_form(IntMatrix::identity(2));
    CHECK(d == IntMatrix::identity(2));
}

TEST_CASE("snf zero 1x1") {
    auto [u, d, v] = smith_normal_form(from_rows({{0}}));
    CHECK(d.at(0, 0) == 0);
}

TEST_CASE("snf of [[2,4],[6,8]] is diag(2,4)") {
    // gcd of the entries is 2 and |det| = |16 - 24| = 8, so d1 = 2, d2 = 4
    IntMatrix m = from_rows({{2, 4}, {6, 8}});
    auto [u, d, v] = smith_normal_form(m);
    CHECK(d.at(0, 0) == 2);
    CHECK(d.at(1, 1) == 4);
    CHECK(u * m * v == d);
}

TEST_CASE("snf is deterministic") {
    IntMatrix m = from_rows({{3, 1, 4}, {1, 5, 9}, {2, 6, 5}});
    auto a = smith_normal_form(m);
    auto b = smith_normal_form(m);
    CHECK(a.u == b.u);
    CHECK(a.d == b.d);
    CHECK(a.v == b.v);
}

TEST_CASE("snf postconditions on random matrices") {
    std::mt19937_64 rng(1234);
    for (int it = 0; it < 60; ++it) {
        std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = static_cast<long>(rng() % 41) - 20;
        check_snf_postconditions(m);
    }
}

TEST_CASE("solve_congruence examples") {
    SUBCASE("homogeneous zero system") {
        CongruenceSystem s{from_rows({{0}}), {0}, {0}, {5}};
        auto sol = solve_congruence(s);
        REQUIRE(sol);
        CHECK(sol->particular == std::vector<Int>{0});
    }
    SUBCASE("2x == 1 (mod 2) is unsolvable") {
        CongruenceSystem s{from_rows({{2}}), {1}, {2}, {2}};
        CHECK(!solve_congruence(s));
    }
    SUBCASE("3x == 1 (mod 4) gives x = 3") {
        CongruenceSystem s{from_rows({{3}}), {1}, {4}, {4}};
        auto sol = solve_congruence(s);
        REQUIRE(sol);
        CHECK(sol->particular == std::vector<Int>{3});
    }
    SUBCASE("dimension mismatch throws") {
        CongruenceSystem s{from_rows({{1}}), {1, 2}, {2}, {2}};
        CHECK_THROWS_AS(solve_congruence(s), std::invalid_argument);
    }
}

namespace {

// Brute-force oracle over all assignments of x.
struct Exhaustive {
    std::vector<std::vector<Int>> solutions;

    Exhaustive(const CongruenceSystem& s) {
        const std::size_t c = s.matrix.cols();
        std::vector<Int> x(c, 0);
        for (;;) {
            bool good = true;
            for (std::size_t i = 0; i < s.matrix.rows() && good; ++i) {
                Int acc = -s.rhs[i];
                for (std::size_t j = 0; j < c; ++j) acc += s.matrix.at(i, j) * x[j];
                if (s.row_moduli[i] == 0) {
                    if (acc != 0) good = false;
                } else if (acc % s.row_moduli[i] != 0) {
                    good = false;
                }
            }
            if (good) solutions.push_back(x);
            std::size_t k = c;
            while (k > 0 && x[k - 1] == s.col_moduli[k - 1] - 1) x[--k] = 0;
            if (k == 0) break;
            ++x[k - 1];
        }
    }
};

CongruenceSystem random_system(std::mt19937_64& rng) {
    const std::size_t r = 1 + rng() % 3, c = 1 + rng() % 3;
    CongruenceSystem s{IntMatrix(r, c), std::vector<Int>(r), std::vector<Int>(r), std::vector<Int>(c)};
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) s.matrix.at(i, j) = static_cast<long>(rng() % 11) - 5;
        s.rhs[i] = static_cast<long>(rng() % 9) - 4;
        s.row_moduli[i] = rng() % 4 == 0 ? 0 : static_cast<long>(2 + rng() % 5);
    }
    for (std::size_t j = 0; j < c; ++j) s.col_moduli[j] = static_cast<long>(2 + rng() % 5);
    return s;
}

}  // namespace

TEST_CASE("solve_congruence agrees with exhaustive search") {
    std::mt19937_64 rng(99);
    int solvable_seen = 0;
    for (int it = 0; it < 120; ++it) {
        CongruenceSystem s = random_system(rng);
        Exhaustive oracle(s);
        auto sol = solve_congruence(s);
        if (oracle.solutions.empty()) {
            CHECK(!sol);
            continue;
        }
        ++solvable_seen;
        REQUIRE(sol);
        // the particular solution substitutes back: it must be in the oracle set
        CHECK(std::find(oracle.solutions.begin(), oracle.solutions.end(), sol->particular) !=
              oracle.solutions.end());
        // kernel generators map to zero and generate the full solution set
        std::set<std::vector<Int>> reached{sol->particular};
        std::vector<std::vector<Int>> frontier{sol->particular};
        while (!frontier.empty()) {
            auto cur = frontier.back();
            frontier.pop_back();
            for (const auto& g : sol->kernel) {
                std::vector<Int> next(cur.size());
                for (std::size_t j = 0; j < cur.size(); ++j)
                    next[j] = (cur[j] + g[j]) % s.col_moduli[j];
                if (reached.insert(next).second) frontier.push_back(next);
            }
        }
        std::set<std::vector<Int>> expected(oracle.solutions.begin(), oracle.solutions.end());
        CHECK(reached == expected);
    }
    CHECK(solvable_seen > 10);
}

TEST_CASE("quotient_invariants examples") {
    SUBCASE("no relations, ambient Z/2") {
        CHECK(quotient_invariants(IntMatrix(1, 0), {2}) == std::vector<Int>{2});
    }
    SUBCASE("full quotient is trivial") {
        CHECK(quotient_invariants(from_rows({{1}}), {2}) == std::vector<Int>{});
    }
    SUBCASE("Z/4 modulo the image of 2") {
        CHECK(quotient_invariants(from_rows({{2}}), {4}) == std::vector<Int>{2});
    }
    SUBCASE("divisibility order on a mixed quotient") {
        // Z/4 x Z/8 modulo nothing
        CHECK(quotient_invariants(IntMatrix(2, 0), {4, 8}) == std::vector<Int>{4, 8});
    }
}
