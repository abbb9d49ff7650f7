#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace altext;
using testsupport::E;

TEST_CASE("construction drops order-1 factors") {
    CHECK(FinAbGroup({2, 1, 3}).orders() == std::vector<Residue>{2, 3});
    CHECK(FinAbGroup({1}).rank() == 0);
    CHECK(FinAbGroup({1}).order() == 1);
    CHECK(FinAbGroup({2, 2}).orders() == std::vector<Residue>{2, 2});
    CHECK_THROWS_AS(FinAbGroup({0}), std::invalid_argument);
    CHECK_THROWS_AS(FinAbGroup({-2}), std::invalid_argument);
}

TEST_CASE("presentation is preserved, not reduced") {
    CHECK(FinAbGroup({2, 3}) != FinAbGroup({6}));
    CHECK(FinAbGroup({2, 3}) != FinAbGroup({3, 2}));
}

TEST_CASE("group literal parsing") {
    CHECK(FinAbGroup::parse("2,2") == FinAbGroup({2, 2}));
    CHECK(FinAbGroup::parse("1") == FinAbGroup::trivial());
    CHECK(FinAbGroup::parse(" 4 , 3 ") == FinAbGroup({4, 3}));
    CHECK(FinAbGroup::parse("2,2").to_string() == "2,2");
    CHECK(FinAbGroup::trivial().to_string() == "1");
    CHECK_THROWS_AS(FinAbGroup::parse("2,,3"), std::invalid_argument);
    CHECK_THROWS_AS(FinAbGroup::parse("x"), std::invalid_argument);
}

TEST_CASE("enumerate") {
    SUBCASE("trivial group has exactly the empty element") {
        auto el = FinAbGroup::trivial().enumerate();
        REQUIRE(el.size() == 1);
        CHECK(el[0] == E({}));
    }
    SUBCASE("Z/2") {
        auto el = FinAbGroup({2}).enumerate();
        REQUIRE(el.size() == 2);
        CHECK(el[0] == E({0}));
        CHECK(el[1] == E({1}));
    }
    SUBCASE("Z/2 x Z/3 is lexicographic mixed-radix") {
        auto el = FinAbGroup({2, 3}).enumerate();
        REQUIRE(el.size() == 6);
        CHECK(el.front() == E({0, 0}));
        CHECK(el[1] == E({0, 1}));
        CHECK(el.back() == E({1, 2}));
    }
}

TEST_CASE("index_of") {
    CHECK(FinAbGroup({2, 3}).index_of(E({0, 0})) == 0);
    CHECK(FinAbGroup({2, 3}).index_of(E({1, 2})) == 5);
    CHECK(FinAbGroup({4}).index_of(E({3})) == 3);
    CHECK_THROWS_AS(FinAbGroup({4}).index_of(E({4})), std::invalid_argument);
    CHECK_THROWS_AS(FinAbGroup({4}).index_of(E({-1})), std::invalid_argument);
    CHECK_THROWS_AS(FinAbGroup({4}).index_of(E({1, 1})), std::invalid_argument);
}

TEST_CASE("elem_add examples") {
    FinAbGroup z4({4});
    CHECK(z4.add(E({3}), E({0})) == E({3}));
    CHECK(z4.add(E({3}), E({2})) == E({1}));
    FinAbGroup k4({2, 2});
    CHECK(k4.add(E({1, 0}), E({1, 1})) == E({0, 1}));
    CHECK_THROWS_AS(z4.add(E({3}), E({1, 1})), std::invalid_argument);
}

TEST_CASE("group laws over the test pool") {
    // orders <= 12, at most 3 factors
    std::vector<FinAbGroup> pool{FinAbGroup({2}),    FinAbGroup({3}),    FinAbGroup({4}),
                                 FinAbGroup({12}),   FinAbGroup({2, 2}), FinAbGroup({2, 3}),
                                 FinAbGroup({4, 3}), FinAbGroup({2, 2, 3})};
    for (const auto& g : pool) {
        auto el = g.enumerate();
        CHECK(static_cast<std::int64_t>(el.size()) == g.order());
        for (std::int64_t i = 0; i < g.order(); ++i) {
            CHECK(g.index_of(el[i]) == i);
            CHECK(g.element_at(i) == el[i]);
            CHECK(g.add(el[i], g.neg(el[i])) == g.zero());
        }
        for (const auto& x : el)
            for (const auto& y : el) {
                CHECK(g.add(x, y) == g.add(y, x));
                CHECK(g.add(x, g.zero()) == x);
            }
        // distinctness
        for (std::size_t i = 0; i < el.size(); ++i)
            for (std::size_t j = i + 1; j < el.size(); ++j) CHECK(el[i] != el[j]);
    }
}

TEST_CASE("associativity on a mixed group") {
    FinAbGroup g({4, 3});
    auto el = g.enumerate();
    for (const auto& x : el)
        for (const auto& y : el)
            for (const auto& z : el) CHECK(g.add(g.add(x, y), z) == g.add(x, g.add(y, z)));
}

TEST_CASE("group table matches element arithmetic") {
    FinAbGroup g({2, 3});
    GroupTable t(g);
    auto el = g.enumerate();
    for (std::int64_t i = 0; i < g.order(); ++i) {
        CHECK(t.neg(i) == g.index_of(g.neg(el[i])));
        for (std::int64_t j = 0; j < g.order(); ++j)
            CHECK(t.add(i, j) == g.index_of(g.add(el[i], el[j])));
    }
}
