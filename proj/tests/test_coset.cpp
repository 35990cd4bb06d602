#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <sstream>

#include "spectra/coset.hpp"
#include "spectra/spectral.hpp"

using namespace spectra;

TEST_CASE("coset_of") {
    auto f = Field::build(2, 4);
    CHECK_THROWS_AS(coset_of(f, 2, 0), OutsideSharpSet);
    // over p = 2, x = 1 is -1, so it is excluded too
    CHECK_THROWS_AS(coset_of(f, 2, 1), OutsideSharpSet);

    // psi^5 lies in the order-5 subgroup, so j2 = 0
    Elem x = f.antilog(5);
    auto c = coset_of(f, 2, x);
    CHECK(c.modulus == 5);
    CHECK(c.j2 == 0);
    CHECK(c.j1 == f.ind(f.add(x, f.one())) % 5);

    auto f3 = Field::build(3, 2);
    CHECK_THROWS_AS(coset_of(f3, 1, f3.neg(f3.one())), OutsideSharpSet);
}

TEST_CASE("partition sizes") {
    auto f = Field::build(5, 4);
    auto sizes = partition_sizes(f, 2);
    CHECK(sizes.modulus == 26);
    CHECK(sizes.total() == 623);

    auto f2 = Field::build(2, 4);
    auto s2 = partition_sizes(f2, 2);
    CHECK(s2.total() == 14);
    CHECK(s2.at(0, 0) == 2);  // 2^m - 2

    // every element outside {0, -1} is counted exactly once
    auto f3 = Field::build(3, 2);
    CHECK(partition_sizes(f3, 1).total() == 7);
}

TEST_CASE("per-coset zero-difference counts") {
    auto f = Field::build(2, 4);
    auto table = delta_zero_coset_table(f, 2, 1);
    CHECK(table.at(0, 0) == 2);  // 2^m - 2
    for (std::uint64_t i = 1; i < 5; ++i) CHECK(table.at(i, i) == 0);

    auto pm = PowerMap::from_sm(f, 1, 2);
    CHECK(table.total() == delta(pm, 1, 0));
}

TEST_CASE("prediction matches the empirical table for p = 2") {
    for (std::uint32_t m : {2u, 3u, 4u}) {
        auto f = Field::build(2, 2 * m);
        std::uint64_t pm1 = (std::uint64_t{1} << m) + 1;
        for (std::uint64_t s = 1; s <= (std::uint64_t{1} << m); ++s) {
            std::uint64_t t = std::gcd(s, pm1);
            if (pm1 / t <= 3) continue;
            CAPTURE(m);
            CAPTURE(s);
            auto pred = delta_zero_coset_prediction(f, m, s);
            auto emp = delta_zero_coset_table(f, m, s);
            REQUIRE(pred.modulus == emp.modulus);
            CHECK(pred.cells == emp.cells);
            CHECK(emp.total() == t * ((std::uint64_t{1} << m) - 1) - 1);
        }
    }
}

TEST_CASE("prediction is characteristic-2 only") {
    auto f = Field::build(3, 2);
    CHECK_THROWS_AS(delta_zero_coset_prediction(f, 1, 1), NotApplicable);
}

TEST_CASE("empirical aggregate matches delta(1,0) in odd characteristic") {
    auto f = Field::build(3, 4);
    auto table = delta_zero_coset_table(f, 2, 2);
    auto pm = PowerMap::from_sm(f, 2, 2);
    CHECK(table.total() == delta(pm, 1, 0));
}

TEST_CASE("unit circle sums are pairwise distinct") {
    for (auto [p, n, m] : {std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>{2, 4, 2},
                           {2, 4, 1}, {3, 2, 1}, {5, 4, 2}, {7, 2, 1}, {2, 6, 3}}) {
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(m);
        auto f = Field::build(p, n);
        CHECK(unit_circle_sum_unique(f, m));
    }
}

TEST_CASE("csv report") {
    auto f = Field::build(2, 4);
    auto csv = partition_csv(f, 2, 1);
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "j1,j2,size,delta0_count");
    std::size_t rows = 0;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) ++rows;
    CHECK(rows == 25);
}
