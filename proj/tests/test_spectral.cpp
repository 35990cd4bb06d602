#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "spectra/spectral.hpp"

using namespace spectra;

namespace {

Spectrum make(SpectrumKind k, std::map<std::uint64_t, std::uint64_t> e) {
    return Spectrum{k, std::move(e)};
}

// delta(a, .) for every b in one pass over x
std::vector<std::uint64_t> general_row(const PowerMap& pm, Elem a) {
    const Field& f = pm.field;
    std::vector<std::uint64_t> row(f.order(), 0);
    for (std::uint64_t x = 0; x < f.order(); ++x) {
        Elem fx = f.pow_map(pm.d, static_cast<Elem>(x));
        Elem fxa = f.pow_map(pm.d, f.add(static_cast<Elem>(x), a));
        ++row[f.sub(fxa, fx)];
    }
    return row;
}

} // namespace

TEST_CASE("identity map spectra") {
    auto f = Field::build(3, 2);
    auto pm = PowerMap::from_exponent(f, 1);
    CHECK(delta(pm, 1, 1) == f.order());
    CHECK(delta(pm, 1, f.psi()) == 0);
    CHECK(differential_spectrum(pm) ==
          make(SpectrumKind::differential, {{0, 8}, {9, 1}}));
    for (std::uint64_t b = 1; b < f.order(); ++b)
        CHECK(beta(pm, 1, static_cast<Elem>(b)) == f.order());
    CHECK(boomerang_spectrum(pm) == make(SpectrumKind::boomerang, {{9, 8}}));
}

TEST_CASE("from_sm parametrization") {
    auto f = Field::build(5, 4);
    auto pm = PowerMap::from_sm(f, 1, 2);
    CHECK(pm.d == 24);
    REQUIRE(pm.origin_sm.has_value());
    CHECK(pm.origin_sm->first == 1);
    CHECK(pm.origin_sm->second == 2);
    CHECK_THROWS_AS(PowerMap::from_sm(f, 1, 3), HypothesisViolated);
}

TEST_CASE("x^24 over F_625") {
    auto f = Field::build(5, 4);
    auto pm = PowerMap::from_sm(f, 1, 2);
    CHECK(delta(pm, 1, 0) == 23);
    CHECK(delta(pm, 1, 1) == 1);
    auto ds = differential_spectrum(pm);
    CHECK(ds == make(SpectrumKind::differential, {{0, 286}, {1, 74}, {2, 264}, {23, 1}}));
    CHECK(differential_uniformity(ds) == 23);
    CHECK(verify_identities(ds, f.order()));
    CHECK(is_locally_apn(pm));
}

TEST_CASE("x^240 over F_14641") {
    auto f = Field::build(11, 4);
    auto pm = PowerMap::from_sm(f, 2, 2);
    auto ds = differential_spectrum(pm, 4);
    CHECK(ds == make(SpectrumKind::differential,
                     {{0, 10978}, {1, 2}, {2, 120}, {4, 3540}, {239, 1}}));
    CHECK(verify_identities(ds, f.order()));
    CHECK_FALSE(is_locally_apn(pm));
}

TEST_CASE("x^3 over F_16") {
    auto f = Field::build(2, 4);
    auto pm = PowerMap::from_sm(f, 1, 2);
    CHECK(differential_spectrum(pm) == make(SpectrumKind::differential, {{0, 8}, {2, 8}}));
    CHECK(beta(pm, 1, 1) == 2);
    auto bs = boomerang_spectrum(pm);
    CHECK(verify_identities(bs, f.order()));
}

TEST_CASE("x^96 over F_2401 boomerang") {
    auto f = Field::build(7, 4);
    auto pm = PowerMap::from_sm(f, 2, 2);
    auto bs = boomerang_spectrum(pm, 4);
    CHECK(bs == make(SpectrumKind::boomerang, {{0, 1800}, {4, 552}, {94, 48}}));
    CHECK(verify_identities(bs, f.order()));
}

TEST_CASE("scaling law delta(a,b) = delta(1, b a^{-d})") {
    struct Cfg { std::uint32_t p, n; std::uint64_t d; };
    for (auto c : {Cfg{2, 4, 3}, Cfg{2, 6, 7}, Cfg{3, 2, 2}, Cfg{3, 4, 16}, Cfg{5, 2, 7}}) {
        auto f = Field::build(c.p, c.n);
        auto pm = PowerMap::from_exponent(f, c.d);
        auto base = ddt_row(pm);
        for (std::uint64_t a = 1; a < f.order(); ++a) {
            auto row = general_row(pm, static_cast<Elem>(a));
            Elem ad_inv = f.inv(f.pow_map(pm.d, static_cast<Elem>(a)));
            for (std::uint64_t b = 0; b < f.order(); ++b)
                CHECK(row[b] == base[f.mul(static_cast<Elem>(b), ad_inv)]);
        }
    }
}

TEST_CASE("Frobenius-conjugate exponents give equal spectra") {
    struct Cfg { std::uint32_t p, n; std::uint64_t d; };
    for (auto c : {Cfg{2, 4, 3}, Cfg{2, 6, 21}, Cfg{3, 2, 2}, Cfg{3, 4, 16}, Cfg{5, 2, 7},
                   Cfg{7, 2, 12}}) {
        auto f = Field::build(c.p, c.n);
        std::uint64_t d2 = c.d * c.p % (f.order() - 1);
        auto pm = PowerMap::from_exponent(f, c.d);
        auto pm2 = PowerMap::from_exponent(f, d2);
        CHECK(differential_spectrum(pm) == differential_spectrum(pm2));
        CHECK(boomerang_spectrum(pm) == boomerang_spectrum(pm2));
    }
}

TEST_CASE("beta values are even in characteristic 2") {
    struct Cfg { std::uint32_t n; std::uint64_t d; };
    for (auto c : {Cfg{2, 2}, Cfg{4, 3}, Cfg{4, 7}, Cfg{6, 7}, Cfg{8, 15}, Cfg{10, 93}}) {
        auto f = Field::build(2, c.n);
        auto pm = PowerMap::from_exponent(f, c.d);
        auto row = beta_row(pm, 4);
        for (std::uint64_t b = 1; b < f.order(); ++b) CHECK(row[b] % 2 == 0);
    }
}

TEST_CASE("thread count does not change results") {
    auto f = Field::build(5, 4);
    auto pm = PowerMap::from_sm(f, 1, 2);
    auto ds1 = differential_spectrum(pm, 1);
    CHECK(ds1 == differential_spectrum(pm, 2));
    CHECK(ds1 == differential_spectrum(pm, 8));

    auto f3 = Field::build(3, 4);
    auto pm3 = PowerMap::from_sm(f3, 2, 2);
    auto bs1 = boomerang_spectrum(pm3, 1);
    CHECK(bs1 == boomerang_spectrum(pm3, 3));
    CHECK(bs1 == boomerang_spectrum(pm3, 8));
}

TEST_CASE("pair budget") {
    auto f = Field::build(3, 4);
    auto pm = PowerMap::from_sm(f, 2, 2);
    EngineBudget tiny{100};
    CHECK_THROWS_AS(beta_row(pm, 1, tiny), PairBudgetExceeded);
    CHECK_THROWS_AS(boomerang_spectrum(pm, 1, tiny), PairBudgetExceeded);
}

TEST_CASE("argument validation") {
    auto f = Field::build(3, 2);
    auto pm = PowerMap::from_exponent(f, 2);
    CHECK_THROWS_AS(delta(pm, 0, 1), ZeroDerivativeDirection);
    CHECK_THROWS_AS(beta(pm, 0, 1), ZeroDerivativeDirection);
    CHECK_THROWS_AS(beta(pm, 1, 0), ZeroArgument);
    CHECK_THROWS_AS(PowerMap::from_exponent(f, 0), ZeroExponent);
}

TEST_CASE("verify_identities rejects wrong totals") {
    CHECK_FALSE(verify_identities(make(SpectrumKind::differential, {{0, 8}, {2, 7}}), 16));
    CHECK_FALSE(verify_identities(make(SpectrumKind::differential, {{0, 9}, {2, 8}}), 16));
    CHECK(verify_identities(make(SpectrumKind::differential, {{0, 8}, {2, 8}}), 16));
    CHECK(verify_identities(make(SpectrumKind::boomerang, {{0, 10}, {2, 5}}), 16));
    CHECK_FALSE(verify_identities(make(SpectrumKind::boomerang, {{0, 10}, {2, 4}}), 16));
}
