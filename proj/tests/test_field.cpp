#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spectra/field.hpp"

using namespace spectra;

namespace {

// digit-wise reference addition, independent of the log-table path
Elem digit_add(std::uint32_t p, std::uint32_t n, Elem x, Elem y) {
    Elem r = 0;
    std::uint64_t w = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        r += static_cast<Elem>((x % p + y % p) % p * w);
        x /= p;
        y /= p;
        w *= p;
    }
    return r;
}

} // namespace

TEST_CASE("construction basics") {
    auto f = Field::build(2, 2);
    CHECK(f.order() == 4);
    // psi has order exactly 3
    CHECK(f.pow_map(3, f.psi()) == f.one());
    CHECK(f.psi() != f.one());
    CHECK(f.mul(f.psi(), f.psi()) != f.one());

    auto f5 = Field::build(5, 4);
    CHECK(f5.order() == 625);
    for (std::uint64_t e = 0; e < 624; ++e) CHECK(f5.ind(f5.antilog(e)) == e);

    CHECK_THROWS_AS(Field::build(4, 2), NonPrimeCharacteristic);
    CHECK_THROWS_AS(Field::build(2, 30), FieldTooLarge);
}

TEST_CASE("ind") {
    auto f = Field::build(3, 3);
    CHECK(f.ind(f.psi()) == 1);
    CHECK(f.ind(f.one()) == 0);
    Elem x = f.one();
    for (int i = 0; i < 5; ++i) x = f.mul(x, f.psi());
    CHECK(f.ind(x) == 5);
    CHECK_THROWS_AS(f.ind(0), LogOfZero);
}

TEST_CASE("pow_map") {
    auto f = Field::build(5, 4);
    for (std::uint64_t x = 0; x < f.order(); ++x)
        CHECK(f.pow_map(1, static_cast<Elem>(x)) == x);
    CHECK(f.pow_map(24, 0) == 0);
    CHECK(f.pow_map(f.order() - 1, f.psi()) == f.one());
    CHECK_THROWS_AS(f.pow_map(0, f.psi()), ZeroExponent);
    // exponents beyond p^n - 1 reduce for nonzero arguments only
    CHECK(f.pow_map(f.order() - 1 + 3, f.psi()) == f.pow_map(3, f.psi()));
    CHECK(f.pow_map(f.order() - 1, 0) == 0);
}

TEST_CASE("ring axioms on encodings") {
    auto f = Field::build(3, 2);
    for (std::uint64_t x = 0; x < f.order(); ++x) {
        CHECK(f.add(static_cast<Elem>(x), 0) == x);
        CHECK(f.mul(static_cast<Elem>(x), 0) == 0);
        CHECK(f.sub(static_cast<Elem>(x), static_cast<Elem>(x)) == 0);
    }
}

TEST_CASE("add agrees with digit-wise reference") {
    for (auto [p, n] : {std::pair<std::uint32_t, std::uint32_t>{2, 4}, {5, 2}, {3, 3}}) {
        auto f = Field::build(p, n);
        for (std::uint64_t x = 0; x < f.order(); ++x)
            for (std::uint64_t y = 0; y < f.order(); ++y)
                CHECK(f.add(static_cast<Elem>(x), static_cast<Elem>(y)) ==
                      digit_add(p, n, static_cast<Elem>(x), static_cast<Elem>(y)));
    }
}

TEST_CASE("log/antilog round trip on full enumeration") {
    for (auto [p, n] : {std::pair<std::uint32_t, std::uint32_t>{2, 8}, {3, 6}, {7, 3}}) {
        auto f = Field::build(p, n);
        for (std::uint64_t x = 1; x < f.order(); ++x)
            CHECK(f.antilog(f.ind(static_cast<Elem>(x))) == x);
    }
}

TEST_CASE("distributivity on random triples") {
    auto f = Field::build(5, 4);
    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(f.order() - 1));
    for (int i = 0; i < 10000; ++i) {
        Elem x = pick(rng), y = pick(rng), z = pick(rng);
        CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
    }
}

TEST_CASE("deterministic construction") {
    auto a = Field::build(3, 4);
    auto b = Field::build(3, 4);
    CHECK(a == b);
    CHECK(a.to_json() == b.to_json());
    for (std::uint64_t e = 0; e < a.order() - 1; ++e) CHECK(a.antilog(e) == b.antilog(e));
}

TEST_CASE("Frobenius endomorphism") {
    auto f = Field::build(7, 2);
    for (std::uint64_t x = 1; x < f.order(); ++x) {
        Elem twice = f.pow_map(7, f.pow_map(7, static_cast<Elem>(x)));
        CHECK(twice == f.pow_map(49, static_cast<Elem>(x)));
    }
    // Frobenius is additive
    for (std::uint64_t x = 0; x < f.order(); ++x)
        for (std::uint64_t y = 0; y < f.order(); ++y)
            CHECK(f.pow_map(7, f.add(static_cast<Elem>(x), static_cast<Elem>(y))) ==
                  f.add(f.pow_map(7, static_cast<Elem>(x)), f.pow_map(7, static_cast<Elem>(y))));
}

TEST_CASE("override validation") {
    std::vector<std::uint32_t> reducible{1, 0, 1};  // x^2 + 1 = (x+1)^2 over F_2
    CHECK_THROWS_AS(Field::build(2, 2, &reducible), ReducedPolynomial);
    std::vector<std::uint32_t> wrong_degree{1, 1};
    CHECK_THROWS_AS(Field::build(2, 2, &wrong_degree), ReducedPolynomial);
    CHECK_THROWS_AS(Field::build(2, 2, nullptr, Elem{1}), NotPrimitive);

    // a valid override is accepted and honored
    std::vector<std::uint32_t> ok{2, 1, 1};  // x^2 + x + 2 over F_3
    auto f = Field::build(3, 2, &ok);
    CHECK(f.poly() == ok);
}

TEST_CASE("JSON round trip") {
    auto f = Field::build(5, 2);
    auto g = Field::from_json(f.to_json());
    CHECK(f == g);
    auto j = f.to_json();
    CHECK(j.at("p") == 5);
    CHECK(j.at("n") == 2);
    CHECK(j.at("poly").size() == 3);
}
