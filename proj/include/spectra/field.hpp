#ifndef SPECTRA_FIELD_HPP
#define SPECTRA_FIELD_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "spectra/errors.hpp"

namespace spectra {

/// Canonical element encoding: integer in [0, p^n), base-p digits are the
/// polynomial coordinates. 0 encodes the zero element.
using Elem = std::uint32_t;

struct FieldBudget {
    std::uint64_t max_elements = std::uint64_t{1} << 26;
};

/// F_{p^n} with discrete-log tables. Immutable after construction; safe for
/// shared concurrent reads.
class Field {
public:
    /// Constructs F_{p^n}. Without overrides the modulus is the
    /// lexicographically smallest monic irreducible of degree n (coefficients
    /// compared low-to-high as a base-p integer) and psi the smallest-encoding
    /// element of full multiplicative order, so the result is deterministic.
    static Field build(std::uint32_t p, std::uint32_t n,
                       const std::vector<std::uint32_t>* poly_override = nullptr,
                       std::optional<Elem> psi_override = std::nullopt,
                       const FieldBudget& budget = {});

    std::uint32_t p() const { return p_; }
    std::uint32_t n() const { return n_; }
    std::uint64_t order() const { return order_; }
    /// Monic irreducible modulus, constant term first, length n+1.
    const std::vector<std::uint32_t>& poly() const { return poly_; }
    Elem psi() const { return psi_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem x, Elem y) const;
    Elem sub(Elem x, Elem y) const { return add(x, neg_[y]); }
    Elem neg(Elem x) const { return neg_[x]; }
    Elem mul(Elem x, Elem y) const;
    Elem inv(Elem x) const;

    /// Discrete log to base psi; throws LogOfZero on x = 0.
    std::uint64_t ind(Elem x) const;
    /// psi^e for e in [0, p^n-2].
    Elem antilog(std::uint64_t e) const { return alog_[e]; }

    /// x^d with 0^d = 0. d >= 1 is required; exponents >= p^n-1 are reduced
    /// internally for nonzero x.
    Elem pow_map(std::uint64_t d, Elem x) const;

    /// Successor table: succ(x) = x + 1 in O(1) without digit arithmetic.
    Elem succ(Elem x) const { return succ_[x]; }

    bool is_prime_subfield(Elem x) const { return x < p_; }

    nlohmann::json to_json() const;
    static Field from_json(const nlohmann::json& j, const FieldBudget& budget = {});

    bool operator==(const Field& o) const {
        return p_ == o.p_ && n_ == o.n_ && poly_ == o.poly_ && psi_ == o.psi_;
    }

private:
    Field() = default;

    std::uint32_t p_ = 0;
    std::uint32_t n_ = 0;
    std::uint64_t order_ = 0;
    std::uint64_t q1_ = 0;  // order - 1
    std::vector<std::uint32_t> poly_;
    Elem psi_ = 0;

    static constexpr std::uint64_t kZechZero = ~std::uint64_t{0};

    std::vector<std::uint64_t> log_;   // nonzero encoding -> exponent
    std::vector<Elem> alog_;           // exponent -> encoding
    std::vector<std::uint64_t> zech_;  // e -> log(1 + psi^e), kZechZero if sum is 0
    std::vector<Elem> neg_;
    std::vector<Elem> succ_;

    void build_tables();
};

} // namespace spectra

#endif
