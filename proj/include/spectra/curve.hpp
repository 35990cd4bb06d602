#ifndef SPECTRA_CURVE_HPP
#define SPECTRA_CURVE_HPP

#include <cstdint>

#include "spectra/field.hpp"

namespace spectra {

/// alpha * x^{n1} + beta * y^{n2} + 1 = 0 over F_{p^n}, n = 2km, with
/// lcm(n1, n2) | p^m + 1.
struct CurveInstance {
    const Field& field;
    std::uint32_t m;  // n = 2km
    std::uint32_t k;
    Elem alpha;
    Elem beta;
    std::uint64_t n1;
    std::uint64_t n2;
    std::uint64_t t;   // gcd(n1, n2)
    std::uint64_t r1;  // ind(alpha) mod n1
    std::uint64_t r2;  // ind(beta) mod n2
};

/// Validates 2m | n and lcm(n1,n2) | p^m + 1, derives k, t, r1, r2.
CurveInstance make_curve(const Field& fs, std::uint32_t m, Elem alpha, Elem beta,
                         std::uint64_t n1, std::uint64_t n2);

/// r = ind(alpha) mod n1. Throws LogOfZero on alpha = 0.
std::uint64_t classify_coefficient(const Field& fs, Elem alpha, std::uint64_t n1);

/// Exact point count by enumerating x against precomputed n2-th-power fiber
/// sizes.
std::uint64_t count_points_bruteforce(const CurveInstance& ci);

enum class CurveCase { i, ii, iii, iv, v };

const char* curve_case_name(CurveCase c);

/// Residue-class dispatch for the closed-form count. Throws UncoveredCase for
/// the residue combination (one of r1, r2 zero, the other a nonzero multiple
/// of t) that the case list does not name.
CurveCase classify_case(const CurveInstance& ci);

std::uint64_t count_points_closed_form(const CurveInstance& ci);

} // namespace spectra

#endif
