#include "spectra/curve.hpp"

#include <numeric>
#include <vector>

namespace spectra {

CurveInstance make_curve(const Field& fs, std::uint32_t m, Elem alpha, Elem beta,
                         std::uint64_t n1, std::uint64_t n2) {
    if (alpha == 0 || beta == 0) throw Error("curve coefficients must be nonzero");
    if (n1 < 1 || n2 < 1) throw Error("curve exponents must be >= 1");
    if (m < 1 || fs.n() % (2 * m) != 0)
        throw HypothesisViolated("field degree n must be a multiple of 2m");
    std::uint64_t pm = 1;
    for (std::uint32_t i = 0; i < m; ++i) pm *= fs.p();
    std::uint64_t l = std::lcm(n1, n2);
    if ((pm + 1) % l != 0)
        throw HypothesisViolated("lcm(n1, n2) must divide p^m + 1");
    CurveInstance ci{fs,
                     m,
                     fs.n() / (2 * m),
                     alpha,
                     beta,
                     n1,
                     n2,
                     std::gcd(n1, n2),
                     classify_coefficient(fs, alpha, n1),
                     classify_coefficient(fs, beta, n2)};
    return ci;
}

std::uint64_t classify_coefficient(const Field& fs, Elem alpha, std::uint64_t n1) {
    return fs.ind(alpha) % n1;
}

std::uint64_t count_points_bruteforce(const CurveInstance& ci) {
    const Field& f = ci.field;
    const std::uint64_t q = f.order();

    // fiber[c] = #{y : y^{n2} = c}
    std::vector<std::uint32_t> fiber(q, 0);
    for (std::uint64_t y = 0; y < q; ++y)
        ++fiber[f.pow_map(ci.n2, static_cast<Elem>(y))];

    const Elem minus_one = f.neg(1);
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < q; ++x) {
        // beta * y^{n2} = -1 - alpha * x^{n1}
        Elem rhs = f.sub(minus_one, f.mul(ci.alpha, f.pow_map(ci.n1, static_cast<Elem>(x))));
        count += fiber[f.mul(rhs, f.inv(ci.beta))];
    }
    return count;
}

const char* curve_case_name(CurveCase c) {
    switch (c) {
        case CurveCase::i: return "i";
        case CurveCase::ii: return "ii";
        case CurveCase::iii: return "iii";
        case CurveCase::iv: return "iv";
        case CurveCase::v: return "v";
    }
    return "?";
}

CurveCase classify_case(const CurveInstance& ci) {
    const std::uint64_t r1 = ci.r1, r2 = ci.r2, t = ci.t;
    if (r1 == 0 && r2 == 0) return CurveCase::i;
    if (r1 == 0 && r2 != 0) {
        if (r2 % t != 0) return CurveCase::ii;
        throw UncoveredCase("residue combination r1 = 0, r2 != 0, t | r2 is not covered");
    }
    if (r2 == 0) {
        if (r1 % t != 0) return CurveCase::iii;
        throw UncoveredCase("residue combination r1 != 0, t | r1, r2 = 0 is not covered");
    }
    std::uint64_t diff = r1 >= r2 ? r1 - r2 : r2 - r1;
    return diff % t != 0 ? CurveCase::iv : CurveCase::v;
}

std::uint64_t count_points_closed_form(const CurveInstance& ci) {
    CurveCase c = classify_case(ci);
    using i128 = __int128;
    const Field& f = ci.field;
    i128 pn = f.order();
    i128 ph = 1;  // p^{n/2}
    for (std::uint32_t i = 0; i < f.n() / 2; ++i) ph *= f.p();
    i128 sign_km1 = (ci.k % 2 == 1) ? 1 : -1;  // (-1)^{k-1}
    i128 sign_k = -sign_km1;                   // (-1)^k
    i128 n1 = ci.n1, n2 = ci.n2, t = ci.t;

    i128 result = 0;
    switch (c) {
        case CurveCase::i:
            result = pn + sign_km1 * ((n1 - 1) * (n2 - 1) + 1 - t) * ph - t + 1;
            break;
        case CurveCase::ii:
            result = pn + sign_k * (n1 - 2) * ph + 1;
            break;
        case CurveCase::iii:
            result = pn + sign_k * (n2 - 2) * ph + 1;
            break;
        case CurveCase::iv:
            result = pn + sign_km1 * 2 * ph + 1;
            break;
        case CurveCase::v:
            result = pn + sign_k * (t - 2) * ph - t + 1;
            break;
    }
    if (result < 0) throw Error("closed-form point count evaluated negative");
    return static_cast<std::uint64_t>(result);
}

} // namespace spectra
