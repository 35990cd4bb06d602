#include "spectra/closed_form.hpp"

#include <numeric>
#include <vector>

namespace spectra {

namespace {

using i128 = __int128;

struct Params {
    i128 P;  // p^m
    i128 N;  // p^n = P^2
    i128 t;
};

struct Row {
    i128 (*value)(const Params&);
    i128 (*num)(const Params&);
    i128 (*den)(const Params&);
};

using Rows = std::vector<Row>;

const Rows& ds_rows(Branch br) {
    // Differential spectrum by branch: {value expression, frequency numerator,
    // frequency denominator}, all in P = p^m, N = P^2 and t.
    static const Rows p2_not = {
        {+[](const Params& q) -> i128 { return 0; },
         +[](const Params& q) -> i128 {
             return q.t * q.t * 2 * q.N - (q.P - q.t + 2) * q.P - 4 * q.t * q.t + q.t - 1;
         },
         +[](const Params& q) -> i128 { return 2 * q.t * q.t; }},
        {+[](const Params& q) -> i128 { return 2 * q.t * q.t; },
         +[](const Params& q) -> i128 {
             return q.N + (2 - 3 * q.t) * q.P + 2 * q.t * q.t - 3 * q.t + 1;
         },
         +[](const Params& q) -> i128 { return 2 * q.t * q.t; }},
        {+[](const Params& q) -> i128 { return 2 * q.t * (q.t - 1); },
         +[](const Params& q) -> i128 { return q.P - q.t + 1; },
         +[](const Params& q) -> i128 { return q.t; }},
        {+[](const Params& q) -> i128 { return 2; }, +[](const Params& q) -> i128 { return 1; },
         +[](const Params& q) -> i128 { return 1; }},
        {+[](const Params& q) -> i128 { return q.t * (q.P - 1) - 1; },
         +[](const Params& q) -> i128 { return 1; }, +[](const Params& q) -> i128 { return 1; }},
    };
    static const Rows p2_div = {
        {+[](const Params& q) -> i128 { return 0; },
         +[](const Params& q) -> i128 {
             return q.t * q.t * 2 * q.N - (q.P - q.t + 2) * q.P - 2 * q.t * q.t + q.t - 1;
         },
         +[](const Params& q) -> i128 { return 2 * q.t * q.t; }},
        {+[](const Params& q) -> i128 { return 2 * q.t * q.t; },
         +[](const Params& q) -> i128 { return q.N + (2 - 3 * q.t) * q.P - 3 * q.t + 1; },
         +[](const Params& q) -> i128 { return 2 * q.t * q.t; }},
        {+[](const Params& q) -> i128 { return 2 * q.t * (q.t - 1); },
         +[](const Params& q) -> i128 { return q.P - q.t + 1; },
         +[](const Params& q) -> i128 { return q.t; }},
        {+[](const Params& q) -> i128 { return 2 * q.t * q.t + 2; },
         +[](const Params& q) -> i128 { return 1; }, +[](const Params& q) -> i128 { return 1; }},
        {+[](const Params& q) -> i128 { return q.t * (q.P - 1) - 1; },
         +[](const Params& q) -> i128 { return 1; }, +[](const Params& q) -> i128 { return 1; }},
    };
    // p = 3 and p > 3 share the 2t-nondividing shape.
    static const Rows odd_not = {
        {+[](const Params& q) -> i128 { return 0; },
         +[](const Params& q) -> i128 {
             return q.t * q.t * q.N - (q.P + 2 - q.t) * q.P - 3 * q.t * q.t + q.t - 1;
         },
         +[](const Params& q) -> i128 { return q.t * q.t; }},
        {+[](const Params& q) -> i128 { return q.t * q.t; },
         +[](const Params& q) -> i128 {
             return q.N + (2 - 3 * q.t) * q.P + 2 * q.t * q.t - 3 * q.t + 1;
         },
         +[](const Params& q) -> i128 { return q.t * q.t; }},
        {+[](const Params& q) -> i128 { return q.t * q.t - q.t; },
         +[](const Params& q) -> i128 { return 2 * (q.P - q.t + 1); },
         +[](const Params& q) -> i128 { return q.t; }},
        {+[](const Params& q) -> i128 { return 1; }, +[](const Params& q) -> i128 { return 2; },
         +[](const Params& q) -> i128 { return 1; }},
        {+[](const Params& q) -> i128 { return q.t * (q.P - 1) - 1; },
         +[](const Params& q) -> i128 { return 1; }, +[](const Params& q) -> i128 { return 1; }},
    };
    static const Rows p3_div = {
        {+[](const Params& q) -> i128 { return 0; },
         +[](const Params& q) -> i128 {
             return 2 * q.t * q.t * q.N - (q.P + 2) * q.P - 2 * q.t * q.t - 1;
         },
         +[](const Params& q) -> i128 { return 2 * q.t * q.t; }},
        {+[](const Params& q) -> i128 { return 2 * q.t * q.t; },
         +[](const Params& q) -> i128 {
             return q.N + (2 - 6 * q.t) * q.P + 8 * q.t * q.t - 6 * q.t + 1;
         },
         +[](const Params& q) -> i128 { return 2 * q.t * q.t; }},
        {+[](const Params& q) -> i128 { return 2 * q.t * q.t - q.t; },
         +[](const Params& q) -> i128 { return 2 * (q.P - 2 * q.t + 1); },
         +[](const Params& q) -> i128 { return q.t; }},
        {+[](const Params& q) -> i128 { return q.t * q.t; },
         +[](const Params& q) -> i128 { return q.P - 2 * q.t + 1; },
         +[](const Params& q) -> i128 { return q.t; }},
        {+[](const Params& q) -> i128 { return q.t * q.t - q.t + 1; },
         +[](const Params& q) -> i128 { return 2; }, +[](const Params& q) -> i128 { return 1; }},
        {+[](const Params& q) -> i128 { return q.t * (q.P - 1) - 1; },
         +[](const Params& q) -> i128 { return 1; }, +[](const Params& q) -> i128 { return 1; }},
    };
    static const Rows pg3_div6not = {
        {+[](const Params& q) -> i128 { return 0; },
         +[](const Params& q) -> i128 {
             return 2 * q.t * q.t * q.N - (q.P + 2) * q.P - 6 * q.t * q.t - 1;
         },
         +[](const Params& q) -> i128 { return 2 * q.t * q.t; }},
        {+[](const Params& q) -> i128 { return 2 * q.t * q.t; },
         +[](const Params& q) -> i128 {
             return q.N + (2 - 6 * q.t) * q.P + 8 * q.t * q.t - 6 * q.t + 1;
         },
         +[](const Params& q) -> i128 { return 2 * q.t * q.t; }},
        {+[](const Params& q) -> i128 { return 2 * q.t * q.t - q.t; },
         +[](const Params& q) -> i128 { return 2 * (q.P - 2 * q.t + 1); },
         +[](const Params& q) -> i128 { return q.t; }},
        {+[](const Params& q) -> i128 { return q.t * q.t; },
         +[](const Params& q) -> i128 { return q.P - 2 * q.t + 1; },
         +[](const Params& q) -> i128 { return q.t; }},
        {+[](const Params& q) -> i128 { return q.t * q.t - q.t; },
         +[](const Params& q) -> i128 { return 2; }, +[](const Params& q) -> i128 { return 1; }},
        {+[](const Params& q) -> i128 { return 1; }, +[](const Params& q) -> i128 { return 2; },
         +[](const Params& q) -> i128 { return 1; }},
        {+[](const Params& q) -> i128 { return q.t * (q.P - 1) - 1; },
         +[](const Params& q) -> i128 { return 1; }, +[](const Params& q) -> i128 { return 1; }},
    };
    static const Rows pg3_div6 = {
        {+[](const Params& q) -> i128 { return 0; },
         +[](const Params& q) -> i128 {
             return 2 * q.t * q.t * q.N - (q.P + 2) * q.P - 2 * q.t * q.t - 1;
         },
         +[](const Params& q) -> i128 { return 2 * q.t * q.t; }},
        {+[](const Params& q) -> i128 { return 2 * q.t * q.t; },
         +[](const Params& q) -> i128 {
             return q.N + (2 - 6 * q.t) * q.P + 4 * q.t * q.t - 6 * q.t + 1;
         },
         +[](const Params& q) -> i128 { return 2 * q.t * q.t; }},
        {+[](const Params& q) -> i128 { return 2 * q.t * q.t - q.t; },
         +[](const Params& q) -> i128 { return 2 * (q.P - 2 * q.t + 1); },
         +[](const Params& q) -> i128 { return q.t; }},
        {+[](const Params& q) -> i128 { return q.t * q.t; },
         +[](const Params& q) -> i128 { return q.P - 2 * q.t + 1; },
         +[](const Params& q) -> i128 { return q.t; }},
        {+[](const Params& q) -> i128 { return 2 * q.t * q.t + 1; },
         +[](const Params& q) -> i128 { return 2; }, +[](const Params& q) -> i128 { return 1; }},
        {+[](const Params& q) -> i128 { return q.t * q.t - q.t; },
         +[](const Params& q) -> i128 { return 2; }, +[](const Params& q) -> i128 { return 1; }},
        {+[](const Params& q) -> i128 { return q.t * (q.P - 1) - 1; },
         +[](const Params& q) -> i128 { return 1; }, +[](const Params& q) -> i128 { return 1; }},
    };
    switch (br) {
        case Branch::P2_3tNotDiv: return p2_not;
        case Branch::P2_3tDiv: return p2_div;
        case Branch::P3_2tNotDiv: return odd_not;
        case Branch::P3_2tDiv: return p3_div;
        case Branch::PG3_2tNotDiv: return odd_not;
        case Branch::PG3_2tDiv6tNot: return pg3_div6not;
        case Branch::PG3_6tDiv: return pg3_div6;
    }
    throw Error("unknown branch");
}

const Rows& bs_rows(Branch br) {
    static const Rows p2_not = {
        {+[](const Params& q) -> i128 { return 0; },
         +[](const Params& q) -> i128 {
             return (2 * q.t * q.t - 1) * q.N - (2 - q.t) * q.P - 4 * q.t * q.t + q.t - 1;
         },
         +[](const Params& q) -> i128 { return 2 * q.t * q.t; }},
        {+[](const Params& q) -> i128 { return 2; }, +[](const Params& q) -> i128 { return 1; },
         +[](const Params& q) -> i128 { return 1; }},
        {+[](const Params& q) -> i128 {
             return 4 * q.t * q.t * q.t * q.t - 4 * q.t * q.t * q.t + 2 * q.t * q.t;
         },
         +[](const Params& q) -> i128 {
             return q.N + (2 - 3 * q.t) * q.P + 2 * q.t * q.t - 3 * q.t + 1;
         },
         +[](const Params& q) -> i128 { return 2 * q.t * q.t; }},
        {+[](const Params& q) -> i128 {
             return 2 * q.t * (q.t - 1) * (q.P + 2 * q.t * q.t - 4 * q.t);
         },
         +[](const Params& q) -> i128 { return q.P - q.t + 1; },
         +[](const Params& q) -> i128 { return q.t; }},
    };
    static const Rows p2_div = {
        {+[](const Params& q) -> i128 { return 0; },
         +[](const Params& q) -> i128 {
             return (2 * q.t * q.t - 1) * q.N - (2 - q.t) * q.P - 6 * q.t * q.t + q.t - 1;
         },
         +[](const Params& q) -> i128 { return 2 * q.t * q.t; }},
        {+[](const Params& q) -> i128 {
             return 4 * q.t * q.t * q.t * q.t - 4 * q.t * q.t * q.t + 2 * q.t * q.t + 2;
         },
         +[](const Params& q) -> i128 { return 1; }, +[](const Params& q) -> i128 { return 1; }},
        {+[](const Params& q) -> i128 {
             return 4 * q.t * q.t * q.t * q.t - 4 * q.t * q.t * q.t + 2 * q.t * q.t;
         },
         +[](const Params& q) -> i128 { return q.N + (2 - 3 * q.t) * q.P - 3 * q.t + 1; },
         +[](const Params& q) -> i128 { return 2 * q.t * q.t; }},
        {+[](const Params& q) -> i128 {
             return 2 * q.t * (q.t - 1) * (q.P + 2 * q.t * q.t - 4 * q.t);
         },
         +[](const Params& q) -> i128 { return q.P - q.t + 1; },
         +[](const Params& q) -> i128 { return q.t; }},
        {+[](const Params& q) -> i128 {
             return 2 * q.t * (q.t - 1) * (q.P + 2 * q.t * q.t - 4 * q.t) + 4 * q.t * q.t;
         },
         +[](const Params& q) -> i128 { return 2; }, +[](const Params& q) -> i128 { return 1; }},
    };
    // p = 3 and p > 3 share the 2t-nondividing shape.
    static const Rows odd_not = {
        {+[](const Params& q) -> i128 { return 0; },
         +[](const Params& q) -> i128 {
             return (q.t * q.t - 1) * q.N - (2 - q.t) * q.P - q.t * q.t + q.t - 1;
         },
         +[](const Params& q) -> i128 { return q.t * q.t; }},
        {+[](const Params& q) -> i128 {
             return q.t * q.t * q.t * q.t - 2 * q.t * q.t * q.t + q.t * q.t;
         },
         +[](const Params& q) -> i128 {
             return q.N + (2 - 3 * q.t) * q.P + 2 * q.t * q.t - 3 * q.t + 1;
         },
         +[](const Params& q) -> i128 { return q.t * q.t; }},
        {+[](const Params& q) -> i128 {
             return q.t * (q.t - 1) * (q.P + q.t * q.t - 3 * q.t);
         },
         +[](const Params& q) -> i128 { return 2 * (q.P - q.t + 1); },
         +[](const Params& q) -> i128 { return q.t; }},
    };
    static const Rows p3_div = {
        {+[](const Params& q) -> i128 { return 0; },
         +[](const Params& q) -> i128 {
             return 2 * q.t * q.t * q.N - (q.P + 2) * q.P - 2 * q.t * q.t - 1;
         },
         +[](const Params& q) -> i128 { return 2 * q.t * q.t; }},
        {+[](const Params& q) -> i128 {
             return q.t * q.t * q.t * q.t - 2 * q.t * q.t * q.t + q.t * q.t;
         },
         +[](const Params& q) -> i128 { return q.P - 2 * q.t + 1; },
         +[](const Params& q) -> i128 { return q.t; }},
        {+[](const Params& q) -> i128 {
             return 4 * q.t * q.t * q.t * q.t - 4 * q.t * q.t * q.t + 2 * q.t * q.t;
         },
         +[](const Params& q) -> i128 {
             return q.N + (2 - 6 * q.t) * q.P + 8 * q.t * q.t - 6 * q.t + 1;
         },
         +[](const Params& q) -> i128 { return 2 * q.t * q.t; }},
        {+[](const Params& q) -> i128 {
             return q.t * (q.t - 1) * (q.P + 4 * q.t * q.t - 4 * q.t);
         },
         +[](const Params& q) -> i128 { return 2 * (q.P - 2 * q.t + 1); },
         +[](const Params& q) -> i128 { return q.t; }},
        {+[](const Params& q) -> i128 {
             return q.t * (q.t - 1) * (q.P + q.t * q.t - 3 * q.t + 2);
         },
         +[](const Params& q) -> i128 { return 2; }, +[](const Params& q) -> i128 { return 1; }},
    };
    static const Rows pg3_div6not = {
        {+[](const Params& q) -> i128 { return 0; },
         +[](const Params& q) -> i128 {
             return 2 * q.t * q.t * q.N - (q.P + 2) * q.P - 2 * q.t * q.t - 1;
         },
         +[](const Params& q) -> i128 { return 2 * q.t * q.t; }},
        {+[](const Params& q) -> i128 {
             return q.t * q.t * q.t * q.t - 2 * q.t * q.t * q.t + q.t * q.t;
         },
         +[](const Params& q) -> i128 { return q.P - 2 * q.t + 1; },
         +[](const Params& q) -> i128 { return q.t; }},
        {+[](const Params& q) -> i128 {
             return 4 * q.t * q.t * q.t * q.t - 4 * q.t * q.t * q.t + 2 * q.t * q.t;
         },
         +[](const Params& q) -> i128 {
             return q.N + (2 - 6 * q.t) * q.P + 8 * q.t * q.t - 6 * q.t + 1;
         },
         +[](const Params& q) -> i128 { return 2 * q.t * q.t; }},
        {+[](const Params& q) -> i128 {
             return q.t * (q.t - 1) * (q.P + 4 * q.t * q.t - 4 * q.t);
         },
         +[](const Params& q) -> i128 { return 2 * (q.P - 2 * q.t + 1); },
         +[](const Params& q) -> i128 { return q.t; }},
        {+[](const Params& q) -> i128 {
             return q.t * (q.t - 1) * (q.P + q.t * q.t - 3 * q.t);
         },
         +[](const Params& q) -> i128 { return 2; }, +[](const Params& q) -> i128 { return 1; }},
    };
    static const Rows pg3_div6 = {
        {+[](const Params& q) -> i128 { return 0; },
         +[](const Params& q) -> i128 {
             return 2 * q.t * q.t * q.N - (q.P + 2) * q.P - 2 * q.t * q.t - 1;
         },
         +[](const Params& q) -> i128 { return 2 * q.t * q.t; }},
        {+[](const Params& q) -> i128 {
             return q.t * q.t * q.t * q.t - 2 * q.t * q.t * q.t + q.t * q.t;
         },
         +[](const Params& q) -> i128 { return q.P - 2 * q.t + 1; },
         +[](const Params& q) -> i128 { return q.t; }},
        {+[](const Params& q) -> i128 {
             return 4 * q.t * q.t * q.t * q.t - 4 * q.t * q.t * q.t + 2 * q.t * q.t;
         },
         +[](const Params& q) -> i128 {
             return q.N + (2 - 6 * q.t) * q.P + 8 * q.t * q.t - 6 * q.t + 1;
         },
         +[](const Params& q) -> i128 { return 2 * q.t * q.t; }},
        {+[](const Params& q) -> i128 {
             return q.t * (q.t - 1) * (q.P + 4 * q.t * q.t - 4 * q.t);
         },
         +[](const Params& q) -> i128 { return 2 * (q.P - 4 * q.t + 1); },
         +[](const Params& q) -> i128 { return q.t; }},
        {+[](const Params& q) -> i128 {
             return q.t * (q.t - 1) * (q.P + 4 * q.t * q.t - 4 * q.t) + 2 * q.t * q.t;
         },
         +[](const Params& q) -> i128 { return 4; }, +[](const Params& q) -> i128 { return 1; }},
        {+[](const Params& q) -> i128 {
             return q.t * (q.t - 1) * (q.P + q.t * q.t - 3 * q.t);
         },
         +[](const Params& q) -> i128 { return 2; }, +[](const Params& q) -> i128 { return 1; }},
    };
    switch (br) {
        case Branch::P2_3tNotDiv: return p2_not;
        case Branch::P2_3tDiv: return p2_div;
        case Branch::P3_2tNotDiv: return odd_not;
        case Branch::P3_2tDiv: return p3_div;
        case Branch::PG3_2tNotDiv: return odd_not;
        case Branch::PG3_2tDiv6tNot: return pg3_div6not;
        case Branch::PG3_6tDiv: return pg3_div6;
    }
    throw Error("unknown branch");
}

Spectrum evaluate(const Rows& rows, const CaseFlags& cf, SpectrumKind kind) {
    Params q{static_cast<i128>(cf.pm), static_cast<i128>(cf.pm) * static_cast<i128>(cf.pm),
             static_cast<i128>(cf.t)};
    Spectrum s;
    s.kind = kind;
    for (const auto& row : rows) {
        i128 num = row.num(q), den = row.den(q);
        if (den <= 0 || num % den != 0 || num / den < 0)
            throw NonIntegerFrequency("frequency expression does not evaluate to a nonnegative "
                                      "integer; parameters outside the case hypothesis");
        i128 freq = num / den;
        if (freq == 0) continue;
        i128 value = row.value(q);
        s.entries[static_cast<std::uint64_t>(value)] += static_cast<std::uint64_t>(freq);
    }
    std::uint64_t order = cf.pm * cf.pm;
    if (!verify_identities(s, order))
        throw Error("closed-form spectrum violates the count identities");
    return s;
}

void require_applicable(const CaseFlags& cf) {
    if (!cf.applicable)
        throw NotApplicable("(p^m+1)/t <= 3: the closed form does not apply (p=" +
                            std::to_string(cf.p) + ", m=" + std::to_string(cf.m) +
                            ", s=" + std::to_string(cf.s) + ", t=" + std::to_string(cf.t) + ")");
}

// Class-membership helpers over the order-(p^m+1)/t subgroup U = <alpha^s>,
// alpha = psi^{p^m-1}.
struct UnitClasses {
    const Field& f;
    std::uint64_t g;  // (p^m - 1) * t: u in U iff g | ind(u)
    std::uint64_t h;  // |U| = (p^m + 1) / t

    bool in_u(Elem u) const { return u != 0 && f.ind(u) % g == 0; }
    bool in_u_star(Elem u) const { return u != 0 && u != 1 && f.ind(u) % g == 0; }

    // b = u - v with u, v in U \ {1}, u != v; O(h) scan with O(1) membership.
    bool is_difference(Elem b) const {
        const std::uint64_t q1 = f.order() - 1;
        for (std::uint64_t j = 1; j < h; ++j) {
            Elem u = f.antilog(g * j % q1);
            Elem v = f.sub(u, b);
            if (v != u && in_u_star(v)) return true;
        }
        return false;
    }

    // p = 2 variant: b = u + v, u, v in U \ {1}, u != v.
    bool is_sum(Elem b) const { return is_difference(b); }  // char 2: sub == add
};

UnitClasses make_classes(const CaseFlags& cf, const Field& fs) {
    if (fs.p() != cf.p || fs.n() != 2 * cf.m)
        throw Error("field is not consistent with the (p, m) parameters");
    return UnitClasses{fs, (cf.pm - 1) * cf.t, (cf.pm + 1) / cf.t};
}

} // namespace

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::P2_3tNotDiv: return "p=2, 3t !| 2^m+1";
        case Branch::P2_3tDiv: return "p=2, 3t | 2^m+1";
        case Branch::P3_2tNotDiv: return "p=3, 2t !| 3^m+1";
        case Branch::P3_2tDiv: return "p=3, 2t | 3^m+1";
        case Branch::PG3_2tNotDiv: return "p>3, 2t !| p^m+1";
        case Branch::PG3_2tDiv6tNot: return "p>3, 2t | p^m+1, 6t !| p^m+1";
        case Branch::PG3_6tDiv: return "p>3, 6t | p^m+1";
    }
    return "?";
}

CaseFlags case_flags(std::uint32_t p, std::uint32_t m, std::uint64_t s) {
    if (m < 1 || s < 1) throw Error("m and s must be >= 1");
    CaseFlags cf;
    cf.p = p;
    cf.m = m;
    cf.s = s;
    cf.pm = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (cf.pm > (std::uint64_t{1} << 62) / p) throw Error("p^m too large");
        cf.pm *= p;
    }
    std::uint64_t pm1 = cf.pm + 1;
    cf.t = std::gcd(s, pm1);
    cf.div2t = pm1 % (2 * cf.t) == 0;
    cf.div3t = pm1 % (3 * cf.t) == 0;
    cf.div6t = pm1 % (6 * cf.t) == 0;
    cf.applicable = pm1 / cf.t > 3;
    if (p == 2)
        cf.branch = cf.div3t ? Branch::P2_3tDiv : Branch::P2_3tNotDiv;
    else if (p == 3)
        cf.branch = cf.div2t ? Branch::P3_2tDiv : Branch::P3_2tNotDiv;
    else if (!cf.div2t)
        cf.branch = Branch::PG3_2tNotDiv;
    else
        cf.branch = cf.div6t ? Branch::PG3_6tDiv : Branch::PG3_2tDiv6tNot;
    return cf;
}

Spectrum closed_form_ds(const CaseFlags& cf) {
    require_applicable(cf);
    return evaluate(ds_rows(cf.branch), cf, SpectrumKind::differential);
}

Spectrum closed_form_bs(const CaseFlags& cf) {
    require_applicable(cf);
    return evaluate(bs_rows(cf.branch), cf, SpectrumKind::boomerang);
}

std::uint64_t predict_delta(const CaseFlags& cf, const Field& fs, Elem b) {
    require_applicable(cf);
    auto uc = make_classes(cf, fs);
    const std::uint64_t t = cf.t, pm = cf.pm;

    if (b == 0) return t * (pm - 1) - 1;

    if (cf.p == 2) {
        if (b == 1) return cf.div3t ? 2 * t * t + 2 : 2;
        if (uc.in_u_star(fs.add(b, 1))) return 2 * t * (t - 1);  // b = 1 + alpha^{si}
        if (uc.is_sum(b)) return 2 * t * t;
        return 0;
    }

    const Elem minus_one = fs.neg(1);
    const Elem two = fs.succ(1);

    if (b == 1 || b == minus_one) {
        if (cf.p == 3) return cf.div2t ? t * t - t + 1 : 1;
        return cf.div6t ? 2 * t * t + 1 : 1;
    }
    if (cf.p > 3 && (b == two || b == fs.neg(two)))
        return cf.div2t ? t * t - t : 0;
    // b = 1 - alpha^{si} or alpha^{si} - 1
    if (uc.in_u_star(fs.sub(1, b)) || uc.in_u_star(fs.add(1, b)))
        return cf.div2t ? 2 * t * t - t : t * t - t;
    // b = 2 * alpha^{si}
    if (uc.in_u_star(fs.mul(b, fs.inv(two))))
        return cf.div2t ? t * t : 0;
    if (uc.is_difference(b)) return cf.div2t ? 2 * t * t : t * t;
    return 0;
}

std::uint64_t predict_beta(const CaseFlags& cf, const Field& fs, Elem b) {
    require_applicable(cf);
    if (b == 0) throw ZeroArgument("predict_beta requires b != 0");
    auto uc = make_classes(cf, fs);
    const std::uint64_t t = cf.t, pm = cf.pm;
    const std::uint64_t q1 = fs.order() - 1;

    // The order-3 unit-circle elements alpha^{(p^m+1)/3}, alpha^{2(p^m+1)/3}
    // exist whenever 3 | p^m + 1.
    Elem sp1 = 0, sp2 = 0;
    if ((pm + 1) % 3 == 0) {
        std::uint64_t alpha_log = pm - 1;  // ind(alpha)
        std::uint64_t e = (pm + 1) / 3;
        sp1 = fs.antilog(alpha_log * e % q1);
        sp2 = fs.antilog(alpha_log * (2 * e) % q1);
    }

    if (cf.p == 2) {
        if (b == 1) return cf.div3t ? 4 * t * t * t * t - 4 * t * t * t + 2 * t * t + 2 : 2;
        if (sp1 && (b == sp1 || b == sp2))
            return cf.div3t ? 2 * t * (t - 1) * (pm + 2 * t * t - 4 * t) + 4 * t * t : 0;
        if (uc.in_u_star(fs.add(b, 1)))
            return 2 * t * (t - 1) * (pm + 2 * t * t - 4 * t);
        if (uc.is_sum(b)) return 4 * t * t * t * t - 4 * t * t * t + 2 * t * t;
        return 0;
    }

    const Elem minus_one = fs.neg(1);
    const Elem two = fs.succ(1);

    if (cf.p == 3) {
        if (b == 1 || b == minus_one)
            return cf.div2t ? t * (t - 1) * (pm + t * t - 3 * t + 2) : 0;
        if (uc.in_u_star(fs.sub(1, b)) || uc.in_u_star(fs.add(1, b)))
            return cf.div2t ? t * (t - 1) * (pm + 4 * t * t - 4 * t)
                            : t * (t - 1) * (pm + t * t - 3 * t);
        if (uc.in_u_star(fs.neg(b)))  // b = 2 alpha^{si} = -alpha^{si}
            return cf.div2t ? t * t * t * t - 2 * t * t * t + t * t : 0;
        if (uc.is_difference(b))
            return cf.div2t ? 4 * t * t * t * t - 4 * t * t * t + 2 * t * t
                            : t * t * t * t - 2 * t * t * t + t * t;
        return 0;
    }

    // p > 3
    if (b == 1 || b == minus_one)
        return cf.div6t ? 4 * t * t * t * t - 4 * t * t * t + 2 * t * t : 0;
    if (sp1 && (b == sp1 || b == sp2 || b == fs.neg(sp1) || b == fs.neg(sp2)))
        return cf.div6t ? t * (t - 1) * (pm + 4 * t * t - 4 * t) + 2 * t * t : 0;
    if (b == two || b == fs.neg(two))
        return cf.div2t ? t * (t - 1) * (pm + t * t - 3 * t) : 0;
    if (uc.in_u_star(fs.sub(1, b)) || uc.in_u_star(fs.add(1, b)))
        return cf.div2t ? t * (t - 1) * (pm + 4 * t * t - 4 * t)
                        : t * (t - 1) * (pm + t * t - 3 * t);
    if (uc.in_u_star(fs.mul(b, fs.inv(two))))
        return cf.div2t ? t * t * t * t - 2 * t * t * t + t * t : 0;
    if (uc.is_difference(b))
        return cf.div2t ? 4 * t * t * t * t - 4 * t * t * t + 2 * t * t
                        : t * t * t * t - 2 * t * t * t + t * t;
    return 0;
}

} // namespace spectra
