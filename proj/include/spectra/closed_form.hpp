#ifndef SPECTRA_CLOSED_FORM_HPP
#define SPECTRA_CLOSED_FORM_HPP

#include <cstdint>
#include <string>

#include "spectra/field.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

/// Case split for the closed-form spectra of x^{s(p^m-1)} over F_{p^{2m}},
/// driven by p and the divisibility of p^m + 1 by 2t, 3t, 6t.
enum class Branch {
    P2_3tNotDiv,
    P2_3tDiv,
    P3_2tNotDiv,
    P3_2tDiv,
    PG3_2tNotDiv,
    PG3_2tDiv6tNot,
    PG3_6tDiv,
};

const char* branch_name(Branch b);

struct CaseFlags {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint64_t s = 0;
    std::uint64_t t = 0;   // gcd(s, p^m + 1), always recomputed
    std::uint64_t pm = 0;  // p^m
    bool div2t = false;
    bool div3t = false;
    bool div6t = false;
    bool applicable = false;  // (p^m + 1) / t > 3
    Branch branch = Branch::P2_3tNotDiv;
};

CaseFlags case_flags(std::uint32_t p, std::uint32_t m, std::uint64_t s);

/// Closed-form differential spectrum. Rows whose symbolic values coincide at
/// the given parameters are merged by summing frequencies; frequency
/// expressions must divide exactly or NonIntegerFrequency is thrown.
Spectrum closed_form_ds(const CaseFlags& cf);

/// Closed-form boomerang spectrum, same evaluation and merge semantics.
Spectrum closed_form_bs(const CaseFlags& cf);

/// delta(1, b) predicted from the per-class case analysis, without
/// enumeration over x. Requires cf.applicable and fs consistent with (p, 2m).
std::uint64_t predict_delta(const CaseFlags& cf, const Field& fs, Elem b);

/// beta(1, b) predicted from the per-class case analysis. b must be nonzero.
std::uint64_t predict_beta(const CaseFlags& cf, const Field& fs, Elem b);

} // namespace spectra

#endif
