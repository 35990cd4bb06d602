#ifndef SPECTRA_COSET_HPP
#define SPECTRA_COSET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "spectra/field.hpp"

namespace spectra {

/// Index of the coset cell of x in F_{p^n} \ {0, -1} determined by
/// ind(x+1) and ind(x) modulo p^m + 1.
struct CosetIndex {
    std::uint64_t j1 = 0;
    std::uint64_t j2 = 0;
    std::uint64_t modulus = 0;  // p^m + 1

    bool operator==(const CosetIndex&) const = default;
};

/// Row-major (p^m+1) x (p^m+1) table of per-coset counts.
struct CosetTable {
    std::uint64_t modulus = 0;
    std::vector<std::uint64_t> cells;  // size modulus^2, index j1 * modulus + j2

    std::uint64_t& at(std::uint64_t j1, std::uint64_t j2) { return cells[j1 * modulus + j2]; }
    std::uint64_t at(std::uint64_t j1, std::uint64_t j2) const {
        return cells[j1 * modulus + j2];
    }
    std::uint64_t total() const;
};

/// Requires n = 2m and x outside {0, -1}.
CosetIndex coset_of(const Field& fs, std::uint32_t m, Elem x);

/// Sizes |C_{j1,j2}|; cells sum to p^n - 2.
CosetTable partition_sizes(const Field& fs, std::uint32_t m);

/// Per-coset counts of solutions to (x+1)^d - x^d = 0 with d = s(p^m-1).
/// The aggregate equals delta(1, 0).
CosetTable delta_zero_coset_table(const Field& fs, std::uint32_t m, std::uint64_t s);

/// Predicted per-coset counts of the characteristic-2 case analysis for the
/// same equation. Requires p = 2 and (2^m+1)/gcd(s, 2^m+1) > 3.
CosetTable delta_zero_coset_prediction(const Field& fs, std::uint32_t m, std::uint64_t s);

/// True iff the nonzero sums alpha^i + alpha^j (0 <= i <= j <= p^m) over the
/// order p^m+1 subgroup are pairwise distinct. Zero sums are excluded: pairs
/// {u, -u} always collide there. Requires 2m | n.
bool unit_circle_sum_unique(const Field& fs, std::uint32_t m);

/// CSV with header "j1,j2,size,delta0_count", row-major.
std::string partition_csv(const Field& fs, std::uint32_t m, std::uint64_t s);

} // namespace spectra

#endif
