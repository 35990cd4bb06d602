#ifndef SPECTRA_SPECTRAL_HPP
#define SPECTRA_SPECTRAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "spectra/field.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

struct EngineBudget {
    std::uint64_t max_pairs = std::uint64_t{1} << 34;
};

/// f(x) = x^d over a fixed field, optionally parametrized as d = s(p^m - 1)
/// with n = 2m.
struct PowerMap {
    const Field& field;
    std::uint64_t d;
    std::optional<std::pair<std::uint64_t, std::uint32_t>> origin_sm;  // (s, m)

    static PowerMap from_exponent(const Field& fs, std::uint64_t d);
    static PowerMap from_sm(const Field& fs, std::uint64_t s, std::uint32_t m);
};

/// #{x : f(x+a) - f(x) = b}, by full enumeration. a must be nonzero.
std::uint64_t delta(const PowerMap& pm, Elem a, Elem b);

/// delta(1, b) for every b, one pass over x.
std::vector<std::uint64_t> ddt_row(const PowerMap& pm, unsigned threads = 1);

Spectrum differential_spectrum(const PowerMap& pm, unsigned threads = 1);

/// #{(x,y) : f(x)-f(y) = b, f(x+a)-f(y+a) = b}. a, b must be nonzero.
std::uint64_t beta(const PowerMap& pm, Elem a, Elem b, const EngineBudget& budget = {});

/// beta(1, b) for every b != 0 (index 0 unused), single pass over all pairs.
std::vector<std::uint64_t> beta_row(const PowerMap& pm, unsigned threads = 1,
                                    const EngineBudget& budget = {});

Spectrum boomerang_spectrum(const PowerMap& pm, unsigned threads = 1,
                            const EngineBudget& budget = {});

/// True iff max of delta(1,b) over b outside the prime subfield equals 2.
bool is_locally_apn(const PowerMap& pm);

} // namespace spectra

#endif
