#ifndef SPECTRA_SPECTRUM_HPP
#define SPECTRA_SPECTRUM_HPP

#include <cstdint>
#include <map>

#include <json.hpp>

namespace spectra {

enum class SpectrumKind { differential, boomerang };

/// Histogram mapping a solution-count value i to its frequency (omega_i or
/// nu_i). Zero-frequency entries are omitted.
struct Spectrum {
    SpectrumKind kind = SpectrumKind::differential;
    std::map<std::uint64_t, std::uint64_t> entries;

    bool operator==(const Spectrum&) const = default;
};

/// Max value with nonzero frequency. Requires differential kind.
std::uint64_t differential_uniformity(const Spectrum& s);

/// Differential kind: sum of frequencies = p^n and sum of i*frequency = p^n.
/// Boomerang kind: sum of frequencies = p^n - 1.
bool verify_identities(const Spectrum& s, std::uint64_t field_order);

/// {"kind": ..., "entries": {"<i>": freq, ...}} with keys in ascending numeric
/// order. Counts above 2^53 are emitted as decimal strings.
nlohmann::ordered_json spectrum_to_json(const Spectrum& s);

} // namespace spectra

#endif
