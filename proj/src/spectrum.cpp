#include "spectra/spectrum.hpp"

#include "spectra/errors.hpp"

namespace spectra {

std::uint64_t differential_uniformity(const Spectrum& s) {
    if (s.kind != SpectrumKind::differential)
        throw Error("differential_uniformity requires a differential spectrum");
    if (s.entries.empty()) return 0;
    return s.entries.rbegin()->first;
}

bool verify_identities(const Spectrum& s, std::uint64_t field_order) {
    std::uint64_t total = 0, weighted = 0;
    for (auto [i, freq] : s.entries) {
        total += freq;
        weighted += i * freq;
    }
    if (s.kind == SpectrumKind::differential)
        return total == field_order && weighted == field_order;
    return total == field_order - 1;
}

nlohmann::ordered_json spectrum_to_json(const Spectrum& s) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::object();
    constexpr std::uint64_t kExactDoubleMax = std::uint64_t{1} << 53;
    for (auto [i, freq] : s.entries) {  // std::map iterates keys ascending
        if (freq > kExactDoubleMax)
            entries[std::to_string(i)] = std::to_string(freq);
        else
            entries[std::to_string(i)] = freq;
    }
    return nlohmann::ordered_json{
        {"kind", s.kind == SpectrumKind::differential ? "differential" : "boomerang"},
        {"entries", entries}};
}

} // namespace spectra
