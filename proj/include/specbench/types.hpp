#pragma once

#include "errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace specbench {

/// Mass-to-charge ratio in Thomson.
using Mz = double;

/// Abundance in arbitrary units.
using Intensity = double;

/// Ionization polarity. Metadata only: scorers never read it, but the
/// benchmark runner can partition by it.
enum class Polarity : std::int8_t {
    unknown = 0,
    positive = 1,
    negative = -1,
};

inline std::string to_string(Polarity p) {
    switch (p) {
        case Polarity::positive: return "positive";
        case Polarity::negative: return "negative";
        default: return "unknown";
    }
}

inline Polarity polarity_from_string(std::string_view s) {
    if (s == "positive") return Polarity::positive;
    if (s == "negative") return Polarity::negative;
    if (s == "unknown") return Polarity::unknown;
    throw FormatError("invalid polarity: " + std::string(s));
}

/// One fragment peak.
struct Peak {
    Mz mz = 0.0;
    Intensity intensity = 0.0;

    bool operator==(const Peak&) const = default;
};

/// A single MS/MS spectrum. Peaks are kept strictly ascending in m/z;
/// call canonicalize() after any manual edit to restore the invariant.
struct Spectrum {
    std::string id;
    Mz precursor_mz = 0.0;
    Polarity polarity = Polarity::unknown;
    std::vector<Peak> peaks;
    std::optional<std::string> sample_id;
    std::optional<std::string> analyte_key; ///< ground-truth 2D structure key

    bool operator==(const Spectrum&) const = default;

    [[nodiscard]] std::size_t size() const noexcept { return peaks.size(); }

    [[nodiscard]] Intensity total_intensity() const {
        Intensity t = 0;
        for (const auto& p : peaks) t += p.intensity;
        return t;
    }

    [[nodiscard]] Intensity max_intensity() const {
        Intensity m = 0;
        for (const auto& p : peaks) m = std::max(m, p.intensity);
        return m;
    }

    [[nodiscard]] bool has_positive_intensity() const {
        return std::any_of(peaks.begin(), peaks.end(),
                           [](const Peak& p) { return p.intensity > 0; });
    }

    /// Sort peaks ascending by m/z and merge duplicates at identical m/z
    /// by summing their intensities.
    void canonicalize() {
        std::sort(peaks.begin(), peaks.end(),
                  [](const Peak& a, const Peak& b) { return a.mz < b.mz; });
        std::vector<Peak> merged;
        merged.reserve(peaks.size());
        for (const auto& p : peaks) {
            if (!merged.empty() && merged.back().mz == p.mz) {
                merged.back().intensity += p.intensity;
            } else {
                merged.push_back(p);
            }
        }
        peaks = std::move(merged);
    }

    [[nodiscard]] bool is_canonical() const {
        for (std::size_t i = 1; i < peaks.size(); ++i) {
            if (!(peaks[i - 1].mz < peaks[i].mz)) return false;
        }
        return true;
    }
};

/// One chemical compound keyed by its 2D structure.
struct AnalyteRecord {
    std::string key2d;                       ///< first 14 InChIKey characters
    std::optional<std::string> inchikey_full; ///< full 27-character key, if known
    std::string smiles;
    std::uint64_t registry_id = 0;           ///< PubChem-CID-like numeric id
    std::string name;

    bool operator==(const AnalyteRecord&) const = default;
};

/// Throws FormatError unless `key` is 14 uppercase letters.
inline void validate_key2d(const std::string& key) {
    if (key.size() != 14)
        throw FormatError("key2d must be 14 characters, got " + std::to_string(key.size()));
    for (char c : key) {
        if (c < 'A' || c > 'Z')
            throw FormatError("key2d must be uppercase A-Z: " + key);
    }
}

/// A curated reference library: analytes plus their spectra.
///
/// spectra_by_analyte lists spectrum ids in ascending order so that a
/// serialize/parse round trip reproduces the structure exactly.
struct ReferenceLibrary {
    std::map<std::string, AnalyteRecord> analytes;  ///< key2d -> record
    std::map<std::string, Spectrum> spectra;        ///< spectrum id -> spectrum
    std::map<std::string, std::vector<std::string>> spectra_by_analyte;

    bool operator==(const ReferenceLibrary&) const = default;

    [[nodiscard]] std::size_t n_analytes() const noexcept { return analytes.size(); }
    [[nodiscard]] std::size_t n_spectra() const noexcept { return spectra.size(); }

    /// Insert or merge an analyte. Identical duplicates merge silently;
    /// a duplicate key2d with a different SMILES is a conflict.
    void add_analyte(const AnalyteRecord& rec) {
        validate_key2d(rec.key2d);
        if (rec.inchikey_full && rec.inchikey_full->substr(0, 14) != rec.key2d)
            throw FormatError("inchikey prefix does not match key2d for " + rec.key2d);
        auto [it, inserted] = analytes.emplace(rec.key2d, rec);
        if (!inserted && it->second.smiles != rec.smiles)
            throw ConflictError("analyte " + rec.key2d + " re-declared with conflicting smiles '" +
                                it->second.smiles + "' vs '" + rec.smiles + "'");
    }

    /// Insert a spectrum; duplicate ids are an integrity violation.
    /// Analyte linkage is validated later by validate().
    void add_spectrum(Spectrum s) {
        if (spectra.count(s.id))
            throw IntegrityError("duplicate spectrum id: " + s.id);
        if (s.analyte_key) {
            auto& ids = spectra_by_analyte[*s.analyte_key];
            ids.insert(std::upper_bound(ids.begin(), ids.end(), s.id), s.id);
        }
        spectra.emplace(s.id, std::move(s));
    }

    /// Check referential integrity; throws IntegrityError listing every
    /// offending spectrum id.
    void validate() const {
        std::string offenders;
        for (const auto& [id, s] : spectra) {
            if (!s.analyte_key || !analytes.count(*s.analyte_key)) {
                if (!offenders.empty()) offenders += ", ";
                offenders += id;
            }
        }
        if (!offenders.empty())
            throw IntegrityError("spectra reference unknown analytes: " + offenders);
    }
};

/// Fixed-dimension real vector attached to a spectrum or sample.
/// Values are 32-bit on disk, so they are stored as floats in memory too.
struct EmbeddingVector {
    std::vector<float> values;

    EmbeddingVector() = default;
    explicit EmbeddingVector(std::vector<float> v) : values(std::move(v)) {}

    bool operator==(const EmbeddingVector&) const = default;

    [[nodiscard]] std::size_t dim() const noexcept { return values.size(); }

    [[nodiscard]] bool all_finite() const {
        return std::all_of(values.begin(), values.end(),
                           [](float v) { return std::isfinite(v); });
    }

    [[nodiscard]] double norm() const {
        double s = 0;
        for (float v : values) s += static_cast<double>(v) * v;
        return std::sqrt(s);
    }
};

using EmbeddingMap = std::map<std::string, EmbeddingVector>;

/// m/z tolerance, absolute (Th) or relative (ppm).
struct Tolerance {
    double value = 0.01;
    bool is_ppm = false;

    static Tolerance th(double v) { return {v, false}; }
    static Tolerance ppm(double v) { return {v, true}; }

    [[nodiscard]] double absolute_at(Mz mz) const {
        return is_ppm ? mz * value * 1e-6 : value;
    }

    [[nodiscard]] bool matches(Mz a, Mz b) const {
        return std::abs(a - b) <= absolute_at(0.5 * (a + b));
    }
};

} // namespace specbench
