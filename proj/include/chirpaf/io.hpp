// io.hpp - data-file emission: CSV with round-trip decimal formatting,
// float32 raw grids, JSON metadata and run manifests.

#pragma once

#include <string>
#include <vector>

#include "chirpaf/ambiguity.hpp"
#include "chirpaf/spectrum.hpp"

namespace chirpaf {

/// Full round-trip decimal formatting (17 significant digits).
std::string format_full(double v);

/// Field CSV: axis columns, re, im, abs and abs^(1/2) per node.
void write_field_csv(const ComplexField& field, const std::string& path);

/// Raw little-endian row-major float32 |A| grid.
void write_field_f32(const ComplexField& field, const std::string& path);

/// JSON sidecar: scenario, axes, dimensions, nan count.
void write_field_meta(const ComplexField& field, const std::string& path,
                      const std::string& data_note = {});

/// Spectrum CSV: k_tau, re, im, abs.
void write_spectrum_csv(const SpectrumGrid& grid, const std::string& path);

struct RunManifest {
    std::string tool_version;
    std::string command;
    std::vector<std::string> arguments;
    std::uint64_t scenario_hash = 0;
    std::uint64_t seed = 0;
    int threads = 0;
    std::vector<std::string> outputs;
    double wall_time_s = 0.0;

    void write(const std::string& path) const;
};

}  // namespace chirpaf
