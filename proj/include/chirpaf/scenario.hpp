// scenario.hpp - the (wave number, curve, true source) bundle every
// evaluation is parameterized by, plus its JSON description format.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "chirpaf/geometry.hpp"
#include "chirpaf/wavefield.hpp"

namespace chirpaf {

struct Scenario {
    Wavenumber k{};
    ArrayCurve curve = ArrayCurve::line_segment(1.0);
    Position source{};
    std::optional<int> antenna_count;  // N, when the file describes a discrete array

    SamplingGrid grid(NodePlacement placement = NodePlacement::midpoint) const;
};

/// Parses a scenario description:
///   {"curve": {"kind":"circular","R_ca":1000,"psi":3.141592653589793}
///             | {"kind":"ula","L":500},
///    "N": 256,                      // optional
///    "k_s": 6.283185307179586,      // optional, default 2*pi
///    "source": [x, y] | {"R":1000,"theta":1.5707963267948966},
///    "lambda_s": 1.0}               // optional unit scale for all lengths
/// Lengths are divided by lambda_s so the loaded scenario is in wavelength
/// units. Throws std::runtime_error with a descriptive message on bad input.
Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& json_text);

/// Canonical re-serialization of a scenario (used for hashing and metadata).
std::string scenario_to_json(const Scenario& s);

/// FNV-1a hash of the canonical serialization.
std::uint64_t scenario_hash(const Scenario& s);

}  // namespace chirpaf
