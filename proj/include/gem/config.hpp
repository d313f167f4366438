#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gem/types.hpp"

namespace gem {

using Json = nlohmann::json;

enum class ProtocolKind { filo, fifo_three_level, fifo_two_level_steep, arbitrary, multi_echo, backward };

std::string to_string(ProtocolKind k);
ProtocolKind protocol_kind_from_string(const std::string& s);

// Request block translated into gradient/coupling schedules by the
// protocols module. Fields not used by a given kind are ignored.
struct ProtocolRequest {
    ProtocolKind kind = ProtocolKind::filo;
    double eta0 = 0.0;          // writing gradient slope (defaults from gradient block)
    double omega0 = 0.0;        // coupling amplitude (defaults from ensemble.omega_ref)
    double tau_flip = 0.0;      // first gradient flip
    double tau_second = 0.0;    // second flip (0 = choose automatically)
    double steepness = 1.0;     // fifo_two_level_steep
    int n_echoes = 2;           // multi_echo
    double echo_spacing = 0.0;  // multi_echo flip spacing (0 = automatic)
    std::vector<int> recall_order; // arbitrary (1-based pulse indices)
};

struct OutputOptions {
    std::string directory = "out";
    bool emit_fields = true;
    bool emit_polariton = true;
};

struct Config {
    UnitMode units = UnitMode::dimensionless;
    EnsembleParams ensemble;
    GradientProfile gradient;
    CouplingProfile coupling;
    PulseSpec pulse;
    SimulationGrid grid;
    std::optional<ProtocolRequest> protocol;
    OutputOptions output;
    // Defaulting decisions applied while loading, echoed into the manifest.
    std::vector<std::string> provenance;

    void validate();
};

Config parse_config(const Json& j);
Config load_config(const std::string& path);
Json serialize_config(const Config& c);

// FNV-1a 64-bit hash of the canonical serialized form.
std::string config_hash(const Config& c);

} // namespace gem
