#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qrabi/dynamics.hpp"

namespace qrabi {

enum class RunModel { JC, AJC, Both };

enum class Output { Mandel, Inversion, Entropy, Bloch, PhotonDistribution };

std::string to_string(Output o);
std::string to_string(RunModel m);

// A fully resolved simulation request. Exactly one of {intensity, alpha} is
// set; theta must be 0. The time grid is `steps` points on [tau_min, tau_max].
struct Scenario {
    std::string name = "scenario";
    RunModel model = RunModel::JC;
    double beta = 0.0;
    double xi = 0.0001;
    double r = 0.0;
    std::optional<double> intensity;
    std::optional<double> alpha;
    double theta = 0.0;
    double tau_min = 0.0;
    double tau_max = 100.0;
    int steps = 5001;
    double eps_trunc = 1e-12;
    std::vector<Output> outputs = {Output::Mandel, Output::Inversion,
                                   Output::Entropy};
    bool oracle_check = false;

    double resolved_alpha() const;
    double resolved_intensity() const;
    SqueezeSpec squeeze_spec() const;

    // Throws ConfigError (or propagates std::domain_error when the squeeze
    // photons exceed the requested intensity).
    void validate() const;
};

// Parses and validates the JSON scenario document; rejects unknown keys.
// QRABI_EPS_TRUNC, when set, overrides the default eps_trunc (an explicit
// value in the document still wins).
Scenario parse_scenario(const std::string& json_text);

Scenario scenario_from_file(const std::filesystem::path& path);

// Compiled-in parameter sets reproducing the reference figure panels
// fig1a..fig10b ('a' = JC, 'b' = AJC). Throws ConfigError for unknown names,
// listing the valid ones.
Scenario preset(const std::string& name);

const std::vector<std::string>& preset_names();

// One-line parameter summary for list-presets.
std::string describe(const Scenario& sc);

}  // namespace qrabi
