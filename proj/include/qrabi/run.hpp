#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qrabi/scenario.hpp"

namespace qrabi {

struct OracleCheck {
    std::string model;
    std::string observable;
    double max_abs_diff = 0.0;
    double argmax_tau = 0.0;
    double tolerance = 0.0;
    bool pass = true;
};

struct RunManifest {
    std::filesystem::path manifest_path;
    std::vector<std::string> files;
    int n_max = 0;
    double tail_mass = 0.0;
    bool oracle_checked = false;
    bool oracle_pass = true;
    std::vector<OracleCheck> oracle_checks;
};

// Runs the scenario, writing one CSV (12 significant digits) plus a gnuplot
// script per requested output into out_dir, and a manifest.json recording
// files, parameters, truncation and any oracle comparison. Identical
// scenarios produce byte-identical outputs.
RunManifest run(const Scenario& sc, const std::filesystem::path& out_dir);

}  // namespace qrabi
