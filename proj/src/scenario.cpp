#include "qrabi/scenario.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "qrabi/errors.hpp"
#include "qrabi/observables.hpp"

namespace qrabi {

namespace {

using nlohmann::json;

const std::map<std::string, Output, std::less<>> kOutputNames = {
    {"mandel", Output::Mandel},
    {"inversion", Output::Inversion},
    {"entropy", Output::Entropy},
    {"bloch", Output::Bloch},
    {"photon_distribution", Output::PhotonDistribution},
};

double default_eps_trunc() {
    if (const char* env = std::getenv("QRABI_EPS_TRUNC")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0) || v > 1e-6) {
            throw ConfigError(
                "QRABI_EPS_TRUNC must be a number in (0, 1e-6], got '" +
                std::string(env) + "'");
        }
        return v;
    }
    return 1e-12;
}

}  // namespace

std::string to_string(Output o) {
    for (const auto& [name, value] : kOutputNames) {
        if (value == o) return name;
    }
    return "?";
}

std::string to_string(RunModel m) {
    switch (m) {
        case RunModel::JC: return "JC";
        case RunModel::AJC: return "AJC";
        case RunModel::Both: return "BOTH";
    }
    return "?";
}

double Scenario::resolved_alpha() const {
    if (alpha) return *alpha;
    if (intensity) return coherent_amplitude_for_intensity(*intensity, r);
    throw ConfigError("scenario resolves neither alpha nor intensity");
}

double Scenario::resolved_intensity() const {
    if (intensity) return *intensity;
    const double a = resolved_alpha();
    const double sh = std::sinh(r);
    return a * a + sh * sh;
}

SqueezeSpec Scenario::squeeze_spec() const {
    return {resolved_alpha(), r, theta};
}

void Scenario::validate() const {
    if (intensity.has_value() == alpha.has_value()) {
        throw ConfigError("exactly one of {intensity, alpha} must be provided");
    }
    if (theta != 0.0) throw ConfigError("squeeze phase unsupported (theta must be 0)");
    if (!(r >= 0.0) || !std::isfinite(r)) throw ConfigError("r must be finite and >= 0");
    if (steps < 2) throw ConfigError("steps must be >= 2");
    if (!(tau_max > 0.0) || !(tau_max > tau_min) || !(tau_min >= 0.0)) {
        throw ConfigError("need 0 <= tau_min < tau_max");
    }
    if (!(eps_trunc > 0.0) || eps_trunc > 1e-6) {
        throw ConfigError("eps_trunc must lie in (0, 1e-6]");
    }
    if (!std::isfinite(beta) || !(xi >= 0.0)) {
        throw ConfigError("beta must be finite and xi >= 0");
    }
    if (outputs.empty()) throw ConfigError("outputs must not be empty");
    resolved_alpha();  // propagates the squeeze-photon domain error
}

Scenario parse_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("scenario document is not valid JSON: ") +
                          e.what());
    }
    if (!doc.is_object()) throw ConfigError("scenario document must be a JSON object");

    static const std::vector<std::string> known = {
        "model", "beta", "xi", "r", "intensity", "alpha", "theta",
        "tau_min", "tau_max", "steps", "eps_trunc", "outputs", "oracle_check",
        "name"};
    for (const auto& [key, _] : doc.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw ConfigError("unknown scenario key '" + key + "'");
        }
    }

    Scenario sc;
    sc.eps_trunc = default_eps_trunc();
    try {
        if (doc.contains("name")) sc.name = doc.at("name").get<std::string>();
        if (doc.contains("model")) {
            const auto m = doc.at("model").get<std::string>();
            if (m == "JC") sc.model = RunModel::JC;
            else if (m == "AJC") sc.model = RunModel::AJC;
            else if (m == "BOTH") sc.model = RunModel::Both;
            else throw ConfigError("model must be one of JC, AJC, BOTH");
        }
        if (doc.contains("beta")) sc.beta = doc.at("beta").get<double>();
        if (doc.contains("xi")) sc.xi = doc.at("xi").get<double>();
        if (!doc.contains("r")) throw ConfigError("scenario requires 'r'");
        sc.r = doc.at("r").get<double>();
        if (doc.contains("intensity")) sc.intensity = doc.at("intensity").get<double>();
        if (doc.contains("alpha")) sc.alpha = doc.at("alpha").get<double>();
        if (doc.contains("theta")) sc.theta = doc.at("theta").get<double>();
        if (doc.contains("tau_min")) sc.tau_min = doc.at("tau_min").get<double>();
        if (doc.contains("tau_max")) sc.tau_max = doc.at("tau_max").get<double>();
        if (doc.contains("steps")) sc.steps = doc.at("steps").get<int>();
        if (doc.contains("eps_trunc")) sc.eps_trunc = doc.at("eps_trunc").get<double>();
        if (doc.contains("oracle_check")) sc.oracle_check = doc.at("oracle_check").get<bool>();
        if (doc.contains("outputs")) {
            sc.outputs.clear();
            for (const auto& entry : doc.at("outputs")) {
                const auto name = entry.get<std::string>();
                const auto it = kOutputNames.find(name);
                if (it == kOutputNames.end()) {
                    throw ConfigError("unknown output '" + name + "'");
                }
                if (std::find(sc.outputs.begin(), sc.outputs.end(), it->second) ==
                    sc.outputs.end()) {
                    sc.outputs.push_back(it->second);
                }
            }
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("scenario field has the wrong type: ") +
                          e.what());
    }
    sc.validate();
    return sc;
}

Scenario scenario_from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read scenario file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    Scenario sc = parse_scenario(buf.str());
    if (sc.name == "scenario") sc.name = path.stem().string();
    return sc;
}

namespace {

struct PresetRow {
    const char* stem;
    double r;
    Output output;
    // Zoomed panels use a window around half the revival time.
    bool ringing_window;
};

// Figure panels: 1-4 Mandel Q at r = 1, 1.3, 1.4, 1.5; 5 inversion at r = 1;
// 6 the ringing-revival zoom and 8 the full window at r = 1.5; 7 photon
// distributions (a: r = 1, b: r = 1.5); 9-10 entropy at r = 1, 1.5.
constexpr PresetRow kPresets[] = {
    {"fig1", 1.0, Output::Mandel, false},
    {"fig2", 1.3, Output::Mandel, false},
    {"fig3", 1.4, Output::Mandel, false},
    {"fig4", 1.5, Output::Mandel, false},
    {"fig5", 1.0, Output::Inversion, false},
    {"fig6", 1.5, Output::Inversion, true},
    {"fig7", 0.0, Output::PhotonDistribution, false},  // r per panel below
    {"fig8", 1.5, Output::Inversion, false},
    {"fig9", 1.0, Output::Entropy, false},
    {"fig10", 1.5, Output::Entropy, false},
};

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& row : kPresets) {
            v.push_back(std::string(row.stem) + "a");
            v.push_back(std::string(row.stem) + "b");
        }
        return v;
    }();
    return names;
}

Scenario preset(const std::string& name) {
    for (const auto& row : kPresets) {
        const std::string stem = row.stem;
        if (name != stem + "a" && name != stem + "b") continue;
        const bool panel_a = name.back() == 'a';

        Scenario sc;
        sc.name = name;
        sc.model = panel_a ? RunModel::JC : RunModel::AJC;
        sc.beta = 0.0;
        sc.xi = 0.0001;
        sc.intensity = 40.0;
        sc.eps_trunc = default_eps_trunc();
        sc.outputs = {row.output};
        if (row.output == Output::PhotonDistribution) {
            // P_n and Pbar_n coincide; the panels differ in r only.
            sc.r = panel_a ? 1.0 : 1.5;
        } else {
            sc.r = row.r;
        }
        if (row.ringing_window) {
            const double half_revival = 0.5 * revival_time(*sc.intensity);
            sc.tau_min = half_revival - 10.0;
            sc.tau_max = half_revival + 10.0;
            sc.steps = 1001;
        }
        sc.validate();
        return sc;
    }
    std::string msg = "unknown preset '" + name + "'; valid presets:";
    for (const auto& n : preset_names()) msg += " " + n;
    throw ConfigError(msg);
}

std::string describe(const Scenario& sc) {
    std::ostringstream os;
    os << sc.name << ": model=" << to_string(sc.model) << " r=" << sc.r
       << " beta=" << sc.beta << " xi=" << sc.xi;
    if (sc.intensity) os << " intensity=" << *sc.intensity;
    if (sc.alpha) os << " alpha=" << *sc.alpha;
    os << " tau=[" << sc.tau_min << "," << sc.tau_max << "]x" << sc.steps
       << " outputs=";
    for (std::size_t i = 0; i < sc.outputs.size(); ++i) {
        if (i) os << "+";
        os << to_string(sc.outputs[i]);
    }
    return os.str();
}

}  // namespace qrabi
