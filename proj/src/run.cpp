#include "qrabi/run.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "qrabi/errors.hpp"
#include "qrabi/oracle.hpp"

namespace qrabi {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::ofstream open_for_write(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

void write_series_csv(const fs::path& path, const TimeSeries& series) {
    auto out = open_for_write(path);
    out << "tau,value\n";
    for (std::size_t i = 0; i < series.taus.size(); ++i) {
        out << fmt12(series.taus[i]) << ',' << fmt12(series.values[i]) << '\n';
    }
    if (!out.good()) throw IoError("write failed for " + path.string());
}

void write_distribution_csv(const fs::path& path,
                            const PhotonDistribution& dist) {
    auto out = open_for_write(path);
    out << "n,P_n\n";
    for (int n = 0; n <= dist.n_max; ++n) {
        out << n << ',' << fmt12(dist.probs[n]) << '\n';
    }
    if (!out.good()) throw IoError("write failed for " + path.string());
}

void write_bloch_csv(const fs::path& path, const std::vector<double>& taus,
                     const std::vector<BlochVector>& blochs) {
    auto out = open_for_write(path);
    out << "tau,rx,ry,rz\n";
    for (std::size_t i = 0; i < taus.size(); ++i) {
        out << fmt12(taus[i]) << ',' << fmt12(blochs[i].rx) << ','
            << fmt12(blochs[i].ry) << ',' << fmt12(blochs[i].rz) << '\n';
    }
    if (!out.good()) throw IoError("write failed for " + path.string());
}

struct PlotAxes {
    const char* ylabel;
    const char* yrange;  // gnuplot range or nullptr for auto
    bool boxes;
};

PlotAxes axes_for(Output output) {
    switch (output) {
        case Output::Mandel: return {"Q({/Symbol t})", nullptr, false};
        case Output::Inversion: return {"W({/Symbol t})", "[-1:1]", false};
        case Output::Entropy: return {"S_a({/Symbol t})", "[0:1]", false};
        case Output::Bloch: return {"Bloch components", "[-1:1]", false};
        case Output::PhotonDistribution: return {"P(n)", nullptr, true};
    }
    return {"value", nullptr, false};
}

void write_plot_script(const fs::path& path, const std::string& csv_name,
                       Output output, const std::string& title) {
    const PlotAxes axes = axes_for(output);
    auto out = open_for_write(path);
    out << "set datafile separator ','\n"
        << "set key autotitle columnhead\n"
        << "set grid\n"
        << "set title '" << title << "'\n";
    if (output == Output::PhotonDistribution) {
        out << "set xlabel 'n'\n";
    } else {
        out << "set xlabel '{/Symbol t}'\n";
    }
    out << "set ylabel '" << axes.ylabel << "'\n";
    if (axes.yrange) out << "set yrange " << axes.yrange << "\n";
    if (output == Output::Bloch) {
        out << "plot '" << csv_name << "' using 1:2 with lines, '' using 1:3 "
               "with lines, '' using 1:4 with lines\n";
    } else if (axes.boxes) {
        out << "set boxwidth 0.8\nset style fill solid 0.6\n"
            << "plot '" << csv_name << "' using 1:2 with boxes\n";
    } else {
        out << "plot '" << csv_name << "' using 1:2 with lines\n";
    }
    if (!out.good()) throw IoError("write failed for " + path.string());
}

std::vector<ModelKind> models_of(const Scenario& sc) {
    switch (sc.model) {
        case RunModel::JC: return {ModelKind::JC};
        case RunModel::AJC: return {ModelKind::AJC};
        case RunModel::Both: return {ModelKind::JC, ModelKind::AJC};
    }
    return {};
}

std::string file_stem(Output output, const Scenario& sc, ModelKind kind) {
    std::string stem = to_string(output);
    if (sc.model == RunModel::Both && output != Output::PhotonDistribution) {
        stem += kind == ModelKind::JC ? "_jc" : "_ajc";
    }
    return stem;
}

// Closed-form vs matrix-propagation comparison over the scenario grid.
std::vector<OracleCheck> oracle_comparison(const Scenario& sc,
                                           const PhotonDistribution& dist,
                                           const CouplingConfig& cfg,
                                           const std::vector<double>& taus) {
    const double tolerance = sc.resolved_intensity() <= 10.0 ? 1e-8 : 1e-6;
    const int n_cut = dist.n_max + 8;
    const auto kind = cfg.kind == ModelKind::JC ? HamiltonianKind::JC
                                                : HamiltonianKind::AJC;
    const Propagator prop(build_hamiltonian(kind, cfg, n_cut));
    const auto initial = initial_ground_state_vector(dist, n_cut);

    OracleCheck w{to_string(sc.model), "W", 0.0, 0.0, tolerance, true};
    OracleCheck q = w, s = w, p = w;
    q.observable = "Q";
    s.observable = "S_a";
    p.observable = "p_n";
    w.model = q.model = s.model = p.model =
        cfg.kind == ModelKind::JC ? "JC" : "AJC";

    auto track = [](OracleCheck& chk, double diff, double tau) {
        if (diff > chk.max_abs_diff) {
            chk.max_abs_diff = diff;
            chk.argmax_tau = tau;
        }
    };

    for (double tau : taus) {
        const auto state = prop.propagate(initial, tau);
        const auto p_oracle = field_diagonal(state);
        const auto bloch_oracle = bloch_from(state);

        const auto p_closed = reduced_field_diagonal(dist, cfg, tau);
        const auto bloch_closed = bloch_vector(dist, cfg, tau);

        for (std::size_t n = 0; n < p_oracle.size(); ++n) {
            const double closed_val = n < p_closed.size() ? p_closed[n] : 0.0;
            track(p, std::abs(closed_val - p_oracle[n]), tau);
        }
        track(w, std::abs(bloch_closed.rz - bloch_oracle.rz), tau);
        track(s, std::abs(entropy(bloch_closed) - entropy(bloch_oracle)), tau);
        const double q_closed = mandel_q(p_closed, cfg.kind, tau).q;
        const double q_oracle = mandel_q(p_oracle, cfg.kind, tau).q;
        track(q, std::abs(q_closed - q_oracle), tau);
    }
    for (OracleCheck* chk : {&w, &q, &s, &p}) {
        chk->pass = chk->max_abs_diff < tolerance;
    }
    return {w, q, s, p};
}

}  // namespace

RunManifest run(const Scenario& sc, const fs::path& out_dir) {
    sc.validate();
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir.string() +
                          ": " + ec.message());

    const auto dist = photon_number_distribution(sc.squeeze_spec(), sc.eps_trunc);
    const auto taus = tau_grid(sc.tau_min, sc.tau_max, sc.steps);

    RunManifest manifest;
    manifest.n_max = dist.n_max;
    manifest.tail_mass = dist.tail_mass;

    auto add_output = [&](const std::string& csv_name, Output output,
                          const std::string& title, auto&& writer) {
        writer(out_dir / csv_name);
        manifest.files.push_back(csv_name);
        const std::string gp_name =
            csv_name.substr(0, csv_name.size() - 4) + ".gp";
        write_plot_script(out_dir / gp_name, csv_name, output, title);
        manifest.files.push_back(gp_name);
    };

    bool photon_distribution_written = false;
    for (ModelKind kind : models_of(sc)) {
        CouplingConfig cfg{kind, sc.beta, sc.xi, 1.0};
        const std::string model_name = kind == ModelKind::JC ? "JC" : "AJC";
        for (Output output : sc.outputs) {
            const std::string stem = file_stem(output, sc, kind);
            const std::string csv = stem + ".csv";
            const std::string title = sc.name + " (" + model_name + ")";
            switch (output) {
                case Output::Mandel:
                    add_output(csv, output, title, [&](const fs::path& p) {
                        write_series_csv(p, mandel_series(dist, cfg, taus));
                    });
                    break;
                case Output::Inversion:
                    add_output(csv, output, title, [&](const fs::path& p) {
                        write_series_csv(p, inversion_series(dist, cfg, taus));
                    });
                    break;
                case Output::Entropy:
                    add_output(csv, output, title, [&](const fs::path& p) {
                        write_series_csv(p, entropy_series(dist, cfg, taus));
                    });
                    break;
                case Output::Bloch:
                    add_output(csv, output, title, [&](const fs::path& p) {
                        std::vector<BlochVector> blochs;
                        blochs.reserve(taus.size());
                        for (double tau : taus) {
                            blochs.push_back(bloch_vector(dist, cfg, tau));
                        }
                        write_bloch_csv(p, taus, blochs);
                    });
                    break;
                case Output::PhotonDistribution:
                    // Model-independent: P_n and Pbar_n coincide.
                    if (!photon_distribution_written) {
                        add_output(csv, output, sc.name, [&](const fs::path& p) {
                            write_distribution_csv(p, dist);
                        });
                        photon_distribution_written = true;
                    }
                    break;
            }
        }
        if (sc.oracle_check) {
            auto checks = oracle_comparison(sc, dist, cfg, taus);
            manifest.oracle_checked = true;
            for (auto& chk : checks) {
                manifest.oracle_pass = manifest.oracle_pass && chk.pass;
                manifest.oracle_checks.push_back(std::move(chk));
            }
        }
    }

    if (manifest.oracle_checked) {
        auto out = open_for_write(out_dir / "oracle_report.txt");
        out << "closed-form vs truncated-Fock propagation, scenario " << sc.name
            << "\n";
        out << "model observable   max_abs_diff      at_tau        tolerance  verdict\n";
        char line[160];
        for (const auto& chk : manifest.oracle_checks) {
            std::snprintf(line, sizeof line, "%-5s %-11s %-17.6e %-13.6g %-10.1e %s\n",
                          chk.model.c_str(), chk.observable.c_str(),
                          chk.max_abs_diff, chk.argmax_tau, chk.tolerance,
                          chk.pass ? "pass" : "FAIL");
            out << line;
        }
        manifest.files.push_back("oracle_report.txt");
    }

    std::sort(manifest.files.begin(), manifest.files.end());

    ordered_json doc;
    doc["scenario"] = {
        {"name", sc.name},
        {"model", to_string(sc.model)},
        {"beta", sc.beta},
        {"xi", sc.xi},
        {"r", sc.r},
        {"alpha", sc.resolved_alpha()},
        {"intensity", sc.resolved_intensity()},
        {"theta", sc.theta},
        {"tau_min", sc.tau_min},
        {"tau_max", sc.tau_max},
        {"steps", sc.steps},
        {"eps_trunc", sc.eps_trunc},
        {"oracle_check", sc.oracle_check},
    };
    {
        std::vector<std::string> names;
        for (Output o : sc.outputs) names.push_back(to_string(o));
        doc["scenario"]["outputs"] = names;
    }
    doc["truncation"] = {
        {"n_max", dist.n_max},
        {"tail_mass", dist.tail_mass},
    };
    doc["files"] = manifest.files;
    if (manifest.oracle_checked) {
        ordered_json checks = ordered_json::array();
        for (const auto& chk : manifest.oracle_checks) {
            checks.push_back({{"model", chk.model},
                              {"observable", chk.observable},
                              {"max_abs_diff", chk.max_abs_diff},
                              {"argmax_tau", chk.argmax_tau},
                              {"tolerance", chk.tolerance},
                              {"pass", chk.pass}});
        }
        doc["oracle"] = {{"pass", manifest.oracle_pass}, {"checks", checks}};
    }

    manifest.manifest_path = out_dir / "manifest.json";
    auto out = open_for_write(manifest.manifest_path);
    out << doc.dump(2) << '\n';
    if (!out.good()) throw IoError("write failed for " +
                                   manifest.manifest_path.string());
    return manifest;
}

}  // namespace qrabi
