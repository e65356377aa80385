// Command-line front end: runs JC/AJC squeezed-light simulations from
// scenario documents or compiled-in figure presets, with optional validation
// against the truncated-Fock matrix propagator.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <thread>
#include <vector>

#include "qrabi/errors.hpp"
#include "qrabi/run.hpp"
#include "qrabi/scenario.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitOracle = 3;
constexpr int kExitIo = 4;

struct Task {
    qrabi::Scenario scenario;
    fs::path out_dir;
};

struct TaskResult {
    std::string message;
    bool oracle_failed = false;
    int exit_code = 0;
};

TaskResult run_task(const Task& task) {
    TaskResult result;
    try {
        const auto manifest = qrabi::run(task.scenario, task.out_dir);
        result.message = task.scenario.name + ": wrote " +
                         manifest.manifest_path.string() + " (n_max " +
                         std::to_string(manifest.n_max) + ")";
        if (manifest.oracle_checked) {
            result.oracle_failed = !manifest.oracle_pass;
            result.message += manifest.oracle_pass ? ", oracle check passed"
                                                   : ", ORACLE CHECK FAILED";
        }
    } catch (const qrabi::IoError& e) {
        result.message = task.scenario.name + ": I/O error: " + e.what();
        result.exit_code = kExitIo;
    } catch (const std::exception& e) {
        result.message = task.scenario.name + ": error: " + e.what();
        result.exit_code = kExitConfig;
    }
    return result;
}

int run_tasks(std::vector<Task>& tasks, int jobs) {
    std::vector<TaskResult> results(tasks.size());
    if (jobs <= 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = run_task(tasks[i]);
    } else {
        std::atomic<std::size_t> next{0};
        const int workers = std::min<int>(jobs, static_cast<int>(tasks.size()));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < tasks.size();
                     i = next.fetch_add(1)) {
                    results[i] = run_task(tasks[i]);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    int exit_code = 0;
    bool oracle_failed = false;
    for (const auto& r : results) {
        std::cout << r.message << '\n';
        if (r.exit_code != 0 && exit_code == 0) exit_code = r.exit_code;
        oracle_failed = oracle_failed || r.oracle_failed;
    }
    if (exit_code == 0 && oracle_failed) exit_code = kExitOracle;
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Jaynes-Cummings / anti-Jaynes-Cummings dynamics with "
                 "squeezed coherent light"};
    app.require_subcommand(1);

    std::vector<std::string> scenario_files;
    std::vector<std::string> preset_list;
    std::string out_dir;
    bool force_oracle = false;
    int jobs = 1;

    auto* simulate = app.add_subcommand("simulate", "Run scenario documents");
    simulate->add_option("scenarios", scenario_files, "Scenario JSON file(s)")
        ->required()
        ->check(CLI::ExistingFile);
    simulate->add_option("--out", out_dir, "Output directory")->required();
    simulate->add_flag("--oracle", force_oracle,
                       "Validate against the matrix propagator");
    simulate->add_option("--jobs", jobs, "Parallel scenario runs")
        ->check(CLI::PositiveNumber);

    auto* preset_cmd = app.add_subcommand("preset", "Run figure preset(s)");
    preset_cmd->add_option("names", preset_list, "Preset name(s), e.g. fig1a")
        ->required();
    preset_cmd->add_option("--out", out_dir, "Output directory")->required();
    preset_cmd->add_flag("--oracle", force_oracle,
                         "Validate against the matrix propagator");
    preset_cmd->add_option("--jobs", jobs, "Parallel preset runs")
        ->check(CLI::PositiveNumber);

    auto* list_cmd = app.add_subcommand("list-presets", "List preset names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (list_cmd->parsed()) {
            for (const auto& name : qrabi::preset_names()) {
                std::cout << qrabi::describe(qrabi::preset(name)) << '\n';
            }
            return 0;
        }

        std::vector<Task> tasks;
        if (simulate->parsed()) {
            for (const auto& file : scenario_files) {
                auto sc = qrabi::scenario_from_file(file);
                if (force_oracle) sc.oracle_check = true;
                // A single scenario writes directly into --out; several get
                // one subdirectory each.
                fs::path dir = scenario_files.size() == 1
                                   ? fs::path(out_dir)
                                   : fs::path(out_dir) / sc.name;
                tasks.push_back({std::move(sc), std::move(dir)});
            }
        } else {
            for (const auto& name : preset_list) {
                auto sc = qrabi::preset(name);
                if (force_oracle) sc.oracle_check = true;
                tasks.push_back({std::move(sc), fs::path(out_dir) / name});
            }
        }
        return run_tasks(tasks, jobs);
    } catch (const qrabi::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}
