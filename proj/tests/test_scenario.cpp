#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "qrabi/errors.hpp"
#include "qrabi/observables.hpp"
#include "qrabi/scenario.hpp"

using namespace qrabi;

TEST_CASE("minimal scenario gets defaults") {
    const auto sc = parse_scenario(R"({"model":"JC","r":1,"intensity":40})");
    CHECK(sc.model == RunModel::JC);
    CHECK(sc.r == 1.0);
    CHECK(sc.intensity == 40.0);
    CHECK(sc.beta == 0.0);
    CHECK(sc.xi == 0.0001);
    CHECK(sc.theta == 0.0);
    CHECK(sc.tau_min == 0.0);
    CHECK(sc.tau_max == 100.0);
    CHECK(sc.steps == 5001);
    CHECK(sc.eps_trunc == 1e-12);
    CHECK(sc.oracle_check == false);
    REQUIRE(sc.outputs.size() == 3);
    CHECK(sc.outputs[0] == Output::Mandel);
    CHECK(sc.outputs[1] == Output::Inversion);
    CHECK(sc.outputs[2] == Output::Entropy);
}

TEST_CASE("full scenario parse") {
    const auto sc = parse_scenario(R"({
        "name": "custom",
        "model": "BOTH",
        "r": 0.5,
        "alpha": 2.0,
        "beta": 0.1,
        "xi": 0.002,
        "theta": 0.0,
        "tau_min": 5.0,
        "tau_max": 25.0,
        "steps": 201,
        "eps_trunc": 1e-10,
        "outputs": ["entropy", "bloch", "photon_distribution"],
        "oracle_check": true
    })");
    CHECK(sc.name == "custom");
    CHECK(sc.model == RunModel::Both);
    CHECK(sc.alpha == 2.0);
    CHECK(!sc.intensity.has_value());
    CHECK(sc.tau_min == 5.0);
    CHECK(sc.steps == 201);
    CHECK(sc.eps_trunc == 1e-10);
    CHECK(sc.oracle_check);
    CHECK(sc.outputs.size() == 3);
    CHECK(sc.resolved_alpha() == 2.0);
    const double sh = std::sinh(0.5);
    CHECK(sc.resolved_intensity() == doctest::Approx(4.0 + sh * sh));
}

TEST_CASE("scenario rejections") {
    CHECK_THROWS_WITH_AS(
        parse_scenario(R"({"model":"JC","r":1,"intensity":40,"theta":0.3})"),
        "squeeze phase unsupported (theta must be 0)", ConfigError);
    CHECK_THROWS_AS(
        parse_scenario(R"({"model":"JC","r":1,"intensity":40,"alpha":2})"),
        ConfigError);
    CHECK_THROWS_AS(parse_scenario(R"({"model":"JC","r":1})"), ConfigError);
    CHECK_THROWS_AS(
        parse_scenario(R"({"model":"JC","r":1,"intensity":40,"speed":3})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_scenario(R"({"model":"XY","r":1,"intensity":40})"), ConfigError);
    CHECK_THROWS_AS(
        parse_scenario(R"({"model":"JC","r":1,"intensity":40,"steps":1})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_scenario(R"({"model":"JC","r":1,"intensity":40,"eps_trunc":0})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_scenario(R"({"model":"JC","r":1,"intensity":40,"eps_trunc":1e-3})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_scenario(R"({"model":"JC","r":-1,"intensity":40})"), ConfigError);
    CHECK_THROWS_AS(
        parse_scenario(R"({"model":"JC","r":1,"intensity":40,"outputs":["wigner"]})"),
        ConfigError);
    CHECK_THROWS_AS(parse_scenario("not json"), ConfigError);
    CHECK_THROWS_AS(parse_scenario(R"({"model":"JC","r":1,"steps":"many",
        "intensity":40})"), ConfigError);

    // sinh^2(2) = 13.15 exceeds intensity 10: domain error propagates.
    CHECK_THROWS_AS(parse_scenario(R"({"model":"JC","r":2,"intensity":10})"),
                    std::domain_error);
}

TEST_CASE("eps_trunc environment override") {
    setenv("QRABI_EPS_TRUNC", "1e-9", 1);
    const auto sc = parse_scenario(R"({"model":"JC","r":1,"intensity":40})");
    CHECK(sc.eps_trunc == 1e-9);
    const auto explicit_wins = parse_scenario(
        R"({"model":"JC","r":1,"intensity":40,"eps_trunc":1e-11})");
    CHECK(explicit_wins.eps_trunc == 1e-11);
    const auto pre = preset("fig1a");
    CHECK(pre.eps_trunc == 1e-9);

    setenv("QRABI_EPS_TRUNC", "banana", 1);
    CHECK_THROWS_AS(parse_scenario(R"({"model":"JC","r":1,"intensity":40})"),
                    ConfigError);
    unsetenv("QRABI_EPS_TRUNC");
}

TEST_CASE("preset table fidelity") {
    struct Row {
        const char* name;
        RunModel model;
        double r;
        Output output;
    };
    const Row rows[] = {
        {"fig1a", RunModel::JC, 1.0, Output::Mandel},
        {"fig1b", RunModel::AJC, 1.0, Output::Mandel},
        {"fig2a", RunModel::JC, 1.3, Output::Mandel},
        {"fig2b", RunModel::AJC, 1.3, Output::Mandel},
        {"fig3a", RunModel::JC, 1.4, Output::Mandel},
        {"fig3b", RunModel::AJC, 1.4, Output::Mandel},
        {"fig4a", RunModel::JC, 1.5, Output::Mandel},
        {"fig4b", RunModel::AJC, 1.5, Output::Mandel},
        {"fig5a", RunModel::JC, 1.0, Output::Inversion},
        {"fig5b", RunModel::AJC, 1.0, Output::Inversion},
        {"fig6a", RunModel::JC, 1.5, Output::Inversion},
        {"fig6b", RunModel::AJC, 1.5, Output::Inversion},
        {"fig7a", RunModel::JC, 1.0, Output::PhotonDistribution},
        {"fig7b", RunModel::AJC, 1.5, Output::PhotonDistribution},
        {"fig8a", RunModel::JC, 1.5, Output::Inversion},
        {"fig8b", RunModel::AJC, 1.5, Output::Inversion},
        {"fig9a", RunModel::JC, 1.0, Output::Entropy},
        {"fig9b", RunModel::AJC, 1.0, Output::Entropy},
        {"fig10a", RunModel::JC, 1.5, Output::Entropy},
        {"fig10b", RunModel::AJC, 1.5, Output::Entropy},
    };
    for (const auto& row : rows) {
        CAPTURE(row.name);
        const auto sc = preset(row.name);
        CHECK(sc.model == row.model);
        CHECK(sc.beta == 0.0);
        CHECK(sc.xi == 0.0001);
        CHECK(sc.theta == 0.0);
        REQUIRE(sc.intensity.has_value());
        CHECK(*sc.intensity == 40.0);
        REQUIRE(sc.outputs.size() == 1);
        CHECK(sc.outputs[0] == row.output);
        CHECK(sc.r == row.r);
    }

    // Ringing-revival zoom spans half the revival time +- 10.
    const auto zoom = preset("fig6a");
    const double half_revival = 0.5 * revival_time(40.0);
    CHECK(zoom.tau_min == doctest::Approx(half_revival - 10.0));
    CHECK(zoom.tau_max == doctest::Approx(half_revival + 10.0));
    CHECK(zoom.steps == 1001);
    CHECK(preset("fig5a").tau_min == 0.0);
    CHECK(preset("fig5a").tau_max == 100.0);
    CHECK(preset("fig5a").steps == 5001);

    CHECK(preset_names().size() == 20);
    CHECK_THROWS_AS(preset("fig11a"), ConfigError);
    try {
        preset("nope");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("fig1a") != std::string::npos);
    }
}
