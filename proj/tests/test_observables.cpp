#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qrabi/observables.hpp"
#include "reference.hpp"

using namespace qrabi;
using std::numbers::pi;

namespace {

PhotonDistribution dist_for(double alpha, double r) {
    return photon_number_distribution({alpha, r, 0.0}, 1e-12);
}

}  // namespace

TEST_CASE("mandel q on static distributions") {
    const auto poisson = dist_for(2.0, 0.0);
    const auto jc = mandel_q(poisson.probs, ModelKind::JC);
    CHECK(jc.mean == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(jc.q == doctest::Approx(0.0).epsilon(1e-9));

    // Same distribution under anti-normal counting: q = -1/(mean+1).
    const auto ajc = mandel_q(poisson.probs, ModelKind::AJC);
    CHECK(ajc.mean == doctest::Approx(5.0).epsilon(1e-10));
    CHECK(ajc.q == doctest::Approx(-0.2).epsilon(1e-9));
    CHECK(ajc.variance == doctest::Approx(jc.variance).epsilon(1e-12));

    const auto vacuum = dist_for(0.0, 1.0);
    const auto qv = mandel_q(vacuum.probs, ModelKind::JC);
    // Analytic anchor with truncation slack, plus the independent summation
    // over the same retained levels at full precision.
    CHECK(qv.q == doctest::Approx(std::cosh(2.0)).epsilon(1e-7));
    const auto ref = testref::squeezed_vacuum_moments(1.0L, vacuum.n_max / 2 + 1);
    const double q_ref = static_cast<double>(
        (ref.second - ref.mean * ref.mean) / ref.mean - 1.0L);
    CHECK(qv.q == doctest::Approx(q_ref).epsilon(1e-11));

    std::vector<double> empty_field = {1.0, 0.0, 0.0};
    CHECK_THROWS_AS(mandel_q(empty_field, ModelKind::JC), std::domain_error);
    CHECK_NOTHROW(mandel_q(empty_field, ModelKind::AJC));
}

TEST_CASE("mandel identity between counting conventions") {
    const auto dist = dist_for(2.0, 0.5);
    for (const auto kind : {ModelKind::JC, ModelKind::AJC}) {
        const CouplingConfig cfg{kind, 0.0, 0.0001, 1.0};
        for (double tau : {0.0, 0.7, 3.3, 12.1}) {
            const auto p = reduced_field_diagonal(dist, cfg, tau);
            const auto qjc = mandel_q(p, ModelKind::JC);
            const auto qajc = mandel_q(p, ModelKind::AJC);
            const double expected =
                qjc.mean * (qjc.q + 1.0) / (qjc.mean + 1.0) - 1.0;
            CHECK(std::abs(qajc.q - expected) <= 1e-10);
            CHECK(qajc.q >= -1.0 - 1e-10);
            CHECK(qjc.q >= -1.0 - 1e-10);
        }
    }
}

TEST_CASE("entropy") {
    CHECK(entropy({0.0, 0.0, -1.0}) == doctest::Approx(0.0));
    CHECK(entropy({0.0, 0.0, 0.0}) == doctest::Approx(1.0));
    CHECK(entropy({0.0, 0.6, 0.0}) ==
          doctest::Approx(0.72192809488736235).epsilon(1e-12));

    // Depends on |b| only.
    const double inv_sqrt3 = 0.6 / std::sqrt(3.0);
    CHECK(entropy({inv_sqrt3, inv_sqrt3, inv_sqrt3}) ==
          doctest::Approx(entropy({0.6, 0.0, 0.0})).epsilon(1e-12));

    // Monotone decreasing in |b|, bounded in [0, 1]; clamped above 1.
    double prev = 1.1;
    for (double mag = 0.0; mag <= 1.0001; mag += 0.05) {
        const double s = entropy({mag, 0.0, 0.0});
        CHECK(s >= 0.0);
        CHECK(s <= 1.0);
        CHECK(s < prev);
        prev = s;
    }
    CHECK(entropy({1.0 + 5e-11, 0.0, 0.0}) == doctest::Approx(0.0));
}

TEST_CASE("revival time") {
    CHECK(revival_time(40.0) == doctest::Approx(39.738353063184405).epsilon(1e-12));
    CHECK(revival_time(1.0) == doctest::Approx(2.0 * pi).epsilon(1e-14));
    CHECK(revival_time(0.25) == doctest::Approx(pi).epsilon(1e-14));
    CHECK_THROWS_AS(revival_time(0.0), std::domain_error);
}

TEST_CASE("dominant statistics") {
    TimeSeries sub{{0.0, 1.0, 2.0}, {-0.3, -0.3, -0.3}, "Q"};
    TimeSeries super{{0.0, 1.0, 2.0}, {0.3, 0.3, 0.3}, "Q"};
    TimeSeries tie{{0.0, 1.0}, {-0.3, 0.3}, "Q"};
    CHECK(dominant_statistics(sub) == Statistics::Sub);
    CHECK(dominant_statistics(super) == Statistics::Super);
    CHECK(dominant_statistics(tie) == Statistics::Super);
    CHECK_THROWS_AS(dominant_statistics(TimeSeries{}), std::invalid_argument);
}

TEST_CASE("time series validation") {
    TimeSeries ok{{0.0, 0.5, 1.0}, {1.0, 2.0, 3.0}, "x"};
    CHECK_NOTHROW(ok.validate());
    TimeSeries unsorted{{0.0, 0.5, 0.5}, {1.0, 2.0, 3.0}, "x"};
    CHECK_THROWS_AS(unsorted.validate(), std::invalid_argument);
    TimeSeries mismatched{{0.0, 0.5}, {1.0}, "x"};
    CHECK_THROWS_AS(mismatched.validate(), std::invalid_argument);
}

TEST_CASE("series builders and t = 0 checks") {
    const double alpha = coherent_amplitude_for_intensity(40.0, 1.0);
    const auto dist = dist_for(alpha, 1.0);
    const auto m = moments(dist);
    const auto taus = tau_grid(0.0, 2.0, 11);
    CHECK(taus.size() == 11);
    CHECK(taus.front() == 0.0);
    CHECK(taus.back() == 2.0);

    for (const auto kind : {ModelKind::JC, ModelKind::AJC}) {
        const CouplingConfig cfg{kind, 0.0, 0.0001, 1.0};
        const auto w = inversion_series(dist, cfg, taus);
        const auto s = entropy_series(dist, cfg, taus);
        const auto q = mandel_series(dist, cfg, taus);
        w.validate();
        s.validate();
        q.validate();
        CHECK(w.values.front() == doctest::Approx(-1.0).epsilon(1e-10));
        CHECK(s.values.front() <= 1e-9);
        const double shift = kind == ModelKind::AJC ? 1.0 : 0.0;
        const double q0_expected =
            m.variance / (m.mean + shift) - 1.0;
        CHECK(q.values.front() == doctest::Approx(q0_expected).epsilon(1e-9));
        CHECK(inversion(dist, cfg, 0.0) == doctest::Approx(-1.0).epsilon(1e-10));
    }
}
