#include "finsent/forecast.hpp"

#include "finsent/synth.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace finsent;
using namespace test_helpers;

TEST_CASE("mape arithmetic") {
    CHECK(mape({100, 200, 50}, {100, 200, 50}) == doctest::Approx(0.0));
    CHECK(mape({100}, {110}) == doctest::Approx(10.0));
    CHECK(mape({100, 200}, {90, 220}) == doctest::Approx(10.0));
    CHECK_RAISES(ErrorKind::ZeroActual, mape({100, 0}, {90, 10}));
    CHECK_RAISES(ErrorKind::LengthMismatch, mape({100}, {90, 10}));
}

TEST_CASE("mape is scale invariant") {
    std::vector<double> a = {120, 80, 95, 210};
    std::vector<double> p = {118, 84, 91, 205};
    double base = mape(a, p);
    for (double c : {0.5, 3.0, 1000.0}) {
        std::vector<double> ca(a), cp(p);
        for (auto& v : ca)
            v *= c;
        for (auto& v : cp)
            v *= c;
        CHECK(mape(ca, cp) == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("direction accuracy counts strict sign agreement") {
    // always moves the right way
    CHECK(direction_accuracy({10, 10, 10}, {12, 8, 14}, {11, 9, 13}) ==
          doctest::Approx(1.0));
    // predicted change exactly zero is incorrect by the strict inequality
    CHECK(direction_accuracy({10, 10}, {12, 8}, {10, 10}) == doctest::Approx(0.0));
    // 3 of 4 steps correct
    CHECK(direction_accuracy({10, 10, 10, 10}, {12, 8, 14, 9}, {11, 9, 13, 12}) ==
          doctest::Approx(0.75));
    CHECK_RAISES(ErrorKind::LengthMismatch,
                 direction_accuracy({1, 2}, {3}, {4}));
}

TEST_CASE("direction accuracy survives positive scaling of the changes") {
    std::vector<double> anchors = {10, 11, 9, 12};
    std::vector<double> actual = {11, 9, 10, 14};
    std::vector<double> predicted = {10.5, 9.5, 9.5, 13};
    double base = direction_accuracy(anchors, actual, predicted);
    for (double c : {0.1, 2.0, 50.0}) {
        std::vector<double> sa(anchors.size()), sp(anchors.size());
        for (std::size_t i = 0; i < anchors.size(); ++i) {
            sa[i] = anchors[i] + c * (actual[i] - anchors[i]);
            sp[i] = anchors[i] + c * (predicted[i] - anchors[i]);
        }
        CHECK(direction_accuracy(anchors, sa, sp) == doctest::Approx(base));
    }
}

TEST_CASE("rolling forecast nails a deterministic AR(1)") {
    // Y_t = 0.5 * Y_{t-1}, exactly within the model class
    std::vector<double> values = {100.0};
    for (int i = 1; i < 28; ++i)
        values.push_back(0.5 * values.back());
    auto target = daily("2015-01-01", values);

    ModelSpec spec;
    spec.n_lags = 1;
    auto report = rolling_one_step(target, {}, spec, 8);
    REQUIRE(report.dates.size() == 8);
    CHECK(report.mape == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(report.direction_accuracy == doctest::Approx(1.0));
    CHECK(report.mape ==
          doctest::Approx(sample_mean(report.per_step_abs_pct_error)).epsilon(1e-12));
}

TEST_CASE("insufficient history is rejected") {
    auto target = daily("2015-01-01", {1, 2, 3, 4, 5, 6, 7, 8});
    ModelSpec spec;
    spec.n_lags = 2;
    CHECK_RAISES(ErrorKind::InsufficientHistory, rolling_one_step(target, {}, spec, 7));
    CHECK_RAISES(ErrorKind::InvalidArgument,
                 rolling_one_step(target, {}, ModelSpec{1, {"ghost"}, false}, 2));
}

TEST_CASE("exogenous information lowers the error when it drives the target") {
    VarSpec vs;
    vs.coupling = 1.0;
    vs.lag = 1;
    vs.noise_std = 0.05;
    vs.length = 120;
    vs.seed = 1234;
    auto [x, y_raw] = gen_coupled_pair(vs);
    // shift the target away from zero so percentage errors are well behaved
    std::vector<Observation> shifted;
    for (const auto& p : y_raw.points())
        shifted.push_back({p.date, p.value + 10.0});
    TimeSeries y(std::move(shifted), Frequency::Daily);

    std::vector<NamedSeries> exog = {{"x", x}};
    ModelSpec m0{1, {}, false};
    ModelSpec m1{1, {"x"}, false};
    auto pair = compare_models(y, exog, m0, m1, 20);
    CHECK(pair.model1.mape < pair.model0.mape);
    CHECK(pair.model0.dates == pair.model1.dates);
    CHECK(pair.model0.actuals == pair.model1.actuals);
}

TEST_CASE("identical specs produce identical reports") {
    VarSpec vs;
    vs.coupling = 0.4;
    vs.lag = 1;
    vs.noise_std = 0.3;
    vs.length = 90;
    vs.seed = 5;
    auto [x, y_raw] = gen_coupled_pair(vs);
    std::vector<Observation> shifted;
    for (const auto& p : y_raw.points())
        shifted.push_back({p.date, p.value + 20.0});
    TimeSeries y(std::move(shifted), Frequency::Daily);

    ModelSpec spec{2, {"x"}, false};
    auto pair = compare_models(y, {{"x", x}}, spec, spec, 10);
    CHECK(pair.model0.predictions == pair.model1.predictions);
    CHECK(pair.model0.mape == pair.model1.mape);
    CHECK(pair.model0.direction_accuracy == pair.model1.direction_accuracy);
}

TEST_CASE("standardized fits still score in original units") {
    VarSpec vs;
    vs.coupling = 0.7;
    vs.lag = 1;
    vs.noise_std = 0.1;
    vs.length = 100;
    vs.seed = 31;
    auto [x, y_raw] = gen_coupled_pair(vs);
    std::vector<Observation> shifted;
    for (const auto& p : y_raw.points())
        shifted.push_back({p.date, 3.0 * p.value + 50.0});
    TimeSeries y(std::move(shifted), Frequency::Daily);

    ModelSpec plain{2, {"x"}, false};
    ModelSpec scored{2, {"x"}, true};
    auto a = rolling_one_step(y, {{"x", x}}, plain, 12);
    auto b = rolling_one_step(y, {{"x", x}}, scored, 12);
    // same fits up to the affine reparameterization, so near-identical output
    for (std::size_t i = 0; i < a.predictions.size(); ++i)
        CHECK(a.predictions[i] == doctest::Approx(b.predictions[i]).epsilon(1e-8));
    // actuals stay in original units
    for (std::size_t i = 0; i < b.actuals.size(); ++i)
        CHECK(b.actuals[i] == y[y.size() - 12 + i].value);
}

TEST_CASE("no forecast step looks ahead") {
    VarSpec vs;
    vs.coupling = 0.6;
    vs.lag = 1;
    vs.noise_std = 0.2;
    vs.length = 80;
    vs.seed = 17;
    auto [x, y_raw] = gen_coupled_pair(vs);
    std::vector<Observation> shifted;
    for (const auto& p : y_raw.points())
        shifted.push_back({p.date, p.value + 15.0});
    TimeSeries y(std::move(shifted), Frequency::Daily);

    const std::size_t window = 10;
    ModelSpec spec{1, {"x"}, true};
    auto baseline = rolling_one_step(y, {{"x", x}}, spec, window);

    std::size_t n = y.size();
    for (std::size_t step = 0; step < window; ++step) {
        std::size_t mutate_at = n - window + step;
        auto reshape = [&](const TimeSeries& s, bool is_target) {
            std::vector<Observation> pts(s.points().begin(), s.points().end());
            pts[mutate_at].value += is_target ? 1000.0 : -500.0;
            return TimeSeries(std::move(pts), s.frequency());
        };
        auto mutated =
            rolling_one_step(reshape(y, true), {{"x", reshape(x, false)}}, spec, window);
        for (std::size_t i = 0; i <= step; ++i)
            CHECK(mutated.predictions[i] == baseline.predictions[i]); // bit-exact
    }
}
