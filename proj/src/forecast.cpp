#include "finsent/forecast.hpp"

#include "finsent/errors.hpp"

#include <algorithm>
#include <cmath>

namespace finsent {

double mape(const std::vector<double>& actual, const std::vector<double>& predicted) {
    if (actual.size() != predicted.size())
        raise(ErrorKind::LengthMismatch, "mape inputs differ in length");
    if (actual.empty())
        raise(ErrorKind::InvalidArgument, "mape needs at least one step");
    double sum = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        if (actual[i] == 0.0)
            raise(ErrorKind::ZeroActual,
                  "actual value at step " + std::to_string(i) + " is zero");
        sum += std::fabs((actual[i] - predicted[i]) / actual[i]);
    }
    return sum / static_cast<double>(actual.size()) * 100.0;
}

double direction_accuracy(const std::vector<double>& anchors,
                          const std::vector<double>& actual,
                          const std::vector<double>& predicted) {
    if (anchors.size() != actual.size() || actual.size() != predicted.size())
        raise(ErrorKind::LengthMismatch, "direction_accuracy inputs differ in length");
    if (actual.empty())
        raise(ErrorKind::InvalidArgument, "direction_accuracy needs at least one step");
    std::size_t correct = 0;
    for (std::size_t i = 0; i < actual.size(); ++i)
        if ((predicted[i] - anchors[i]) * (actual[i] - anchors[i]) > 0.0)
            ++correct;
    return static_cast<double>(correct) / static_cast<double>(actual.size());
}

namespace {

std::vector<const NamedSeries*> pick_exogenous(const std::vector<NamedSeries>& pool,
                                               const ModelSpec& spec) {
    std::vector<const NamedSeries*> picked;
    for (const auto& name : spec.exogenous_names) {
        const NamedSeries* found = nullptr;
        for (const auto& candidate : pool)
            if (candidate.name == name) {
                found = &candidate;
                break;
            }
        if (!found)
            raise(ErrorKind::InvalidArgument,
                  "unknown exogenous series '" + name + "'");
        picked.push_back(found);
    }
    return picked;
}

struct StepInputs {
    std::vector<std::vector<double>> series; // target first, then exogenous
    StandardizationParams target_params;     // identity unless standardized
};

// Values visible at the forecast for index t: the prefix [0, t) transformed
// with training-window parameters when standardization is on.
StepInputs training_view(const std::vector<const std::vector<double>*>& raw,
                         std::size_t t, bool standardize_inputs) {
    StepInputs out;
    out.series.reserve(raw.size());
    for (std::size_t s = 0; s < raw.size(); ++s) {
        std::vector<double> prefix(raw[s]->begin(), raw[s]->begin() + t);
        if (standardize_inputs) {
            double m = sample_mean(prefix);
            double sd = sample_std(prefix);
            if (sd == 0.0)
                raise(ErrorKind::ZeroVariance,
                      "constant training window cannot be standardized");
            for (auto& v : prefix)
                v = (v - m) / sd;
            if (s == 0)
                out.target_params = {m, sd};
        }
        out.series.push_back(std::move(prefix));
    }
    return out;
}

} // namespace

ForecastReport rolling_one_step(const TimeSeries& target,
                                const std::vector<NamedSeries>& exogenous,
                                const ModelSpec& spec, std::size_t test_window) {
    if (spec.n_lags < 1)
        raise(ErrorKind::InvalidArgument, "n_lags must be >= 1");
    if (test_window < 1)
        raise(ErrorKind::InvalidArgument, "test window must be >= 1");
    auto picked = pick_exogenous(exogenous, spec);
    for (const auto* ex : picked)
        if (!ex->series.same_axis(target))
            raise(ErrorKind::InvalidArgument,
                  "exogenous series '" + ex->name + "' is not aligned to the target");

    std::size_t n = target.size();
    std::size_t lags = static_cast<std::size_t>(spec.n_lags);
    std::size_t params = 1 + (1 + picked.size()) * lags;
    // first refit needs more training rows than parameters
    if (n <= lags + test_window + 1 || n - test_window < lags + params + 1)
        raise(ErrorKind::InsufficientHistory,
              "series of length " + std::to_string(n) + " cannot support " +
                  std::to_string(test_window) + "-step evaluation with " +
                  std::to_string(params) + " parameters");

    std::vector<const std::vector<double>*> raw;
    std::vector<double> target_values = target.values();
    raw.push_back(&target_values);
    std::vector<std::vector<double>> exog_values;
    exog_values.reserve(picked.size());
    for (const auto* ex : picked)
        exog_values.push_back(ex->series.values());
    for (const auto& v : exog_values)
        raw.push_back(&v);

    ForecastReport report;
    for (std::size_t t = n - test_window; t < n; ++t) {
        StepInputs view = training_view(raw, t, spec.standardize_inputs);

        std::size_t rows = t - lags;
        Matrix design(rows, params);
        std::vector<double> response(rows);
        for (std::size_t r = 0; r < rows; ++r) {
            std::size_t tt = r + lags;
            design(r, 0) = 1.0;
            std::size_t col = 1;
            for (const auto& series : view.series)
                for (std::size_t l = 1; l <= lags; ++l)
                    design(r, col++) = series[tt - l];
            response[r] = view.series[0][tt];
        }

        RegressionFit fit;
        try {
            fit = ols(design, response);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::RankDeficient)
                raise(ErrorKind::RankDeficient,
                      std::string(e.what()) + " at step " + target[t].date.iso());
            throw;
        }

        std::vector<double> row(params);
        row[0] = 1.0;
        std::size_t col = 1;
        for (const auto& series : view.series)
            for (std::size_t l = 1; l <= lags; ++l)
                row[col++] = series[t - l];
        double z_hat = predict(fit, row);
        double y_hat = spec.standardize_inputs
                           ? z_hat * view.target_params.std + view.target_params.mean
                           : z_hat;

        report.dates.push_back(target[t].date);
        report.actuals.push_back(target_values[t]);
        report.predictions.push_back(y_hat);
    }

    report.per_step_abs_pct_error.reserve(test_window);
    for (std::size_t i = 0; i < report.actuals.size(); ++i) {
        if (report.actuals[i] == 0.0)
            raise(ErrorKind::ZeroActual,
                  "actual value at " + report.dates[i].iso() + " is zero");
        report.per_step_abs_pct_error.push_back(
            std::fabs((report.actuals[i] - report.predictions[i]) / report.actuals[i]) *
            100.0);
    }
    report.mape = mape(report.actuals, report.predictions);

    std::vector<double> anchors;
    anchors.reserve(test_window);
    for (std::size_t t = n - test_window; t < n; ++t)
        anchors.push_back(target_values[t - 1]);
    report.direction_accuracy =
        direction_accuracy(anchors, report.actuals, report.predictions);
    return report;
}

ModelComparison compare_models(const TimeSeries& target,
                               const std::vector<NamedSeries>& exogenous,
                               const ModelSpec& spec0, const ModelSpec& spec1,
                               std::size_t test_window) {
    return {rolling_one_step(target, exogenous, spec0, test_window),
            rolling_one_step(target, exogenous, spec1, test_window)};
}

} // namespace finsent
