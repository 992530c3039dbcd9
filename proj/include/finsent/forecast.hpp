#pragma once

#include "finsent/econometrics.hpp"
#include "finsent/timeseries.hpp"

#include <string>
#include <vector>

namespace finsent {

// Which regression feeds each rolling forecast. An empty exogenous list is
// the baseline autoregression (model 0).
struct ModelSpec {
    int n_lags = 1;
    std::vector<std::string> exogenous_names;
    bool standardize_inputs = false;

    bool is_baseline() const { return exogenous_names.empty(); }
};

struct ForecastReport {
    std::vector<Date> dates;
    std::vector<double> actuals;
    std::vector<double> predictions;
    std::vector<double> per_step_abs_pct_error;
    double mape = 0.0;
    double direction_accuracy = 0.0;
};

// (sum |(y - yhat)/y| / n) * 100; any zero actual is an error naming the index.
double mape(const std::vector<double>& actual, const std::vector<double>& predicted);

// Fraction of steps where predicted and actual changes from the previous
// actual share a strict sign; a zero change counts as incorrect.
double direction_accuracy(const std::vector<double>& anchors,
                          const std::vector<double>& actual,
                          const std::vector<double>& predicted);

// One-step-ahead forecasts over the last `test_window` dates using an
// expanding window: each step refits on everything strictly before the
// forecast date. With standardize_inputs the scores are computed from the
// training window of that step only and predictions are mapped back to
// original units before scoring.
ForecastReport rolling_one_step(const TimeSeries& target,
                                const std::vector<NamedSeries>& exogenous,
                                const ModelSpec& spec, std::size_t test_window);

struct ModelComparison {
    ForecastReport model0;
    ForecastReport model1;
};

// Both specs evaluated on the identical test dates, ready for a two-row
// summary table and a per-step error plot.
ModelComparison compare_models(const TimeSeries& target,
                               const std::vector<NamedSeries>& exogenous,
                               const ModelSpec& spec0, const ModelSpec& spec1,
                               std::size_t test_window);

} // namespace finsent
