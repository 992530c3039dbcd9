#pragma once

#include "finsent/timeseries.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace finsent {

// Minimal dense column-major matrix; big enough for lagged regression designs.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

  private:
    std::size_t rows_, cols_;
    std::vector<double> data_;
};

struct RegressionFit {
    std::vector<double> coefficients; // intercept first
    double rss = 0.0;
    std::vector<double> std_errors;
    std::vector<double> t_stats;
    std::vector<double> p_values; // two-sided
    double r_squared = 0.0;
    double adj_r_squared = 0.0;
    std::size_t n_obs = 0;
    std::size_t n_params = 0;
};

// Least squares by Householder QR (never normal equations). The design must
// already contain its intercept column. Rank deficiency reports the offending
// column index.
RegressionFit ols(const Matrix& design, const std::vector<double>& response);

double predict(const RegressionFit& fit, const std::vector<double>& row);

struct PearsonResult {
    double r = 0.0;
    double p_value = 1.0;
    std::size_t n = 0;
};

// Sample Pearson correlation with the exact-t two-sided p-value
// (t = r*sqrt((n-2)/(1-r^2)), n-2 df).
PearsonResult pearson(const TimeSeries& x, const TimeSeries& y);
PearsonResult pearson(const std::vector<double>& x, const std::vector<double>& y);

enum class CcfConvention {
    OverlapMeans, // means and norms over each overlapping window
    FullSeries,   // full-series means and norms (the R ccf default)
};

struct CrossCorrelation {
    std::vector<int> lags;            // -K..K
    std::vector<double> coefficients; // gamma_k per lag
    double at(int lag) const;
    int peak_lag() const; // lag with the largest |gamma|
};

// gamma_k correlates x[i+k] against y[i]; k > 0 means y anticipates x.
CrossCorrelation cross_correlation(const TimeSeries& x, const TimeSeries& y,
                                   int max_lag,
                                   CcfConvention convention = CcfConvention::OverlapMeans);

struct LaggedDesign {
    Matrix design;                         // [1, Y lags, exog blocks]
    std::vector<double> response;          // Y_t
    std::vector<Date> dates;               // date of each row
    std::vector<std::string> column_names; // intercept, y.l1.., x.l1..
};

// Row t holds [1, Y_{t-1..t-n}, X1_{t-1..t-n}, ...]; the first n_lags dates
// are dropped. All series must share one date axis.
LaggedDesign lagged_design(const TimeSeries& target,
                           const std::vector<TimeSeries>& exogenous, int n_lags,
                           const std::vector<std::string>& exog_names = {},
                           const std::string& target_name = "y");

enum class Direction { XtoY, YtoX };

struct GrangerResult {
    Direction direction = Direction::XtoY;
    int lag = 0;
    double f_stat = 0.0;
    double p_value = 1.0;
    double rss_restricted = 0.0;
    double rss_unrestricted = 0.0;
    int df_num = 0;
    int df_den = 0;
};

// Nested-OLS F test of "lagged x adds no predictive power for y";
// F = ((rss_r - rss_u)/L) / (rss_u/(T - 2L - 1)) on the common date axis.
GrangerResult granger(const TimeSeries& x, const TimeSeries& y, int lag);

// Both directions at every requested lag, X->Y first.
std::vector<GrangerResult> granger_table(const TimeSeries& x, const TimeSeries& y,
                                         const std::vector<int>& lags);

struct NamedSeries {
    std::string name;
    TimeSeries series;
};

struct LaggedCoefficient {
    std::string variable;
    int lag = 0;
    double coefficient = 0.0;
    double p_value = 1.0;
};

struct MultipleLaggedRegression {
    RegressionFit fit;      // own lags + every exogenous block
    RegressionFit baseline; // own lags only
    std::vector<LaggedCoefficient> grid;
    std::vector<std::string> variables; // target first, then exogenous
    int n_lags = 0;
};

MultipleLaggedRegression
multiple_lagged_regression(const TimeSeries& target,
                           const std::vector<NamedSeries>& exogenous, int n_lags,
                           const std::string& target_name = "target");

// Significance stars: p<0.01 "***", p<0.05 "**", p<0.1 "*", else "".
std::string significance_stars(double p_value);

} // namespace finsent
