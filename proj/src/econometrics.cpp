#include "finsent/econometrics.hpp"

#include "finsent/errors.hpp"
#include "finsent/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace finsent {

namespace {

// In-place Householder QR. On return `a` holds R in its upper triangle and the
// reflectors below it; `qty` holds Q^T y.
struct QrFactors {
    Matrix a;
    std::vector<double> qty;
    std::vector<double> diag; // R diagonal
};

QrFactors householder_qr(Matrix a, std::vector<double> y) {
    std::size_t m = a.rows(), p = a.cols();
    std::vector<double> col_norms(p);
    for (std::size_t j = 0; j < p; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            s += a(i, j) * a(i, j);
        col_norms[j] = std::sqrt(s);
    }

    QrFactors f{std::move(a), std::move(y), std::vector<double>(p, 0.0)};
    for (std::size_t j = 0; j < p; ++j) {
        double norm = 0.0;
        for (std::size_t i = j; i < m; ++i)
            norm += f.a(i, j) * f.a(i, j);
        norm = std::sqrt(norm);
        if (norm <= 1e-12 * std::max(1.0, col_norms[j]))
            raise(ErrorKind::RankDeficient,
                  "design column " + std::to_string(j) + " is linearly dependent");
        double alpha = f.a(j, j) > 0.0 ? -norm : norm;
        double vjj = f.a(j, j) - alpha;
        f.a(j, j) = vjj;
        // beta = 2 / v'v with v = (vjj, a(j+1..m-1, j))
        double vtv = vjj * vjj;
        for (std::size_t i = j + 1; i < m; ++i)
            vtv += f.a(i, j) * f.a(i, j);
        double beta = 2.0 / vtv;
        for (std::size_t k = j + 1; k < p; ++k) {
            double dot = 0.0;
            for (std::size_t i = j; i < m; ++i)
                dot += f.a(i, j) * f.a(i, k);
            dot *= beta;
            for (std::size_t i = j; i < m; ++i)
                f.a(i, k) -= dot * f.a(i, j);
        }
        double dot = 0.0;
        for (std::size_t i = j; i < m; ++i)
            dot += f.a(i, j) * f.qty[i];
        dot *= beta;
        for (std::size_t i = j; i < m; ++i)
            f.qty[i] -= dot * f.a(i, j);
        f.diag[j] = alpha;
    }

    // rank sanity on the triangular factor
    for (std::size_t j = 0; j < p; ++j)
        if (std::fabs(f.diag[j]) <= 1e-10 * std::max(1.0, col_norms[j]))
            raise(ErrorKind::RankDeficient,
                  "design column " + std::to_string(j) + " is linearly dependent");
    return f;
}

// Inverse of the p x p upper triangle (R diagonal lives in `diag`).
Matrix invert_upper(const Matrix& a, const std::vector<double>& diag) {
    std::size_t p = diag.size();
    Matrix inv(p, p);
    for (std::size_t col = 0; col < p; ++col) {
        std::vector<double> e(p, 0.0);
        e[col] = 1.0;
        for (std::size_t ii = p; ii-- > 0;) {
            double s = e[ii];
            for (std::size_t k = ii + 1; k < p; ++k)
                s -= a(ii, k) * inv(k, col);
            inv(ii, col) = s / diag[ii];
        }
    }
    return inv;
}

} // namespace

RegressionFit ols(const Matrix& design, const std::vector<double>& response) {
    std::size_t m = design.rows(), p = design.cols();
    if (response.size() != m)
        raise(ErrorKind::LengthMismatch, "response length does not match design rows");
    if (m <= p)
        raise(ErrorKind::InsufficientLength,
              "need more observations (" + std::to_string(m) + ") than parameters (" +
                  std::to_string(p) + ")");

    QrFactors f = householder_qr(design, response);

    RegressionFit fit;
    fit.n_obs = m;
    fit.n_params = p;
    fit.coefficients.assign(p, 0.0);
    for (std::size_t ii = p; ii-- > 0;) {
        double s = f.qty[ii];
        for (std::size_t k = ii + 1; k < p; ++k)
            s -= f.a(ii, k) * fit.coefficients[k];
        fit.coefficients[ii] = s / f.diag[ii];
    }

    double rss = 0.0;
    for (std::size_t i = p; i < m; ++i)
        rss += f.qty[i] * f.qty[i];
    fit.rss = rss;

    // (X'X)^-1 = R^-1 R^-T; diagonal entries are row sums of squares of R^-1
    Matrix rinv = invert_upper(f.a, f.diag);
    double sigma2 = rss / static_cast<double>(m - p);
    fit.std_errors.assign(p, 0.0);
    fit.t_stats.assign(p, 0.0);
    fit.p_values.assign(p, 1.0);
    double t_df = static_cast<double>(m - p);
    for (std::size_t j = 0; j < p; ++j) {
        double row_ss = 0.0;
        for (std::size_t k = j; k < p; ++k)
            row_ss += rinv(j, k) * rinv(j, k);
        fit.std_errors[j] = std::sqrt(sigma2 * row_ss);
        if (fit.std_errors[j] > 0.0) {
            fit.t_stats[j] = fit.coefficients[j] / fit.std_errors[j];
            fit.p_values[j] = t_two_sided_p(fit.t_stats[j], t_df);
        } else {
            fit.t_stats[j] = fit.coefficients[j] == 0.0
                                 ? 0.0
                                 : std::numeric_limits<double>::infinity();
            fit.p_values[j] = fit.coefficients[j] == 0.0 ? 1.0 : 0.0;
        }
    }

    double mean_y = 0.0;
    for (double v : response)
        mean_y += v;
    mean_y /= static_cast<double>(m);
    double tss = 0.0;
    for (double v : response)
        tss += (v - mean_y) * (v - mean_y);
    double r2 = tss > 0.0 ? 1.0 - rss / tss : 0.0;
    fit.r_squared = std::clamp(r2, 0.0, 1.0);
    fit.adj_r_squared = 1.0 - (1.0 - fit.r_squared) *
                                  static_cast<double>(m - 1) /
                                  static_cast<double>(m - p);
    return fit;
}

double predict(const RegressionFit& fit, const std::vector<double>& row) {
    if (row.size() != fit.coefficients.size())
        raise(ErrorKind::LengthMismatch, "prediction row length mismatch");
    double y = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j)
        y += fit.coefficients[j] * row[j];
    return y;
}

PearsonResult pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size())
        raise(ErrorKind::LengthMismatch, "pearson inputs differ in length");
    std::size_t n = x.size();
    if (n < 3)
        raise(ErrorKind::InsufficientLength, "pearson needs at least 3 points");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        raise(ErrorKind::ZeroVariance, "pearson input has zero variance");
    PearsonResult res;
    res.n = n;
    res.r = std::clamp(sxy / (std::sqrt(sxx) * std::sqrt(syy)), -1.0, 1.0);
    double denom = 1.0 - res.r * res.r;
    if (denom <= 0.0) {
        res.p_value = 0.0;
    } else {
        double t = res.r * std::sqrt(static_cast<double>(n - 2) / denom);
        res.p_value = t_two_sided_p(t, static_cast<double>(n - 2));
    }
    return res;
}

PearsonResult pearson(const TimeSeries& x, const TimeSeries& y) {
    if (!x.same_axis(y))
        raise(ErrorKind::InvalidArgument, "pearson requires aligned series");
    return pearson(x.values(), y.values());
}

double CrossCorrelation::at(int lag) const {
    for (std::size_t i = 0; i < lags.size(); ++i)
        if (lags[i] == lag)
            return coefficients[i];
    raise(ErrorKind::InvalidArgument, "lag " + std::to_string(lag) + " not computed");
}

int CrossCorrelation::peak_lag() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < lags.size(); ++i)
        if (std::fabs(coefficients[i]) > std::fabs(coefficients[best]))
            best = i;
    return lags[best];
}

CrossCorrelation cross_correlation(const TimeSeries& xs, const TimeSeries& ys,
                                   int max_lag, CcfConvention convention) {
    if (!xs.same_axis(ys))
        raise(ErrorKind::InvalidArgument, "cross_correlation requires aligned series");
    int n = static_cast<int>(xs.size());
    if (max_lag < 1)
        raise(ErrorKind::InvalidArgument, "max_lag must be >= 1");
    if (n - max_lag < 3)
        raise(ErrorKind::InsufficientLength,
              "overlap at lag " + std::to_string(max_lag) + " is shorter than 3 points");
    auto x = xs.values();
    auto y = ys.values();

    double full_mx = 0.0, full_my = 0.0;
    for (int i = 0; i < n; ++i) {
        full_mx += x[i];
        full_my += y[i];
    }
    full_mx /= n;
    full_my /= n;
    double full_sxx = 0.0, full_syy = 0.0;
    for (int i = 0; i < n; ++i) {
        full_sxx += (x[i] - full_mx) * (x[i] - full_mx);
        full_syy += (y[i] - full_my) * (y[i] - full_my);
    }
    if (full_sxx == 0.0 || full_syy == 0.0)
        raise(ErrorKind::ZeroVariance, "cross_correlation input has zero variance");

    CrossCorrelation out;
    for (int k = -max_lag; k <= max_lag; ++k) {
        int lo = std::max(0, -k);
        int hi = std::min(n - 1, n - 1 - k); // inclusive range of i
        int count = hi - lo + 1;
        double gamma;
        if (convention == CcfConvention::OverlapMeans) {
            double mx = 0.0, my = 0.0;
            for (int i = lo; i <= hi; ++i) {
                mx += x[i + k];
                my += y[i];
            }
            mx /= count;
            my /= count;
            double sxy = 0.0, sxx = 0.0, syy = 0.0;
            for (int i = lo; i <= hi; ++i) {
                double dx = x[i + k] - mx, dy = y[i] - my;
                sxy += dx * dy;
                sxx += dx * dx;
                syy += dy * dy;
            }
            if (sxx == 0.0 || syy == 0.0)
                raise(ErrorKind::ZeroVariance,
                      "zero variance in overlap window at lag " + std::to_string(k));
            gamma = sxy / (std::sqrt(sxx) * std::sqrt(syy));
        } else {
            double sxy = 0.0;
            for (int i = lo; i <= hi; ++i)
                sxy += (x[i + k] - full_mx) * (y[i] - full_my);
            gamma = sxy / (std::sqrt(full_sxx) * std::sqrt(full_syy));
        }
        out.lags.push_back(k);
        out.coefficients.push_back(std::clamp(gamma, -1.0, 1.0));
    }
    return out;
}

LaggedDesign lagged_design(const TimeSeries& target,
                           const std::vector<TimeSeries>& exogenous, int n_lags,
                           const std::vector<std::string>& exog_names,
                           const std::string& target_name) {
    if (n_lags < 1)
        raise(ErrorKind::InvalidArgument, "n_lags must be >= 1");
    std::size_t n = target.size();
    if (n <= static_cast<std::size_t>(n_lags) + 1)
        raise(ErrorKind::InsufficientLength,
              "series length " + std::to_string(n) + " too short for " +
                  std::to_string(n_lags) + " lags");
    for (const auto& ex : exogenous)
        if (!ex.same_axis(target))
            raise(ErrorKind::InvalidArgument, "exogenous series not aligned to target");

    std::size_t rows = n - static_cast<std::size_t>(n_lags);
    std::size_t blocks = 1 + exogenous.size();
    std::size_t cols = 1 + blocks * static_cast<std::size_t>(n_lags);

    LaggedDesign ld;
    ld.design = Matrix(rows, cols);
    ld.response.reserve(rows);
    ld.dates.reserve(rows);
    ld.column_names.reserve(cols);
    ld.column_names.push_back("intercept");
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::string& name =
            b == 0 ? target_name
                   : (b - 1 < exog_names.size() ? exog_names[b - 1]
                                                : "x" + std::to_string(b));
        for (int l = 1; l <= n_lags; ++l)
            ld.column_names.push_back(name + ".l" + std::to_string(l));
    }

    for (std::size_t r = 0; r < rows; ++r) {
        std::size_t t = r + static_cast<std::size_t>(n_lags);
        ld.design(r, 0) = 1.0;
        std::size_t col = 1;
        for (int l = 1; l <= n_lags; ++l)
            ld.design(r, col++) = target[t - static_cast<std::size_t>(l)].value;
        for (const auto& ex : exogenous)
            for (int l = 1; l <= n_lags; ++l)
                ld.design(r, col++) = ex[t - static_cast<std::size_t>(l)].value;
        ld.response.push_back(target[t].value);
        ld.dates.push_back(target[t].date);
    }
    return ld;
}

GrangerResult granger(const TimeSeries& x, const TimeSeries& y, int lag) {
    if (lag < 1)
        raise(ErrorKind::InvalidArgument, "granger lag must be >= 1");
    if (!x.same_axis(y))
        raise(ErrorKind::InvalidArgument, "granger requires aligned series");
    std::size_t n = x.size();
    // unrestricted model has 1 + 2L parameters on n - L rows
    if (n <= static_cast<std::size_t>(3 * lag + 1))
        raise(ErrorKind::InsufficientLength,
              "need more than " + std::to_string(3 * lag + 1) +
                  " observations for lag " + std::to_string(lag));

    LaggedDesign restricted = lagged_design(y, {}, lag);
    LaggedDesign unrestricted = lagged_design(y, {x}, lag);
    RegressionFit fit_r = ols(restricted.design, restricted.response);
    RegressionFit fit_u = ols(unrestricted.design, unrestricted.response);

    int t_rows = static_cast<int>(unrestricted.design.rows());
    int df_num = lag;
    int df_den = t_rows - 2 * lag - 1;

    GrangerResult res;
    res.direction = Direction::XtoY;
    res.lag = lag;
    res.rss_restricted = fit_r.rss;
    res.rss_unrestricted = fit_u.rss;
    res.df_num = df_num;
    res.df_den = df_den;
    double f = ((fit_r.rss - fit_u.rss) / df_num) / (fit_u.rss / df_den);
    res.f_stat = f < 0.0 ? 0.0 : f;
    res.p_value = f_upper_p(res.f_stat, df_num, df_den);
    return res;
}

std::vector<GrangerResult> granger_table(const TimeSeries& x, const TimeSeries& y,
                                         const std::vector<int>& lags) {
    std::vector<GrangerResult> out;
    out.reserve(lags.size() * 2);
    for (int lag : lags) {
        out.push_back(granger(x, y, lag));
        GrangerResult rev = granger(y, x, lag);
        rev.direction = Direction::YtoX;
        out.push_back(rev);
    }
    return out;
}

MultipleLaggedRegression
multiple_lagged_regression(const TimeSeries& target,
                           const std::vector<NamedSeries>& exogenous, int n_lags,
                           const std::string& target_name) {
    std::vector<TimeSeries> exog_series;
    std::vector<std::string> exog_names;
    exog_series.reserve(exogenous.size());
    for (const auto& e : exogenous) {
        exog_series.push_back(e.series);
        exog_names.push_back(e.name);
    }

    LaggedDesign full = lagged_design(target, exog_series, n_lags, exog_names,
                                      target_name);
    LaggedDesign base = lagged_design(target, {}, n_lags, {}, target_name);

    MultipleLaggedRegression out;
    out.n_lags = n_lags;
    out.fit = ols(full.design, full.response);
    out.baseline = ols(base.design, base.response);
    out.variables.push_back(target_name);
    for (const auto& name : exog_names)
        out.variables.push_back(name);

    std::size_t col = 1;
    for (const auto& var : out.variables)
        for (int l = 1; l <= n_lags; ++l, ++col)
            out.grid.push_back({var, l, out.fit.coefficients[col],
                                out.fit.p_values[col]});
    return out;
}

std::string significance_stars(double p_value) {
    if (p_value < 0.01)
        return "***";
    if (p_value < 0.05)
        return "**";
    if (p_value < 0.1)
        return "*";
    return "";
}

} // namespace finsent
