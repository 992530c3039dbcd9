#pragma once

// Independent reference computations used only by tests. Everything here is
// deliberately written along different routes than the library: numerical
// integration instead of continued fractions, normal equations with explicit
// inverses instead of QR, naive rescans instead of the indicator kernels.

#include "finsent/corpus.hpp"
#include "finsent/timeseries.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace oracles {

// Composite Gauss-Legendre quadrature of f over [a, b].
double integrate(double (*f)(double, const double*), const double* params, double a,
                 double b, int panels = 200);

// Student t and F CDFs by direct density integration (the F integrand is
// evaluated under x = u^2 to remove the d1 = 1 endpoint singularity).
double t_cdf(double x, double df);
double f_cdf(double x, double d1, double d2);

// Inverse standard normal by Newton iteration on erfc; ~1e-14 accurate.
double inverse_normal(double p);

struct OlsOracle {
    std::vector<double> coefficients;
    std::vector<double> std_errors;
    std::vector<double> t_stats;
    std::vector<double> p_values;
    double rss = 0.0;
    double r_squared = 0.0;
    double adj_r_squared = 0.0;
};

// Normal equations solved with an explicit adjugate inverse; supports at most
// 3 parameters. p-values come from the integration-based t CDF above.
OlsOracle ols_normal_equations(const std::vector<std::vector<double>>& columns,
                               const std::vector<double>& y);

// Cross-correlation with full-series means and norms (the R ccf convention),
// written as a direct double loop.
std::vector<double> ccf_full_series(const std::vector<double>& x,
                                    const std::vector<double>& y, int max_lag);

// Plain Pearson r over raw vectors.
double pearson_r(const std::vector<double>& x, const std::vector<double>& y);

// Independent tokenizer/recount pipeline for corpus scoring checks.
std::vector<std::string> simple_tokens(const std::string& text);
std::size_t simple_phrase_count(const std::string& text, const std::string& phrase);
bool simple_contains(const std::string& text, const std::string& phrase);

struct DayStats {
    double ratio_sum = 0.0;
    std::size_t docs = 0;
    std::size_t bull = 0;
    std::size_t bear = 0;
    std::map<std::string, std::size_t> term_hits;
};

// Document-by-document recount of every per-day statistic the indicator
// module derives, keyed by ISO date.
std::map<std::string, DayStats> recount(const finsent::Corpus& corpus,
                                        const std::vector<std::string>& lexicon_terms,
                                        const std::vector<std::string>& volume_terms,
                                        const std::string& bull_term,
                                        const std::string& bear_term);

} // namespace oracles
