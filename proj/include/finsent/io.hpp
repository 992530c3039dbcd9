#pragma once

#include "finsent/econometrics.hpp"
#include "finsent/forecast.hpp"
#include "finsent/indicators.hpp"
#include "finsent/timeseries.hpp"

#include <map>
#include <string>
#include <vector>

namespace finsent {

// CSV with header `date,value`, ISO dates, '.' decimal point. Values are
// written with shortest round-trip formatting so a load/save cycle is exact.
TimeSeries load_series_csv(const std::string& path,
                           Frequency frequency = Frequency::Daily);
void save_series_csv(const TimeSeries& series, const std::string& path);

std::string format_double(double value); // shortest round-trip text

// Flat `key = value` run configuration; '#' starts a comment. Later keys win,
// so flag overrides can be layered on top by re-setting keys.
class RunConfig {
  public:
    RunConfig() = default;
    static RunConfig load(const std::string& path);

    bool has(const std::string& key) const;
    const std::string& get(const std::string& key) const; // raises ConfigError
    std::string get_or(const std::string& key, const std::string& fallback) const;
    void set(const std::string& key, const std::string& value);

    // relative paths in the file resolve against the config's directory
    std::string resolve_path(const std::string& raw) const;
    std::string path(const std::string& key) const { return resolve_path(get(key)); }

    // all keys sharing a prefix such as "series.", in sorted order
    std::vector<std::pair<std::string, std::string>>
    with_prefix(const std::string& prefix) const;

    double get_double(const std::string& key) const;
    int get_int(const std::string& key) const;
    bool get_bool(const std::string& key) const;
    std::vector<int> get_int_list(const std::string& key) const;

  private:
    std::map<std::string, std::string> entries_;
    std::string base_dir_;
};

// ---- text tables (paper-style star annotations) ----

std::string render_granger_table(const std::vector<GrangerResult>& results,
                                 const std::string& x_name,
                                 const std::string& y_name);

std::string
render_correlation_grid(const std::vector<std::string>& row_names,
                        const std::vector<std::string>& col_names,
                        const std::vector<std::vector<PearsonResult>>& cells);

std::string render_regression_table(const MultipleLaggedRegression& reg);

std::string render_forecast_table(const std::string& target_name,
                                  const ForecastReport& model0,
                                  const ForecastReport& model1);

std::string render_ccf(const CrossCorrelation& ccf);

std::string render_term_frequency(const std::vector<TermCount>& counts);

// ---- JSON views (full precision, deterministic key order) ----

std::string pearson_json(const std::string& x_name, const std::string& y_name,
                         const PearsonResult& result);
std::string ccf_json(const std::string& x_name, const std::string& y_name,
                     const CrossCorrelation& ccf);
std::string granger_json(const std::string& x_name, const std::string& y_name,
                         const std::vector<GrangerResult>& results);
std::string regression_json(const MultipleLaggedRegression& reg);
std::string forecast_json(const std::string& target_name, const ForecastReport& model0,
                          const ForecastReport& model1);

void write_text_file(const std::string& path, const std::string& content);

} // namespace finsent
