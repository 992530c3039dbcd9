#include "finsent/io.hpp"

#include "finsent/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace finsent {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

constexpr const char* kStarFootnote =
    "(p<0.01: ***, p<0.05: **, p<0.1: *)\n";

std::string p_with_stars(double p) {
    return fmt("%.4g", p) + significance_stars(p);
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

TimeSeries load_series_csv(const std::string& path, Frequency frequency) {
    std::ifstream in(path);
    if (!in)
        raise(ErrorKind::IoError, "cannot open series file " + path);
    std::string line;
    if (!std::getline(in, line) || trim(line) != "date,value")
        raise(ErrorKind::MalformedLine, path + ":1: expected header 'date,value'");
    std::vector<Observation> points;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty())
            continue;
        std::size_t comma = t.find(',');
        if (comma == std::string::npos)
            raise(ErrorKind::MalformedLine,
                  path + ":" + std::to_string(line_no) + ": expected date,value");
        auto date = Date::parse(t.substr(0, comma));
        if (!date)
            raise(ErrorKind::MalformedLine, path + ":" + std::to_string(line_no) +
                                                ": invalid date '" + t.substr(0, comma) + "'");
        std::string num = t.substr(comma + 1);
        double value = 0.0;
        auto res = std::from_chars(num.data(), num.data() + num.size(), value);
        if (res.ec != std::errc{} || res.ptr != num.data() + num.size())
            raise(ErrorKind::MalformedLine, path + ":" + std::to_string(line_no) +
                                                ": invalid number '" + num + "'");
        points.push_back({*date, value});
    }
    try {
        return TimeSeries(std::move(points), frequency);
    } catch (const Error& e) {
        raise(ErrorKind::MalformedLine, path + ": " + e.what());
    }
}

void save_series_csv(const TimeSeries& series, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        raise(ErrorKind::IoError, "cannot write series file " + path);
    out << "date,value\n";
    for (const auto& p : series.points())
        out << p.date.iso() << ',' << format_double(p.value) << '\n';
}

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        raise(ErrorKind::ConfigError, "cannot open config file " + path);
    RunConfig cfg;
    cfg.base_dir_ = std::filesystem::path(path).parent_path().string();
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            raise(ErrorKind::ConfigError,
                  path + ":" + std::to_string(line_no) + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            raise(ErrorKind::ConfigError,
                  path + ":" + std::to_string(line_no) + ": empty key");
        cfg.entries_[key] = value;
    }
    return cfg;
}

bool RunConfig::has(const std::string& key) const { return entries_.count(key) > 0; }

const std::string& RunConfig::get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end())
        raise(ErrorKind::ConfigError, "missing config key '" + key + "'");
    return it->second;
}

std::string RunConfig::get_or(const std::string& key, const std::string& fallback) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? fallback : it->second;
}

void RunConfig::set(const std::string& key, const std::string& value) {
    entries_[key] = value;
}

std::string RunConfig::resolve_path(const std::string& raw) const {
    std::filesystem::path p(raw);
    if (p.is_absolute() || base_dir_.empty())
        return raw;
    return (std::filesystem::path(base_dir_) / p).string();
}

std::vector<std::pair<std::string, std::string>>
RunConfig::with_prefix(const std::string& prefix) const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [k, v] : entries_)
        if (k.size() > prefix.size() && k.compare(0, prefix.size(), prefix) == 0)
            out.emplace_back(k.substr(prefix.size()), v);
    return out;
}

double RunConfig::get_double(const std::string& key) const {
    const std::string& raw = get(key);
    double value = 0.0;
    auto res = std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (res.ec != std::errc{} || res.ptr != raw.data() + raw.size())
        raise(ErrorKind::ConfigError, "config key '" + key + "' is not a number: " + raw);
    return value;
}

int RunConfig::get_int(const std::string& key) const {
    const std::string& raw = get(key);
    int value = 0;
    auto res = std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (res.ec != std::errc{} || res.ptr != raw.data() + raw.size())
        raise(ErrorKind::ConfigError, "config key '" + key + "' is not an integer: " + raw);
    return value;
}

bool RunConfig::get_bool(const std::string& key) const {
    const std::string& raw = get(key);
    if (raw == "true" || raw == "1" || raw == "yes")
        return true;
    if (raw == "false" || raw == "0" || raw == "no")
        return false;
    raise(ErrorKind::ConfigError, "config key '" + key + "' is not a boolean: " + raw);
}

std::vector<int> RunConfig::get_int_list(const std::string& key) const {
    const std::string& raw = get(key);
    std::vector<int> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            continue;
        int value = 0;
        auto res = std::from_chars(item.data(), item.data() + item.size(), value);
        if (res.ec != std::errc{} || res.ptr != item.data() + item.size())
            raise(ErrorKind::ConfigError,
                  "config key '" + key + "' has a bad list entry: " + item);
        out.push_back(value);
    }
    if (out.empty())
        raise(ErrorKind::ConfigError, "config key '" + key + "' lists no values");
    return out;
}

std::string render_granger_table(const std::vector<GrangerResult>& results,
                                 const std::string& x_name, const std::string& y_name) {
    std::vector<int> lags;
    for (const auto& r : results)
        if (std::find(lags.begin(), lags.end(), r.lag) == lags.end())
            lags.push_back(r.lag);

    std::ostringstream out;
    out << "Granger causality p-values\n";
    out << pad("", 24);
    for (int lag : lags)
        out << pad(std::to_string(lag), 16);
    out << '\n';
    for (Direction dir : {Direction::XtoY, Direction::YtoX}) {
        std::string label = dir == Direction::XtoY ? x_name + " -> " + y_name
                                                   : y_name + " -> " + x_name;
        out << pad(label, 24);
        for (int lag : lags) {
            for (const auto& r : results)
                if (r.direction == dir && r.lag == lag) {
                    out << pad(p_with_stars(r.p_value), 16);
                    break;
                }
        }
        out << '\n';
    }
    out << kStarFootnote;
    return out.str();
}

std::string
render_correlation_grid(const std::vector<std::string>& row_names,
                        const std::vector<std::string>& col_names,
                        const std::vector<std::vector<PearsonResult>>& cells) {
    std::ostringstream out;
    out << "Pearson correlations\n";
    out << pad("", 16);
    for (const auto& c : col_names)
        out << pad(c, 16);
    out << '\n';
    for (std::size_t i = 0; i < row_names.size(); ++i) {
        out << pad(row_names[i], 16);
        for (std::size_t j = 0; j < col_names.size(); ++j) {
            const auto& cell = cells[i][j];
            out << pad(fmt("%.3f", cell.r) + significance_stars(cell.p_value), 16);
        }
        out << '\n';
    }
    out << kStarFootnote;
    return out.str();
}

std::string render_regression_table(const MultipleLaggedRegression& reg) {
    std::ostringstream out;
    out << "Multiple lagged regression\n";
    out << pad("lag", 6);
    for (const auto& var : reg.variables)
        out << pad(var + " coeff", 14) << pad("p-value", 14);
    out << '\n';
    for (int lag = 1; lag <= reg.n_lags; ++lag) {
        out << pad(std::to_string(lag), 6);
        for (const auto& var : reg.variables) {
            for (const auto& cell : reg.grid)
                if (cell.variable == var && cell.lag == lag) {
                    out << pad(fmt("%.4f", cell.coefficient), 14)
                        << pad(p_with_stars(cell.p_value), 14);
                    break;
                }
        }
        out << '\n';
    }
    std::size_t n = reg.fit.n_obs, p = reg.fit.n_params;
    double resid_se = std::sqrt(reg.fit.rss / static_cast<double>(n - p));
    out << kStarFootnote;
    out << "Residual standard error: " << fmt("%.4g", resid_se) << " on "
        << (n - p) << " degrees of freedom\n";
    out << "Multiple R-squared: " << fmt("%.4g", reg.fit.r_squared)
        << ", Adjusted R-squared: " << fmt("%.4g", reg.fit.adj_r_squared)
        << " (baseline adjusted R-squared: " << fmt("%.4g", reg.baseline.adj_r_squared)
        << ")\n";
    return out.str();
}

std::string render_forecast_table(const std::string& target_name,
                                  const ForecastReport& model0,
                                  const ForecastReport& model1) {
    std::ostringstream out;
    out << pad("", 12) << pad("Model", 10) << pad("MAPE", 10) << "Direction\n";
    out << pad(target_name, 12) << pad("Model 0", 10)
        << pad(fmt("%.3f", model0.mape), 10) << fmt("%.2f", model0.direction_accuracy)
        << '\n';
    out << pad("", 12) << pad("Model 1", 10) << pad(fmt("%.3f", model1.mape), 10)
        << fmt("%.2f", model1.direction_accuracy) << '\n';
    return out.str();
}

std::string render_ccf(const CrossCorrelation& ccf) {
    std::ostringstream out;
    out << "Cross-correlation (k > 0: y anticipates x)\n";
    out << pad("lag", 6) << "gamma\n";
    for (std::size_t i = 0; i < ccf.lags.size(); ++i) {
        out << pad(std::to_string(ccf.lags[i]), 6) << fmt("%+.4f", ccf.coefficients[i]);
        if (ccf.lags[i] == ccf.peak_lag())
            out << "  <- peak";
        out << '\n';
    }
    return out.str();
}

std::string render_term_frequency(const std::vector<TermCount>& counts) {
    std::ostringstream out;
    out << pad("term", 36) << "count\n";
    for (const auto& tc : counts)
        out << pad(tc.term, 36) << tc.count << '\n';
    return out.str();
}

using Json = nlohmann::ordered_json;

namespace {

Json granger_entry(const GrangerResult& r, const std::string& x_name,
                   const std::string& y_name) {
    Json j;
    j["direction"] = r.direction == Direction::XtoY ? x_name + "->" + y_name
                                                    : y_name + "->" + x_name;
    j["lag"] = r.lag;
    j["f_stat"] = r.f_stat;
    j["p_value"] = r.p_value;
    j["rss_restricted"] = r.rss_restricted;
    j["rss_unrestricted"] = r.rss_unrestricted;
    j["df_num"] = r.df_num;
    j["df_den"] = r.df_den;
    j["stars"] = significance_stars(r.p_value);
    return j;
}

Json fit_json(const RegressionFit& fit) {
    Json j;
    j["coefficients"] = fit.coefficients;
    j["rss"] = fit.rss;
    j["std_errors"] = fit.std_errors;
    j["t_stats"] = fit.t_stats;
    j["p_values"] = fit.p_values;
    j["r_squared"] = fit.r_squared;
    j["adj_r_squared"] = fit.adj_r_squared;
    j["n_obs"] = fit.n_obs;
    j["n_params"] = fit.n_params;
    return j;
}

Json report_json(const ForecastReport& r) {
    Json j;
    Json dates = Json::array();
    for (const auto& d : r.dates)
        dates.push_back(d.iso());
    j["dates"] = dates;
    j["actuals"] = r.actuals;
    j["predictions"] = r.predictions;
    j["abs_pct_errors"] = r.per_step_abs_pct_error;
    j["mape"] = r.mape;
    j["direction_accuracy"] = r.direction_accuracy;
    return j;
}

} // namespace

std::string pearson_json(const std::string& x_name, const std::string& y_name,
                         const PearsonResult& result) {
    Json j;
    j["x"] = x_name;
    j["y"] = y_name;
    j["r"] = result.r;
    j["p_value"] = result.p_value;
    j["n"] = result.n;
    j["stars"] = significance_stars(result.p_value);
    return j.dump(2);
}

std::string ccf_json(const std::string& x_name, const std::string& y_name,
                     const CrossCorrelation& ccf) {
    Json j;
    j["x"] = x_name;
    j["y"] = y_name;
    j["lags"] = ccf.lags;
    j["coefficients"] = ccf.coefficients;
    j["peak_lag"] = ccf.peak_lag();
    return j.dump(2);
}

std::string granger_json(const std::string& x_name, const std::string& y_name,
                         const std::vector<GrangerResult>& results) {
    Json j = Json::array();
    for (const auto& r : results)
        j.push_back(granger_entry(r, x_name, y_name));
    return j.dump(2);
}

std::string regression_json(const MultipleLaggedRegression& reg) {
    Json j;
    j["n_lags"] = reg.n_lags;
    j["variables"] = reg.variables;
    Json grid = Json::array();
    for (const auto& cell : reg.grid) {
        Json g;
        g["variable"] = cell.variable;
        g["lag"] = cell.lag;
        g["coefficient"] = cell.coefficient;
        g["p_value"] = cell.p_value;
        g["stars"] = significance_stars(cell.p_value);
        grid.push_back(g);
    }
    j["grid"] = grid;
    j["fit"] = fit_json(reg.fit);
    j["baseline"] = fit_json(reg.baseline);
    return j.dump(2);
}

std::string forecast_json(const std::string& target_name, const ForecastReport& model0,
                          const ForecastReport& model1) {
    Json j;
    j["target"] = target_name;
    j["model0"] = report_json(model0);
    j["model1"] = report_json(model1);
    return j.dump(2);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        raise(ErrorKind::IoError, "cannot write file " + path);
    out << content;
}

} // namespace finsent
