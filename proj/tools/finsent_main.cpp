// Command-line front end: builds sentiment indicators from document corpora
// and runs correlation / cross-correlation / Granger / regression / rolling
// forecast analyses against financial time series, from local files only.

#include "finsent/corpus.hpp"
#include "finsent/econometrics.hpp"
#include "finsent/errors.hpp"
#include "finsent/forecast.hpp"
#include "finsent/indicators.hpp"
#include "finsent/io.hpp"
#include "finsent/synth.hpp"
#include "finsent/timeseries.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

using namespace finsent;
namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    bool fill = true;
};

RunConfig load_config_if_any(const CommonOpts& opts) {
    return opts.config_path.empty() ? RunConfig{} : RunConfig::load(opts.config_path);
}

fs::path resolve_out_dir(const CommonOpts& opts, const RunConfig& cfg) {
    std::string dir = !opts.out_dir.empty() ? opts.out_dir
                                           : cfg.resolve_path(cfg.get_or("out", "."));
    fs::create_directories(dir);
    return dir;
}

// A series argument is a CSV path or a config role (series.N daily, weekly.N
// weekly).
TimeSeries resolve_series(const std::string& arg, const RunConfig& cfg,
                          bool weekly_hint = false) {
    if (fs::exists(arg))
        return load_series_csv(arg, weekly_hint ? Frequency::Weekly : Frequency::Daily);
    if (cfg.has("series." + arg))
        return load_series_csv(cfg.path("series." + arg), Frequency::Daily);
    if (cfg.has("weekly." + arg))
        return load_series_csv(cfg.path("weekly." + arg), Frequency::Weekly);
    raise(ErrorKind::ConfigError,
          "cannot resolve series '" + arg + "' (no such file or config role)");
}

TimeSeries fill_and_log_count(const TimeSeries& s, const std::string& name, bool fill) {
    if (!fill || s.frequency() != Frequency::Daily || s.size() < 2)
        return s;
    TimeSeries filled = fill_missing_linear(s);
    if (filled.size() != s.size())
        std::cerr << "[finsent] filled " << (filled.size() - s.size())
                  << " missing days in " << name << "\n";
    return filled;
}

struct SeriesTransform {
    bool log = false;
    bool log_ret = false;
};

TimeSeries apply_transform(TimeSeries s, const SeriesTransform& t) {
    if (t.log && t.log_ret)
        raise(ErrorKind::ConfigError, "choose either log or return, not both");
    if (t.log)
        return log_transform(s);
    if (t.log_ret)
        return log_return(s);
    return s;
}

// Restricts every series to the common date axis.
std::vector<TimeSeries> align_all(std::vector<TimeSeries> list) {
    if (list.size() < 2)
        return list;
    for (std::size_t i = 1; i < list.size(); ++i) {
        auto [a, b] = align(list[0], list[i]);
        list[0] = a;
        list[i] = b;
    }
    // one more pass so earlier entries shrink to the final axis
    std::vector<TimeSeries> out;
    for (auto& s : list) {
        auto [a, _] = align(s, list[0]);
        out.push_back(a);
    }
    return out;
}

std::string sanitize(const std::string& term) {
    std::string out;
    for (char c : term)
        out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    return out;
}

void write_file(const fs::path& path, const std::string& content) {
    write_text_file(path.string(), content);
}

// ---------------------------------------------------------------- indicators

struct IndicatorsArgs {
    CommonOpts common;
    std::string from, to;
    std::string bull = "bullish", bear = "bearish";
    bool composite_zscore = false;
};

Date required_date(const RunConfig& cfg, const std::string& key,
                   const std::string& override_value) {
    std::string raw = !override_value.empty() ? override_value : cfg.get(key);
    auto d = Date::parse(raw);
    if (!d)
        raise(ErrorKind::ConfigError, "bad date for '" + key + "': " + raw);
    return *d;
}

Json series_stats(const TimeSeries& s) {
    Json j;
    j["points"] = s.size();
    if (!s.empty()) {
        j["first"] = s.front_date().iso();
        j["last"] = s.back_date().iso();
        int span = s.back_date() - s.front_date() + 1;
        j["gap_days"] = span - static_cast<int>(s.size());
    }
    return j;
}

int run_indicators(const IndicatorsArgs& args) {
    RunConfig cfg = load_config_if_any(args.common);
    fs::path out = resolve_out_dir(args.common, cfg);
    Date from = required_date(cfg, "from", args.from);
    Date to = required_date(cfg, "to", args.to);

    Json manifest;
    manifest["command"] = "indicators";
    manifest["from"] = from.iso();
    manifest["to"] = to.iso();
    Json outputs = Json::object();

    bool produced = false;
    if (cfg.has("corpus.news")) {
        Corpus news = load_corpus(cfg.path("corpus.news"));
        if (news.empty())
            std::cerr << "[finsent] warning: news corpus is empty\n";
        Lexicon negative = load_lexicon(cfg.path("lexicon.negative"));
        auto nns = nns_daily(news, negative, from, to);
        save_series_csv(nns.series, (out / "nns.csv").string());
        outputs["nns.csv"] = series_stats(nns.series);
        auto freq = term_frequency_report(news, negative, from, to);
        std::string csv = "term,count\n";
        for (const auto& tc : freq)
            csv += tc.term + "," + std::to_string(tc.count) + "\n";
        write_file(out / "term_freq_news.csv", csv);
        outputs["term_freq_news.csv"] = Json{{"terms", freq.size()}};
        produced = true;
    }
    if (cfg.has("corpus.tweets")) {
        Corpus tweets = load_corpus(cfg.path("corpus.tweets"));
        if (tweets.empty())
            std::cerr << "[finsent] warning: tweets corpus is empty\n";
        auto tis = tis_daily(tweets, args.bull, args.bear, from, to);
        save_series_csv(tis.series, (out / "tis.csv").string());
        outputs["tis.csv"] = series_stats(tis.series);
        if (cfg.has("lexicon.terms")) {
            Lexicon terms = load_lexicon(cfg.path("lexicon.terms"));
            auto volumes = term_volume_daily(tweets, terms, from, to);
            std::vector<TimeSeries> for_composite;
            bool any_points = false;
            for (const auto& [term, indicator] : volumes) {
                std::string file = "volume_" + sanitize(term) + ".csv";
                save_series_csv(indicator.series, (out / file).string());
                outputs[file] = series_stats(indicator.series);
                for_composite.push_back(indicator.series);
                any_points = any_points || !indicator.series.empty();
            }
            TimeSeries tvfst; // stays empty when the corpus had no coverage
            if (any_points)
                tvfst = composite_mean(for_composite, args.composite_zscore);
            save_series_csv(tvfst, (out / "tvfst.csv").string());
            outputs["tvfst.csv"] = series_stats(tvfst);
        }
        produced = true;
    }
    if (!produced)
        raise(ErrorKind::ConfigError,
              "config provides neither corpus.news nor corpus.tweets");

    manifest["outputs"] = outputs;
    write_file(out / "manifest.json", manifest.dump(2) + "\n");
    std::cout << "wrote " << outputs.size() << " indicator files to " << out.string()
              << "\n";
    return 0;
}

// ---------------------------------------------------- pairwise analyses

struct PairArgs {
    CommonOpts common;
    std::string x, y;
    SeriesTransform tx, ty;
    bool weekly = false;
    int max_lag = 5;
    std::vector<int> lags = {1, 2, 3};
    bool full_series_means = false;
};

std::pair<TimeSeries, TimeSeries> prepare_pair(const PairArgs& args,
                                               const RunConfig& cfg) {
    TimeSeries x = resolve_series(args.x, cfg, args.weekly);
    TimeSeries y = resolve_series(args.y, cfg, args.weekly);
    x = fill_and_log_count(x, args.x, args.common.fill);
    y = fill_and_log_count(y, args.y, args.common.fill);
    x = apply_transform(std::move(x), args.tx);
    y = apply_transform(std::move(y), args.ty);
    return align(x, y);
}

int run_correlate(const PairArgs& args) {
    RunConfig cfg = load_config_if_any(args.common);
    fs::path out = resolve_out_dir(args.common, cfg);
    auto [x, y] = prepare_pair(args, cfg);
    PearsonResult r = pearson(x, y);

    std::string text = "pearson(" + args.x + ", " + args.y + ") = " +
                       format_double(r.r) + significance_stars(r.p_value) +
                       "  (p = " + format_double(r.p_value) +
                       ", n = " + std::to_string(r.n) + ")\n";
    std::cout << text;
    write_file(out / "correlate.txt", text);
    write_file(out / "correlate.json", pearson_json(args.x, args.y, r) + "\n");
    return 0;
}

int run_ccf(const PairArgs& args) {
    RunConfig cfg = load_config_if_any(args.common);
    fs::path out = resolve_out_dir(args.common, cfg);
    auto [x, y] = prepare_pair(args, cfg);
    auto conv = args.full_series_means ? CcfConvention::FullSeries
                                       : CcfConvention::OverlapMeans;
    auto ccf = cross_correlation(x, y, args.max_lag, conv);

    std::cout << render_ccf(ccf);
    write_file(out / "ccf.json", ccf_json(args.x, args.y, ccf) + "\n");
    std::string csv = "lag,gamma\n";
    for (std::size_t i = 0; i < ccf.lags.size(); ++i)
        csv += std::to_string(ccf.lags[i]) + "," + format_double(ccf.coefficients[i]) +
               "\n";
    write_file(out / "ccf.csv", csv);
    return 0;
}

int run_granger(const PairArgs& args) {
    RunConfig cfg = load_config_if_any(args.common);
    fs::path out = resolve_out_dir(args.common, cfg);
    auto [x, y] = prepare_pair(args, cfg);
    auto results = granger_table(x, y, args.lags);

    std::string text = render_granger_table(results, args.x, args.y);
    std::cout << text;
    write_file(out / "granger.txt", text);
    write_file(out / "granger.json", granger_json(args.x, args.y, results) + "\n");
    return 0;
}

// ------------------------------------------------------------- regression

struct RegressArgs {
    CommonOpts common;
    std::string target;
    std::vector<std::string> exog;
    SeriesTransform t_target;
    int n_lags = 7;
    bool standardize_inputs = true;
};

int run_regress(const RegressArgs& args) {
    RunConfig cfg = load_config_if_any(args.common);
    fs::path out = resolve_out_dir(args.common, cfg);

    std::vector<TimeSeries> all;
    all.push_back(apply_transform(
        fill_and_log_count(resolve_series(args.target, cfg), args.target,
                           args.common.fill),
        args.t_target));
    for (const auto& name : args.exog)
        all.push_back(fill_and_log_count(resolve_series(name, cfg), name,
                                         args.common.fill));
    all = align_all(std::move(all));

    if (args.standardize_inputs)
        for (auto& s : all)
            s = standardize(s).first;

    std::vector<NamedSeries> exog;
    for (std::size_t i = 0; i < args.exog.size(); ++i)
        exog.push_back({args.exog[i], all[i + 1]});
    auto reg = multiple_lagged_regression(all[0], exog, args.n_lags, args.target);

    std::string text = render_regression_table(reg);
    std::cout << text;
    write_file(out / "regress.txt", text);
    write_file(out / "regress.json", regression_json(reg) + "\n");
    return 0;
}

// --------------------------------------------------------------- forecast

struct ForecastArgs {
    CommonOpts common;
    std::string target;
    std::vector<std::string> exog;
    int n_lags = 3;
    int window = 20;
    bool log_target = true;
    bool standardize_inputs = false;
};

std::string forecast_errors_csv(const ForecastReport& m0, const ForecastReport& m1) {
    std::string csv = "date,model0_err,model1_err\n";
    for (std::size_t i = 0; i < m0.dates.size(); ++i)
        csv += m0.dates[i].iso() + "," + format_double(m0.per_step_abs_pct_error[i]) +
               "," + format_double(m1.per_step_abs_pct_error[i]) + "\n";
    return csv;
}

int run_forecast(const ForecastArgs& args) {
    RunConfig cfg = load_config_if_any(args.common);
    fs::path out = resolve_out_dir(args.common, cfg);

    std::vector<TimeSeries> all;
    TimeSeries target = fill_and_log_count(resolve_series(args.target, cfg),
                                           args.target, args.common.fill);
    if (args.log_target)
        target = log_transform(target);
    all.push_back(std::move(target));
    for (const auto& name : args.exog)
        all.push_back(fill_and_log_count(resolve_series(name, cfg), name,
                                         args.common.fill));
    all = align_all(std::move(all));

    std::vector<NamedSeries> exog;
    for (std::size_t i = 0; i < args.exog.size(); ++i)
        exog.push_back({args.exog[i], all[i + 1]});

    ModelSpec m0{args.n_lags, {}, args.standardize_inputs};
    ModelSpec m1{args.n_lags, args.exog, args.standardize_inputs};
    auto pair = compare_models(all[0], exog, m0, m1, args.window);

    std::string text = render_forecast_table(args.target, pair.model0, pair.model1);
    std::cout << text;
    write_file(out / "forecast.txt", text);
    write_file(out / "forecast.json",
               forecast_json(args.target, pair.model0, pair.model1) + "\n");
    write_file(out / "forecast_errors.csv",
               forecast_errors_csv(pair.model0, pair.model1));
    return 0;
}

// ------------------------------------------------------------------ report

struct ReportArgs {
    CommonOpts common;
};

struct ReportInputs {
    Corpus tweets, news;
    std::optional<Lexicon> negative, terms;
    std::map<std::string, TimeSeries> daily;  // financial + external, filled
    std::optional<TimeSeries> gis_weekly;
    Date from, to;
};

const std::vector<std::string> kAllAnalyses = {
    "indicators",       "sentiment_correlations", "financial_correlations",
    "tvfst_prime",      "granger_daily",          "regression_daily",
    "forecast_daily",   "weekly_gis"};

std::vector<std::string> requested_analyses(const RunConfig& cfg) {
    std::string raw = cfg.get_or("report.analyses", "auto");
    if (raw == "auto") {
        std::vector<std::string> list;
        bool have_corpora = cfg.has("corpus.tweets") && cfg.has("corpus.news") &&
                            cfg.has("lexicon.negative") && cfg.has("lexicon.terms");
        bool have_djia = cfg.has("series.djia");
        if (have_corpora)
            list.push_back("indicators");
        if (have_corpora) {
            list.push_back("sentiment_correlations");
            if (have_djia) {
                list.push_back("financial_correlations");
                list.push_back("tvfst_prime");
                list.push_back("granger_daily");
                list.push_back("regression_daily");
                list.push_back("forecast_daily");
            }
        }
        if (cfg.has("weekly.gis") && have_djia)
            list.push_back("weekly_gis");
        if (list.empty())
            raise(ErrorKind::ConfigError, "config enables no report analyses");
        return list;
    }
    std::vector<std::string> list;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        if (std::find(kAllAnalyses.begin(), kAllAnalyses.end(), item) ==
            kAllAnalyses.end())
            raise(ErrorKind::ConfigError, "unknown report analysis '" + item + "'");
        list.push_back(item);
    }
    return list;
}

void require_roles(const RunConfig& cfg, const std::string& analysis,
                   const std::vector<std::string>& roles) {
    for (const auto& role : roles) {
        if (!cfg.has(role))
            raise(ErrorKind::ConfigError,
                  "analysis '" + analysis + "' needs config key '" + role + "'");
        if (!fs::exists(cfg.path(role)))
            raise(ErrorKind::ConfigError, "analysis '" + analysis + "': path '" +
                                              cfg.path(role) + "' does not exist");
    }
}

// validation before any computation
void validate_report(const RunConfig& cfg, const std::vector<std::string>& analyses) {
    const std::vector<std::string> corpora_roles = {
        "corpus.tweets", "corpus.news", "lexicon.negative", "lexicon.terms"};
    for (const auto& a : analyses) {
        if (a == "indicators" || a == "sentiment_correlations")
            require_roles(cfg, a, corpora_roles);
        else if (a == "financial_correlations" || a == "tvfst_prime" ||
                 a == "granger_daily" || a == "forecast_daily") {
            require_roles(cfg, a, corpora_roles);
            require_roles(cfg, a, {"series.djia"});
        } else if (a == "regression_daily") {
            require_roles(cfg, a, corpora_roles);
            require_roles(cfg, a, {"series.djia"});
        } else if (a == "weekly_gis") {
            require_roles(cfg, a, {"weekly.gis", "series.djia"});
        }
    }
    cfg.get("from");
    cfg.get("to");
}

int run_report(const ReportArgs& args) {
    RunConfig cfg = RunConfig::load(args.common.config_path);
    fs::path out = resolve_out_dir(args.common, cfg);
    auto analyses = requested_analyses(cfg);
    validate_report(cfg, analyses);
    auto active = [&](const std::string& name) {
        return std::find(analyses.begin(), analyses.end(), name) != analyses.end();
    };

    Date from = required_date(cfg, "from", "");
    Date to = required_date(cfg, "to", "");
    double alpha = cfg.has("alpha") ? cfg.get_double("alpha") : 0.01;
    std::vector<int> daily_lags =
        cfg.has("lags") ? cfg.get_int_list("lags") : std::vector<int>{1, 2, 3, 4, 5};
    std::vector<int> weekly_lags = cfg.has("weekly_lags")
                                       ? cfg.get_int_list("weekly_lags")
                                       : std::vector<int>{1, 2, 3};
    int reg_lags = cfg.has("n_lags") ? cfg.get_int("n_lags") : 7;
    int fc_lags_daily = cfg.has("forecast_lags") ? cfg.get_int("forecast_lags") : 7;
    int fc_lags_weekly =
        cfg.has("forecast_lags_weekly") ? cfg.get_int("forecast_lags_weekly") : 3;
    std::size_t window_daily =
        cfg.has("test_window") ? static_cast<std::size_t>(cfg.get_int("test_window")) : 30;
    std::size_t window_weekly = cfg.has("test_window_weekly")
                                    ? static_cast<std::size_t>(cfg.get_int("test_window_weekly"))
                                    : 20;
    unsigned week_anchor = 6;
    if (cfg.has("week_anchor")) {
        auto anchor = parse_weekday(cfg.get("week_anchor"));
        if (!anchor)
            raise(ErrorKind::ConfigError,
                  "bad week_anchor '" + cfg.get("week_anchor") + "'");
        week_anchor = *anchor;
    }

    Json manifest;
    manifest["command"] = "report";
    manifest["analyses"] = analyses;
    Json stages = Json::object();

    // every daily analysis consumes the indicators; files are written only
    // when the indicators stage itself was requested
    bool need_indicators = false;
    for (const auto& a : analyses)
        if (a != "weekly_gis")
            need_indicators = true;

    // ---- stage: indicators ----
    std::map<std::string, TimeSeries> indicator_series; // filled daily
    std::map<std::string, TimeSeries> volume_series;    // raw per-term
    if (need_indicators) {
        Corpus tweets = load_corpus(cfg.path("corpus.tweets"));
        Corpus news = load_corpus(cfg.path("corpus.news"));
        Lexicon negative = load_lexicon(cfg.path("lexicon.negative"));
        Lexicon terms = load_lexicon(cfg.path("lexicon.terms"));
        std::string bull = cfg.get_or("bull_term", "bullish");
        std::string bear = cfg.get_or("bear_term", "bearish");

        auto nns = nns_daily(news, negative, from, to);
        auto tis = tis_daily(tweets, bull, bear, from, to);
        auto volumes = term_volume_daily(tweets, terms, from, to);
        std::vector<TimeSeries> for_composite;
        for (const auto& [term, indicator] : volumes) {
            volume_series.emplace(term, indicator.series);
            for_composite.push_back(indicator.series);
        }
        auto tvfst = composite_mean(for_composite,
                                    cfg.has("composite_standardize") &&
                                        cfg.get_bool("composite_standardize"));
        if (active("indicators")) {
            Json files = Json::object();
            for (const auto& [term, s] : volume_series) {
                std::string file = "volume_" + sanitize(term) + ".csv";
                save_series_csv(s, (out / file).string());
                files[file] = series_stats(s);
            }
            save_series_csv(nns.series, (out / "nns.csv").string());
            save_series_csv(tis.series, (out / "tis.csv").string());
            save_series_csv(tvfst, (out / "tvfst.csv").string());
            files["nns.csv"] = series_stats(nns.series);
            files["tis.csv"] = series_stats(tis.series);
            files["tvfst.csv"] = series_stats(tvfst);

            auto freq = term_frequency_report(news, negative, from, to);
            std::string csv = "term,count\n";
            for (const auto& tc : freq)
                csv += tc.term + "," + std::to_string(tc.count) + "\n";
            write_file(out / "term_freq_news.csv", csv);
            files["term_freq_news.csv"] = Json{{"terms", freq.size()}};
            stages["indicators"] = files;
        }

        indicator_series.emplace("tis", fill_and_log_count(tis.series, "tis", true));
        indicator_series.emplace("nns", fill_and_log_count(nns.series, "nns", true));
        indicator_series.emplace("tvfst", fill_and_log_count(tvfst, "tvfst", true));
    }

    // financial and external daily series, gap-filled
    std::map<std::string, TimeSeries> daily;
    for (const auto& [name, path] : cfg.with_prefix("series."))
        daily.emplace(name, fill_and_log_count(load_series_csv(cfg.resolve_path(path)),
                                               name, true));
    if (daily.count("dsi") && need_indicators)
        indicator_series.emplace("dsi", daily.at("dsi"));

    std::optional<TimeSeries> log_ret;
    if (daily.count("djia"))
        log_ret = log_return(daily.at("djia"));

    // ---- stage: sentiment_correlations (indicator vs indicator) ----
    if (active("sentiment_correlations")) {
        std::vector<std::string> names;
        for (const auto& [name, s] : indicator_series)
            names.push_back(name);
        std::vector<std::vector<PearsonResult>> cells(
            names.size(), std::vector<PearsonResult>(names.size()));
        for (std::size_t i = 0; i < names.size(); ++i)
            for (std::size_t j = 0; j < names.size(); ++j) {
                auto [a, b] = align(indicator_series.at(names[i]),
                                    indicator_series.at(names[j]));
                cells[i][j] = pearson(a, b);
            }
        std::string text = render_correlation_grid(names, names, cells);
        write_file(out / "sentiment_correlations.txt", text);
        Json j = Json::array();
        for (std::size_t i = 0; i < names.size(); ++i)
            for (std::size_t jdx = i + 1; jdx < names.size(); ++jdx)
                j.push_back(Json::parse(
                    pearson_json(names[i], names[jdx], cells[i][jdx])));
        write_file(out / "sentiment_correlations.json", j.dump(2) + "\n");
        stages["sentiment_correlations"] = Json{{"indicators", names.size()}};
    }

    // ---- stage: financial_correlations (indicator vs financial) ----
    if (active("financial_correlations")) {
        std::vector<std::string> rows;
        for (const auto& [name, s] : indicator_series)
            rows.push_back(name);
        std::vector<std::string> cols;
        std::map<std::string, TimeSeries> col_series;
        for (const auto& [name, s] : daily)
            if (name != "dsi") {
                cols.push_back(name);
                col_series.emplace(name, s);
            }
        if (log_ret) {
            cols.push_back("log_return");
            col_series.emplace("log_return", *log_ret);
        }
        std::vector<std::vector<PearsonResult>> cells(
            rows.size(), std::vector<PearsonResult>(cols.size()));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) {
                auto [a, b] =
                    align(indicator_series.at(rows[i]), col_series.at(cols[j]));
                cells[i][j] = pearson(a, b);
            }
        std::string text = render_correlation_grid(rows, cols, cells);
        write_file(out / "financial_correlations.txt", text);
        Json j = Json::array();
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t jdx = 0; jdx < cols.size(); ++jdx)
                j.push_back(
                    Json::parse(pearson_json(rows[i], cols[jdx], cells[i][jdx])));
        write_file(out / "financial_correlations.json", j.dump(2) + "\n");
        stages["financial_correlations"] =
            Json{{"rows", rows.size()}, {"columns", cols.size()}};
    }

    // ---- stage: tvfst_prime (correlation-selected term composite) ----
    std::optional<TimeSeries> tvfst_prime;
    if (active("tvfst_prime")) {
        // per-term volumes aligned to the log-return axis
        std::map<std::string, TimeSeries> aligned;
        for (const auto& [term, s] : volume_series) {
            auto filled = fill_and_log_count(s, "volume." + term, true);
            auto [a, b] = align(filled, *log_ret);
            aligned.emplace(term, a);
        }
        // shrink target to the common axis as well
        TimeSeries target = *log_ret;
        for (auto& [term, s] : aligned) {
            auto [t2, s2] = align(target, s);
            target = t2;
            s = s2;
        }
        for (auto& [term, s] : aligned) {
            auto [s2, t2] = align(s, target);
            s = s2;
        }
        auto selection = select_terms_by_correlation(aligned, target, alpha);
        tvfst_prime = fill_and_log_count(selection.composite, "tvfst_prime", true);
        save_series_csv(selection.composite, (out / "tvfst_prime.csv").string());
        Json j;
        j["alpha"] = alpha;
        j["selected"] = selection.terms;
        Json stats = Json::array();
        for (const auto& s : selection.stats)
            stats.push_back(Json{{"term", s.term},
                                 {"r", s.r},
                                 {"p_value", s.p_value},
                                 {"selected", s.selected}});
        j["candidates"] = stats;
        write_file(out / "tvfst_prime.json", j.dump(2) + "\n");
        stages["tvfst_prime"] = Json{{"selected", selection.terms.size()}};
    }

    // ---- stage: granger_daily (sentiment vs log return) ----
    if (active("granger_daily")) {
        std::map<std::string, TimeSeries> tested(indicator_series);
        if (tvfst_prime)
            tested.emplace("tvfst_prime", *tvfst_prime);
        std::string all_text;
        Json all_json = Json::array();
        for (const auto& [name, s] : tested) {
            auto [x, y] = align(s, *log_ret);
            auto results = granger_table(x, y, daily_lags);
            all_text += render_granger_table(results, name, "log_return") + "\n";
            for (const auto& r : results)
                all_json.push_back(
                    Json::parse(granger_json(name, "log_return", {r}))[0]);
        }
        write_file(out / "granger_daily.txt", all_text);
        write_file(out / "granger_daily.json", all_json.dump(2) + "\n");
        stages["granger_daily"] = Json{{"indicators", tested.size()}};
    }

    // ---- stage: regression_daily (Table-X-shaped multiple regression) ----
    if (active("regression_daily")) {
        std::vector<std::pair<std::string, TimeSeries>> exog_pool;
        for (const auto& [name, s] : indicator_series)
            if (name != "dsi")
                exog_pool.emplace_back(name, s);
        if (daily.count("dsi"))
            exog_pool.emplace_back("dsi", daily.at("dsi"));
        if (daily.count("vix"))
            exog_pool.emplace_back("vix", daily.at("vix"));
        if (tvfst_prime) {
            // prefer the selected composite over the raw tvfst average
            std::erase_if(exog_pool, [](const auto& kv) { return kv.first == "tvfst"; });
            exog_pool.emplace_back("tvfst_prime", *tvfst_prime);
        }

        std::vector<TimeSeries> block;
        block.push_back(*log_ret);
        for (const auto& [name, s] : exog_pool)
            block.push_back(s);
        block = align_all(std::move(block));
        for (auto& s : block)
            s = standardize(s).first;

        std::vector<NamedSeries> exog;
        for (std::size_t i = 0; i < exog_pool.size(); ++i)
            exog.push_back({exog_pool[i].first, block[i + 1]});
        auto reg = multiple_lagged_regression(block[0], exog, reg_lags, "return");
        write_file(out / "regression_daily.txt", render_regression_table(reg));
        write_file(out / "regression_daily.json", regression_json(reg) + "\n");
        stages["regression_daily"] = Json{{"coefficients", reg.fit.coefficients.size()},
                                          {"adj_r_squared", reg.fit.adj_r_squared},
                                          {"baseline", reg.baseline.adj_r_squared}};
    }

    // ---- stage: forecast_daily (M0 vs M1 per financial target) ----
    if (active("forecast_daily")) {
        std::vector<std::string> exog_names;
        std::vector<TimeSeries> exog_series;
        for (const auto& [name, s] : indicator_series) {
            exog_names.push_back(name);
            exog_series.push_back(s);
        }
        Json stage = Json::object();
        std::string text;
        for (const auto& target_name : {"djia", "volume", "vix"}) {
            if (!daily.count(target_name))
                continue;
            std::vector<TimeSeries> block;
            block.push_back(log_transform(daily.at(target_name)));
            for (const auto& s : exog_series)
                block.push_back(s);
            block = align_all(std::move(block));
            std::vector<NamedSeries> exog;
            for (std::size_t i = 0; i < exog_names.size(); ++i)
                exog.push_back({exog_names[i], block[i + 1]});
            ModelSpec m0{fc_lags_daily, {}, false};
            ModelSpec m1{fc_lags_daily, exog_names, false};
            auto pair = compare_models(block[0], exog, m0, m1, window_daily);
            text += render_forecast_table(target_name, pair.model0, pair.model1);
            stage[target_name] =
                Json::parse(forecast_json(target_name, pair.model0, pair.model1));
            write_file(out / (std::string("forecast_daily_") + target_name + ".csv"),
                       forecast_errors_csv(pair.model0, pair.model1));
        }
        write_file(out / "forecast_daily.txt", text);
        write_file(out / "forecast_daily.json", stage.dump(2) + "\n");
        stages["forecast_daily"] = Json{{"targets", stage.size()}};
    }

    // ---- stage: weekly_gis (search volume vs weekly financials) ----
    if (active("weekly_gis")) {
        TimeSeries gis = load_series_csv(cfg.path("weekly.gis"), Frequency::Weekly);
        TimeSeries gis_log = log_transform(gis);
        Json stage = Json::object();
        std::string text;
        for (const auto& target_name : {"djia", "volume", "vix", "gold"}) {
            if (!daily.count(target_name))
                continue;
            TimeSeries weekly =
                log_transform(to_weekly_mean(daily.at(target_name), week_anchor));
            auto [x, y] = align(gis_log, weekly);
            Json entry;
            entry["pearson"] = Json::parse(pearson_json("gis", target_name, pearson(x, y)));
            int max_lag = std::min<int>(5, static_cast<int>(x.size()) / 4);
            auto ccf = cross_correlation(x, y, max_lag);
            entry["ccf"] = Json::parse(ccf_json("gis", target_name, ccf));
            auto results = granger_table(x, y, weekly_lags);
            entry["granger"] = Json::parse(granger_json("gis", target_name, results));
            text += render_granger_table(results, "gis", target_name) + "\n";

            ModelSpec m0{fc_lags_weekly, {}, false};
            ModelSpec m1{fc_lags_weekly, {"gis"}, false};
            auto pair = compare_models(y, {{"gis", x}}, m0, m1, window_weekly);
            entry["forecast"] =
                Json::parse(forecast_json(target_name, pair.model0, pair.model1));
            text += render_forecast_table(target_name, pair.model0, pair.model1) + "\n";
            stage[target_name] = entry;
        }
        write_file(out / "weekly_gis.txt", text);
        write_file(out / "weekly_gis.json", stage.dump(2) + "\n");
        stages["weekly_gis"] = Json{{"targets", stage.size()}};
    }

    manifest["stages"] = stages;
    write_file(out / "manifest.json", manifest.dump(2) + "\n");
    std::cout << "report complete: " << analyses.size() << " stages in "
              << out.string() << "\n";
    return 0;
}

// ------------------------------------------------------------------- synth

struct SynthPairArgs {
    double coupling = 0.8;
    int lag = 1;
    double noise = 0.1;
    std::size_t length = 300;
    std::uint64_t seed = 0;
    std::string out_x, out_y;
};

int run_synth_pair(const SynthPairArgs& args) {
    VarSpec spec;
    spec.coupling = args.coupling;
    spec.lag = args.lag;
    spec.noise_std = args.noise;
    spec.length = args.length;
    spec.seed = args.seed;
    auto [x, y] = gen_coupled_pair(spec);
    save_series_csv(x, args.out_x);
    save_series_csv(y, args.out_y);
    std::cout << "wrote " << args.out_x << " and " << args.out_y << "\n";
    return 0;
}

struct SynthCorpusArgs {
    std::size_t docs_per_day = 50;
    int days = 30;
    std::string start = "2015-01-01";
    double bull_prob = 0.6;
    double neg_prob = 0.25;
    std::string lexicon_path;
    std::uint64_t seed = 0;
    std::size_t body_tokens = 9;
    std::string out;
};

int run_synth_corpus(const SynthCorpusArgs& args) {
    auto start = Date::parse(args.start);
    if (!start)
        raise(ErrorKind::ConfigError, "bad start date " + args.start);
    std::vector<Observation> bull, neg;
    for (int i = 0; i < args.days; ++i) {
        bull.push_back({*start + i, args.bull_prob});
        neg.push_back({*start + i, args.neg_prob});
    }
    Lexicon lexicon = load_lexicon(args.lexicon_path);
    Corpus corpus = gen_corpus(args.docs_per_day, TimeSeries(bull, Frequency::Daily),
                               lexicon, TimeSeries(neg, Frequency::Daily), args.seed,
                               args.body_tokens);
    save_corpus_jsonl(corpus, args.out);
    std::cout << "wrote " << corpus.size() << " documents to " << args.out << "\n";
    return 0;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool config_required = false) {
    auto* c = cmd->add_option("--config", opts.config_path, "run configuration file");
    if (config_required)
        c->required();
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_flag("!--no-fill", opts.fill, "skip gap filling of daily inputs");
}

void add_pair_transforms(CLI::App* cmd, PairArgs& args) {
    cmd->add_flag_callback(
        "--log", [&args] { args.tx.log = args.ty.log = true; },
        "log-transform both series");
    cmd->add_flag("--log-x", args.tx.log, "log-transform x");
    cmd->add_flag("--log-y", args.ty.log, "log-transform y");
    cmd->add_flag("--return-x", args.tx.log_ret, "replace x by its log returns");
    cmd->add_flag("--return-y", args.ty.log_ret, "replace y by its log returns");
    cmd->add_flag("--weekly", args.weekly, "treat direct file paths as weekly series");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finsent: sentiment indicators and econometrics for financial series"};
    app.require_subcommand(1);

    IndicatorsArgs ind;
    auto* cmd_ind = app.add_subcommand("indicators",
                                       "build NNS/TIS/term-volume indicator CSVs");
    add_common(cmd_ind, ind.common, true);
    cmd_ind->add_option("--from", ind.from, "window start (overrides config)");
    cmd_ind->add_option("--to", ind.to, "window end (overrides config)");
    cmd_ind->add_option("--bull", ind.bull, "bullish tag term");
    cmd_ind->add_option("--bear", ind.bear, "bearish tag term");
    cmd_ind->add_flag("--composite-zscore", ind.composite_zscore,
                      "standardize term series before averaging");

    PairArgs cor;
    auto* cmd_cor = app.add_subcommand("correlate", "Pearson correlation of two series");
    add_common(cmd_cor, cor.common);
    cmd_cor->add_option("--x", cor.x)->required();
    cmd_cor->add_option("--y", cor.y)->required();
    add_pair_transforms(cmd_cor, cor);

    PairArgs ccf;
    auto* cmd_ccf = app.add_subcommand("ccf", "cross-correlation function of two series");
    add_common(cmd_ccf, ccf.common);
    cmd_ccf->add_option("--x", ccf.x)->required();
    cmd_ccf->add_option("--y", ccf.y)->required();
    cmd_ccf->add_option("--max-lag", ccf.max_lag, "largest |k|")->check(CLI::PositiveNumber);
    cmd_ccf->add_flag("--full-series-means", ccf.full_series_means,
                      "use the full-series normalization instead of overlap windows");
    add_pair_transforms(cmd_ccf, ccf);

    PairArgs gra;
    auto* cmd_gra = app.add_subcommand("granger", "bidirectional Granger causality tests");
    add_common(cmd_gra, gra.common);
    cmd_gra->add_option("--x", gra.x)->required();
    cmd_gra->add_option("--y", gra.y)->required();
    cmd_gra->add_option("--lags", gra.lags, "lags to test")->delimiter(',');
    add_pair_transforms(cmd_gra, gra);

    RegressArgs reg;
    auto* cmd_reg = app.add_subcommand("regress", "lagged multiple regression");
    add_common(cmd_reg, reg.common);
    cmd_reg->add_option("--target", reg.target)->required();
    cmd_reg->add_option("--exog", reg.exog, "exogenous series names")->delimiter(',');
    cmd_reg->add_option("--n-lags", reg.n_lags);
    cmd_reg->add_flag("--log-target", reg.t_target.log);
    cmd_reg->add_flag("--return-target", reg.t_target.log_ret);
    cmd_reg->add_flag("!--no-standardize", reg.standardize_inputs,
                      "skip standard-score normalization");

    ForecastArgs fc;
    auto* cmd_fc = app.add_subcommand("forecast", "rolling one-step forecast, M0 vs M1");
    add_common(cmd_fc, fc.common);
    cmd_fc->add_option("--target", fc.target)->required();
    cmd_fc->add_option("--exog", fc.exog, "M1 exogenous series")->delimiter(',');
    cmd_fc->add_option("--n-lags", fc.n_lags);
    cmd_fc->add_option("--window", fc.window, "test steps");
    cmd_fc->add_flag("!--no-log", fc.log_target, "skip log transform of the target");
    cmd_fc->add_flag("--standardize", fc.standardize_inputs,
                     "standardize inside each training window");

    ReportArgs rep;
    auto* cmd_rep = app.add_subcommand("report", "full daily + weekly analysis bundle");
    add_common(cmd_rep, rep.common, true);

    SynthPairArgs sp;
    auto* cmd_sp = app.add_subcommand("synth-pair", "deterministic coupled series pair");
    cmd_sp->add_option("--coupling", sp.coupling);
    cmd_sp->add_option("--lag", sp.lag)->check(CLI::PositiveNumber);
    cmd_sp->add_option("--noise", sp.noise);
    cmd_sp->add_option("--length", sp.length);
    cmd_sp->add_option("--seed", sp.seed);
    cmd_sp->add_option("--out-x", sp.out_x)->required();
    cmd_sp->add_option("--out-y", sp.out_y)->required();

    SynthCorpusArgs sc;
    auto* cmd_sc = app.add_subcommand("synth-corpus", "deterministic synthetic corpus");
    cmd_sc->add_option("--docs-per-day", sc.docs_per_day);
    cmd_sc->add_option("--days", sc.days)->check(CLI::PositiveNumber);
    cmd_sc->add_option("--start", sc.start);
    cmd_sc->add_option("--bull-prob", sc.bull_prob);
    cmd_sc->add_option("--neg-prob", sc.neg_prob);
    cmd_sc->add_option("--lexicon", sc.lexicon_path)->required();
    cmd_sc->add_option("--seed", sc.seed);
    cmd_sc->add_option("--body-tokens", sc.body_tokens);
    cmd_sc->add_option("--out", sc.out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_ind->parsed())
            return run_indicators(ind);
        if (cmd_cor->parsed())
            return run_correlate(cor);
        if (cmd_ccf->parsed())
            return run_ccf(ccf);
        if (cmd_gra->parsed())
            return run_granger(gra);
        if (cmd_reg->parsed())
            return run_regress(reg);
        if (cmd_fc->parsed())
            return run_forecast(fc);
        if (cmd_rep->parsed())
            return run_report(rep);
        if (cmd_sp->parsed())
            return run_synth_pair(sp);
        if (cmd_sc->parsed())
            return run_synth_corpus(sc);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_input_error() ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
