// Regenerates the bundled fixture dataset (tests/fixtures). Everything is
// driven by SplitMix64, so the output is identical on every run; the files
// are committed and this tool only exists to rebuild them after a format
// change.
//
//   finsent_make_fixture <output-dir>
//
// The shape mirrors the analyses the toolkit runs: a latent daily "anxiety"
// process drives tweet tags, negative news wording, financial-term mentions,
// and (with a one-day lag) market returns, so the bundled report finds real
// lead-lag structure.

#include "finsent/corpus.hpp"
#include "finsent/io.hpp"
#include "finsent/synth.hpp"
#include "finsent/timeseries.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

using namespace finsent;
namespace fs = std::filesystem;

namespace {

constexpr int kDays = 456; // 2010-07-01 .. 2011-09-29
const Date kStart(2010, 7, 1);

const std::vector<std::string> kNegativeWords = {
    "downgrade", "crisis", "losses", "cut",     "default",
    "recession", "fears",  "panic",  "selloff", "bankruptcy"};

const std::vector<std::string> kTerms = {
    "djia",         "dow",          "dow jones",    "dow jones industrial average",
    "bear market",  "best stock",   "bull market",  "finance",
    "finance news", "stock",        "stock market", "stock market crash",
    "stock to buy", "wall street",  "sp500",        "financial market"};

const std::vector<std::string> kFiller = {
    "market", "today",  "trading", "shares",  "report",  "week",   "price",
    "points", "session", "close",  "traders", "outlook", "moving", "levels"};

std::string join_path(const fs::path& dir, const std::string& name) {
    return (dir / name).string();
}

TimeSeries to_series(const std::vector<double>& values, Date start,
                     Frequency freq = Frequency::Daily, int step = 1) {
    std::vector<Observation> pts;
    Date d = start;
    for (double v : values) {
        pts.push_back({d, v});
        d = d + step;
    }
    return TimeSeries(std::move(pts), freq);
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: finsent_make_fixture <output-dir>\n");
        return 2;
    }
    fs::path out = argv[1];
    fs::create_directories(out);

    // latent anxiety process, AR(1)
    SplitMix64 seeder(20110929);
    SplitMix64 rng_latent(seeder.next());
    SplitMix64 rng_tweets(seeder.next());
    SplitMix64 rng_news(seeder.next());
    SplitMix64 rng_market(seeder.next());

    std::vector<double> anxiety(kDays);
    anxiety[0] = rng_latent.gaussian() * 0.23;
    for (int t = 1; t < kDays; ++t)
        anxiety[t] = 0.9 * anxiety[t - 1] + 0.1 * rng_latent.gaussian();

    // ---- tweets: tags, term mentions, filler ----
    {
        std::vector<Document> docs;
        for (int t = 0; t < kDays; ++t) {
            Date day = kStart + t;
            double bull_prob = 1.0 / (1.0 + std::exp(4.0 * anxiety[t]));
            double term_boost = 1.0 + 2.0 * std::max(0.0, anxiety[t]);
            for (int k = 0; k < 40; ++k) {
                std::string text;
                auto add_word = [&](const std::string& w) {
                    if (!text.empty())
                        text.push_back(' ');
                    text += w;
                };
                if (rng_tweets.uniform() < 0.20)
                    add_word(rng_tweets.uniform() < bull_prob ? "bullish" : "bearish");
                for (const auto& term : kTerms)
                    if (rng_tweets.uniform() < 0.025 * term_boost)
                        add_word(term);
                int filler = 3 + static_cast<int>(rng_tweets.next() % 6);
                for (int w = 0; w < filler; ++w)
                    add_word(kFiller[rng_tweets.next() % kFiller.size()]);
                docs.push_back({day, std::move(text), "tweets"});
            }
        }
        save_corpus_jsonl(Corpus(std::move(docs)), join_path(out, "tweets.jsonl"));
    }

    // ---- news headlines: negative wording scales with anxiety ----
    {
        std::vector<Document> docs;
        for (int t = 0; t < kDays; ++t) {
            Date day = kStart + t;
            double neg_prob = std::clamp(0.12 + 0.35 * anxiety[t], 0.0, 0.9);
            for (int k = 0; k < 15; ++k) {
                std::string text;
                int words = 5 + static_cast<int>(rng_news.next() % 5);
                for (int w = 0; w < words; ++w) {
                    if (!text.empty())
                        text.push_back(' ');
                    if (rng_news.uniform() < neg_prob)
                        text += kNegativeWords[rng_news.next() % kNegativeWords.size()];
                    else
                        text += kFiller[rng_news.next() % kFiller.size()];
                }
                docs.push_back({day, std::move(text), "news"});
            }
        }
        save_corpus_jsonl(Corpus(std::move(docs)), join_path(out, "news.jsonl"));
    }

    // ---- lexicons ----
    {
        std::ofstream neg(join_path(out, "negative.txt"));
        neg << "# negative financial wording\n";
        for (const auto& w : kNegativeWords)
            neg << w << "\n";
        std::ofstream terms(join_path(out, "terms.txt"));
        terms << "# financial search terms\n";
        for (const auto& w : kTerms)
            terms << w << "\n";
    }

    // ---- financial dailies: returns react to yesterday's anxiety ----
    std::vector<double> djia(kDays), vix(kDays), volume(kDays), dsi(kDays);
    {
        double log_price = std::log(10000.0);
        for (int t = 0; t < kDays; ++t) {
            double shock = t > 0 ? anxiety[t - 1] : 0.0;
            double ret = 0.0002 - 0.012 * shock + 0.008 * rng_market.gaussian();
            log_price += ret;
            djia[t] = std::exp(log_price);
            vix[t] = std::exp(3.0 + 0.9 * anxiety[t] + 0.05 * rng_market.gaussian());
            volume[t] =
                std::exp(19.0 + 0.5 * anxiety[t] + 0.08 * rng_market.gaussian());
            dsi[t] = std::clamp(50.0 - 55.0 * anxiety[t] + 3.0 * rng_market.gaussian(),
                                2.0, 98.0);
        }
        // financial markets close on weekends: drop Sat/Sun so the toolkit's
        // gap filling has real work to do
        auto weekdays_only = [&](const std::vector<double>& values) {
            std::vector<Observation> pts;
            for (int t = 0; t < kDays; ++t) {
                Date d = kStart + t;
                if (d.weekday() != 0 && d.weekday() != 6)
                    pts.push_back({d, values[t]});
            }
            return TimeSeries(std::move(pts), Frequency::Daily);
        };
        save_series_csv(weekdays_only(djia), join_path(out, "djia.csv"));
        save_series_csv(weekdays_only(vix), join_path(out, "vix.csv"));
        save_series_csv(weekdays_only(volume), join_path(out, "volume.csv"));
        save_series_csv(to_series(dsi, kStart), join_path(out, "dsi.csv"));
    }

    // ---- weekly search volumes: anxiety-coupled, Saturday-ending ----
    {
        std::vector<double> gis;
        int t = 0;
        // first Saturday on/after the start
        Date first_sat = kStart + ((6 - static_cast<int>(kStart.weekday()) + 7) % 7);
        int lead = first_sat - kStart + 1;
        while (t + 6 < kDays) {
            int span = t == 0 ? lead : 7;
            double mean = 0.0;
            for (int i = 0; i < span && t + i < kDays; ++i)
                mean += anxiety[t + i];
            mean /= span;
            gis.push_back(std::clamp(
                45.0 + 90.0 * mean + 2.0 * rng_market.gaussian(), 1.0, 100.0));
            t += span;
        }
        save_series_csv(to_series(gis, first_sat, Frequency::Weekly, 7),
                        join_path(out, "gis.csv"));
    }

    // ---- run configuration ----
    {
        std::ofstream cfg(join_path(out, "report.cfg"));
        // paths resolve relative to this config file's directory
        cfg << "# bundled fixture analysis configuration\n"
            << "corpus.tweets = tweets.jsonl\n"
            << "corpus.news = news.jsonl\n"
            << "lexicon.negative = negative.txt\n"
            << "lexicon.terms = terms.txt\n"
            << "series.djia = djia.csv\n"
            << "series.vix = vix.csv\n"
            << "series.volume = volume.csv\n"
            << "series.dsi = dsi.csv\n"
            << "weekly.gis = gis.csv\n"
            << "from = 2010-07-01\n"
            << "to = 2011-09-29\n"
            << "alpha = 0.01\n"
            << "lags = 1,2,3,4,5\n"
            << "weekly_lags = 1,2,3\n"
            << "n_lags = 7\n"
            << "forecast_lags = 7\n"
            << "forecast_lags_weekly = 3\n"
            << "test_window = 30\n"
            << "test_window_weekly = 20\n"
            << "week_anchor = saturday\n";
    }

    std::printf("fixture written to %s\n", out.string().c_str());
    return 0;
}
