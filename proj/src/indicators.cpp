#include "finsent/indicators.hpp"

#include "finsent/econometrics.hpp"
#include "finsent/errors.hpp"

#include <algorithm>
#include <cmath>

namespace finsent {

namespace {

void check_window(Date from, Date to) {
    if (from > to)
        raise(ErrorKind::InvalidArgument, "window start " + from.iso() +
                                              " is after end " + to.iso());
}

void check_range(const TimeSeries& s, IndicatorKind kind) {
    for (const auto& p : s.points()) {
        bool ok = true;
        switch (kind) {
        case IndicatorKind::NNS:
        case IndicatorKind::TIS:
            ok = p.value >= 0.0 && p.value <= 1.0;
            break;
        case IndicatorKind::TermVolume:
            ok = p.value >= 0.0;
            break;
        case IndicatorKind::Composite:
            break;
        }
        if (!ok)
            raise(ErrorKind::InvalidArgument,
                  "indicator value out of range at " + p.date.iso());
    }
}

// Aggregates one value per day from per-document scores, walking documents in
// corpus order so floating-point sums are reproducible regardless of how the
// per-document pass was scheduled.
template <typename Emit>
void per_day(const Corpus& corpus, std::size_t lo, std::size_t hi, Emit&& emit) {
    std::size_t i = lo;
    while (i < hi) {
        Date day = corpus.documents()[i].date;
        std::size_t j = i;
        while (j < hi && corpus.documents()[j].date == day)
            ++j;
        emit(day, i, j);
        i = j;
    }
}

} // namespace

IndicatorSeries make_indicator(TimeSeries series, IndicatorKind kind,
                               std::vector<std::string> terms,
                               std::string lexicon_name) {
    if (series.frequency() != Frequency::Daily)
        raise(ErrorKind::InvalidArgument, "indicator series must be daily");
    check_range(series, kind);
    return {std::move(series), kind, std::move(terms), std::move(lexicon_name)};
}

IndicatorSeries nns_daily(const Corpus& corpus, const Lexicon& lex, Date from, Date to) {
    check_window(from, to);
    auto [lo, hi] = corpus.date_range(from, to);

    std::vector<double> ratio(hi - lo, 0.0);
#pragma omp parallel for schedule(dynamic, 256)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(hi - lo); ++i)
        ratio[static_cast<std::size_t>(i)] =
            negative_ratio(corpus.documents()[lo + static_cast<std::size_t>(i)], lex);

    std::vector<Observation> points;
    per_day(corpus, lo, hi, [&](Date day, std::size_t i, std::size_t j) {
        double sum = 0.0;
        for (std::size_t k = i; k < j; ++k)
            sum += ratio[k - lo];
        points.push_back({day, sum / static_cast<double>(j - i)});
    });
    return make_indicator(TimeSeries(std::move(points), Frequency::Daily),
                          IndicatorKind::NNS, lex.terms(), lex.name());
}

IndicatorSeries tis_daily(const Corpus& corpus, const std::string& bull_term,
                          const std::string& bear_term, Date from, Date to) {
    check_window(from, to);
    auto bull_tokens = tokenize(bull_term);
    auto bear_tokens = tokenize(bear_term);
    if (bull_tokens.empty() || bear_tokens.empty())
        raise(ErrorKind::InvalidArgument, "tag terms must be non-empty");
    if (bull_tokens == bear_tokens)
        raise(ErrorKind::InvalidArgument, "bull and bear terms must differ");

    auto [lo, hi] = corpus.date_range(from, to);
    std::vector<unsigned char> is_bull(hi - lo, 0), is_bear(hi - lo, 0);
#pragma omp parallel for schedule(dynamic, 256)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(hi - lo); ++i) {
        auto tokens =
            tokenize(corpus.documents()[lo + static_cast<std::size_t>(i)].text);
        is_bull[static_cast<std::size_t>(i)] =
            contains_token_subsequence(tokens, bull_tokens) ? 1 : 0;
        is_bear[static_cast<std::size_t>(i)] =
            contains_token_subsequence(tokens, bear_tokens) ? 1 : 0;
    }

    std::vector<Observation> points;
    per_day(corpus, lo, hi, [&](Date day, std::size_t i, std::size_t j) {
        std::size_t n_bull = 0, n_bear = 0;
        for (std::size_t k = i; k < j; ++k) {
            n_bull += is_bull[k - lo];
            n_bear += is_bear[k - lo];
        }
        if (n_bull + n_bear == 0)
            return; // no tagged messages: gap, not 0.5
        points.push_back({day, static_cast<double>(n_bull) /
                                   static_cast<double>(n_bull + n_bear)});
    });
    return make_indicator(TimeSeries(std::move(points), Frequency::Daily),
                          IndicatorKind::TIS, {bull_term, bear_term});
}

std::map<std::string, IndicatorSeries>
term_volume_daily(const Corpus& corpus, const Lexicon& terms, Date from, Date to) {
    check_window(from, to);
    auto [lo, hi] = corpus.date_range(from, to);
    std::size_t n_docs = hi - lo;

    std::vector<std::vector<std::string>> tokens(n_docs);
#pragma omp parallel for schedule(dynamic, 256)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n_docs); ++i)
        tokens[static_cast<std::size_t>(i)] =
            tokenize(corpus.documents()[lo + static_cast<std::size_t>(i)].text);

    const auto& term_list = terms.terms();
    std::vector<std::vector<Observation>> per_term(term_list.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(term_list.size()); ++t) {
        auto term_tokens = tokenize(term_list[static_cast<std::size_t>(t)]);
        auto& points = per_term[static_cast<std::size_t>(t)];
        per_day(corpus, lo, hi, [&](Date day, std::size_t i, std::size_t j) {
            std::size_t count = 0;
            for (std::size_t k = i; k < j; ++k)
                if (contains_token_subsequence(tokens[k - lo], term_tokens))
                    ++count;
            points.push_back({day, static_cast<double>(count)});
        });
    }

    std::map<std::string, IndicatorSeries> out;
    for (std::size_t t = 0; t < term_list.size(); ++t)
        out.emplace(term_list[t],
                    make_indicator(TimeSeries(std::move(per_term[t]), Frequency::Daily),
                                   IndicatorKind::TermVolume, {term_list[t]},
                                   terms.name()));
    return out;
}

TimeSeries composite_mean(const std::vector<TimeSeries>& series_set,
                          bool standardize_first) {
    if (series_set.empty())
        raise(ErrorKind::InvalidArgument, "composite_mean needs at least one series");
    Frequency freq = series_set.front().frequency();
    for (const auto& s : series_set)
        if (s.frequency() != freq)
            raise(ErrorKind::InvalidArgument, "composite inputs differ in frequency");

    std::vector<TimeSeries> inputs;
    if (standardize_first) {
        inputs.reserve(series_set.size());
        for (const auto& s : series_set)
            inputs.push_back(standardize(s).first);
    } else {
        inputs = series_set;
    }

    // date intersection, walking the first series and probing the rest
    std::vector<Observation> out;
    std::vector<std::size_t> cursor(inputs.size(), 0);
    for (const auto& p : inputs.front().points()) {
        double sum = p.value;
        bool everywhere = true;
        for (std::size_t s = 1; s < inputs.size(); ++s) {
            const auto& pts = inputs[s].points();
            while (cursor[s] < pts.size() && pts[cursor[s]].date < p.date)
                ++cursor[s];
            if (cursor[s] >= pts.size() || pts[cursor[s]].date != p.date) {
                everywhere = false;
                break;
            }
            sum += pts[cursor[s]].value;
        }
        if (everywhere)
            out.push_back({p.date, sum / static_cast<double>(inputs.size())});
    }
    if (out.empty())
        raise(ErrorKind::EmptyIntersection, "composite inputs share no dates");
    return TimeSeries(std::move(out), freq);
}

SelectedComposite select_terms_by_correlation(
    const std::map<std::string, TimeSeries>& series_map, const TimeSeries& target,
    double alpha, std::optional<std::size_t> top_k, bool standardize_first) {
    if (alpha <= 0.0 || alpha >= 1.0)
        raise(ErrorKind::InvalidArgument, "alpha must lie in (0,1)");
    if (series_map.empty())
        raise(ErrorKind::InvalidArgument, "no candidate term series");

    SelectedComposite out;
    for (const auto& [term, series] : series_map) {
        if (!series.same_axis(target))
            raise(ErrorKind::InvalidArgument,
                  "series for term '" + term + "' is not aligned to the target");
        PearsonResult pr = pearson(series, target);
        out.stats.push_back({term, pr.r, pr.p_value, false});
    }

    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < out.stats.size(); ++i)
        if (out.stats[i].p_value < alpha)
            candidates.push_back(i);
    if (top_k && candidates.size() > *top_k) {
        std::sort(candidates.begin(), candidates.end(),
                  [&](std::size_t a, std::size_t b) {
                      double fa = std::fabs(out.stats[a].r), fb = std::fabs(out.stats[b].r);
                      if (fa != fb)
                          return fa > fb;
                      return out.stats[a].term < out.stats[b].term;
                  });
        candidates.resize(*top_k);
        std::sort(candidates.begin(), candidates.end()); // back to alphabetical
    }
    if (candidates.empty())
        raise(ErrorKind::NoTermsSelected,
              "no term passed the p < " + std::to_string(alpha) + " filter");

    std::vector<TimeSeries> selected_series;
    for (std::size_t idx : candidates) {
        out.stats[idx].selected = true;
        out.terms.push_back(out.stats[idx].term);
        selected_series.push_back(series_map.at(out.stats[idx].term));
    }
    out.composite = composite_mean(selected_series, standardize_first);
    return out;
}

namespace reference {

IndicatorSeries nns_daily(const Corpus& corpus, const Lexicon& lex, Date from, Date to) {
    check_window(from, to);
    auto [lo, hi] = corpus.date_range(from, to);
    std::vector<Observation> points;
    per_day(corpus, lo, hi, [&](Date day, std::size_t i, std::size_t j) {
        double sum = 0.0;
        for (std::size_t k = i; k < j; ++k)
            sum += negative_ratio(corpus.documents()[k], lex);
        points.push_back({day, sum / static_cast<double>(j - i)});
    });
    return make_indicator(TimeSeries(std::move(points), Frequency::Daily),
                          IndicatorKind::NNS, lex.terms(), lex.name());
}

IndicatorSeries tis_daily(const Corpus& corpus, const std::string& bull_term,
                          const std::string& bear_term, Date from, Date to) {
    check_window(from, to);
    auto [lo, hi] = corpus.date_range(from, to);
    std::vector<Observation> points;
    per_day(corpus, lo, hi, [&](Date day, std::size_t i, std::size_t j) {
        std::size_t n_bull = 0, n_bear = 0;
        for (std::size_t k = i; k < j; ++k) {
            if (contains_term(corpus.documents()[k], bull_term))
                ++n_bull;
            if (contains_term(corpus.documents()[k], bear_term))
                ++n_bear;
        }
        if (n_bull + n_bear == 0)
            return;
        points.push_back({day, static_cast<double>(n_bull) /
                                   static_cast<double>(n_bull + n_bear)});
    });
    return make_indicator(TimeSeries(std::move(points), Frequency::Daily),
                          IndicatorKind::TIS, {bull_term, bear_term});
}

std::map<std::string, IndicatorSeries>
term_volume_daily(const Corpus& corpus, const Lexicon& terms, Date from, Date to) {
    check_window(from, to);
    auto [lo, hi] = corpus.date_range(from, to);
    std::map<std::string, IndicatorSeries> out;
    for (const auto& term : terms.terms()) {
        std::vector<Observation> points;
        per_day(corpus, lo, hi, [&](Date day, std::size_t i, std::size_t j) {
            std::size_t count = 0;
            for (std::size_t k = i; k < j; ++k)
                if (contains_term(corpus.documents()[k], term))
                    ++count;
            points.push_back({day, static_cast<double>(count)});
        });
        out.emplace(term,
                    make_indicator(TimeSeries(std::move(points), Frequency::Daily),
                                   IndicatorKind::TermVolume, {term}, terms.name()));
    }
    return out;
}

} // namespace reference

} // namespace finsent
