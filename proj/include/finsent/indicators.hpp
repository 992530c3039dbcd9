#pragma once

#include "finsent/corpus.hpp"
#include "finsent/timeseries.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace finsent {

enum class IndicatorKind { NNS, TIS, TermVolume, Composite };

// A sentiment indicator as a daily TimeSeries plus provenance. Value ranges
// are enforced at construction: NNS and TIS lie in [0,1], volumes are
// non-negative counts.
struct IndicatorSeries {
    TimeSeries series;
    IndicatorKind kind = IndicatorKind::Composite;
    std::vector<std::string> terms; // lexicon terms / tag terms used
    std::string lexicon_name;
};

IndicatorSeries make_indicator(TimeSeries series, IndicatorKind kind,
                               std::vector<std::string> terms = {},
                               std::string lexicon_name = {});

// Daily mean of negative_ratio over the day's documents. Days in [from, to]
// without documents are gaps, filled downstream if at all.
IndicatorSeries nns_daily(const Corpus& corpus, const Lexicon& lex, Date from, Date to);

// N_bull / (N_bull + N_bear) per day, counting documents that contain each
// tag term. Days where both counts are zero are gaps.
IndicatorSeries tis_daily(const Corpus& corpus, const std::string& bull_term,
                          const std::string& bear_term, Date from, Date to);

// One daily series per lexicon term: the count of that day's documents
// containing the term. A day with documents but no matches is 0; a day with
// no documents at all is a gap.
std::map<std::string, IndicatorSeries>
term_volume_daily(const Corpus& corpus, const Lexicon& terms, Date from, Date to);

// Pointwise mean over the date intersection of the inputs. When
// standardize_first is set every input is rescaled to standard scores first
// (sources on incomparable scales).
TimeSeries composite_mean(const std::vector<TimeSeries>& series_set,
                          bool standardize_first = false);

struct TermCorrelation {
    std::string term;
    double r = 0.0;
    double p_value = 1.0;
    bool selected = false;
};

struct SelectedComposite {
    std::vector<std::string> terms; // alphabetical
    TimeSeries composite;
    std::vector<TermCorrelation> stats; // every candidate, alphabetical
};

// Keeps the terms whose Pearson correlation with the target is significant at
// alpha (optionally capped at top_k by |r|, alphabetical tie-break) and
// averages their series. All inputs must already share the target's date axis.
SelectedComposite select_terms_by_correlation(
    const std::map<std::string, TimeSeries>& series_map, const TimeSeries& target,
    double alpha, std::optional<std::size_t> top_k = std::nullopt,
    bool standardize_first = false);

// Serial reference implementations of the document-scanning kernels, kept for
// equivalence tests and the benchmark.
namespace reference {
IndicatorSeries nns_daily(const Corpus& corpus, const Lexicon& lex, Date from, Date to);
IndicatorSeries tis_daily(const Corpus& corpus, const std::string& bull_term,
                          const std::string& bear_term, Date from, Date to);
std::map<std::string, IndicatorSeries>
term_volume_daily(const Corpus& corpus, const Lexicon& terms, Date from, Date to);
} // namespace reference

} // namespace finsent
