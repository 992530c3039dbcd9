#include "finsent/synth.hpp"

#include "finsent/errors.hpp"
#include "finsent/special_functions.hpp"

#include <array>

namespace finsent {

double SplitMix64::gaussian() { return inverse_normal_cdf(uniform()); }

namespace {

const Date kSynthEpoch(2015, 1, 1);

void check_spec(const VarSpec& spec) {
    if (spec.lag < 1)
        raise(ErrorKind::InvalidArgument, "lag must be >= 1");
    if (spec.noise_std <= 0.0)
        raise(ErrorKind::InvalidArgument, "noise_std must be positive");
    if (spec.length <= 10 * static_cast<std::size_t>(spec.lag))
        raise(ErrorKind::InvalidArgument, "length must exceed 10 * lag");
}

} // namespace

std::pair<TimeSeries, TimeSeries> gen_coupled_pair(const VarSpec& spec) {
    check_spec(spec);
    // two independent sub-streams derived from the seed
    SplitMix64 seeder(spec.seed);
    SplitMix64 rng_x(seeder.next());
    SplitMix64 rng_eps(seeder.next());

    std::vector<double> x(spec.length);
    for (auto& v : x)
        v = rng_x.gaussian();

    std::vector<Observation> px, py;
    px.reserve(spec.length);
    py.reserve(spec.length);
    for (std::size_t t = 0; t < spec.length; ++t) {
        double lagged = t >= static_cast<std::size_t>(spec.lag)
                            ? x[t - static_cast<std::size_t>(spec.lag)]
                            : 0.0;
        double y = spec.coupling * lagged + spec.noise_std * rng_eps.gaussian();
        Date d = kSynthEpoch + static_cast<int>(t);
        px.push_back({d, x[t]});
        py.push_back({d, y});
    }
    return {TimeSeries(std::move(px), Frequency::Daily),
            TimeSeries(std::move(py), Frequency::Daily)};
}

Corpus gen_corpus(std::size_t daily_doc_count, const TimeSeries& bull_prob_series,
                  const Lexicon& lexicon, const TimeSeries& neg_prob_series,
                  std::uint64_t seed, std::size_t body_tokens) {
    if (!bull_prob_series.same_axis(neg_prob_series))
        raise(ErrorKind::InvalidArgument, "probability series must share one axis");
    for (const auto& p : bull_prob_series.points())
        if (p.value < 0.0 || p.value > 1.0)
            raise(ErrorKind::InvalidArgument,
                  "bull probability out of [0,1] at " + p.date.iso());
    for (const auto& p : neg_prob_series.points())
        if (p.value < 0.0 || p.value > 1.0)
            raise(ErrorKind::InvalidArgument,
                  "negative-token probability out of [0,1] at " + p.date.iso());

    static const std::array<const char*, 8> neutral = {
        "market", "trading", "session", "shares", "index",
        "report", "quarter", "outlook"};

    // the closed-form TIS/NNS accounting needs single-token terms that are
    // disjoint from the tag words and the neutral pool
    for (const auto& term : lexicon.terms()) {
        if (tokenize(term).size() != 1)
            raise(ErrorKind::InvalidArgument,
                  "gen_corpus lexicon term '" + term + "' is not a single token");
        if (term == "bullish" || term == "bearish")
            raise(ErrorKind::InvalidArgument,
                  "gen_corpus lexicon must not contain the tag words");
        for (const char* w : neutral)
            if (term == w)
                raise(ErrorKind::InvalidArgument,
                      "gen_corpus lexicon term '" + term + "' collides with the filler pool");
    }

    SplitMix64 rng(seed);
    std::vector<Document> docs;
    docs.reserve(bull_prob_series.size() * daily_doc_count);
    for (std::size_t d = 0; d < bull_prob_series.size(); ++d) {
        Date day = bull_prob_series[d].date;
        double bull_p = bull_prob_series[d].value;
        double neg_p = neg_prob_series[d].value;
        for (std::size_t k = 0; k < daily_doc_count; ++k) {
            std::string text = rng.uniform() < bull_p ? "bullish" : "bearish";
            for (std::size_t w = 0; w < body_tokens; ++w) {
                text.push_back(' ');
                if (rng.uniform() < neg_p) {
                    const auto& terms = lexicon.terms();
                    text += terms[rng.next() % terms.size()];
                } else {
                    text += neutral[rng.next() % neutral.size()];
                }
            }
            docs.push_back({day, std::move(text), "synth"});
        }
    }
    return Corpus(std::move(docs));
}

} // namespace finsent
