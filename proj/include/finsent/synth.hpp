#pragma once

#include "finsent/corpus.hpp"
#include "finsent/timeseries.hpp"

#include <cstdint>
#include <utility>

namespace finsent {

// SplitMix64: the fixed generator behind every synthetic fixture. The
// constants are part of the file-format contract — any reimplementation must
// reproduce the streams bit for bit (see the test vectors in the suite).
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform on the open interval (0,1); safe to feed into inverse CDFs
    double uniform() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    // standard normal via the A&S 26.2.23 inverse-CDF approximation
    double gaussian();

  private:
    std::uint64_t state_;
};

struct VarSpec {
    double coupling = 0.0;  // coefficient of x_{t-lag} in y
    int lag = 1;            // L
    double noise_std = 1.0; // > 0
    std::size_t length = 0; // > 10 * lag
    std::uint64_t seed = 0;
};

// x is seeded white noise; y_t = coupling * x_{t-L} + noise_std * eps_t with
// an independent sub-stream for eps. Identical specs produce identical series
// bit for bit. Dates are consecutive days from 2015-01-01.
std::pair<TimeSeries, TimeSeries> gen_coupled_pair(const VarSpec& spec);

// Per day of bull_prob_series: daily_doc_count documents, each tagged
// "bullish" with that day's probability (else "bearish"), followed by
// body_tokens filler words, each drawn from the lexicon with neg_prob for
// that day (else from a neutral pool). Expected TIS per day is bull_prob;
// expected NNS is neg_prob * body_tokens / (body_tokens + 1).
Corpus gen_corpus(std::size_t daily_doc_count, const TimeSeries& bull_prob_series,
                  const Lexicon& lexicon, const TimeSeries& neg_prob_series,
                  std::uint64_t seed, std::size_t body_tokens = 9);

} // namespace finsent
