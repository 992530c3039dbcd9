// Throughput comparison of the OpenMP scoring kernels against the serial
// reference implementations, on a synthetic corpus big enough to matter.

#include "finsent/indicators.hpp"
#include "finsent/synth.hpp"
#include "finsent/timeseries.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace finsent;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <typename F> double time_best_of(int reps, F&& body) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = Clock::now();
        body();
        double elapsed = ms_since(t0);
        if (elapsed < best)
            best = elapsed;
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    std::size_t docs_per_day = argc > 1 ? std::stoul(argv[1]) : 2000;
    std::size_t days = argc > 2 ? std::stoul(argv[2]) : 60;

    std::vector<Observation> probs, negs;
    Date d(2015, 1, 1);
    for (std::size_t i = 0; i < days; ++i, d = d + 1) {
        probs.push_back({d, 0.6});
        negs.push_back({d, 0.25});
    }
    TimeSeries bull(probs, Frequency::Daily);
    TimeSeries neg(negs, Frequency::Daily);
    Lexicon lexicon("neg", {"downgrade", "crisis", "losses", "cut", "default",
                            "recession", "bankruptcy", "selloff"});

    std::printf("generating %zu docs/day x %zu days...\n", docs_per_day, days);
    Corpus corpus = gen_corpus(docs_per_day, bull, lexicon, neg, 123, 15);
    std::printf("corpus: %zu documents\n", corpus.size());
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#endif

    Date from = bull.front_date(), to = bull.back_date();
    struct Row {
        const char* name;
        double serial_ms;
        double parallel_ms;
    };
    std::vector<Row> rows;

    rows.push_back({"nns_daily",
                    time_best_of(3, [&] { reference::nns_daily(corpus, lexicon, from, to); }),
                    time_best_of(3, [&] { nns_daily(corpus, lexicon, from, to); })});
    rows.push_back(
        {"tis_daily",
         time_best_of(3, [&] {
             reference::tis_daily(corpus, "bullish", "bearish", from, to);
         }),
         time_best_of(3, [&] { tis_daily(corpus, "bullish", "bearish", from, to); })});
    rows.push_back({"term_volume_daily",
                    time_best_of(3, [&] {
                        reference::term_volume_daily(corpus, lexicon, from, to);
                    }),
                    time_best_of(3, [&] { term_volume_daily(corpus, lexicon, from, to); })});

    std::printf("\n%-20s %12s %12s %10s\n", "kernel", "serial ms", "parallel ms",
                "speedup");
    for (const auto& row : rows)
        std::printf("%-20s %12.1f %12.1f %9.2fx\n", row.name, row.serial_ms,
                    row.parallel_ms, row.serial_ms / row.parallel_ms);
    return 0;
}
