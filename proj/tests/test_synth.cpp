#include "finsent/synth.hpp"

#include "finsent/econometrics.hpp"
#include "finsent/indicators.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

using namespace finsent;
using namespace test_helpers;

TEST_CASE("SplitMix64 reproduces the published stream") {
    SplitMix64 zero(0);
    CHECK(zero.next() == 0xe220a8397b1dcdafULL);
    CHECK(zero.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(zero.next() == 0x06c45d188009454fULL);
    CHECK(zero.next() == 0xf88bb8a8724c81ecULL);

    SplitMix64 rng(42);
    CHECK(rng.next() == 0xbdd732262feb6e95ULL);
    CHECK(rng.next() == 0x28efe333b266f103ULL);

    SplitMix64 uni(42);
    CHECK(uni.uniform() == doctest::Approx(0.74156487877182342).epsilon(1e-16));
    CHECK(uni.uniform() == doctest::Approx(0.15991039287692016).epsilon(1e-16));
    // strictly inside (0,1)
    SplitMix64 probe(7);
    for (int i = 0; i < 10000; ++i) {
        double u = probe.uniform();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("gen_coupled_pair is deterministic and respects its spec") {
    VarSpec spec;
    spec.coupling = 0.8;
    spec.lag = 1;
    spec.noise_std = 0.1;
    spec.length = 300;
    spec.seed = 7;

    auto [x1, y1] = gen_coupled_pair(spec);
    auto [x2, y2] = gen_coupled_pair(spec);
    REQUIRE(x1.size() == 300);
    for (std::size_t i = 0; i < x1.size(); ++i) {
        CHECK(x1[i].value == x2[i].value); // bit-for-bit
        CHECK(y1[i].value == y2[i].value);
    }
    CHECK(x1.front_date().iso() == "2015-01-01");

    // the coupling construction: y_t - 0.8 x_{t-1} is pure noise
    for (std::size_t t = 1; t < y1.size(); ++t) {
        double residual = y1[t].value - 0.8 * x1[t - 1].value;
        CHECK(std::fabs(residual) < 0.1 * 6.0); // six sigmas of the noise term
    }

    // this construction is the oracle behind the causality tests
    auto result = granger(x1, y1, 1);
    CHECK(result.p_value < 0.01);

    VarSpec decoupled = spec;
    decoupled.coupling = 0.0;
    decoupled.noise_std = 1.0;
    auto [xd, yd] = gen_coupled_pair(decoupled);
    auto r = pearson(xd, yd);
    CHECK(std::fabs(r.r) < 0.2);

    VarSpec bad = spec;
    bad.length = 5;
    CHECK_RAISES(ErrorKind::InvalidArgument, gen_coupled_pair(bad));
    bad = spec;
    bad.noise_std = 0.0;
    CHECK_RAISES(ErrorKind::InvalidArgument, gen_coupled_pair(bad));
}

TEST_CASE("gen_corpus hits its closed-form ground truth at the extremes") {
    Lexicon lex("neg", {"downgrade", "crisis"});
    auto all_bull = daily("2011-08-01", std::vector<double>(5, 1.0));
    auto no_neg = daily("2011-08-01", std::vector<double>(5, 0.0));

    Corpus corpus = gen_corpus(20, all_bull, lex, no_neg, 99);
    CHECK(corpus.size() == 100);

    auto tis = tis_daily(corpus, "bullish", "bearish", day("2011-08-01"),
                         day("2011-08-05"));
    REQUIRE(tis.series.size() == 5);
    for (const auto& p : tis.series.points())
        CHECK(p.value == doctest::Approx(1.0));

    auto nns = nns_daily(corpus, lex, day("2011-08-01"), day("2011-08-05"));
    for (const auto& p : nns.series.points())
        CHECK(p.value == doctest::Approx(0.0));

    // probabilities must be valid
    auto bad = daily("2011-08-01", std::vector<double>(5, 1.5));
    CHECK_RAISES(ErrorKind::InvalidArgument, gen_corpus(20, bad, lex, no_neg, 99));
}

TEST_CASE("gen_corpus concentrates around the configured probability") {
    Lexicon lex("neg", {"downgrade"});
    auto probs = daily("2011-08-01", std::vector<double>(3, 0.75));
    auto neg = daily("2011-08-01", std::vector<double>(3, 0.2));
    Corpus corpus = gen_corpus(10000, probs, lex, neg, 4242);
    auto tis = tis_daily(corpus, "bullish", "bearish", day("2011-08-01"),
                         day("2011-08-03"));
    for (const auto& p : tis.series.points())
        CHECK(std::fabs(p.value - 0.75) < 0.02); // binomial concentration

    // expected NNS = neg_prob * B/(B+1) with the default 9 body tokens
    auto nns = nns_daily(corpus, lex, day("2011-08-01"), day("2011-08-03"));
    for (const auto& p : nns.series.points())
        CHECK(std::fabs(p.value - 0.2 * 9.0 / 10.0) < 0.02);
}

TEST_CASE("generated corpora round-trip through corpus file IO") {
    Lexicon lex("neg", {"downgrade", "crisis"});
    auto probs = daily("2011-08-01", std::vector<double>(4, 0.5));
    auto neg = daily("2011-08-01", std::vector<double>(4, 0.25));
    Corpus corpus = gen_corpus(25, probs, lex, neg, 11);

    auto path = (std::filesystem::temp_directory_path() / "synth_roundtrip.jsonl").string();
    save_corpus_jsonl(corpus, path);
    Corpus loaded = load_corpus(path);
    std::remove(path.c_str());

    REQUIRE(loaded.size() == corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        CHECK(loaded.documents()[i].date == corpus.documents()[i].date);
        CHECK(loaded.documents()[i].text == corpus.documents()[i].text);
        CHECK(loaded.documents()[i].source == corpus.documents()[i].source);
    }
}
