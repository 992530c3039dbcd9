#include "finsent/timeseries.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace finsent;
using namespace test_helpers;

TEST_CASE("date parsing and arithmetic") {
    auto d = Date::parse("2011-08-05");
    REQUIRE(d.has_value());
    CHECK(d->iso() == "2011-08-05");
    CHECK(d->weekday() == 5); // Friday
    CHECK((*d + 3).iso() == "2011-08-08");
    CHECK(*d + 3 - *d == 3);

    CHECK_FALSE(Date::parse("2011-13-40").has_value());
    CHECK_FALSE(Date::parse("2011-02-30").has_value());
    CHECK_FALSE(Date::parse("20110805").has_value());
    CHECK(Date::parse("2012-02-29").has_value()); // leap year
}

TEST_CASE("series construction enforces order and finiteness") {
    CHECK_RAISES(ErrorKind::InvalidArgument,
                 series({{"2011-08-05", 1.0}, {"2011-08-05", 2.0}}));
    CHECK_RAISES(ErrorKind::InvalidArgument,
                 series({{"2011-08-06", 1.0}, {"2011-08-05", 2.0}}));
    // weekly series must share one weekday
    CHECK_RAISES(ErrorKind::InvalidArgument,
                 series({{"2011-08-06", 1.0}, {"2011-08-10", 2.0}},
                        Frequency::Weekly));
    CHECK_NOTHROW(series({{"2011-08-06", 1.0}, {"2011-08-20", 2.0}},
                         Frequency::Weekly));
}

TEST_CASE("fill_missing_linear interpolates interior gaps") {
    // Friday 100, Monday 106 -> Saturday 102, Sunday 104
    auto filled = fill_missing_linear(
        series({{"2011-08-05", 100.0}, {"2011-08-08", 106.0}}));
    REQUIRE(filled.size() == 4);
    CHECK(filled[1].date.iso() == "2011-08-06");
    CHECK(filled[1].value == doctest::Approx(102.0));
    CHECK(filled[2].value == doctest::Approx(104.0));

    auto dense = daily("2011-08-01", {1, 2, 3});
    CHECK(fill_missing_linear(dense).same_axis(dense));

    auto mid = fill_missing_linear(series({{"2011-08-01", 10.0}, {"2011-08-03", 20.0}}));
    CHECK(mid[1].value == doctest::Approx(15.0));

    CHECK_RAISES(ErrorKind::InsufficientLength,
                 fill_missing_linear(series({{"2011-08-01", 1.0}})));
}

TEST_CASE("fill_missing_linear is idempotent and preserves observations") {
    auto sparse = series({{"2011-08-01", 3.25},
                          {"2011-08-04", -1.5},
                          {"2011-08-05", 0.75},
                          {"2011-08-09", 12.125}});
    auto once = fill_missing_linear(sparse);
    auto twice = fill_missing_linear(once);
    REQUIRE(once.size() == twice.size());
    for (std::size_t i = 0; i < once.size(); ++i) {
        CHECK(once[i].date == twice[i].date);
        CHECK(once[i].value == twice[i].value); // bit-exact
    }
    // no interior gaps
    for (std::size_t i = 1; i < once.size(); ++i)
        CHECK(once[i].date - once[i - 1].date == 1);
    // observed points untouched
    for (const auto& p : sparse.points()) {
        bool found = false;
        for (const auto& q : once.points())
            if (q.date == p.date && q.value == p.value)
                found = true;
        CHECK(found);
    }
}

TEST_CASE("log_return matches high-precision values") {
    auto constant = daily("2011-08-01", {7, 7, 7, 7});
    for (const auto& p : log_return(constant).points())
        CHECK(p.value == doctest::Approx(0.0).epsilon(1e-15));

    auto up = log_return(daily("2011-08-01", {100, 110}));
    REQUIRE(up.size() == 1);
    CHECK(up[0].value == doctest::Approx(0.09531017980432486).epsilon(1e-12));
    CHECK(up[0].date.iso() == "2011-08-02"); // dated at t+dt

    auto down = log_return(daily("2011-08-01", {100, 50}));
    CHECK(down[0].value == doctest::Approx(-0.6931471805599453).epsilon(1e-12));

    CHECK_RAISES(ErrorKind::NonPositiveValue,
                 log_return(daily("2011-08-01", {100, 0, 50})));
    CHECK_RAISES(ErrorKind::InsufficientLength,
                 log_return(daily("2011-08-01", {100, 110}), 2));
}

TEST_CASE("log_return round-trips an exponentiated cumulative sum") {
    std::vector<double> r = {0.01, -0.02, 0.005, 0.03, -0.015, 0.002};
    std::vector<double> levels = {50.0};
    for (double v : r)
        levels.push_back(levels.back() * std::exp(v));
    auto recovered = log_return(daily("2011-08-01", levels));
    REQUIRE(recovered.size() == r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        CHECK(recovered[i].value == doctest::Approx(r[i]).epsilon(1e-12));
}

TEST_CASE("log_transform") {
    auto s = log_transform(daily("2011-08-01", {1.0, std::exp(1.0)}));
    CHECK(s[0].value == doctest::Approx(0.0));
    CHECK(s[1].value == doctest::Approx(1.0));
    CHECK_RAISES(ErrorKind::NonPositiveValue,
                 log_transform(daily("2011-08-01", {1.0, 0.0})));
}

TEST_CASE("to_weekly_mean partitions by week-ending anchor") {
    // 2011-08-01 is a Monday; Saturday anchor = 2011-08-06
    auto week = to_weekly_mean(daily("2011-08-01", {3, 3, 3, 3, 3, 3, 3}));
    REQUIRE(week.size() == 2); // Mon..Sat then Sun
    CHECK(week[0].date.iso() == "2011-08-06");
    CHECK(week[0].value == doctest::Approx(3.0));
    CHECK(week[0].date.weekday() == 6);

    auto counted = to_weekly_mean(daily("2011-07-31", {1, 2, 3, 4, 5, 6, 7}));
    REQUIRE(counted.size() == 1); // Sun..Sat
    CHECK(counted[0].value == doctest::Approx(4.0));

    // partial week: 3 of 7 days present
    auto partial = to_weekly_mean(series(
        {{"2011-08-01", 2.0}, {"2011-08-03", 4.0}, {"2011-08-05", 6.0}}));
    REQUIRE(partial.size() == 1);
    CHECK(partial[0].value == doctest::Approx(4.0));

    // constant series stays constant at any anchor
    for (unsigned anchor = 0; anchor < 7; ++anchor)
        for (const auto& p :
             to_weekly_mean(daily("2011-08-01", std::vector<double>(17, 2.5)), anchor)
                 .points())
            CHECK(p.value == doctest::Approx(2.5));
}

TEST_CASE("standardize") {
    auto [z, params] = standardize(daily("2011-08-01", {1, 2, 3}));
    CHECK(params.mean == doctest::Approx(2.0));
    CHECK(params.std == doctest::Approx(1.0));
    CHECK(z[0].value == doctest::Approx(-1.0));
    CHECK(z[1].value == doctest::Approx(0.0));
    CHECK(z[2].value == doctest::Approx(1.0));

    StandardizationParams identity{0.0, 1.0};
    auto s = daily("2011-08-01", {4.5, -2.25, 9.0});
    auto [same, used] = standardize(s, &identity);
    for (std::size_t i = 0; i < s.size(); ++i)
        CHECK(same[i].value == s[i].value);

    CHECK_RAISES(ErrorKind::ZeroVariance,
                 standardize(daily("2011-08-01", {5, 5, 5})));

    // self-computed params leave mean ~0 and std ~1
    auto [zz, pp] = standardize(daily("2011-08-01", {3.1, 4.7, -2.2, 8.8, 0.4}));
    auto v = zz.values();
    CHECK(std::fabs(sample_mean(v)) < 1e-12);
    CHECK(std::fabs(sample_std(v) - 1.0) < 1e-12);
}

TEST_CASE("moving_average") {
    auto s = daily("2011-08-01", {1, 1, 1, 7});
    auto identity = moving_average(s, 1);
    CHECK(identity.same_axis(s));
    for (std::size_t i = 0; i < s.size(); ++i)
        CHECK(identity[i].value == s[i].value);

    auto w2 = moving_average(s, 2);
    REQUIRE(w2.size() == 3);
    CHECK(w2[0].value == doctest::Approx(1.0));
    CHECK(w2[1].value == doctest::Approx(1.0));
    CHECK(w2[2].value == doctest::Approx(4.0));
    CHECK(w2[0].date.iso() == "2011-08-02"); // first window-1 points dropped

    for (const auto& p : moving_average(daily("2011-08-01", {2, 2, 2, 2, 2}), 3).points())
        CHECK(p.value == doctest::Approx(2.0));

    CHECK_RAISES(ErrorKind::InsufficientLength, moving_average(s, 5));
}

TEST_CASE("align restricts to the date intersection") {
    auto a = series({{"2011-08-01", 1.0}, {"2011-08-02", 2.0}, {"2011-08-03", 3.0}});
    auto b = series({{"2011-08-02", 20.0}, {"2011-08-03", 30.0}, {"2011-08-04", 40.0}});
    auto [aa, bb] = align(a, b);
    REQUIRE(aa.size() == 2);
    CHECK(aa[0].date.iso() == "2011-08-02");
    CHECK(bb[0].value == doctest::Approx(20.0));
    CHECK(aa.same_axis(bb));

    // symmetric in date selection
    auto [bb2, aa2] = align(b, a);
    CHECK(bb2.same_axis(aa));

    // identical axes unchanged
    auto [a1, a2] = align(a, a);
    CHECK(a1.same_axis(a));

    // one extra leading date dropped
    auto lead = series({{"2011-07-31", 9.0}, {"2011-08-01", 1.0}, {"2011-08-02", 2.0},
                        {"2011-08-03", 3.0}});
    auto [l1, l2] = align(lead, a);
    CHECK(l1.front_date().iso() == "2011-08-01");

    CHECK_RAISES(ErrorKind::EmptyIntersection,
                 align(a, series({{"2012-01-01", 5.0}, {"2012-01-02", 6.0}})));
}

TEST_CASE("invert is pointwise negation and an involution") {
    auto s = series({{"2011-08-01", 1.0}, {"2011-08-02", -2.0}, {"2011-08-03", 0.0}});
    auto inv = invert(s);
    CHECK(inv[0].value == doctest::Approx(-1.0));
    CHECK(inv[1].value == doctest::Approx(2.0));
    CHECK(inv[2].value == doctest::Approx(0.0));
    auto back = invert(inv);
    for (std::size_t i = 0; i < s.size(); ++i)
        CHECK(back[i].value == s[i].value);
}
