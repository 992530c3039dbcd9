#pragma once

#include "finsent/corpus.hpp"
#include "finsent/errors.hpp"
#include "finsent/timeseries.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace test_helpers {

inline finsent::Date day(const std::string& iso) {
    auto d = finsent::Date::parse(iso);
    if (!d)
        throw std::runtime_error("bad test date " + iso);
    return *d;
}

// consecutive daily observations starting at `start`
inline finsent::TimeSeries daily(const std::string& start,
                                 const std::vector<double>& values) {
    std::vector<finsent::Observation> pts;
    finsent::Date d = day(start);
    for (double v : values) {
        pts.push_back({d, v});
        d = d + 1;
    }
    return finsent::TimeSeries(std::move(pts), finsent::Frequency::Daily);
}

// explicit (date, value) pairs
inline finsent::TimeSeries series(
    std::initializer_list<std::pair<const char*, double>> pts,
    finsent::Frequency freq = finsent::Frequency::Daily) {
    std::vector<finsent::Observation> out;
    for (const auto& [iso, v] : pts)
        out.push_back({day(iso), v});
    return finsent::TimeSeries(std::move(out), freq);
}

inline finsent::Document doc(const std::string& iso, const std::string& text) {
    return {day(iso), text, ""};
}

// expects a finsent::Error of the given kind
#define CHECK_RAISES(expected_kind, expr)                                            \
    do {                                                                             \
        bool caught_ = false;                                                        \
        try {                                                                        \
            (void)(expr);                                                            \
        } catch (const finsent::Error& e_) {                                         \
            caught_ = e_.kind() == (expected_kind);                                  \
        }                                                                            \
        CHECK_MESSAGE(caught_, "expected error kind not raised: " #expr);            \
    } while (0)

} // namespace test_helpers
