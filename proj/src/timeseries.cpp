#include "finsent/timeseries.hpp"

#include "finsent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace finsent {

TimeSeries::TimeSeries(std::vector<Observation> points, Frequency frequency)
    : points_(std::move(points)), frequency_(frequency) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i].value))
            raise(ErrorKind::InvalidArgument,
                  "non-finite value at " + points_[i].date.iso());
        if (i > 0 && points_[i].date <= points_[i - 1].date)
            raise(ErrorKind::InvalidArgument,
                  "dates not strictly increasing at " + points_[i].date.iso());
    }
    if (frequency_ == Frequency::Weekly && !points_.empty()) {
        unsigned anchor = points_.front().date.weekday();
        for (const auto& p : points_)
            if (p.date.weekday() != anchor)
                raise(ErrorKind::InvalidArgument,
                      "weekly series mixes weekdays at " + p.date.iso());
    }
}

std::vector<double> TimeSeries::values() const {
    std::vector<double> v;
    v.reserve(points_.size());
    for (const auto& p : points_)
        v.push_back(p.value);
    return v;
}

std::vector<Date> TimeSeries::dates() const {
    std::vector<Date> d;
    d.reserve(points_.size());
    for (const auto& p : points_)
        d.push_back(p.date);
    return d;
}

bool TimeSeries::same_axis(const TimeSeries& other) const {
    if (points_.size() != other.points_.size())
        return false;
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i].date != other.points_[i].date)
            return false;
    return true;
}

TimeSeries fill_missing_linear(const TimeSeries& s) {
    if (s.size() < 2)
        raise(ErrorKind::InsufficientLength,
              "fill_missing_linear needs at least 2 points");
    std::vector<Observation> out;
    out.reserve(static_cast<std::size_t>(s.back_date() - s.front_date()) + 1);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const auto& left = s[i];
        const auto& right = s[i + 1];
        out.push_back(left);
        int span = right.date - left.date;
        for (int k = 1; k < span; ++k) {
            double t = static_cast<double>(k) / span;
            out.push_back({left.date + k, left.value + t * (right.value - left.value)});
        }
    }
    out.push_back(s[s.size() - 1]);
    return TimeSeries(std::move(out), Frequency::Daily);
}

TimeSeries log_return(const TimeSeries& s, int dt) {
    if (dt < 1)
        raise(ErrorKind::InvalidArgument, "log_return step must be positive");
    if (static_cast<std::size_t>(dt) >= s.size())
        raise(ErrorKind::InsufficientLength,
              "log_return step " + std::to_string(dt) + " >= series length " +
                  std::to_string(s.size()));
    for (const auto& p : s.points())
        if (p.value <= 0.0)
            raise(ErrorKind::NonPositiveValue,
                  "non-positive value at " + p.date.iso());
    std::vector<Observation> out;
    out.reserve(s.size() - dt);
    for (std::size_t t = 0; t + dt < s.size(); ++t)
        out.push_back({s[t + dt].date,
                       std::log(s[t + dt].value) - std::log(s[t].value)});
    return TimeSeries(std::move(out), s.frequency());
}

TimeSeries log_transform(const TimeSeries& s) {
    std::vector<Observation> out;
    out.reserve(s.size());
    for (const auto& p : s.points()) {
        if (p.value <= 0.0)
            raise(ErrorKind::NonPositiveValue,
                  "non-positive value at " + p.date.iso());
        out.push_back({p.date, std::log(p.value)});
    }
    return TimeSeries(std::move(out), s.frequency());
}

TimeSeries to_weekly_mean(const TimeSeries& s, unsigned week_anchor) {
    if (s.frequency() != Frequency::Daily)
        raise(ErrorKind::InvalidArgument, "to_weekly_mean expects a daily series");
    if (week_anchor > 6)
        raise(ErrorKind::InvalidArgument, "week anchor must be 0..6");
    // week-ending date of d: next date >= d whose weekday == anchor
    auto week_end = [&](Date d) {
        unsigned wd = d.weekday();
        int ahead = (static_cast<int>(week_anchor) - static_cast<int>(wd) + 7) % 7;
        return d + ahead;
    };
    std::vector<Observation> out;
    std::size_t i = 0;
    while (i < s.size()) {
        Date end = week_end(s[i].date);
        double sum = 0.0;
        std::size_t count = 0;
        while (i < s.size() && s[i].date <= end) {
            sum += s[i].value;
            ++count;
            ++i;
        }
        out.push_back({end, sum / static_cast<double>(count)});
    }
    return TimeSeries(std::move(out), Frequency::Weekly);
}

std::pair<TimeSeries, StandardizationParams>
standardize(const TimeSeries& s, const StandardizationParams* params) {
    StandardizationParams used;
    if (params) {
        used = *params;
        if (used.std <= 0.0)
            raise(ErrorKind::InvalidArgument, "standardization std must be positive");
    } else {
        if (s.size() < 2)
            raise(ErrorKind::InsufficientLength,
                  "standardize needs at least 2 points");
        auto v = s.values();
        used.mean = sample_mean(v);
        used.std = sample_std(v);
        if (used.std == 0.0)
            raise(ErrorKind::ZeroVariance, "constant series cannot be standardized");
    }
    std::vector<Observation> out;
    out.reserve(s.size());
    for (const auto& p : s.points())
        out.push_back({p.date, (p.value - used.mean) / used.std});
    return {TimeSeries(std::move(out), s.frequency()), used};
}

TimeSeries moving_average(const TimeSeries& s, std::size_t window) {
    if (window == 0)
        raise(ErrorKind::InvalidArgument, "window must be positive");
    if (window > s.size())
        raise(ErrorKind::InsufficientLength,
              "window " + std::to_string(window) + " exceeds series length " +
                  std::to_string(s.size()));
    std::vector<Observation> out;
    out.reserve(s.size() - window + 1);
    for (std::size_t t = window - 1; t < s.size(); ++t) {
        double sum = 0.0;
        for (std::size_t k = t + 1 - window; k <= t; ++k)
            sum += s[k].value;
        out.push_back({s[t].date, sum / static_cast<double>(window)});
    }
    return TimeSeries(std::move(out), s.frequency());
}

std::pair<TimeSeries, TimeSeries> align(const TimeSeries& a, const TimeSeries& b) {
    if (a.frequency() != b.frequency())
        raise(ErrorKind::InvalidArgument, "cannot align series of different frequency");
    std::vector<Observation> oa, ob;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].date == b[j].date) {
            oa.push_back(a[i]);
            ob.push_back(b[j]);
            ++i;
            ++j;
        } else if (a[i].date < b[j].date) {
            ++i;
        } else {
            ++j;
        }
    }
    if (oa.empty())
        raise(ErrorKind::EmptyIntersection, "series share no dates");
    return {TimeSeries(std::move(oa), a.frequency()),
            TimeSeries(std::move(ob), b.frequency())};
}

TimeSeries invert(const TimeSeries& s) {
    std::vector<Observation> out;
    out.reserve(s.size());
    for (const auto& p : s.points())
        out.push_back({p.date, -p.value});
    return TimeSeries(std::move(out), s.frequency());
}

double sample_mean(const std::vector<double>& v) {
    if (v.empty())
        raise(ErrorKind::InvalidArgument, "mean of empty vector");
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v) {
    if (v.size() < 2)
        raise(ErrorKind::InvalidArgument, "sample std needs at least 2 values");
    double m = sample_mean(v);
    double ss = 0.0;
    for (double x : v)
        ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

} // namespace finsent
