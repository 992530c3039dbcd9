#pragma once

#include "finsent/date.hpp"

#include <string>
#include <utility>
#include <vector>

namespace finsent {

enum class Frequency { Daily, Weekly };

struct Observation {
    Date date;
    double value;
};

// Dated numeric observations. Dates are strictly increasing and values finite;
// both are enforced at construction. Missing data is represented by absent
// dates, never by sentinel values.
class TimeSeries {
  public:
    TimeSeries() : frequency_(Frequency::Daily) {}
    TimeSeries(std::vector<Observation> points, Frequency frequency);

    // rvalue overload keeps `for (p : make_series().points())` safe
    const std::vector<Observation>& points() const& { return points_; }
    std::vector<Observation> points() && { return std::move(points_); }
    Frequency frequency() const { return frequency_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    const Observation& operator[](std::size_t i) const { return points_[i]; }
    Date front_date() const { return points_.front().date; }
    Date back_date() const { return points_.back().date; }

    std::vector<double> values() const;
    std::vector<Date> dates() const;

    bool same_axis(const TimeSeries& other) const;

  private:
    std::vector<Observation> points_;
    Frequency frequency_;
};

struct StandardizationParams {
    double mean = 0.0;
    double std = 1.0; // > 0
};

// Fills every interior calendar-day gap by linear interpolation between the
// nearest present neighbors. Leading/trailing dates are never invented.
TimeSeries fill_missing_linear(const TimeSeries& s);

// R[t] = log(S[t+dt]) - log(S[t]), dated at t+dt.
TimeSeries log_return(const TimeSeries& s, int dt = 1);

// Natural log pointwise; reports the first non-positive date on failure.
TimeSeries log_transform(const TimeSeries& s);

// Partitions days into weeks ending on `week_anchor` (weekday c_encoding,
// 6 = Saturday). Weekly value is the mean of the days present in that week;
// weeks with no present days are omitted. Output dates are week-ending dates.
TimeSeries to_weekly_mean(const TimeSeries& s, unsigned week_anchor = 6);

// z = (x - mean)/std. When params is null they are computed from s
// (sample mean, sample std with the n-1 denominator) and returned so
// out-of-sample data can reuse them.
std::pair<TimeSeries, StandardizationParams>
standardize(const TimeSeries& s, const StandardizationParams* params = nullptr);

// Trailing mean over the previous `window` points including the current one;
// the first window-1 points are omitted.
TimeSeries moving_average(const TimeSeries& s, std::size_t window);

// Restricts both series to the intersection of their date sets.
std::pair<TimeSeries, TimeSeries> align(const TimeSeries& a, const TimeSeries& b);

TimeSeries invert(const TimeSeries& s);

// Sample mean / sample std (n-1) over raw values.
double sample_mean(const std::vector<double>& v);
double sample_std(const std::vector<double>& v);

} // namespace finsent
