#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace finsent {

// Calendar date stored as days since 1970-01-01. Cheap to copy and order;
// calendar math goes through std::chrono.
class Date {
  public:
    Date() : days_(0) {}
    explicit Date(std::int32_t days_since_epoch) : days_(days_since_epoch) {}
    Date(int year, unsigned month, unsigned day);

    static std::optional<Date> parse(const std::string& iso); // "YYYY-MM-DD"
    static Date from_sys_days(std::chrono::sys_days sd) {
        return Date(static_cast<std::int32_t>(sd.time_since_epoch().count()));
    }

    std::int32_t days_since_epoch() const { return days_; }
    std::chrono::sys_days sys_days() const {
        return std::chrono::sys_days{std::chrono::days{days_}};
    }

    // 0 = Sunday ... 6 = Saturday (std::chrono::weekday c_encoding)
    unsigned weekday() const {
        return std::chrono::weekday{sys_days()}.c_encoding();
    }

    std::string iso() const; // "YYYY-MM-DD"

    Date operator+(int days) const { return Date(days_ + days); }
    Date operator-(int days) const { return Date(days_ - days); }
    int operator-(const Date& other) const { return days_ - other.days_; }
    Date& operator++() { ++days_; return *this; }

    auto operator<=>(const Date&) const = default;

  private:
    std::int32_t days_;
};

// Parse names like "sat", "saturday", "Sun". Returns weekday c_encoding.
std::optional<unsigned> parse_weekday(const std::string& name);
std::string weekday_name(unsigned c_encoding);

} // namespace finsent
