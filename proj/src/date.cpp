#include "finsent/date.hpp"

#include "finsent/errors.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>

namespace finsent {

Date::Date(int year, unsigned month, unsigned day) {
    using namespace std::chrono;
    year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                       std::chrono::day{day}};
    if (!ymd.ok())
        raise(ErrorKind::InvalidDate, "invalid calendar date " + std::to_string(year) +
                                          "-" + std::to_string(month) + "-" +
                                          std::to_string(day));
    days_ = static_cast<std::int32_t>(
        std::chrono::sys_days{ymd}.time_since_epoch().count());
}

std::optional<Date> Date::parse(const std::string& iso) {
    // strict YYYY-MM-DD
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-')
        return std::nullopt;
    auto digits = [&](size_t from, size_t to) -> std::optional<int> {
        int value = 0;
        for (size_t i = from; i < to; ++i) {
            if (!std::isdigit(static_cast<unsigned char>(iso[i])))
                return std::nullopt;
            value = value * 10 + (iso[i] - '0');
        }
        return value;
    };
    auto y = digits(0, 4), m = digits(5, 7), d = digits(8, 10);
    if (!y || !m || !d)
        return std::nullopt;
    using namespace std::chrono;
    year_month_day ymd{std::chrono::year{*y}, std::chrono::month{unsigned(*m)},
                       std::chrono::day{unsigned(*d)}};
    if (!ymd.ok())
        return std::nullopt;
    return from_sys_days(std::chrono::sys_days{ymd});
}

std::string Date::iso() const {
    using namespace std::chrono;
    year_month_day ymd{sys_days()};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(ymd.year()),
                  unsigned(ymd.month()), unsigned(ymd.day()));
    return buf;
}

std::optional<unsigned> parse_weekday(const std::string& name) {
    static const std::array<const char*, 7> names = {
        "sunday", "monday", "tuesday", "wednesday", "thursday", "friday", "saturday"};
    std::string lower;
    lower.reserve(name.size());
    for (char c : name)
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower.size() < 3)
        return std::nullopt;
    for (unsigned i = 0; i < names.size(); ++i)
        if (std::string(names[i]).compare(0, lower.size(), lower) == 0)
            return i;
    return std::nullopt;
}

std::string weekday_name(unsigned c_encoding) {
    static const std::array<const char*, 7> names = {
        "sunday", "monday", "tuesday", "wednesday", "thursday", "friday", "saturday"};
    return names[c_encoding % 7];
}

} // namespace finsent
