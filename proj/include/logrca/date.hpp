#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace logrca {

// Calendar date stored as days since 1970-01-01, proleptic Gregorian.
class Date {
 public:
  Date() = default;

  static Date from_days(std::int32_t days) {
    Date d;
    d.days_ = days;
    return d;
  }
  static Date from_ymd(int year, int month, int day);

  // Strict ISO-8601 "YYYY-MM-DD"; rejects impossible calendar dates.
  static std::optional<Date> parse(std::string_view iso);
  static Date parse_or_throw(std::string_view iso);

  std::string to_string() const;

  std::int32_t days_since_epoch() const { return days_; }
  Date plus_days(int n) const { return from_days(days_ + n); }

  friend auto operator<=>(const Date&, const Date&) = default;
  friend int operator-(Date a, Date b) { return a.days_ - b.days_; }

 private:
  std::int32_t days_ = 0;
};

}  // namespace logrca
