#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace skirent {

using Dollars = std::int64_t;
using Day = std::int64_t;

using Rational = boost::rational<std::int64_t>;

// Accepts "n/d", "n", or a finite decimal such as "0.25".
Rational parse_rational(std::string_view text);

// Always "num/den", e.g. "4/1".
std::string to_string(const Rational& r);

std::int64_t floor_of(const Rational& r);
std::int64_t ceil_of(const Rational& r);
double to_double(const Rational& r);

// Competitive ratio ALG/OPT. OPT = 0 only happens on a free first day;
// 0/0 reads as 1 and x/0 with x > 0 as unbounded.
class Ratio {
 public:
  Ratio() = default;
  explicit Ratio(Rational value) : value_(value) {}

  static Ratio of(Dollars alg, Dollars opt);
  static Ratio unbounded() {
    Ratio r;
    r.unbounded_ = true;
    return r;
  }

  bool is_unbounded() const noexcept { return unbounded_; }
  // Precondition: !is_unbounded().
  const Rational& value() const;

  // "num/den" or "inf".
  std::string str() const;
  double to_double() const;

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.unbounded_ == b.unbounded_ && (a.unbounded_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

  friend bool operator<=(const Ratio& a, const Rational& bound) {
    return !a.unbounded_ && a.value_ <= bound;
  }

 private:
  Rational value_{1};
  bool unbounded_ = false;
};

Ratio parse_ratio(std::string_view text);

}  // namespace skirent
