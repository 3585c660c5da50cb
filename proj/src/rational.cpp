#include "skirent/rational.hpp"

#include "skirent/errors.hpp"

#include <charconv>
#include <limits>
#include <string>

namespace skirent {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw DomainError("not a rational number: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_int(text.substr(0, slash), text);
    auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto int_part = text.substr(0, dot);
    auto frac_part = text.substr(dot + 1);
    if (frac_part.size() > 15) throw DomainError("too many decimals in '" + std::string(text) + "'");
    bool negative = !int_part.empty() && int_part.front() == '-';
    std::int64_t whole = int_part.empty() || int_part == "-" ? 0 : parse_int(int_part, text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    std::int64_t frac = frac_part.empty() ? 0 : parse_int(frac_part, text);
    if (frac < 0) throw DomainError("not a rational number: '" + std::string(text) + "'");
    Rational r(whole < 0 ? -whole : whole);
    r += Rational(frac, scale);
    return negative ? -r : r;
  }
  return Rational(parse_int(text, text));
}

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor_of(const Rational& r) {
  auto n = r.numerator();
  auto d = r.denominator();  // always positive after normalisation
  auto q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

std::int64_t ceil_of(const Rational& r) {
  auto n = r.numerator();
  auto d = r.denominator();
  auto q = n / d;
  if (n % d != 0 && n > 0) ++q;
  return q;
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Ratio Ratio::of(Dollars alg, Dollars opt) {
  if (opt == 0) return alg == 0 ? Ratio(Rational(1)) : unbounded();
  return Ratio(Rational(alg, opt));
}

const Rational& Ratio::value() const {
  if (unbounded_) throw DomainError("unbounded ratio has no finite value");
  return value_;
}

std::string Ratio::str() const { return unbounded_ ? "inf" : to_string(value_); }

double Ratio::to_double() const {
  return unbounded_ ? std::numeric_limits<double>::infinity() : skirent::to_double(value_);
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  if (a.unbounded_ || b.unbounded_) return a.unbounded_ <=> b.unbounded_;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Ratio parse_ratio(std::string_view text) {
  if (text == "inf") return Ratio::unbounded();
  return Ratio(parse_rational(text));
}

}  // namespace skirent
