#include "skirent/offline.hpp"

#include "skirent/errors.hpp"

#include <algorithm>
#include <string>

namespace skirent {

Dollars opt_cost(const PriceSeq& p, Day t) {
  if (t < 1) throw DomainError("active days must be >= 1, got " + std::to_string(t));
  return std::min<Dollars>(t, p.prefix_min(t));
}

OptProfile opt_profile(const PriceSeq& p, Day horizon) {
  OptProfile out;
  out.opt_by_day.reserve(static_cast<std::size_t>(std::max<Day>(horizon, 0)));
  for (Day t = 1; t <= horizon; ++t) out.opt_by_day.push_back(opt_cost(p, t));
  return out;
}

OptimalCompetitive c_opt(const PriceSeq& p) {
  auto s = stats(p);
  if (s.case_a.holds()) {
    std::vector<Day> days;
    for (Day d : {s.m_star, s.m_star + 1}) {
      if (d >= 1 && d <= p.length() && p.total_cost(d) == s.m_star) days.push_back(d);
    }
    return {Rational(1), days};
  }
  return {s.c_opt, s.optimal_days};
}

}  // namespace skirent
