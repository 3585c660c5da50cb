#pragma once

#include "skirent/pricecore.hpp"

#include <vector>

namespace skirent {

// OPT_t for t = 1..horizon.
struct OptProfile {
  std::vector<Dollars> opt_by_day;

  Dollars at(Day t) const { return opt_by_day.at(static_cast<std::size_t>(t - 1)); }
};

// OPT_t = min(t, P_1, ..., P_t). Days past n are fine once M_t is settled.
Dollars opt_cost(const PriceSeq& p, Day t);
OptProfile opt_profile(const PriceSeq& p, Day horizon);

struct OptimalCompetitive {
  Rational ratio{1};
  std::vector<Day> optimal_days;
};

// Optimal deterministic competitive ratio on p with known prices, and the days
// whose buy-on-that-day algorithm attains it. 1 in the free/bargain case.
OptimalCompetitive c_opt(const PriceSeq& p);

}  // namespace skirent
