#pragma once

#include "skirent/pricecore.hpp"

#include <vector>

namespace skirent::test {

inline PriceSeq fixed_price(Dollars B, Day n) { return PriceSeq(B, std::vector<Dollars>(n, B)); }

// B for the first `high` days, then `low`.
inline PriceSeq two_phase(Dollars B, Day high, Dollars low, Day n) {
  std::vector<Dollars> v(n, low);
  for (Day i = 0; i < high && i < n; ++i) v[i] = B;
  return PriceSeq(B, v);
}

inline Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

}  // namespace skirent::test
