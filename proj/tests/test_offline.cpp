#include "skirent/bench.hpp"
#include "skirent/errors.hpp"
#include "skirent/offline.hpp"
#include "skirent/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace skirent;
using namespace skirent::test;

TEST_CASE("offline optimum") {
  auto fp = fixed_price(100, 200);
  CHECK(opt_cost(fp, 40) == 40);
  CHECK(opt_cost(fp, 250) == 100);
  CHECK(opt_cost(PriceSeq(3, {1, 3}), 5) == 1);
  CHECK_THROWS_AS(opt_cost(fp, 0), DomainError);
  CHECK_THROWS_AS(opt_cost(fixed_price(100, 50), 150), CompletenessError);

  auto prof = opt_profile(fp, 300);
  REQUIRE(prof.opt_by_day.size() == 300);
  CHECK(prof.at(1) == 1);
  CHECK(prof.at(100) == 100);
  CHECK(prof.at(300) == 100);
}

TEST_CASE("optimal competitive ratio") {
  auto a = c_opt(fixed_price(100, 200));
  CHECK(a.ratio == R(199, 100));
  CHECK(a.optimal_days == std::vector<Day>{100});

  auto b = c_opt(two_phase(100, 100, 2, 110));
  CHECK(b.ratio == R(51, 50));
  CHECK(b.optimal_days == std::vector<Day>{101});

  auto c = c_opt(PriceSeq(3, {3, 3, 0}));
  CHECK(c.ratio == R(1));
  CHECK(c.optimal_days == std::vector<Day>{3});

  auto d = c_opt(PriceSeq(3, {3, 3, 2, 2, 3}));
  CHECK(d.ratio == R(4, 3));
  CHECK(d.optimal_days == std::vector<Day>{3});

  CHECK(c_opt(PriceSeq(3, {0})).ratio == R(1));
}

TEST_CASE("property: offline profile is the cheaper of renting and the best purchase") {
  for (const auto& p : random_corpus(300, 30, 5)) {
    const auto s = stats(p);
    auto prof = opt_profile(p, 3 * p.length());
    for (Day t = 1; t <= 3 * p.length(); ++t) {
      CHECK(prof.at(t) <= t);
      CHECK(prof.at(t) <= s.m_star);
      if (t > 1) CHECK(prof.at(t) >= prof.at(t - 1));
      if (t >= s.m_star) CHECK(prof.at(t) == s.m_star);
    }
  }
}

TEST_CASE("property: optimal days attain the ratio and no other day does") {
  for (Dollars B = 2; B <= 3; ++B) {
    for (const auto& p : brute::complete_sequences(B, 6)) {
      const auto best = c_opt(p);
      const auto opt = brute::opt_table(p, 2 * p.length() + 2);
      for (Day d = 1; d <= p.length(); ++d) {
        auto r = brute::worst_ratio(p, d, opt);
        bool listed = std::find(best.optimal_days.begin(), best.optimal_days.end(), d) !=
                      best.optimal_days.end();
        if (listed) {
          CHECK(r == Ratio(best.ratio));
        } else {
          CHECK(Ratio(best.ratio) < r);
        }
      }
    }
  }
}

TEST_CASE("property: known-price optimum equals brute force on a random corpus") {
  for (const auto& p : random_corpus(2000, 50, 17)) {
    auto fast = c_opt(p);
    auto slow = brute::c_opt(p);
    REQUIRE(fast.ratio == slow.ratio);
    REQUIRE(fast.optimal_days == slow.optimal_days);
  }
}
