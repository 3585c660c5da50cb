#include "skirent/bench.hpp"
#include "skirent/errors.hpp"
#include "skirent/oracle.hpp"
#include "skirent/pricecore.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace skirent;
using namespace skirent::test;

TEST_CASE("rational and ratio basics") {
  CHECK(parse_rational("1/5") == R(1, 5));
  CHECK(parse_rational("0.25") == R(1, 4));
  CHECK(parse_rational("3") == R(3));
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
  CHECK(to_string(R(6, 4)) == "3/2");
  CHECK(floor_of(R(-3, 2)) == -2);
  CHECK(ceil_of(R(-3, 2)) == -1);
  CHECK(ceil_of(R(4, 2)) == 2);

  CHECK(Ratio::of(0, 0) == Ratio(R(1)));
  CHECK(Ratio::of(3, 0).is_unbounded());
  CHECK(Ratio::of(4, 2).str() == "2/1");
  CHECK(Ratio::unbounded().str() == "inf");
  CHECK(Ratio(R(5)) < Ratio::unbounded());
  CHECK(parse_ratio("inf").is_unbounded());
  CHECK(parse_ratio("7/3") == Ratio(R(7, 3)));
}

TEST_CASE("total cost") {
  auto fp = fixed_price(100, 200);
  CHECK(fp.total_cost(5) == 104);
  CHECK(total_cost(PriceSeq(3, {0}), 1) == 0);
  CHECK(PriceSeq(3, {1, 3, 2}).total_cost(3) == 4);
  CHECK_THROWS_AS(fp.total_cost(0), RangeError);
  CHECK_THROWS_AS(fp.total_cost(201), RangeError);
}

TEST_CASE("construction invariants") {
  auto which = [](auto&& f) {
    try {
      f();
    } catch (const InvariantError& e) {
      return e.which();
    }
    FAIL("no invariant error");
    return InvariantError::Which::Range;
  };
  CHECK(which([] { PriceSeq(3, {1, 4}); }) == InvariantError::Which::Range);
  CHECK(which([] { PriceSeq(3, {1, -1}); }) == InvariantError::Which::Range);
  CHECK(which([] { PriceSeq(3, {1, 0, 2}); }) == InvariantError::Which::Truncation);
  CHECK(which([] { PriceSeq(1, {1}); }) == InvariantError::Which::Budget);
  CHECK_THROWS_AS(PriceSeq(3, {}), InvariantError);

  auto t = PriceSeq::truncated(3, {2, 1, 0, 3, 3});
  CHECK(t.length() == 3);
  CHECK(t.price(3) == 0);
}

TEST_CASE("completeness") {
  auto short_fp = fixed_price(100, 101);
  CHECK_FALSE(short_fp.is_complete());
  CHECK(short_fp.required_length() == 200);
  try {
    stats(short_fp);
    FAIL("expected completeness error");
  } catch (const CompletenessError& e) {
    CHECK(e.required_length() == 200);
  }
  CHECK(fixed_price(100, 200).is_complete());
  CHECK(PriceSeq(3, {3, 0}).is_complete());
  CHECK(PriceSeq(3, {1, 3}).is_complete());
  // M*=2 needs day 3 known and the tail minimum settled.
  CHECK_FALSE(PriceSeq(3, {3, 1}).is_complete());
  CHECK(PriceSeq(3, {3, 1, 3}).is_complete());
}

TEST_CASE("stats on fixed price") {
  auto s = stats(fixed_price(100, 200));
  CHECK(s.m_star == 100);
  CHECK(s.i_star == 1);
  CHECK(s.k == 100);
  CHECK(s.r0 == 1);
  CHECK(s.r1 == 100);
  CHECK(s.c_opt == R(199, 100));
  CHECK(s.optimal_days == std::vector<Day>{100});
  CHECK_FALSE(s.case_a.holds());
}

TEST_CASE("stats on two-phase prices") {
  auto s = stats(two_phase(100, 100, 2, 110));
  CHECK(s.m_star == 100);
  CHECK(s.c_opt == R(102, 100));
  CHECK(s.optimal_days == std::vector<Day>{101});
  CHECK(s.r1 == 101);
}

TEST_CASE("case (a) kinds") {
  auto bargain = stats(PriceSeq(5, {5, 1, 5, 5}));
  CHECK(bargain.m_star == 2);
  CHECK(bargain.case_a.kind == CaseKind::BargainDay);
  CHECK(bargain.case_a.bargain_day == 2);
  CHECK(bargain.c_opt == R(1));
  CHECK(bargain.optimal_days == std::vector<Day>{2});

  auto both = stats(PriceSeq(3, {3, 1, 0}));
  CHECK(both.case_a.kind == CaseKind::BargainThenFree);
  CHECK(both.case_a.action_day() == 2);

  auto free_day = stats(PriceSeq(3, {3, 3, 0}));
  CHECK(free_day.m_star == 2);
  CHECK(free_day.case_a.kind == CaseKind::FreeDay);
  CHECK(free_day.case_a.free_day == 3);
  CHECK(free_day.c_opt == R(1));

  auto first_free = stats(PriceSeq(3, {0}));
  CHECK(first_free.m_star == 0);
  CHECK(first_free.c_opt == R(1));
  CHECK(first_free.optimal_days == std::vector<Day>{1});
}

TEST_CASE("tail minima") {
  CHECK(q_tail(fixed_price(100, 200), 100).total == 199);
  CHECK(q_tail(two_phase(100, 100, 2, 110), 100).total == 102);
  CHECK(q_tail(two_phase(100, 100, 2, 110), 100).price == 2);
  auto p = PriceSeq(4, {4, 4, 4, 4, 0});
  for (Day t = 1; t <= 5; ++t) CHECK(q_tail(p, t).total <= 4);
  CHECK_THROWS_AS(q_tail(p, 0), RangeError);
  CHECK_THROWS_AS(q_tail(fixed_price(3, 6), 6), CompletenessError);
}

TEST_CASE("property: derived quantities match definitions on every small sequence") {
  std::int64_t checked = 0;
  for (Dollars B = 2; B <= 4; ++B) {
    for (const auto& p : brute::complete_sequences(B, 7)) {
      ++checked;
      const auto s = stats(p);
      REQUIRE(s == brute::stats(p));
      // P_i >= i-1 with equality exactly on free days
      for (Day i = 1; i <= p.length(); ++i) {
        CHECK(p.total_cost(i) >= i - 1);
        CHECK((p.total_cost(i) == i - 1) == (p.price(i) == 0));
      }
      // prefix minima are monotone and the argmin settles at i*
      for (Day t = 2; t <= p.length(); ++t) {
        CHECK(p.prefix_min(t) <= p.prefix_min(t - 1));
        CHECK(p.prefix_argmin(t) >= p.prefix_argmin(t - 1));
      }
      CHECK(p.prefix_argmin(p.length()) == s.i_star);
      CHECK(s.m_star <= p.budget());
      if (!s.case_a.holds()) {
        CHECK(s.k == s.m_star);
        CHECK(s.r0 <= s.r1);
        CHECK(s.i_star <= s.r0);
        CHECK(s.r0 <= s.m_star);
        CHECK(p.total_cost(s.r1) == q_tail(p, s.r1).total);
      }
    }
  }
  CHECK(checked > 10000);
}

TEST_CASE("property: stats on a random corpus") {
  for (const auto& p : random_corpus(2000, 40, 11)) {
    const auto s = stats(p);
    REQUIRE(s == brute::stats(p));
    if (!s.case_a.holds()) CHECK(s.k == s.m_star);
  }
}
