#include "skirent/arena.hpp"
#include "skirent/bench.hpp"
#include "skirent/errors.hpp"
#include "skirent/policies.hpp"
#include "support.hpp"

#include <doctest.h>

#include <numeric>

using namespace skirent;
using namespace skirent::test;

namespace {

AgentSpec agent(Day T, StrategyKind kind, Day t_hat = 0) {
  AgentSpec a;
  a.active_days = T;
  a.t_hat = t_hat ? t_hat : T;
  a.strategy.kind = kind;
  return a;
}

}  // namespace

TEST_CASE("reduce") {
  auto a = reduce({0, 0, 10}, 10);
  CHECK(std::vector<Dollars>(a.prices().begin(), a.prices().end()) ==
        std::vector<Dollars>{10, 10, 0});
  auto b = reduce({3, 3, 3, 3}, 10);
  CHECK(std::vector<Dollars>(b.prices().begin(), b.prices().end()) ==
        std::vector<Dollars>{7, 7, 7, 7});
  auto c = reduce({15, 2, 2}, 10);
  CHECK(c.length() == 1);
  CHECK(c.price(1) == 0);
  CHECK_THROWS_AS(reduce({}, 10), DomainError);
  CHECK_THROWS_AS(reduce({1, -1}, 10), DomainError);
}

TEST_CASE("rational pledge") {
  auto p_hat = PriceSeq(10, {10, 10, 7});
  CHECK(rational_pledge(p_hat, Decision::buy_on(3), 3) == 7);
  CHECK(rational_pledge(p_hat, Decision::buy_on(3), 2) == 0);
  CHECK(rational_pledge(p_hat, Decision::rent_forever(), 3) == 0);
}

TEST_CASE("two baseline agents") {
  GameConfig cfg{4, 6, {agent(6, StrategyKind::Baseline), agent(6, StrategyKind::Baseline)}};
  auto out = run_game(cfg);
  REQUIRE(out.license_day);
  CHECK(*out.license_day == 2);
  CHECK(out.daily_totals == std::vector<Dollars>{0, 8});
  for (const auto& a : out.per_agent) CHECK(a.total_cost == 5);
}

TEST_CASE("single baseline agent") {
  for (Day T : {2, 4, 6}) {
    GameConfig cfg{4, 6, {agent(T, StrategyKind::Baseline)}};
    auto out = run_game(cfg);
    CHECK(out.per_agent[0].total_cost == 5);
    CHECK(out.per_agent[0].offline_opt == std::min<Dollars>(T, 4));
  }
  auto out = run_game(GameConfig{4, 6, {agent(2, StrategyKind::Baseline)}});
  CHECK(out.per_agent[0].ratio == Ratio(R(5, 2)));
}

TEST_CASE("one-day agent") {
  for (auto kind : {StrategyKind::Baseline, StrategyKind::PerfectSelf, StrategyKind::KnownPrices}) {
    GameConfig cfg{5, 3, {agent(1, kind), agent(3, StrategyKind::Baseline)}};
    CHECK(run_game(cfg).per_agent[0].total_cost == 1);
  }
}

TEST_CASE("inactive agents pledge nothing") {
  GameConfig cfg{4, 8, {agent(1, StrategyKind::Baseline), agent(1, StrategyKind::Baseline)}};
  auto out = run_game(cfg);
  CHECK_FALSE(out.license_day);
  CHECK(out.daily_totals == std::vector<Dollars>{0});
  for (const auto& a : out.per_agent) CHECK(a.total_cost == 1);
}

TEST_CASE("game validation") {
  auto bad = agent(3, StrategyKind::FixedScript);
  bad.strategy.script = {0, 9};
  try {
    run_game(GameConfig{4, 3, {agent(3, StrategyKind::Baseline), bad}});
    FAIL("expected protocol error");
  } catch (const ProtocolError& e) {
    CHECK(std::string(e.what()).find("agent 1") != std::string::npos);
  }
  CHECK_THROWS_AS(run_game(GameConfig{4, 3, {agent(5, StrategyKind::Baseline)}}), DomainError);
  CHECK_THROWS_AS(run_game(GameConfig{4, 3, {agent(2, StrategyKind::Tradeoff)}}), DomainError);
  CHECK_THROWS_AS(run_game(GameConfig{4, 3, {}}), DomainError);
  // each blind agent needs the other's realised plan
  CHECK_THROWS_AS(
      run_game(GameConfig{4, 5, {agent(5, StrategyKind::Blind), agent(5, StrategyKind::Blind)}}),
      DomainError);
  CHECK_THROWS_AS(parse_strategy_kind("greedy"), DomainError);
  CHECK(parse_strategy_kind("perfect_self") == StrategyKind::PerfectSelf);
}

TEST_CASE("prediction agent with a perfect forecast") {
  auto scripted = agent(10, StrategyKind::FixedScript);
  scripted.strategy.script = {0, 0, 0, 5};
  auto known = agent(10, StrategyKind::KnownPrices);
  GameConfig cfg{8, 10, {scripted, known}};
  auto out = run_game(cfg);
  const auto& k = out.per_agent[1];
  // residual prices (8,8,8,3,8,...): buying on day 4 costs 3+3
  REQUIRE(k.decision);
  CHECK(*k.decision == Decision::buy_on(4));
  CHECK(*out.license_day == 4);
  CHECK(k.total_cost == 6);
  CHECK(out.per_agent[0].total_cost == 8);
}

TEST_CASE("property: game costs decouple and conserve") {
  for (std::uint32_t g = 0; g < 300; ++g) {
    Rng rng(77, {5u, g});
    auto cfg = random_game(rng, 6, 12);
    auto out = run_game(cfg);
    Dollars paid = 0;
    for (std::size_t i = 0; i < cfg.agents.size(); ++i) {
      const auto& ao = out.per_agent[i];
      PriceSeq reduced(cfg.budget, ao.reduced_prices);
      const Day T = cfg.agents[i].active_days;
      auto rec = run_threshold(ThresholdPolicy{ao.schedule}, reduced, T);
      CHECK(rec.alg_cost == ao.total_cost);
      CHECK(rec.opt_cost == ao.offline_opt);
      CHECK(ao.total_cost >= ao.offline_opt);
      if (ao.decision && !cfg.agents[i].others_forecast) {
        CHECK(run_decision(reduced, *ao.decision, T).alg_cost == ao.total_cost);
      }
      paid += ao.total_cost;
    }
    // every rent day and the license are paid for exactly once
    Dollars rent = 0;
    const auto days = static_cast<Day>(out.daily_totals.size());
    for (Day t = 1; t <= days; ++t) {
      if (out.license_day && t == *out.license_day) break;
      for (const auto& a : cfg.agents) rent += a.active_days >= t ? 1 : 0;
    }
    Dollars license = 0;
    if (out.license_day) license = out.daily_totals.back();
    CHECK(paid == rent + license);
    if (out.license_day) CHECK(license >= cfg.budget);
  }
}

TEST_CASE("property: tradeoff agent keeps its bounds inside a game") {
  for (std::uint32_t g = 0; g < 200; ++g) {
    Rng rng(81, {6u, g});
    const Dollars B = rng.uniform_int(2, 10);
    const Day days = rng.uniform_int(1, 3 * B);
    auto other = agent(rng.uniform_int(1, days), StrategyKind::FixedScript);
    for (Day t = 1; t <= days; ++t) other.strategy.script.push_back(rng.uniform_int(0, B - 1));
    auto me = agent(rng.uniform_int(1, days), StrategyKind::Tradeoff);
    me.t_hat = rng.uniform_int(1, days);
    me.strategy.lambda = Rational(rng.uniform_int(1, 4), 4);
    auto out = run_game(GameConfig{B, days, {other, me}});
    const auto& ao = out.per_agent[1];
    PriceSeq reduced(B, ao.reduced_prices);
    REQUIRE(ao.decision);
    CHECK(run_decision(reduced, *ao.decision, me.active_days).alg_cost == ao.total_cost);
  }
}
