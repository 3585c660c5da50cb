#pragma once

#include "skirent/policies.hpp"
#include "skirent/pricecore.hpp"

#include <optional>
#include <string>
#include <vector>

namespace skirent {

enum class StrategyKind { Baseline, PerfectSelf, KnownPrices, Blind, Tradeoff, FixedScript };

const char* to_string(StrategyKind kind);
StrategyKind parse_strategy_kind(const std::string& name);

struct StrategySpec {
  StrategyKind kind = StrategyKind::Baseline;
  std::optional<Rational> lambda;  // Tradeoff only
  std::vector<Dollars> script;     // FixedScript only; day t pledges script[t-1]
};

struct AgentSpec {
  Day active_days = 1;  // T_i
  Day t_hat = 1;        // self prediction
  StrategySpec strategy;
  // Predicted total pledge of the other agents per day (days past the list
  // predict 0). Absent: the realised schedule of the others is used, which
  // needs every other agent to be prediction-free or to carry its own list.
  std::optional<std::vector<Dollars>> others_forecast;
};

struct GameConfig {
  Dollars budget = 2;
  Day max_days = 1;
  std::vector<AgentSpec> agents;
};

struct AgentOutcome {
  Dollars total_cost = 0;
  Dollars offline_opt = 0;
  Ratio ratio;
  // What the agent would pledge on each day 1..max_days.
  std::vector<Dollars> schedule;
  // Residual prices left by the others over max_days, truncated at a free day.
  std::vector<Dollars> reduced_prices;
  // Plan of a prediction-driven agent.
  std::optional<Decision> decision;
};

struct GameOutcome {
  std::optional<Day> license_day;
  std::vector<Dollars> daily_totals;  // pledge sums for the days played
  std::vector<AgentOutcome> per_agent;
};

// p_t = max(0, B - W_t), truncated at the first free day.
PriceSeq reduce(const std::vector<Dollars>& others_daily_pledges, Dollars budget);

// B - W-hat on the buy day, 0 on every other day.
Dollars rational_pledge(const PriceSeq& p_hat, const Decision& decision, Day day);

GameOutcome run_game(const GameConfig& config);

}  // namespace skirent
