#include "skirent/arena.hpp"

#include "skirent/errors.hpp"
#include "skirent/offline.hpp"

#include <algorithm>
#include <string>

namespace skirent {

const char* to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Baseline: return "baseline";
    case StrategyKind::PerfectSelf: return "perfect_self";
    case StrategyKind::KnownPrices: return "known_prices";
    case StrategyKind::Blind: return "blind";
    case StrategyKind::Tradeoff: return "tradeoff";
    case StrategyKind::FixedScript: return "script";
  }
  return "?";
}

StrategyKind parse_strategy_kind(const std::string& name) {
  for (auto k : {StrategyKind::Baseline, StrategyKind::PerfectSelf, StrategyKind::KnownPrices,
                 StrategyKind::Blind, StrategyKind::Tradeoff, StrategyKind::FixedScript}) {
    if (name == to_string(k)) return k;
  }
  throw DomainError("unknown strategy '" + name + "'");
}

PriceSeq reduce(const std::vector<Dollars>& others_daily_pledges, Dollars budget) {
  if (others_daily_pledges.empty()) throw DomainError("no days to reduce");
  std::vector<Dollars> prices;
  prices.reserve(others_daily_pledges.size());
  for (auto w : others_daily_pledges) {
    if (w < 0) throw DomainError("negative pledge total " + std::to_string(w));
    prices.push_back(std::max<Dollars>(0, budget - w));
  }
  return PriceSeq::truncated(budget, std::move(prices));
}

Dollars rational_pledge(const PriceSeq& p_hat, const Decision& decision, Day day) {
  if (!decision.buys() || decision.day() != day) return 0;
  return p_hat.price(day);
}

namespace {

bool uses_prediction(StrategyKind k) {
  return k == StrategyKind::KnownPrices || k == StrategyKind::Blind || k == StrategyKind::Tradeoff;
}

struct Plan {
  Day active = 0;
  std::optional<ThresholdPolicy> policy;
  std::optional<PriceSeq> p_hat;
  std::optional<Decision> decision;

  Dollars pledge(Day t) const {
    if (t > active) return 0;
    if (policy) return policy->threshold(t);
    if (!decision->buys() || decision->day() != t) return 0;
    return rational_pledge(*p_hat, *decision, t);
  }
};

// Reduces a forecast of the others' totals, padding with zero pledges until
// the prefix is complete and long enough for the agent's algorithm.
PriceSeq forecast_prices(std::vector<Dollars> totals, const GameConfig& cfg, const AgentSpec& a) {
  Day horizon = std::max<Day>(static_cast<Day>(totals.size()), cfg.max_days);
  for (int round = 0; round < 64; ++round) {
    totals.resize(static_cast<std::size_t>(horizon), 0);
    PriceSeq p = reduce(totals, cfg.budget);
    if (p.ends_at_free_day()) return p;
    Day need = p.required_length();
    if (p.is_complete() && a.strategy.kind == StrategyKind::Tradeoff) {
      auto s = stats(p);
      if (!s.case_a.holds()) {
        need = std::max<Day>(
            need, ceil_of(s.c_opt * Rational(s.m_star) / *a.strategy.lambda) + cfg.budget);
      }
    }
    if (p.length() >= need) return p;
    horizon = std::max(need, horizon + 1);
  }
  throw InvariantError(InvariantError::Which::Completeness, "forecast never became complete");
}

Decision decide(const AgentSpec& a, const PriceSeq& p_hat) {
  switch (a.strategy.kind) {
    case StrategyKind::KnownPrices: return known_price_decide(p_hat);
    case StrategyKind::Blind: return blind_follow(p_hat, Prediction(a.t_hat));
    case StrategyKind::Tradeoff:
      return tradeoff_decide(p_hat, Prediction(a.t_hat), *a.strategy.lambda);
    default: break;
  }
  throw PreconditionError("strategy does not use predictions");
}

void validate(const GameConfig& cfg) {
  if (cfg.budget < 2) throw DomainError("B must be >= 2");
  if (cfg.max_days < 1) throw DomainError("max_days must be >= 1");
  if (cfg.agents.empty()) throw DomainError("game needs at least one agent");
  for (std::size_t i = 0; i < cfg.agents.size(); ++i) {
    const auto& a = cfg.agents[i];
    const std::string who = "agent " + std::to_string(i);
    if (a.active_days < 1 || a.active_days > cfg.max_days) {
      throw DomainError(who + ": T must lie in 1..max_days");
    }
    if (a.strategy.kind == StrategyKind::Tradeoff) {
      if (!a.strategy.lambda) throw DomainError(who + ": tradeoff strategy needs lambda");
      if (*a.strategy.lambda <= 0 || *a.strategy.lambda > 1) {
        throw DomainError(who + ": lambda must lie in (0, 1]");
      }
    }
    for (auto w : a.strategy.script) {
      if (w < 0 || w > cfg.budget) {
        throw ProtocolError(who + " scripts pledge " + std::to_string(w) + ", outside [0, " +
                            std::to_string(cfg.budget) + "]");
      }
    }
    if (a.others_forecast) {
      for (auto w : *a.others_forecast) {
        if (w < 0) throw DomainError(who + ": negative forecast pledge");
      }
    }
  }
}

std::vector<Plan> make_plans(const GameConfig& cfg) {
  const auto& agents = cfg.agents;
  std::vector<std::optional<Plan>> plans(agents.size());
  auto self_contained = [&](const AgentSpec& a) {
    return !uses_prediction(a.strategy.kind) || a.others_forecast.has_value();
  };

  auto build = [&](std::size_t i, std::vector<Dollars> totals) {
    const auto& a = agents[i];
    Plan plan;
    plan.active = a.active_days;
    plan.p_hat = forecast_prices(std::move(totals), cfg, a);
    plan.decision = decide(a, *plan.p_hat);
    plans[i] = std::move(plan);
  };

  for (std::size_t i = 0; i < agents.size(); ++i) {
    const auto& a = agents[i];
    if (!uses_prediction(a.strategy.kind)) {
      Plan plan;
      plan.active = a.active_days;
      switch (a.strategy.kind) {
        case StrategyKind::Baseline: plan.policy = baseline_pessimal(cfg.budget); break;
        case StrategyKind::PerfectSelf:
          plan.policy = perfect_self_policy(Prediction(a.t_hat), cfg.budget);
          break;
        default: plan.policy = ThresholdPolicy{a.strategy.script}; break;
      }
      plans[i] = std::move(plan);
    } else if (a.others_forecast) {
      build(i, *a.others_forecast);
    }
  }

  for (std::size_t i = 0; i < agents.size(); ++i) {
    if (plans[i]) continue;
    for (std::size_t j = 0; j < agents.size(); ++j) {
      if (j != i && !self_contained(agents[j])) {
        throw DomainError("agent " + std::to_string(i) +
                          " has no others' forecast and agent " + std::to_string(j) +
                          " depends on predictions itself; supply others_forecast");
      }
    }
    // Perfect forecast: the others' realised schedule, long enough for any tail.
    Day horizon = cfg.max_days;
    for (const auto& a : agents) horizon = std::max(horizon, a.active_days);
    std::vector<Dollars> totals(static_cast<std::size_t>(horizon), 0);
    for (std::size_t j = 0; j < agents.size(); ++j) {
      if (j == i) continue;
      for (Day t = 1; t <= horizon; ++t) totals[static_cast<std::size_t>(t - 1)] += plans[j]->pledge(t);
    }
    build(i, std::move(totals));
  }

  std::vector<Plan> out;
  for (auto& p : plans) out.push_back(std::move(*p));
  return out;
}

}  // namespace

GameOutcome run_game(const GameConfig& config) {
  validate(config);
  const auto plans = make_plans(config);
  const auto n_agents = config.agents.size();
  const Dollars budget = config.budget;

  GameOutcome out;
  out.per_agent.resize(n_agents);
  for (std::size_t i = 0; i < n_agents; ++i) {
    auto& ao = out.per_agent[i];
    for (Day t = 1; t <= config.max_days; ++t) ao.schedule.push_back(plans[i].pledge(t));
    ao.decision = plans[i].decision;
  }

  std::vector<Dollars> cost(n_agents, 0);
  for (Day t = 1; t <= config.max_days; ++t) {
    bool anyone = false;
    Dollars total = 0;
    std::vector<Dollars> pledges(n_agents, 0);
    for (std::size_t i = 0; i < n_agents; ++i) {
      if (config.agents[i].active_days < t) continue;
      anyone = true;
      Dollars w = plans[i].pledge(t);
      if (w < 0 || w > budget) {
        throw ProtocolError("agent " + std::to_string(i) + " pledged " + std::to_string(w) +
                            " on day " + std::to_string(t) + ", outside [0, " +
                            std::to_string(budget) + "]");
      }
      pledges[i] = w;
      total += w;
    }
    if (!anyone) break;
    out.daily_totals.push_back(total);
    if (total >= budget) {
      out.license_day = t;
      for (std::size_t i = 0; i < n_agents; ++i) cost[i] += pledges[i];
      break;
    }
    for (std::size_t i = 0; i < n_agents; ++i) {
      if (config.agents[i].active_days >= t) cost[i] += 1;
    }
  }

  for (std::size_t i = 0; i < n_agents; ++i) {
    std::vector<Dollars> others(static_cast<std::size_t>(config.max_days), 0);
    for (std::size_t j = 0; j < n_agents; ++j) {
      if (j == i) continue;
      for (Day t = 1; t <= config.max_days; ++t) {
        others[static_cast<std::size_t>(t - 1)] += out.per_agent[j].schedule[static_cast<std::size_t>(t - 1)];
      }
    }
    PriceSeq reduced = reduce(others, budget);
    auto& ao = out.per_agent[i];
    ao.total_cost = cost[i];
    ao.offline_opt = opt_cost(reduced, config.agents[i].active_days);
    ao.ratio = Ratio::of(ao.total_cost, ao.offline_opt);
    ao.reduced_prices.assign(reduced.prices().begin(), reduced.prices().end());
  }
  return out;
}

}  // namespace skirent
