#include "skirent/policies.hpp"

#include "skirent/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace skirent {

std::string ThresholdPolicy::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(thetas[i]);
  }
  return out + ")";
}

Decision Decision::buy_on(Day d) {
  if (d < 1) throw DomainError("buy day must be >= 1, got " + std::to_string(d));
  return Decision(Kind::BuyOn, d);
}

Day Decision::day() const {
  if (!buys()) throw PreconditionError("rent-forever decision has no buy day");
  return day_;
}

std::string Decision::str() const {
  return buys() ? "buy_on(" + std::to_string(day_) + ")" : "rent_forever";
}

ThresholdPolicy baseline_pessimal(Dollars budget) { return {{0, budget}}; }

ThresholdPolicy perfect_self_policy(Prediction t_hat, Dollars budget) {
  const Day t = t_hat.t_hat;
  ThresholdPolicy policy{{0}};
  if (t <= budget) {
    for (Day i = 2; i <= t; ++i) policy.thetas.push_back(t - i);
  } else if (t == budget + 1) {
    for (Day i = 2; i <= budget + 1; ++i) policy.thetas.push_back(budget + 2 - i);
  } else {
    policy.thetas.push_back(budget);
  }
  return policy;
}

RunRecord run_threshold(const ThresholdPolicy& policy, const PriceSeq& p, Day T) {
  if (T < 1) throw DomainError("active days must be >= 1, got " + std::to_string(T));
  for (auto theta : policy.thetas) {
    if (theta < 0 || theta > p.budget()) {
      throw DomainError("threshold " + std::to_string(theta) + " outside [0, " +
                        std::to_string(p.budget()) + "]");
    }
  }
  Dollars cost = T;
  for (Day i = 1; i <= T; ++i) {
    if (i > p.length()) {
      throw CompletenessError(T, "price on day " + std::to_string(i) + " is unknown");
    }
    if (p.price(i) <= policy.threshold(i)) {
      cost = i - 1 + policy.threshold(i);
      break;
    }
  }
  const Dollars opt = opt_cost(p, T);
  return {cost, opt, Ratio::of(cost, opt)};
}

Dollars decision_cost(const PriceSeq& p, const Decision& d, Day T) {
  if (T < 1) throw DomainError("active days must be >= 1, got " + std::to_string(T));
  constexpr Day never = std::numeric_limits<Day>::max();
  const Day free_day = p.ends_at_free_day() ? p.length() : never;
  const Day buy_day = d.buys() ? d.day() : never;
  if (T < std::min(free_day, buy_day)) return T;
  if (free_day <= buy_day) return free_day - 1;
  if (buy_day > p.length()) {
    throw CompletenessError(buy_day, "price on buy day " + std::to_string(buy_day) +
                                         " is unknown");
  }
  return p.total_cost(buy_day);
}

RunRecord run_decision(const PriceSeq& p, const Decision& d, Day T) {
  const Dollars cost = decision_cost(p, d, T);
  const Dollars opt = opt_cost(p, T);
  return {cost, opt, Ratio::of(cost, opt)};
}

Decision known_price_decide(const PriceSeq& p) {
  auto s = stats(p);
  if (s.case_a.holds()) return Decision::buy_on(s.case_a.action_day());
  return Decision::buy_on(s.r1);
}

Decision blind_follow(const PriceSeq& p, Prediction t_hat) {
  p.require_complete();
  const Day t = t_hat.t_hat;
  if (t >= p.prefix_min(t)) return Decision::buy_on(p.prefix_argmin(t));
  return Decision::rent_forever();
}

namespace {

void check_lambda(const Rational& lambda) {
  if (lambda <= 0 || lambda > 1) {
    throw DomainError("lambda must lie in (0, 1], got " + to_string(lambda));
  }
}

Dollars opt_at(const PriceSeq& p, Day t) { return std::min<Dollars>(t, p.prefix_min(t)); }

}  // namespace

TradeoffParams tradeoff_params(const PriceSeq& p, const Rational& lambda) {
  check_lambda(lambda);
  const auto s = stats(p);
  if (s.case_a.holds()) {
    throw PreconditionError(std::string("sequence has a ") + to_string(s.case_a.kind) +
                            " shortcut; use the wait rule instead");
  }
  const Day n = p.length();
  const Dollars m = s.m_star;

  TradeoffParams out;
  out.lambda = lambda;
  out.robustness_bound = lambda - 1 + s.c_opt / lambda;

  const Day start =
      std::max<Day>(1, ceil_of((1 - lambda) * Rational(s.r0 - 1) + lambda * Rational(s.r1)));
  // Past day n, P_t - lambda*OPT_t >= n - lambda*M*, which r1 (<= n) already beats.
  Day r2 = 0;
  Rational best;
  for (Day t = start; t <= n; ++t) {
    Rational v = Rational(p.total_cost(t)) - lambda * Rational(opt_at(p, t));
    if (r2 == 0 || v < best) {
      best = v;
      r2 = t;
    }
  }
  if (r2 == 0 || p.total_cost(r2) > p.total_cost(s.r1)) r2 = s.r1;
  out.r2 = r2;

  Day r3 = 0;
  Rational best_rate;
  for (Day r = 1; r <= n; ++r) {
    Rational ratio(p.total_cost(r), opt_at(p, r));
    if (ratio > out.robustness_bound) continue;
    Rational rate(p.total_cost(r), r);
    if (r3 == 0 || rate < best_rate) {
      best_rate = rate;
      r3 = r;
    }
  }
  if (r3 == 0) throw InvariantError(InvariantError::Which::Completeness, "no feasible r3 day");
  out.r3 = r3;

  Rational first(p.total_cost(r2), m);
  out.consistency_bound = r3 <= m ? std::max(first, best_rate) : first;
  return out;
}

Decision tradeoff_decide(const PriceSeq& p, const TradeoffParams& params, Prediction t_hat) {
  const Day t = t_hat.t_hat;
  return Decision::buy_on(t >= p.prefix_min(t) ? params.r2 : params.r3);
}

Decision tradeoff_decide(const PriceSeq& p, Prediction t_hat, const Rational& lambda) {
  check_lambda(lambda);
  const auto s = stats(p);
  if (s.case_a.holds()) return Decision::buy_on(s.case_a.action_day());
  return tradeoff_decide(p, tradeoff_params(p, lambda), t_hat);
}

SimpleBounds simple_bounds(const PriceSeq& p, Day f1, std::optional<Day> f2) {
  const auto s = stats(p);
  if (f1 < 1 || f1 > s.r1) {
    throw PreconditionError("f1 = " + std::to_string(f1) + " must lie in 1..r1 = " +
                            std::to_string(s.r1));
  }
  const Dollars m = s.m_star;
  auto require_known = [&](Day d) {
    if (d > p.length()) {
      throw CompletenessError(d, "price on day " + std::to_string(d) + " is unknown");
    }
  };
  SimpleBounds out;
  Rational first(p.total_cost(f1), m);
  if (f2 && *f2 < m) {
    require_known(*f2);
    out.consistency = std::max(first, Rational(p.total_cost(*f2), *f2));
  } else {
    out.consistency = first;
  }
  if (!f2) {
    out.robustness = Ratio::unbounded();
  } else {
    require_known(*f2);
    out.robustness = Ratio(std::max(Rational(p.total_cost(f1), opt_at(p, f1)),
                                    Rational(p.total_cost(*f2), opt_at(p, *f2))));
  }
  return out;
}

Decision simple_decide(const PriceSeq& p, Prediction t_hat, Day f1, std::optional<Day> f2) {
  const auto s = stats(p);
  if (s.case_a.holds()) return Decision::buy_on(s.case_a.action_day());
  if (t_hat.t_hat >= s.m_star) return Decision::buy_on(f1);
  return f2 ? Decision::buy_on(*f2) : Decision::rent_forever();
}

}  // namespace skirent
