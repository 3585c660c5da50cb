#include "skirent/oracle.hpp"

#include "skirent/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <string>

namespace skirent {

namespace {

constexpr Dollars kInf = std::numeric_limits<Dollars>::max() / 4;

std::string seq_str(std::span<const Dollars> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string seq_str(const PriceSeq& p) {
  return "B=" + std::to_string(p.budget()) + " p=" + seq_str(p.prices());
}

// (base)^exp, saturating at `limit + 1`.
std::int64_t capped_pow(std::int64_t base, std::int64_t exp, std::int64_t limit) {
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (out > limit / base) return limit + 1;
    out *= base;
  }
  return out;
}

// Day loop for a threshold policy on a raw price list; T may exceed the list
// only when the list ends at a free day.
Dollars walk_threshold(const ThresholdPolicy& policy, const std::vector<Dollars>& prices, Day T) {
  for (Day i = 1; i <= T; ++i) {
    Dollars price = prices[static_cast<std::size_t>(i - 1)];
    Dollars theta = policy.threshold(i);
    if (price <= theta) return i - 1 + theta;
  }
  return T;
}

Dollars walk_opt(const std::vector<Dollars>& prices, Day T) {
  Dollars best = T;
  Day last = std::min<Day>(T, static_cast<Day>(prices.size()));
  for (Day i = 1; i <= last; ++i) best = std::min(best, i - 1 + prices[static_cast<std::size_t>(i - 1)]);
  return best;
}

// Odometer over sequences of length len: days 1..len-1 in 1..B, the last day
// in last_lo..B.
bool next_sequence(std::vector<Dollars>& v, Dollars budget, Dollars last_lo) {
  for (std::size_t i = v.size(); i-- > 0;) {
    Dollars lo = i + 1 == v.size() ? last_lo : 1;
    if (v[i] < budget) {
      ++v[i];
      return true;
    }
    v[i] = lo;
  }
  return false;
}

}  // namespace

void OracleReport::merge(const OracleReport& other) {
  instance_count += other.instance_count;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  if (other.worst_ratio_found > worst_ratio_found) {
    worst_ratio_found = other.worst_ratio_found;
    witness = other.witness;
  }
}

std::vector<Rational> lambda_grid(std::int64_t den) {
  std::vector<Rational> out;
  for (std::int64_t k = 1; k <= den; ++k) out.emplace_back(k, den);
  return out;
}

OracleReport exhaustive_adversary(const ThresholdPolicy& policy, Dollars budget, Day horizon,
                                  std::optional<Day> t_hat, const SearchCaps& caps) {
  if (budget < 2) throw DomainError("B must be >= 2");
  if (t_hat && *t_hat < 1) throw DomainError("T-hat must be >= 1");
  const Day max_len = t_hat ? *t_hat : horizon;
  if (max_len < 1) throw DomainError("horizon must be >= 1");
  if (capped_pow(budget + 1, max_len, caps.max_cells) > caps.max_cells) {
    throw SizeError("adversary space (B+1)^" + std::to_string(max_len) + " exceeds cap " +
                    std::to_string(caps.max_cells));
  }
  for (auto theta : policy.thetas) {
    if (theta < 0 || theta > budget) throw DomainError("threshold outside [0, B]");
  }

  OracleReport report;
  report.claim_id = "adversary";
  bool have = false;
  for (Day len = 1; len <= max_len; ++len) {
    // With a pinned T, shorter sequences must stop at a free day.
    const bool pinned_short = t_hat && len < *t_hat;
    const Dollars last_lo = 0;
    const Dollars last_hi = pinned_short ? 0 : budget;
    std::vector<Dollars> v(static_cast<std::size_t>(len), 1);
    v.back() = last_lo;
    do {
      if (v.back() > last_hi) continue;
      const Day T = t_hat ? *t_hat : len;
      Dollars cost = walk_threshold(policy, v, T);
      Dollars opt = walk_opt(v, T);
      Ratio r = Ratio::of(cost, opt);
      ++report.instance_count;
      if (!have || r > report.worst_ratio_found) {
        have = true;
        report.worst_ratio_found = r;
        report.witness = Witness{v, T, t_hat, std::nullopt};
      }
    } while (next_sequence(v, budget, last_lo));
  }

  if (!t_hat) {
    // Prices stuck at B keep a policy that never pledges B renting forever.
    bool never_full = std::all_of(policy.thetas.begin(), policy.thetas.end(),
                                  [&](Dollars t) { return t < budget; });
    if (never_full && !report.worst_ratio_found.is_unbounded()) {
      report.worst_ratio_found = Ratio::unbounded();
      report.witness = Witness{std::vector<Dollars>(static_cast<std::size_t>(horizon), budget),
                               std::nullopt, std::nullopt, std::nullopt};
    }
  }
  return report;
}

namespace {

class PolicySearch {
 public:
  PolicySearch(Dollars budget, Day length, std::optional<Day> t_hat)
      : budget_(budget), length_(length), t_hat_(t_hat) {}

  void run() {
    std::vector<Dollars> alive{kInf};
    thetas_.clear();
    dfs(1, alive, Ratio(Rational(1)));
  }

  std::int64_t visited = 0;
  std::optional<Ratio> best;
  std::vector<ThresholdPolicy> optimal;

 private:
  Day last_day() const { return t_hat_ ? *t_hat_ : length_; }

  void record(const Ratio& worst) {
    ++visited;
    if (!best || worst < *best) {
      best = worst;
      optimal.clear();
    }
    if (worst == *best) optimal.push_back(ThresholdPolicy{thetas_});
  }

  // Worst ratio over every sequence ending (or settled) on day `day` given the
  // set of prefix minima reachable while the policy still waits.
  Ratio step(Day day, Dollars theta, const std::vector<Dollars>& alive, std::vector<Dollars>& next,
             Ratio worst) const {
    std::set<Dollars> reach;
    for (Dollars m : alive) {
      for (Dollars price = 0; price <= budget_; ++price) {
        const Dollars total = day - 1 + price;
        if (price <= theta) {
          const Dollars cost = day - 1 + theta;
          Dollars opt;
          if (t_hat_) {
            // Buying ends the agent's choices; the adversary then lowers OPT
            // with a free day right after, if T-hat leaves room for one.
            Dollars later = (price > 0 && day < *t_hat_) ? day : kInf;
            opt = std::min({*t_hat_, m, total, later});
          } else {
            opt = std::min({day, m, total});
          }
          worst = std::max(worst, Ratio::of(cost, opt));
        } else {
          if (!t_hat_) worst = std::max(worst, Ratio::of(day, std::min({day, m, total})));
          reach.insert(std::min(m, total));
        }
      }
    }
    next.assign(reach.begin(), reach.end());
    return worst;
  }

  void dfs(Day day, const std::vector<Dollars>& alive, Ratio worst) {
    if (best && worst > *best) return;
    if (day > last_day()) {
      if (t_hat_) {
        for (Dollars m : alive) worst = std::max(worst, Ratio::of(*t_hat_, std::min(*t_hat_, m)));
      } else if (!alive.empty()) {
        worst = Ratio::unbounded();
      }
      if (best && worst > *best) return;
      record(worst);
      return;
    }
    std::vector<Dollars> next;
    if (day > length_) {
      Ratio w = step(day, 0, alive, next, worst);
      dfs(day + 1, next, w);
      return;
    }
    for (Dollars theta = 0; theta <= budget_; ++theta) {
      Ratio w = step(day, theta, alive, next, worst);
      thetas_.push_back(theta);
      dfs(day + 1, next, w);
      thetas_.pop_back();
    }
  }

  Dollars budget_;
  Day length_;
  std::optional<Day> t_hat_;
  std::vector<Dollars> thetas_;
};

}  // namespace

OracleReport exhaustive_policy_search(Dollars budget, Day horizon, std::optional<Day> t_hat,
                                      const SearchCaps& caps) {
  if (budget < 2) throw DomainError("B must be >= 2");
  if (horizon < 1) throw DomainError("horizon must be >= 1");
  if (t_hat && *t_hat < 1) throw DomainError("T-hat must be >= 1");
  const Day length = t_hat ? std::min(horizon, *t_hat) : horizon;
  const auto cells = capped_pow(budget + 1, length, caps.max_cells);
  if (cells > caps.max_cells / length) {
    throw SizeError("policy space (B+1)^" + std::to_string(length) + " * " +
                    std::to_string(length) + " exceeds cap " + std::to_string(caps.max_cells));
  }
  PolicySearch search(budget, length, t_hat);
  search.run();
  OracleReport report;
  report.claim_id = "policy_search";
  report.instance_count = search.visited;
  report.worst_ratio_found = *search.best;
  report.optimal_policies = std::move(search.optimal);
  return report;
}

namespace brute {

std::vector<Dollars> opt_table(const PriceSeq& p, Day horizon) {
  auto prices = p.prices();
  const Day n = p.length();
  std::vector<Dollars> out;
  Dollars best_buy = kInf;
  bool free_seen = false;
  Dollars free_cost = kInf;
  for (Day T = 1; T <= horizon; ++T) {
    if (T <= n && !free_seen) {
      Dollars price = prices[static_cast<std::size_t>(T - 1)];
      best_buy = std::min(best_buy, T - 1 + price);
      if (price == 0) {
        free_seen = true;
        free_cost = T - 1;
      }
    }
    Dollars rent = free_seen ? free_cost : T;
    out.push_back(std::min(rent, best_buy));
  }
  return out;
}

Dollars plan_cost(const PriceSeq& p, std::optional<Day> d, Day T) {
  auto prices = p.prices();
  for (Day i = 1; i <= T; ++i) {
    if (i > p.length()) {
      throw CompletenessError(T, "price on day " + std::to_string(i) + " is unknown");
    }
    Dollars price = prices[static_cast<std::size_t>(i - 1)];
    if (price == 0 || (d && *d == i)) return i - 1 + price;
  }
  return T;
}

namespace {

// Ratio for T = 1..n of the plan "buy on d", by one walk over the days.
std::vector<Ratio> ratios_by_T(const PriceSeq& p, std::optional<Day> d,
                               const std::vector<Dollars>& opt) {
  auto prices = p.prices();
  std::vector<Ratio> out;
  std::optional<Dollars> paid;
  for (Day T = 1; T <= static_cast<Day>(opt.size()); ++T) {
    if (!paid && T <= p.length()) {
      Dollars price = prices[static_cast<std::size_t>(T - 1)];
      if (price == 0 || (d && *d == T)) paid = T - 1 + price;
    }
    Dollars cost = paid ? *paid : T;
    out.push_back(Ratio::of(cost, opt[static_cast<std::size_t>(T - 1)]));
  }
  return out;
}

}  // namespace

Ratio worst_ratio(const PriceSeq& p, std::optional<Day> d, const std::vector<Dollars>& opt) {
  auto rs = ratios_by_T(p, d, opt);
  Ratio worst(Rational(1));
  for (const auto& r : rs) worst = std::max(worst, r);
  if (!d && !p.ends_at_free_day()) worst = Ratio::unbounded();
  return worst;
}

OptimalCompetitive c_opt(const PriceSeq& p) {
  const Day n = p.length();
  auto opt = opt_table(p, n);
  std::optional<Ratio> best;
  std::vector<Day> days;
  auto consider = [&](Ratio r, Day reported) {
    if (!best || r < *best) {
      best = r;
      days.clear();
    }
    if (r == *best && std::find(days.begin(), days.end(), reported) == days.end()) {
      days.push_back(reported);
    }
  };
  for (Day d = 1; d <= n; ++d) consider(worst_ratio(p, d, opt), d);
  if (p.ends_at_free_day()) consider(worst_ratio(p, std::nullopt, opt), n);
  std::sort(days.begin(), days.end());
  return {best->value(), days};
}

SeqStats stats(const PriceSeq& p) {
  p.require_complete();
  auto prices = p.prices();
  const Day n = p.length();
  auto P = [&](Day i) { return i - 1 + prices[static_cast<std::size_t>(i - 1)]; };
  auto M = [&](Day t) {
    Dollars m = kInf;
    for (Day i = 1; i <= std::min(t, n); ++i) m = std::min(m, P(i));
    return m;
  };

  SeqStats s;
  for (Day i = 1; i <= n; ++i) s.total_costs.push_back(P(i));
  s.m_star = M(n);
  for (Day i = 1; i <= n; ++i) {
    if (P(i) == s.m_star) {
      if (s.i_star == 0) s.i_star = i;
      s.r0 = i;
    }
  }
  for (Day t = 1; t <= n && s.k == 0; ++t) {
    if (M(t) <= t) s.k = t;
  }
  const Dollars m = s.m_star;
  const Day free_day = m + 1 <= n && prices[static_cast<std::size_t>(m)] == 0 ? m + 1 : 0;
  const Day bargain = m >= 1 && m <= n && prices[static_cast<std::size_t>(m - 1)] == 1 ? m : 0;
  if (free_day && bargain) {
    s.case_a = {CaseKind::BargainThenFree, bargain, free_day};
  } else if (bargain) {
    s.case_a = {CaseKind::BargainDay, bargain, 0};
  } else if (free_day) {
    s.case_a = {CaseKind::FreeDay, 0, free_day};
  }
  if (m == 0) {
    s.q_at_m_star = 0;
    s.c_opt = 1;
    s.optimal_days = {1};
    s.r1 = 1;
    return s;
  }
  Dollars q = kInf;
  for (Day i = m; i <= n; ++i) q = std::min(q, P(i));
  s.q_at_m_star = q;

  std::vector<std::pair<Rational, Day>> cand;
  for (Day r = 1; r <= std::min<Day>(m, n); ++r) {
    Dollars opt_r = std::min<Dollars>(r, M(r));
    cand.emplace_back(Rational(P(r), opt_r), r);
  }
  for (Day r = m; r <= n; ++r) {
    if (P(r) == q) cand.emplace_back(Rational(P(r), m), r);
  }
  Rational best = cand.front().first;
  for (auto& [v, r] : cand) best = std::min(best, v);
  s.c_opt = best;
  for (auto& [v, r] : cand) {
    if (v == best && std::find(s.optimal_days.begin(), s.optimal_days.end(), r) == s.optimal_days.end()) {
      s.optimal_days.push_back(r);
    }
  }
  std::sort(s.optimal_days.begin(), s.optimal_days.end());
  s.r1 = s.optimal_days.front();
  return s;
}

std::vector<PriceSeq> complete_sequences(Dollars budget, Day max_len) {
  std::vector<PriceSeq> out;
  for (Day len = 1; len <= max_len; ++len) {
    std::vector<Dollars> v(static_cast<std::size_t>(len), 1);
    v.back() = 0;
    do {
      PriceSeq p(budget, v);
      if (p.is_complete()) out.push_back(std::move(p));
    } while (next_sequence(v, budget, 0));
  }
  return out;
}

}  // namespace brute

OracleReport certify_tradeoff(const PriceSeq& p, const std::vector<Rational>& lambda_grid) {
  p.require_complete();
  const Day n = p.length();
  const auto opt = brute::opt_table(p, n);
  const auto s = stats(p);

  OracleReport report;
  report.claim_id = "thm6";
  bool have = false;
  for (const auto& lambda : lambda_grid) {
    Rational robust;
    Rational consistent;
    std::vector<Decision> decisions;
    decisions.reserve(static_cast<std::size_t>(n));
    if (s.case_a.holds()) {
      robust = lambda - 1 + Rational(1) / lambda;
      consistent = 1;
      auto d = tradeoff_decide(p, Prediction(1), lambda);
      decisions.assign(static_cast<std::size_t>(n), d);
    } else {
      auto params = tradeoff_params(p, lambda);
      robust = params.robustness_bound;
      consistent = params.consistency_bound;
      for (Day t_hat = 1; t_hat <= n; ++t_hat) {
        decisions.push_back(tradeoff_decide(p, params, Prediction(t_hat)));
      }
    }
    std::map<Day, std::vector<Ratio>> by_day;
    for (const auto& d : decisions) {
      if (!by_day.count(d.day())) {
        by_day.emplace(d.day(), brute::ratios_by_T(p, d.day(), opt));
      }
    }
    for (Day t_hat = 1; t_hat <= n; ++t_hat) {
      const auto& rs = by_day.at(decisions[static_cast<std::size_t>(t_hat - 1)].day());
      for (Day T = 1; T <= n; ++T) {
        const Ratio& r = rs[static_cast<std::size_t>(T - 1)];
        ++report.instance_count;
        Witness w{std::vector<Dollars>(p.prices().begin(), p.prices().end()), T, t_hat, lambda};
        if (!have || r > report.worst_ratio_found) {
          have = true;
          report.worst_ratio_found = r;
          report.witness = w;
        }
        if (!(r <= robust)) {
          report.violations.push_back({seq_str(p),
                                       "ratio " + r.str() + " > robustness bound " +
                                           to_string(robust),
                                       w});
        }
        if (T == t_hat && !(r <= consistent)) {
          report.violations.push_back({seq_str(p),
                                       "ratio " + r.str() + " > consistency bound " +
                                           to_string(consistent),
                                       w});
        }
      }
    }
  }
  return report;
}

bool in_prediction_family(const ThresholdPolicy& policy, Day t_hat, Dollars budget) {
  if (policy.threshold(1) != 0) return false;
  if (t_hat > budget + 1) return policy.threshold(2) == budget;
  for (Day j = 2; j <= t_hat; ++j) {
    const Dollars theta = policy.threshold(j);
    if (theta > t_hat + 1 - j) return false;
    // Prices never exceed B, so a threshold of B ends the game that day.
    if (theta == budget) break;
  }
  return true;
}

OracleReport claim_no_prediction(Dollars budget, Day horizon, const SearchCaps& caps) {
  if (horizon < 2) throw DomainError("claim needs horizon >= 2");
  OracleReport report = exhaustive_policy_search(budget, horizon, std::nullopt, caps);
  report.claim_id = "thm1";
  const Ratio expected(Rational(budget + 1));
  const std::string inst = "B=" + std::to_string(budget) + " horizon=" + std::to_string(horizon);
  if (report.worst_ratio_found != expected) {
    report.violations.push_back({inst, "optimal ratio " + report.worst_ratio_found.str() +
                                           " != B+1 = " + expected.str(),
                                 std::nullopt});
  }
  for (const auto& pol : report.optimal_policies) {
    if (pol.threshold(1) != 0 || pol.threshold(2) != budget) {
      report.violations.push_back({inst, "unexpected optimal policy " + pol.str(), std::nullopt});
    }
  }
  const auto expected_count = capped_pow(budget + 1, horizon - 2, caps.max_cells);
  if (static_cast<std::int64_t>(report.optimal_policies.size()) != expected_count) {
    report.violations.push_back({inst,
                                 "optimal set has " + std::to_string(report.optimal_policies.size()) +
                                     " members, expected every (0,B,*) = " +
                                     std::to_string(expected_count),
                                 std::nullopt});
  }
  auto adv = exhaustive_adversary(baseline_pessimal(budget), budget, horizon, std::nullopt, caps);
  report.witness = adv.witness;
  if (adv.worst_ratio_found != expected) {
    report.violations.push_back({inst, "baseline adversary ratio " + adv.worst_ratio_found.str(),
                                 adv.witness});
  }
  return report;
}

OracleReport claim_self_prediction(Dollars budget, Day horizon, const SearchCaps& caps) {
  OracleReport report;
  report.claim_id = "thm2";
  report.worst_ratio_found = Ratio(Rational(1));
  for (Day t_hat = 1; t_hat <= horizon; ++t_hat) {
    auto found = exhaustive_policy_search(budget, t_hat, t_hat, caps);
    const std::string inst = "B=" + std::to_string(budget) + " T_hat=" + std::to_string(t_hat);
    const Ratio expected(Rational(std::min<Dollars>(t_hat, budget + 1)));
    report.instance_count += found.instance_count;
    if (found.worst_ratio_found > report.worst_ratio_found) {
      report.worst_ratio_found = found.worst_ratio_found;
    }
    if (found.worst_ratio_found != expected) {
      report.violations.push_back({inst, "optimal ratio " + found.worst_ratio_found.str() +
                                             " != min(T_hat, B+1) = " + expected.str(),
                                   std::nullopt});
    }
    // Compare the optimal set with the family, member by member.
    std::set<std::vector<Dollars>> optimal;
    for (const auto& pol : found.optimal_policies) optimal.insert(pol.thetas);
    std::vector<Dollars> v(static_cast<std::size_t>(t_hat), 0);
    while (true) {
      ThresholdPolicy pol{v};
      bool member = in_prediction_family(pol, t_hat, budget);
      if (member != static_cast<bool>(optimal.count(v))) {
        report.violations.push_back({inst,
                                     std::string(member ? "family member " : "non-member ") +
                                         pol.str() + (member ? " is not optimal" : " is optimal"),
                                     std::nullopt});
      }
      std::size_t i = v.size();
      while (i > 0 && v[i - 1] == budget) v[--i] = 0;
      if (i == 0) break;
      ++v[i - 1];
    }
    auto canon = perfect_self_policy(Prediction(t_hat), budget);
    canon.thetas.resize(static_cast<std::size_t>(t_hat), 0);
    if (!optimal.count(canon.thetas)) {
      report.violations.push_back({inst, "canonical policy " + canon.str() + " is not optimal",
                                   std::nullopt});
    }
  }
  return report;
}

OracleReport claim_known_prices(Dollars budget, Day horizon) {
  OracleReport report;
  report.claim_id = "thm3";
  report.worst_ratio_found = Ratio(Rational(1));
  for (const auto& p : brute::complete_sequences(budget, horizon)) {
    ++report.instance_count;
    auto fast = c_opt(p);
    auto slow = brute::c_opt(p);
    if (fast.ratio != slow.ratio || fast.optimal_days != slow.optimal_days) {
      report.violations.push_back({seq_str(p),
                                   "c_opt " + to_string(fast.ratio) + " days " +
                                       seq_str(fast.optimal_days) + " vs brute force " +
                                       to_string(slow.ratio) + " days " +
                                       seq_str(slow.optimal_days),
                                   std::nullopt});
    }
    if (Ratio(slow.ratio) > report.worst_ratio_found) {
      report.worst_ratio_found = Ratio(slow.ratio);
      report.witness = Witness{std::vector<Dollars>(p.prices().begin(), p.prices().end()),
                               std::nullopt, std::nullopt, std::nullopt};
    }
    if (stats(p) != brute::stats(p)) {
      report.violations.push_back({seq_str(p), "stats differ from brute force", std::nullopt});
    }
  }
  return report;
}

OracleReport claim_tradeoff(Dollars budget, Day horizon, const std::vector<Rational>& grid) {
  OracleReport report;
  report.claim_id = "thm6";
  report.worst_ratio_found = Ratio(Rational(1));
  for (const auto& p : brute::complete_sequences(budget, horizon)) {
    report.merge(certify_tradeoff(p, grid));
  }
  return report;
}

}  // namespace skirent
