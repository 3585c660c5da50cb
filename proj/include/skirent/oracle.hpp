#pragma once

#include "skirent/policies.hpp"
#include "skirent/pricecore.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace skirent {

struct SearchCaps {
  std::int64_t max_cells = 10'000'000;
};

// An input that attains a reported ratio. T = nullopt means the ratio grows
// without bound as T does (prices stay at `prices.back()` forever).
struct Witness {
  std::vector<Dollars> prices;
  std::optional<Day> T;
  std::optional<Day> t_hat;
  std::optional<Rational> lambda;
};

struct Violation {
  std::string instance;
  std::string detail;
  std::optional<Witness> witness;
};

struct OracleReport {
  std::string claim_id;
  std::int64_t instance_count = 0;
  std::vector<Violation> violations;
  Ratio worst_ratio_found;
  std::optional<Witness> witness;
  std::vector<ThresholdPolicy> optimal_policies;

  bool certified() const noexcept { return violations.empty(); }
  // Counts add, violations concatenate, the larger worst ratio wins.
  void merge(const OracleReport& other);
};

// Worst ratio of `policy` over every price sequence of length <= horizon with
// prices in 0..B (free day only last) and every T up to that length. With
// t_hat, T is pinned to t_hat and sequences run to day t_hat or a free day.
// Throws SizeError when (B+1)^horizon exceeds the cap.
OracleReport exhaustive_adversary(const ThresholdPolicy& policy, Dollars budget, Day horizon,
                                  std::optional<Day> t_hat = std::nullopt,
                                  const SearchCaps& caps = {});

// Every threshold policy of length `horizon` (min(horizon, t_hat) with a
// prediction) against the exhaustive adversary; reports the optimal ratio
// and the full optimal set in lexicographic order.
OracleReport exhaustive_policy_search(Dollars budget, Day horizon,
                                      std::optional<Day> t_hat = std::nullopt,
                                      const SearchCaps& caps = {});

// Every lambda in the grid, every (T, T-hat) in 1..n: robustness bound on all
// cells, consistency bound on the diagonal.
OracleReport certify_tradeoff(const PriceSeq& p, const std::vector<Rational>& lambda_grid);

namespace brute {

// OPT_T by trying every buy day and renting, T = 1..horizon.
std::vector<Dollars> opt_table(const PriceSeq& p, Day horizon);

// Cost of buying on day d (nullopt: never) over T days, by walking the days.
Dollars plan_cost(const PriceSeq& p, std::optional<Day> d, Day T);

// Max over T in 1..n of plan_cost / OPT_T.
Ratio worst_ratio(const PriceSeq& p, std::optional<Day> d, const std::vector<Dollars>& opt);

// min over buy days in 1..n and "never" of worst_ratio, and the days attaining
// it ("never" reported as the free day it is equivalent to).
OptimalCompetitive c_opt(const PriceSeq& p);

// Quadratic recomputation of every SeqStats field from the definitions.
SeqStats stats(const PriceSeq& p);

// Every complete sequence with prices in 0..B and length <= max_len.
std::vector<PriceSeq> complete_sequences(Dollars budget, Day max_len);

}  // namespace brute

// Closed-form claims checked on the exhaustive small-instance space.
OracleReport claim_no_prediction(Dollars budget, Day horizon, const SearchCaps& caps = {});
OracleReport claim_self_prediction(Dollars budget, Day horizon, const SearchCaps& caps = {});
OracleReport claim_known_prices(Dollars budget, Day horizon);
OracleReport claim_tradeoff(Dollars budget, Day horizon, const std::vector<Rational>& lambda_grid);

// {k/den : k = 1..den}
std::vector<Rational> lambda_grid(std::int64_t den);

// Members of the optimal threshold family for a self prediction, as a predicate
// on the first t_hat thresholds.
bool in_prediction_family(const ThresholdPolicy& policy, Day t_hat, Dollars budget);

}  // namespace skirent
