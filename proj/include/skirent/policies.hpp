#pragma once

#include "skirent/offline.hpp"
#include "skirent/pricecore.hpp"

#include <optional>
#include <string>
#include <vector>

namespace skirent {

// Buy on day i iff p_i <= theta_i; the agent then pays its pledge theta_i, so
// buying on day i costs i - 1 + theta_i. Days past the list have theta = 0.
struct ThresholdPolicy {
  std::vector<Dollars> thetas;

  Dollars threshold(Day i) const {
    auto idx = static_cast<std::size_t>(i - 1);
    return idx < thetas.size() ? thetas[idx] : 0;
  }
  std::string str() const;

  friend bool operator==(const ThresholdPolicy&, const ThresholdPolicy&) = default;
};

class Decision {
 public:
  enum class Kind { BuyOn, RentForever };

  static Decision buy_on(Day d);
  static Decision rent_forever() { return Decision(Kind::RentForever, 0); }

  Kind kind() const noexcept { return kind_; }
  bool buys() const noexcept { return kind_ == Kind::BuyOn; }
  // Precondition: buys().
  Day day() const;
  std::string str() const;

  friend bool operator==(const Decision&, const Decision&) = default;

 private:
  Decision(Kind kind, Day day) : kind_(kind), day_(day) {}
  Kind kind_;
  Day day_;
};

struct Prediction {
  explicit Prediction(std::int64_t raw) : t_hat(raw < 1 ? 1 : raw) {}
  Day t_hat;
};

struct RunRecord {
  Dollars alg_cost = 0;
  Dollars opt_cost = 0;
  Ratio ratio;
};

ThresholdPolicy baseline_pessimal(Dollars budget);
ThresholdPolicy perfect_self_policy(Prediction t_hat, Dollars budget);

// Days past n need a sequence that ends at a free day; otherwise the price on
// those days is unknown and CompletenessError is thrown.
RunRecord run_threshold(const ThresholdPolicy& policy, const PriceSeq& p, Day T);

// Cost of a committed plan over T active days. A free day reached before the
// buy day ends the problem at cost (free day - 1).
Dollars decision_cost(const PriceSeq& p, const Decision& d, Day T);
RunRecord run_decision(const PriceSeq& p, const Decision& d, Day T);

// Wait rule for the free/bargain case, else buy on r1.
Decision known_price_decide(const PriceSeq& p);

Decision blind_follow(const PriceSeq& p, Prediction t_hat);

struct TradeoffParams {
  Rational lambda{1};
  Day r2 = 0;
  Day r3 = 0;
  Rational robustness_bound{1};
  Rational consistency_bound{1};
};

TradeoffParams tradeoff_params(const PriceSeq& p, const Rational& lambda);
Decision tradeoff_decide(const PriceSeq& p, Prediction t_hat, const Rational& lambda);
// Same, reusing parameters computed for p; p must not be in the free/bargain case.
Decision tradeoff_decide(const PriceSeq& p, const TradeoffParams& params, Prediction t_hat);

struct SimpleBounds {
  Rational consistency{1};
  Ratio robustness;
};

// Buy on f1 when the prediction says T-hat >= M*, else on f2 (nullopt: never).
SimpleBounds simple_bounds(const PriceSeq& p, Day f1, std::optional<Day> f2);
Decision simple_decide(const PriceSeq& p, Prediction t_hat, Day f1, std::optional<Day> f2);

}  // namespace skirent
