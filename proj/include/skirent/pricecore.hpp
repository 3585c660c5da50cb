#pragma once

#include "skirent/rational.hpp"

#include <span>
#include <utility>
#include <vector>

namespace skirent {

// Residual buying prices p_1..p_n faced by one agent, with license cap B.
//
// Days are 1-indexed at every interface. A zero price (free day) may only be
// the last entry: the sequence stops at the first free day. The object stands
// for an infinite sequence; see is_complete() for when the prefix carries all
// the information the algorithms need.
class PriceSeq {
 public:
  // Throws InvariantError naming the violated rule (budget, range, truncation).
  PriceSeq(Dollars budget, std::vector<Dollars> prices);

  // Like the constructor, but cuts `raw` at its first free day.
  static PriceSeq truncated(Dollars budget, std::vector<Dollars> raw);

  Dollars budget() const noexcept { return budget_; }
  Day length() const noexcept { return static_cast<Day>(prices_.size()); }
  std::span<const Dollars> prices() const noexcept { return prices_; }
  std::span<const Dollars> total_costs() const noexcept { return totals_; }

  Dollars price(Day i) const;
  // P_i = i - 1 + p_i.
  Dollars total_cost(Day i) const;

  bool ends_at_free_day() const noexcept { return prices_.back() == 0; }

  // M_t = min(P_1..P_t) and i_t, its smallest minimiser. For t > n this needs
  // the prefix minimum to be settled (ends at a free day, or n >= M_n + 1).
  Dollars prefix_min(Day t) const;
  Day prefix_argmin(Day t) const;

  // True when M*, i*, r0, k, OPT_t, Q_{M*} and c_OPT are all fixed by the
  // prefix, whatever the unseen tail holds: either the sequence ends at a free
  // day, or n >= M_n + 1 and min(P_{M*}..P_n) <= n - 1 (every later day has
  // P_i >= i - 1 >= n).
  bool is_complete() const;
  // Weaker: only M_t (hence M*, i*, r0, k and OPT_t) is settled.
  bool prefix_min_settled() const;
  // Smallest length this prefix would need to become complete; a lower bound
  // when extending the prefix could still move M*.
  Day required_length() const;
  void require_complete() const;

  friend bool operator==(const PriceSeq&, const PriceSeq&) = default;

 private:
  PriceSeq() = default;
  void index();

  Dollars budget_ = 0;
  std::vector<Dollars> prices_;
  std::vector<Dollars> totals_;
  std::vector<Dollars> prefix_min_;
  std::vector<Day> prefix_argmin_;
};

enum class CaseKind { None, FreeDay, BargainDay, BargainThenFree };

// Which 1-competitive shortcut (if any) the known-price problem admits:
// a free day at M*+1 and/or a bargain day (price 1) at M*.
struct CaseA {
  CaseKind kind = CaseKind::None;
  Day bargain_day = 0;
  Day free_day = 0;

  bool holds() const noexcept { return kind != CaseKind::None; }
  // Day the wait rule acts on. The bargain wins when both exist.
  Day action_day() const;

  friend bool operator==(const CaseA&, const CaseA&) = default;
};

const char* to_string(CaseKind kind);

struct SeqStats {
  std::vector<Dollars> total_costs;
  Dollars m_star = 0;
  Day i_star = 0;
  Day k = 0;
  Day r0 = 0;
  Day r1 = 0;
  Rational c_opt{1};
  CaseA case_a;
  // Every day whose buy-on-that-day algorithm attains c_opt, ascending.
  std::vector<Day> optimal_days;
  // Q_{M*}; equals M* in case (a).
  Dollars q_at_m_star = 0;

  friend bool operator==(const SeqStats&, const SeqStats&) = default;
};

Dollars total_cost(const PriceSeq& p, Day i);

// Throws CompletenessError when p is not complete.
SeqStats stats(const PriceSeq& p);

struct TailMin {
  Dollars total;  // Q_t
  Dollars price;  // q_t, minimum raw price over the known days t..n
};

// Q_t = min(P_i : i >= t). Throws CompletenessError if the unseen tail could
// still undercut the prefix value.
TailMin q_tail(const PriceSeq& p, Day t);

}  // namespace skirent
