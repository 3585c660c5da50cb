#include "skirent/pricecore.hpp"

#include "skirent/errors.hpp"

#include <algorithm>
#include <string>

namespace skirent {

PriceSeq::PriceSeq(Dollars budget, std::vector<Dollars> prices)
    : budget_(budget), prices_(std::move(prices)) {
  if (budget_ < 2) {
    throw InvariantError(InvariantError::Which::Budget,
                         "license price B must be at least 2, got " + std::to_string(budget_));
  }
  if (prices_.empty()) {
    throw InvariantError(InvariantError::Which::Range, "price sequence is empty");
  }
  for (std::size_t i = 0; i < prices_.size(); ++i) {
    auto v = prices_[i];
    if (v < 0 || v > budget_) {
      throw InvariantError(InvariantError::Which::Range,
                           "price on day " + std::to_string(i + 1) + " is " + std::to_string(v) +
                               ", outside [0, " + std::to_string(budget_) + "]");
    }
    if (v == 0 && i + 1 != prices_.size()) {
      throw InvariantError(InvariantError::Which::Truncation,
                           "free day " + std::to_string(i + 1) +
                               " must end the sequence (found " +
                               std::to_string(prices_.size() - i - 1) + " later days)");
    }
  }
  index();
}

PriceSeq PriceSeq::truncated(Dollars budget, std::vector<Dollars> raw) {
  auto zero = std::find(raw.begin(), raw.end(), Dollars{0});
  if (zero != raw.end()) raw.erase(zero + 1, raw.end());
  return PriceSeq(budget, std::move(raw));
}

void PriceSeq::index() {
  const auto n = prices_.size();
  totals_.resize(n);
  prefix_min_.resize(n);
  prefix_argmin_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    totals_[i] = static_cast<Dollars>(i) + prices_[i];
    if (i == 0 || totals_[i] < prefix_min_[i - 1]) {
      prefix_min_[i] = totals_[i];
      prefix_argmin_[i] = static_cast<Day>(i + 1);
    } else {
      prefix_min_[i] = prefix_min_[i - 1];
      prefix_argmin_[i] = prefix_argmin_[i - 1];
    }
  }
}

Dollars PriceSeq::price(Day i) const {
  if (i < 1 || i > length()) {
    throw RangeError("day " + std::to_string(i) + " outside 1.." + std::to_string(length()));
  }
  return prices_[static_cast<std::size_t>(i - 1)];
}

Dollars PriceSeq::total_cost(Day i) const {
  if (i < 1 || i > length()) {
    throw RangeError("day " + std::to_string(i) + " outside 1.." + std::to_string(length()));
  }
  return totals_[static_cast<std::size_t>(i - 1)];
}

bool PriceSeq::prefix_min_settled() const {
  return ends_at_free_day() || length() >= prefix_min_.back() + 1;
}

Dollars PriceSeq::prefix_min(Day t) const {
  if (t < 1) throw RangeError("day " + std::to_string(t) + " < 1");
  if (t > length()) {
    if (!prefix_min_settled()) {
      throw CompletenessError(required_length(), "M_" + std::to_string(t) +
                                                     " depends on days beyond the known prefix");
    }
    return prefix_min_.back();
  }
  return prefix_min_[static_cast<std::size_t>(t - 1)];
}

Day PriceSeq::prefix_argmin(Day t) const {
  if (t < 1) throw RangeError("day " + std::to_string(t) + " < 1");
  if (t > length()) {
    if (!prefix_min_settled()) {
      throw CompletenessError(required_length(), "i_" + std::to_string(t) +
                                                     " depends on days beyond the known prefix");
    }
    return prefix_argmin_.back();
  }
  return prefix_argmin_[static_cast<std::size_t>(t - 1)];
}

namespace {

// min(P_from..P_n) over the known prefix; from must be in 1..n.
Dollars known_tail_min(const PriceSeq& p, Day from) {
  auto totals = p.total_costs();
  return *std::min_element(totals.begin() + (from - 1), totals.end());
}

}  // namespace

Day PriceSeq::required_length() const {
  if (ends_at_free_day()) return length();
  const Dollars m = prefix_min_.back();
  Day need = m + 1;
  if (m >= 1 && m <= length()) need = std::max<Day>(need, known_tail_min(*this, m) + 1);
  return need;
}

bool PriceSeq::is_complete() const { return length() >= required_length(); }

void PriceSeq::require_complete() const {
  if (!is_complete()) {
    auto need = required_length();
    throw CompletenessError(need, "price sequence of length " + std::to_string(length()) +
                                      " is incomplete: needs at least " + std::to_string(need) +
                                      " days (or to end at a free day)");
  }
}

Day CaseA::action_day() const {
  switch (kind) {
    case CaseKind::BargainDay:
    case CaseKind::BargainThenFree:
      return bargain_day;
    case CaseKind::FreeDay:
      return free_day;
    case CaseKind::None:
      break;
  }
  throw PreconditionError("no free or bargain shortcut on this sequence");
}

const char* to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::None: return "none";
    case CaseKind::FreeDay: return "free_day";
    case CaseKind::BargainDay: return "bargain_day";
    case CaseKind::BargainThenFree: return "bargain_then_free";
  }
  return "?";
}

Dollars total_cost(const PriceSeq& p, Day i) { return p.total_cost(i); }

SeqStats stats(const PriceSeq& p) {
  p.require_complete();

  SeqStats s;
  const Day n = p.length();
  s.total_costs.assign(p.total_costs().begin(), p.total_costs().end());
  s.m_star = p.prefix_min(n);
  s.i_star = p.prefix_argmin(n);
  for (Day i = n; i >= 1; --i) {
    if (p.total_cost(i) == s.m_star) {
      s.r0 = i;
      break;
    }
  }
  for (Day t = 1; t <= n; ++t) {
    if (p.prefix_min(t) <= t) {
      s.k = t;
      break;
    }
  }

  const Dollars m = s.m_star;
  const bool free_next = m + 1 <= n && p.price(m + 1) == 0;
  const bool bargain_at = m >= 1 && m <= n && p.price(m) == 1;
  if (free_next && bargain_at) {
    s.case_a = {CaseKind::BargainThenFree, m, m + 1};
  } else if (bargain_at) {
    s.case_a = {CaseKind::BargainDay, m, 0};
  } else if (free_next) {
    s.case_a = {CaseKind::FreeDay, 0, m + 1};
  }

  if (m == 0) {
    // Free first day: nothing to pay, every algorithm that waits is optimal.
    s.q_at_m_star = 0;
    s.c_opt = Rational(1);
    s.optimal_days = {1};
    s.r1 = 1;
    return s;
  }

  s.q_at_m_star = known_tail_min(p, m);
  // Candidates: P_r / r for r <= M*, and P_r / M* for r >= M* with P_r = Q_{M*}.
  Rational best = Rational(s.q_at_m_star, m);
  for (Day r = 1; r <= m; ++r) best = std::min(best, Rational(p.total_cost(r), r));
  s.c_opt = best;
  for (Day r = 1; r <= n; ++r) {
    const Dollars pr = p.total_cost(r);
    const bool early = r <= m && Rational(pr, r) == best;
    const bool late = r >= m && pr == s.q_at_m_star && Rational(pr, m) == best;
    if (early || late) s.optimal_days.push_back(r);
  }
  s.r1 = s.optimal_days.front();
  return s;
}

TailMin q_tail(const PriceSeq& p, Day t) {
  const Day n = p.length();
  if (t < 1 || t > n) {
    throw RangeError("day " + std::to_string(t) + " outside 1.." + std::to_string(n));
  }
  auto totals = p.total_costs();
  auto prices = p.prices();
  TailMin out{
      *std::min_element(totals.begin() + (t - 1), totals.end()),
      *std::min_element(prices.begin() + (t - 1), prices.end()),
  };
  if (!p.ends_at_free_day() && out.total > n - 1) {
    throw CompletenessError(out.total + 1, "Q_" + std::to_string(t) +
                                               " is not settled by a prefix of length " +
                                               std::to_string(n));
  }
  return out;
}

}  // namespace skirent
