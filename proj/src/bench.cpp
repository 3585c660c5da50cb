#include "skirent/bench.hpp"

#include "skirent/errors.hpp"
#include "skirent/offline.hpp"
#include "skirent/policies.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <thread>

namespace skirent {

namespace {

std::vector<std::uint32_t> seed_words(std::uint64_t seed, std::initializer_list<std::uint32_t> stream) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed),
                                   static_cast<std::uint32_t>(seed >> 32)};
  words.insert(words.end(), stream.begin(), stream.end());
  return words;
}

std::mt19937_64 seeded(const std::vector<std::uint32_t>& words) {
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t workers = std::min<std::size_t>(threads, count);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

Rng::Rng(std::initializer_list<std::uint32_t> words)
    : engine_(seeded(std::vector<std::uint32_t>(words))) {}

Rng::Rng(std::uint64_t seed, std::initializer_list<std::uint32_t> stream)
    : engine_(seeded(seed_words(seed, stream))) {}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("empty integer range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(next());
  // Reject the low (2^64 mod range) values so every residue is equally likely.
  const std::uint64_t reject_below = (0 - range) % range;
  std::uint64_t u;
  do {
    u = next();
  } while (u < reject_below);
  return lo + static_cast<std::int64_t>(u % range);
}

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  const double u1 = 1.0 - uniform01();  // (0, 1]
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Instance gen_instance(Dollars budget, const Rational& z, const Rational& lambda_min, Rng& rng) {
  if (budget < 2) throw DomainError("B must be >= 2");
  if (z < 0 || z > 1) throw DomainError("z must lie in [0, 1]");
  if (lambda_min <= 0 || lambda_min > 1) throw DomainError("lambda must lie in (0, 1]");
  const Day T = rng.uniform_int(1, 4 * budget);
  const Dollars lo = budget - floor_of(z * Rational(budget));

  std::vector<Dollars> raw;
  bool free = false;
  auto draw_until = [&](Day len) {
    while (!free && static_cast<Day>(raw.size()) < len) {
      raw.push_back(rng.uniform_int(lo, budget));
      free = raw.back() == 0;
    }
  };
  draw_until(4 * budget + 1);
  while (true) {
    PriceSeq p(budget, raw);
    if (free) return {std::move(p), T};
    Day need = p.required_length();
    if (p.is_complete()) {
      auto s = stats(p);
      if (!s.case_a.holds()) {
        need = std::max<Day>(need, ceil_of(s.c_opt * Rational(s.m_star) / lambda_min) + budget);
      }
    }
    if (p.length() >= need) return {std::move(p), T};
    draw_until(need);
  }
}

Day noisy_prediction(Day T, double sigma, Rng& rng) {
  const double eps = sigma * rng.normal();
  const auto rounded = static_cast<std::int64_t>(std::llround(static_cast<double>(T) + eps));
  return Prediction(rounded).t_hat;
}

std::vector<SweepRow> sweep(const SweepConfig& cfg) {
  if (cfg.lambdas.empty()) throw DomainError("no lambda values");
  if (cfg.samples_per_sigma < 1) throw DomainError("samples must be >= 1");
  for (double s : cfg.sigmas) {
    if (!(s >= 0)) throw DomainError("sigma must be non-negative");
  }
  for (const auto& l : cfg.lambdas) {
    if (l <= 0 || l > 1) throw DomainError("lambda must lie in (0, 1]");
  }
  const Rational lambda_min = *std::min_element(cfg.lambdas.begin(), cfg.lambdas.end());
  const auto samples = static_cast<std::size_t>(cfg.samples_per_sigma);
  const std::size_t n_lambda = cfg.lambdas.size();

  std::vector<SweepRow> rows;
  for (std::size_t zi = 0; zi < cfg.zs.size(); ++zi) {
    const Rational z = cfg.zs[zi];
    std::vector<std::optional<Instance>> inst(samples);
    // Per sample and lambda: the buy day when T-hat >= M_T-hat and otherwise,
    // plus the robustness bound.
    struct Plan {
      Day high = 0;
      Day low = 0;
      Rational bound;
    };
    std::vector<Plan> plans(samples * n_lambda);
    parallel_for(samples, cfg.threads, [&](std::size_t s) {
      Rng rng(cfg.seed, {1u, static_cast<std::uint32_t>(zi), static_cast<std::uint32_t>(s)});
      inst[s] = gen_instance(cfg.budget, z, lambda_min, rng);
      const auto& p = inst[s]->prices;
      const auto st = stats(p);
      for (std::size_t li = 0; li < n_lambda; ++li) {
        const auto& lambda = cfg.lambdas[li];
        Plan& plan = plans[s * n_lambda + li];
        if (st.case_a.holds()) {
          plan.high = plan.low = tradeoff_decide(p, Prediction(1), lambda).day();
          plan.bound = lambda - 1 + Rational(1) / lambda;
        } else {
          auto params = tradeoff_params(p, lambda);
          plan.high = params.r2;
          plan.low = params.r3;
          plan.bound = params.robustness_bound;
        }
      }
    });

    std::vector<double> ratios(samples);
    std::vector<char> broken(samples);
    for (std::size_t li = 0; li < n_lambda; ++li) {
      for (std::size_t si = 0; si < cfg.sigmas.size(); ++si) {
        const double sigma = cfg.sigmas[si];
        parallel_for(samples, cfg.threads, [&](std::size_t s) {
          Rng rng(cfg.seed, {2u, static_cast<std::uint32_t>(zi), static_cast<std::uint32_t>(si),
                             static_cast<std::uint32_t>(s)});
          const auto& [p, T] = *inst[s];
          const Day t_hat = noisy_prediction(T, sigma, rng);
          const Plan& plan = plans[s * n_lambda + li];
          const Day day = t_hat >= p.prefix_min(t_hat) ? plan.high : plan.low;
          const RunRecord rec = run_decision(p, Decision::buy_on(day), T);
          ratios[s] = rec.ratio.to_double();
          broken[s] = !(rec.ratio <= plan.bound);
        });
        SweepRow row;
        row.z = z;
        row.lambda = cfg.lambdas[li];
        row.sigma = sigma;
        row.n_samples = cfg.samples_per_sigma;
        double sum = 0;
        for (std::size_t s = 0; s < samples; ++s) {
          sum += ratios[s];
          row.bound_violations += broken[s];
        }
        row.mean_ratio = sum / static_cast<double>(samples);
        double sq = 0;
        for (std::size_t s = 0; s < samples; ++s) {
          sq += (ratios[s] - row.mean_ratio) * (ratios[s] - row.mean_ratio);
        }
        row.std_ratio = samples > 1 ? std::sqrt(sq / static_cast<double>(samples - 1)) : 0.0;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "z,lambda,sigma,mean_ratio,std_ratio,n\n";
  for (const auto& r : rows) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", r.mean_ratio, r.std_ratio);
    out << decimal(to_double(r.z)) << ',' << decimal(to_double(r.lambda)) << ','
        << decimal(r.sigma) << ',' << buf << ',' << r.n_samples << '\n';
  }
}

std::vector<PriceSeq> random_corpus(std::size_t count, Dollars max_budget, std::uint64_t seed) {
  if (max_budget < 2) throw DomainError("max budget must be >= 2");
  std::vector<PriceSeq> out;
  out.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    Rng rng(seed, {3u, static_cast<std::uint32_t>(idx)});
    const Dollars B = rng.uniform_int(2, max_budget);
    const auto shape = rng.uniform_int(0, 5);
    const Dollars band_lo = rng.uniform_int(1, B);
    const Day phase = rng.uniform_int(1, 2 * B);
    const Dollars cheap_hi = std::max<Dollars>(1, B / 5);
    const Dollars slope_num = rng.uniform_int(1, 4);
    const Dollars slope_den = rng.uniform_int(1, 4);

    std::vector<Dollars> raw;
    for (Day i = 1; i <= 3 * B + 1; ++i) {
      Dollars v = B;
      switch (shape) {
        case 0: v = rng.uniform_int(band_lo, B); break;
        case 1: v = B; break;
        case 2:
          v = i <= phase ? rng.uniform_int(std::max<Dollars>(1, B - B / 4), B)
                         : rng.uniform_int(1, cheap_hi);
          break;
        case 3:
          v = std::clamp<Dollars>(B - (i * slope_num) / slope_den + rng.uniform_int(-2, 2), 1, B);
          break;
        case 4: v = rng.uniform_int(0, 4) == 0 ? rng.uniform_int(1, std::min<Dollars>(3, B)) : B; break;
        default: v = rng.uniform_int(0, B); break;
      }
      raw.push_back(v);
      if (v == 0) break;
    }
    PriceSeq full(B, raw);
    Day shortest = full.length();
    for (Day len = 1; len < full.length(); ++len) {
      PriceSeq prefix(B, std::vector<Dollars>(raw.begin(), raw.begin() + len));
      if (prefix.is_complete()) {
        shortest = len;
        break;
      }
    }
    const Day len = rng.uniform_int(shortest, full.length());
    PriceSeq pick(B, std::vector<Dollars>(raw.begin(), raw.begin() + len));
    out.push_back(pick.is_complete() ? std::move(pick) : std::move(full));
  }
  return out;
}

GameConfig random_game(Rng& rng, std::size_t max_agents, Dollars max_budget) {
  GameConfig cfg;
  cfg.budget = rng.uniform_int(2, max_budget);
  cfg.max_days = rng.uniform_int(1, 3 * cfg.budget);
  const auto n = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(max_agents)));
  bool realised_taken = false;
  auto sparse = [&](Day len) {
    std::vector<Dollars> v;
    for (Day t = 1; t <= len; ++t) {
      v.push_back(rng.uniform_int(0, 3) == 0 ? rng.uniform_int(0, cfg.budget) : 0);
    }
    return v;
  };
  for (std::size_t i = 0; i < n; ++i) {
    AgentSpec a;
    a.active_days = rng.uniform_int(1, cfg.max_days);
    a.t_hat = rng.uniform_int(1, 3 * cfg.budget);
    a.strategy.kind = static_cast<StrategyKind>(rng.uniform_int(0, 5));
    switch (a.strategy.kind) {
      case StrategyKind::FixedScript: a.strategy.script = sparse(rng.uniform_int(0, cfg.max_days)); break;
      case StrategyKind::Tradeoff: a.strategy.lambda = Rational(rng.uniform_int(1, 10), 10); break;
      default: break;
    }
    const bool predicts = a.strategy.kind == StrategyKind::KnownPrices ||
                          a.strategy.kind == StrategyKind::Blind ||
                          a.strategy.kind == StrategyKind::Tradeoff;
    if (predicts) {
      if (!realised_taken && rng.uniform_int(0, 1) == 0) {
        realised_taken = true;
      } else {
        a.others_forecast = sparse(rng.uniform_int(1, cfg.max_days));
      }
    }
    cfg.agents.push_back(std::move(a));
  }
  return cfg;
}

}  // namespace skirent
