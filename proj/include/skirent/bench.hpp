#pragma once

#include "skirent/arena.hpp"
#include "skirent/pricecore.hpp"

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <random>
#include <vector>

namespace skirent {

// 64-bit Mersenne Twister seeded through std::seed_seq from a list of 32-bit
// words. Integers come from rejection sampling on the raw 64-bit output,
// uniform doubles from the top 53 bits, normals from Box-Muller (cosine
// branch only, one normal per two uniforms).
class Rng {
 public:
  explicit Rng(std::initializer_list<std::uint32_t> words);
  Rng(std::uint64_t seed, std::initializer_list<std::uint32_t> stream);

  std::uint64_t next() { return engine_(); }
  // Uniform on [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  // Uniform on [0, 1).
  double uniform01();
  double normal();

 private:
  std::mt19937_64 engine_;
};

struct SweepConfig {
  Dollars budget = 100;
  std::vector<Rational> zs{Rational(0), Rational(1, 2), Rational(1)};
  std::vector<double> sigmas{0, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
  std::int64_t samples_per_sigma = 1000;
  std::vector<Rational> lambdas{Rational(1), Rational(1, 5)};
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct SweepRow {
  Rational z;
  Rational lambda;
  double sigma = 0;
  double mean_ratio = 0;
  double std_ratio = 0;
  std::int64_t n_samples = 0;
  // Samples whose exact ratio broke the robustness bound of their instance.
  std::int64_t bound_violations = 0;
};

struct Instance {
  PriceSeq prices;
  Day T;
};

// Prices uniform on [B - floor(zB), B] (cut at the first free day), T uniform
// on [1, 4B]. The draw continues until the prefix is complete, has at least
// 4B + 1 days, and reaches ceil(c_OPT * M* / lambda_min) + B days.
Instance gen_instance(Dollars budget, const Rational& z, const Rational& lambda_min, Rng& rng);

// T-hat = max(1, round(T + sigma * N(0, 1))).
Day noisy_prediction(Day T, double sigma, Rng& rng);

std::vector<SweepRow> sweep(const SweepConfig& cfg);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// Random complete price sequences mixing several shapes (uniform bands, fixed
// price, expensive-then-cheap, sparse bargains, free days), B in 2..max_budget.
std::vector<PriceSeq> random_corpus(std::size_t count, Dollars max_budget, std::uint64_t seed);

// Random game with up to max_agents agents and B in 2..max_budget. At most one
// prediction-driven agent relies on the realised schedule of the others; the
// rest carry explicit (possibly wrong) forecasts.
GameConfig random_game(Rng& rng, std::size_t max_agents, Dollars max_budget);

}  // namespace skirent
