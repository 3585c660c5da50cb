#include "skirent/bench.hpp"
#include "skirent/errors.hpp"
#include "skirent/policies.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace skirent;
using namespace skirent::test;

TEST_CASE("rng") {
  Rng a(5, {1u, 2u}), b(5, {1u, 2u}), c(5, {1u, 3u});
  for (int i = 0; i < 10; ++i) {
    auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
  }
  Rng r(1, {0u});
  double sum = 0, sq = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    auto v = r.uniform_int(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    double u = r.uniform01();
    CHECK(u >= 0);
    CHECK(u < 1);
    double z = r.normal();
    sum += z;
    sq += z * z;
  }
  CHECK(std::abs(sum / n) < 0.05);
  CHECK(std::abs(sq / n - 1) < 0.05);
  CHECK_THROWS_AS(r.uniform_int(3, 2), DomainError);
}

TEST_CASE("instance generator") {
  Rng rng(3, {1u});
  for (int i = 0; i < 20; ++i) {
    auto inst = gen_instance(50, R(0), R(1, 5), rng);
    CHECK(inst.prices.is_complete());
    for (auto v : inst.prices.prices()) CHECK(v == 50);
    CHECK(inst.T >= 1);
    CHECK(inst.prices.length() >= 4 * 50 + 1);
  }
  for (int i = 0; i < 50; ++i) {
    auto inst = gen_instance(50, R(1), R(1, 5), rng);
    CHECK(inst.prices.is_complete());
    for (Day d = 1; d < inst.prices.length(); ++d) CHECK(inst.prices.price(d) > 0);
    const auto s = stats(inst.prices);
    if (!s.case_a.holds()) {
      // Long enough for every tradeoff day down to the smallest lambda.
      auto t = tradeoff_params(inst.prices, R(1, 5));
      CHECK(t.r3 <= inst.prices.length());
    }
  }
  Rng noise(4, {2u});
  for (Day T : {1, 7, 300}) CHECK(noisy_prediction(T, 0, noise) == T);
  for (int i = 0; i < 200; ++i) CHECK(noisy_prediction(5, 50, noise) >= 1);
}

TEST_CASE("sweep") {
  SweepConfig cfg;
  cfg.budget = 20;
  cfg.sigmas = {0, 5, 20};
  cfg.samples_per_sigma = 60;
  cfg.seed = 42;
  auto rows = sweep(cfg);
  CHECK(rows.size() == cfg.zs.size() * cfg.lambdas.size() * cfg.sigmas.size());
  for (const auto& r : rows) {
    CHECK(r.n_samples == 60);
    CHECK(r.mean_ratio >= 1);
    CHECK(r.std_ratio >= 0);
    CHECK(r.bound_violations == 0);
    if (r.z == R(0) && r.sigma == 0) CHECK(r.mean_ratio <= to_double(1 + r.lambda) + 1e-12);
  }

  auto csv = [](const std::vector<SweepRow>& rs) {
    std::ostringstream os;
    write_csv(os, rs);
    return os.str();
  };
  const auto text = csv(rows);
  CHECK(text.rfind("z,lambda,sigma,mean_ratio,std_ratio,n\n", 0) == 0);
  CHECK(csv(sweep(cfg)) == text);
  cfg.threads = 3;
  CHECK(csv(sweep(cfg)) == text);
  cfg.seed = 43;
  CHECK(csv(sweep(cfg)) != text);
}

TEST_CASE("fixed-price sweep bounds") {
  SweepConfig cfg;
  cfg.zs = {R(0)};
  cfg.sigmas = {0, 50};
  cfg.samples_per_sigma = 200;
  cfg.threads = 2;
  for (const auto& r : sweep(cfg)) {
    if (r.lambda == R(1, 5) && r.sigma == 0) CHECK(r.mean_ratio <= 1.2);
    if (r.lambda == R(1)) CHECK(r.mean_ratio <= 1.99);
    CHECK(r.mean_ratio >= 1);
  }
}

TEST_CASE("small-lambda curve rises with noise") {
  SweepConfig cfg;
  cfg.lambdas = {R(1, 5)};
  cfg.threads = 2;
  auto rows = sweep(cfg);
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const auto &a = rows[i], &b = rows[i + 1];
    if (!(a.z == b.z)) continue;
    const double slack = 3 * std::sqrt((a.std_ratio * a.std_ratio + b.std_ratio * b.std_ratio) /
                                       static_cast<double>(a.n_samples));
    CHECK(b.mean_ratio >= a.mean_ratio - slack);
  }
}

TEST_CASE("random corpus") {
  auto a = random_corpus(300, 25, 8);
  auto b = random_corpus(300, 25, 8);
  REQUIRE(a.size() == 300);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].is_complete());
    CHECK(a[i].budget() <= 25);
    CHECK(a[i].total_cost(a[i].length()) == b[i].total_cost(b[i].length()));
  }
}
