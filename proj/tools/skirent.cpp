#include "skirent/bench.hpp"
#include "skirent/errors.hpp"
#include "skirent/io.hpp"
#include "skirent/oracle.hpp"
#include "skirent/policies.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace skirent;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw DomainError("empty list '" + s + "'");
  return out;
}

// "lo:hi:step" (inclusive) or a comma list.
std::vector<double> parse_sigmas(const std::string& s) {
  std::vector<double> out;
  auto parts = split(s, ':');
  if (parts.size() == 3) {
    double lo = std::stod(parts[0]), hi = std::stod(parts[1]), step = std::stod(parts[2]);
    if (!(step > 0)) throw DomainError("sigma step must be positive");
    for (long k = 0;; ++k) {
      double v = lo + static_cast<double>(k) * step;
      if (v > hi + 1e-9) break;
      out.push_back(v);
    }
    return out;
  }
  for (const auto& item : split(s, ',')) out.push_back(std::stod(item));
  if (out.empty()) throw DomainError("empty sigma grid");
  return out;
}

int cmd_stats(const std::string& path) {
  auto p = load_price_file(path);
  std::cout << to_json(stats(p)).dump(2) << "\n";
  return 0;
}

struct RunArgs {
  std::string policy;
  std::string price;
  Day T = 1;
  std::optional<Day> t_hat;
  std::string lambda = "1";
};

int cmd_run(const RunArgs& a) {
  auto p = load_price_file(a.price);
  auto need_t_hat = [&] {
    if (!a.t_hat) throw DomainError("policy '" + a.policy + "' needs --T-hat");
    return Prediction(*a.t_hat);
  };
  Json out{{"policy", a.policy}};
  RunRecord rec;
  if (a.policy == "baseline" || a.policy == "perfect_self") {
    auto pol = a.policy == "baseline" ? baseline_pessimal(p.budget())
                                      : perfect_self_policy(need_t_hat(), p.budget());
    out["thresholds"] = pol.thetas;
    rec = run_threshold(pol, p, a.T);
  } else {
    Decision d = Decision::rent_forever();
    if (a.policy == "known_prices") {
      d = known_price_decide(p);
    } else if (a.policy == "blind") {
      d = blind_follow(p, need_t_hat());
    } else if (a.policy == "tradeoff") {
      auto lambda = parse_rational(a.lambda);
      d = tradeoff_decide(p, need_t_hat(), lambda);
      if (!stats(p).case_a.holds()) out["params"] = to_json(tradeoff_params(p, lambda));
    } else {
      throw DomainError("unknown policy '" + a.policy + "'");
    }
    out["decision"] = to_json(d);
    rec = run_decision(p, d, a.T);
  }
  out["record"] = to_json(rec);
  std::cout << out.dump(2) << "\n";
  return 0;
}

struct SweepArgs {
  Dollars B = 100;
  std::string z = "0,0.5,1";
  std::string sigmas = "0:100:10";
  std::int64_t samples = 1000;
  std::string lambdas = "1,1/5";
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string out;
};

int cmd_sweep(const SweepArgs& a) {
  SweepConfig cfg;
  cfg.budget = a.B;
  cfg.zs = parse_rational_list(a.z);
  cfg.sigmas = parse_sigmas(a.sigmas);
  cfg.samples_per_sigma = a.samples;
  cfg.lambdas = parse_rational_list(a.lambdas);
  cfg.seed = a.seed;
  cfg.threads = a.threads;
  auto rows = sweep(cfg);
  if (a.out.empty() || a.out == "-") {
    write_csv(std::cout, rows);
  } else {
    std::ofstream f(a.out);
    if (!f) throw std::runtime_error("cannot write " + a.out);
    write_csv(f, rows);
  }
  std::int64_t broken = 0;
  for (const auto& r : rows) broken += r.bound_violations;
  if (broken) {
    std::cerr << broken << " samples exceeded their robustness bound\n";
    return 1;
  }
  return 0;
}

struct OracleArgs {
  std::string claim;
  Dollars B = 3;
  std::optional<Day> horizon;
  std::int64_t lambda_den = 10;
  std::int64_t cap = 10'000'000;
};

int cmd_oracle(const OracleArgs& a) {
  SearchCaps caps{a.cap};
  OracleReport r;
  if (a.claim == "thm1") {
    r = claim_no_prediction(a.B, a.horizon.value_or(a.B + 2), caps);
  } else if (a.claim == "thm2") {
    r = claim_self_prediction(a.B, a.horizon.value_or(a.B + 2), caps);
  } else if (a.claim == "thm3") {
    r = claim_known_prices(a.B, a.horizon.value_or(7));
  } else if (a.claim == "thm6") {
    r = claim_tradeoff(a.B, a.horizon.value_or(7), lambda_grid(a.lambda_den));
  } else {
    throw DomainError("unknown claim '" + a.claim + "'");
  }
  std::cout << to_json(r).dump(2) << "\n";
  return r.certified() ? 0 : 1;
}

int cmd_game(const std::string& path) {
  auto outcome = run_game(load_game_file(path));
  std::cout << to_json(outcome).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiagent ski rental: known-price optima, prediction tradeoffs, oracles"};
  app.require_subcommand(1);

  std::string stats_path;
  auto* stats_cmd = app.add_subcommand("stats", "Print derived quantities of a price file");
  stats_cmd->add_option("price", stats_path, "price JSON file")->required();

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run one policy on a price file");
  run_cmd->add_option("--policy", run.policy, "baseline|perfect_self|known_prices|blind|tradeoff")
      ->required();
  run_cmd->add_option("--price", run.price, "price JSON file")->required();
  run_cmd->add_option("--T", run.T, "active days")->required();
  run_cmd->add_option("--T-hat", run.t_hat, "self prediction");
  run_cmd->add_option("--lambda", run.lambda, "tradeoff parameter, e.g. 1/5");

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Noise sweep of the tradeoff algorithm (CSV)");
  sweep_cmd->add_option("--B", sw.B, "license price");
  sweep_cmd->add_option("--z", sw.z, "price spread(s), comma separated");
  sweep_cmd->add_option("--sigmas", sw.sigmas, "lo:hi:step or comma list");
  sweep_cmd->add_option("--samples", sw.samples, "samples per sigma");
  sweep_cmd->add_option("--lambdas", sw.lambdas, "comma separated rationals");
  sweep_cmd->add_option("--seed", sw.seed, "random seed");
  sweep_cmd->add_option("--threads", sw.threads, "worker threads");
  sweep_cmd->add_option("--out", sw.out, "output CSV (default stdout)");

  OracleArgs orc;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustively check a closed-form claim");
  oracle_cmd->add_option("--claim", orc.claim, "thm1|thm2|thm3|thm6")->required();
  oracle_cmd->add_option("--B", orc.B, "license price");
  oracle_cmd->add_option("--horizon", orc.horizon, "days searched");
  oracle_cmd->add_option("--lambda-den", orc.lambda_den, "lambda grid k/den (thm6)");
  oracle_cmd->add_option("--cap", orc.cap, "search cap");

  std::string game_path;
  auto* game_cmd = app.add_subcommand("game", "Play an n-agent pledging game");
  game_cmd->add_option("config", game_path, "game JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*stats_cmd) return cmd_stats(stats_path);
    if (*run_cmd) return cmd_run(run);
    if (*sweep_cmd) return cmd_sweep(sw);
    if (*oracle_cmd) return cmd_oracle(orc);
    if (*game_cmd) return cmd_game(game_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
