#include "skirent/io.hpp"

#include "skirent/errors.hpp"

#include <fstream>

namespace skirent {

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError(path + ": " + e.what());
  }
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw DomainError(std::string("field '") + key + "' has the wrong type");
  }
}

Json witness_json(const Witness& w) {
  Json j;
  j["prices"] = w.prices;
  j["T"] = w.T ? Json(*w.T) : Json("unbounded");
  if (w.t_hat) j["T_hat"] = *w.t_hat;
  if (w.lambda) j["lambda"] = to_string(*w.lambda);
  return j;
}

}  // namespace

PriceSeq price_seq_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("price file must hold a JSON object");
  return PriceSeq(field<Dollars>(j, "B"), field<std::vector<Dollars>>(j, "prices"));
}

Json to_json(const PriceSeq& p) {
  return {{"B", p.budget()}, {"prices", std::vector<Dollars>(p.prices().begin(), p.prices().end())}};
}

PriceSeq load_price_file(const std::string& path) { return price_seq_from_json(read_json_file(path)); }

Json to_json(const SeqStats& s) {
  Json case_a{{"kind", to_string(s.case_a.kind)}};
  if (s.case_a.bargain_day) case_a["bargain_day"] = s.case_a.bargain_day;
  if (s.case_a.free_day) case_a["free_day"] = s.case_a.free_day;
  return {{"total_costs", s.total_costs},
          {"m_star", s.m_star},
          {"i_star", s.i_star},
          {"k", s.k},
          {"r0", s.r0},
          {"r1", s.r1},
          {"c_opt", to_string(s.c_opt)},
          {"case_a", case_a},
          {"optimal_days", s.optimal_days},
          {"q_at_m_star", s.q_at_m_star}};
}

Json to_json(const Decision& d) {
  if (!d.buys()) return {{"kind", "rent_forever"}};
  return {{"kind", "buy_on"}, {"day", d.day()}};
}

Json to_json(const RunRecord& r) {
  return {{"alg_cost", r.alg_cost}, {"opt_cost", r.opt_cost}, {"ratio", r.ratio.str()}};
}

Json to_json(const TradeoffParams& t) {
  return {{"lambda", to_string(t.lambda)},
          {"r2", t.r2},
          {"r3", t.r3},
          {"robustness_bound", to_string(t.robustness_bound)},
          {"consistency_bound", to_string(t.consistency_bound)}};
}

Json to_json(const OracleReport& r) {
  Json j{{"claim_id", r.claim_id},
         {"instance_count", r.instance_count},
         {"certified", r.certified()},
         {"worst_ratio_found", r.worst_ratio_found.str()}};
  Json v = Json::array();
  for (const auto& x : r.violations) {
    Json e{{"instance", x.instance}, {"detail", x.detail}};
    if (x.witness) e["witness"] = witness_json(*x.witness);
    v.push_back(e);
  }
  j["violations"] = v;
  if (r.witness) j["witness"] = witness_json(*r.witness);
  if (!r.optimal_policies.empty()) {
    Json pols = Json::array();
    for (const auto& p : r.optimal_policies) pols.push_back(p.thetas);
    j["optimal_policies"] = pols;
  }
  return j;
}

GameConfig game_config_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("game file must hold a JSON object");
  GameConfig cfg;
  cfg.budget = field<Dollars>(j, "B");
  cfg.max_days = field<Day>(j, "max_days");
  for (const auto& a : field<Json>(j, "agents")) {
    AgentSpec spec;
    spec.active_days = field<Day>(a, "T");
    spec.t_hat = a.contains("T_hat") ? field<Day>(a, "T_hat") : spec.active_days;
    const Json s = field<Json>(a, "strategy");
    spec.strategy.kind = parse_strategy_kind(field<std::string>(s, "kind"));
    if (s.contains("lambda")) spec.strategy.lambda = parse_rational(field<std::string>(s, "lambda"));
    if (s.contains("script")) spec.strategy.script = field<std::vector<Dollars>>(s, "script");
    if (a.contains("others_forecast")) {
      spec.others_forecast = field<std::vector<Dollars>>(a, "others_forecast");
    }
    cfg.agents.push_back(std::move(spec));
  }
  return cfg;
}

GameConfig load_game_file(const std::string& path) {
  return game_config_from_json(read_json_file(path));
}

Json to_json(const GameOutcome& g) {
  Json agents = Json::array();
  for (const auto& a : g.per_agent) {
    Json e{{"total_cost", a.total_cost},
           {"offline_opt", a.offline_opt},
           {"ratio", a.ratio.str()},
           {"reduced_prices", a.reduced_prices}};
    if (a.decision) e["decision"] = to_json(*a.decision);
    agents.push_back(e);
  }
  return {{"license_day", g.license_day ? Json(*g.license_day) : Json("never")},
          {"daily_totals", g.daily_totals},
          {"per_agent", agents}};
}

}  // namespace skirent
