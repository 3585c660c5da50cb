#pragma once

#include "skirent/arena.hpp"
#include "skirent/oracle.hpp"
#include "skirent/policies.hpp"
#include "skirent/pricecore.hpp"

#include <json.hpp>

#include <string>

namespace skirent {

using Json = nlohmann::json;

// {"B": int, "prices": [int, ...]}; the invariants are checked on load.
PriceSeq price_seq_from_json(const Json& j);
Json to_json(const PriceSeq& p);
PriceSeq load_price_file(const std::string& path);

Json to_json(const SeqStats& s);
Json to_json(const Decision& d);
Json to_json(const RunRecord& r);
Json to_json(const TradeoffParams& t);
Json to_json(const OracleReport& r);

GameConfig game_config_from_json(const Json& j);
GameConfig load_game_file(const std::string& path);
Json to_json(const GameOutcome& g);

}  // namespace skirent
