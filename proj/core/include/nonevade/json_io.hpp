#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "nonevade/certifier.hpp"
#include "nonevade/chain_game.hpp"
#include "nonevade/order_complex.hpp"

namespace nonevade {

// Schemas:
//   complex     {"vertices": [...], "facets": [[...], ...]}
//   collapses   {"pairs": [[[free...], [coface...]], ...], "final": v}
//   certificate {"type": "leaf", "vertex": v}
//             | {"type": "prune", "removed": [...], "child": ...}
//             | {"type": "split", "vertex": v, "mode": m, "z": z,
//                "interval": [bottom, top], "dl": ..., "lk": ...}
//   strategy    {"type": "answer", "chain": b}
//             | {"type": "query", "vertex": v, "yes": ..., "no": ...}
//   transcript  {"queries": [[v, 0|1], ...], "verdict": b}
// Readers throw ParseError on malformed input.

nlohmann::json to_json(const Complex& complex);
Complex complex_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const CollapseSequence& sequence);
CollapseSequence collapse_sequence_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const Certificate& cert);
CertificatePtr certificate_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const Strategy& strategy);
StrategyPtr strategy_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const Transcript& transcript);
nlohmann::json to_json(const GameReport& report);
nlohmann::json to_json(const CertifyTrace& trace);

// Stable text form used for every emitted document.
std::string dump(const nlohmann::json& doc);
nlohmann::json parse_json(const std::string& text);

}  // namespace nonevade
