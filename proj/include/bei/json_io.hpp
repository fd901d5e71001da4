#pragma once

#include <string>

#include "json.hpp"

#include "bei/cutsets.hpp"
#include "bei/gbg.hpp"
#include "bei/invariants.hpp"
#include "bei/oracle.hpp"

namespace bei {

// Stable snake_case JSON schemas for all reports; arrays are sorted. These
// are part of the CLI contract, documented in the README.
nlohmann::json to_json(const VertexSet& s);
nlohmann::json to_json(const GbgCertificate& c);
nlohmann::json to_json(const InvariantReport& r);
nlohmann::json to_json(const Bound& b);
nlohmann::json to_json(const BoundsReport& b);
nlohmann::json to_json(const ExtremalPrediction& p);
nlohmann::json to_json(const FlowerWitness& w);
nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const MinimalPrimeDescription& d);
nlohmann::json to_json(const BettiTable& t);
nlohmann::json to_json(const OracleSummary& s);

}  // namespace bei
