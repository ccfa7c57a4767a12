#pragma once

#include <string>

#include "lindecomp/attacks.hpp"
#include "lindecomp/closure.hpp"
#include "lindecomp/protocols.hpp"

#include "json.hpp"

namespace lindecomp {

using Json = nlohmann::ordered_json;

// All documents use canonical field order and exact integers; no floats.

Json fixture_to_json(const ProtocolFixture& fx);
ProtocolFixture fixture_from_json(const Json& j);

Json transcript_to_json(const Transcript& t);
Transcript transcript_from_json(const Json& j);

Json key_to_json(ProtocolId protocol, const Payload& key);
Payload key_from_json(const Json& j);
ProtocolId key_protocol_from_json(const Json& j);

AttackPlan plan_from_json(const Json& j);
Json plan_to_json(const AttackPlan& plan);

Schedule schedule_from_json(const Json& j);
Json schedule_to_json(const Schedule& schedule);

// Debug dump: entries with their multiplier pairs plus the run counters.
Json basis_to_json(const SandwichBasis& basis);

// Strict parse helpers; wrap library exceptions in ParseError.
Json parse_json(const std::string& text);
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

} // namespace lindecomp
