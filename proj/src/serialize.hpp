#ifndef BMP_SERIALIZE_HPP
#define BMP_SERIALIZE_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "certify.hpp"
#include "construct.hpp"
#include "exact.hpp"

namespace bmp {

using json = nlohmann::json;

// Certificates: {"multipacking":[...]} / {"broadcast":{"0":2,...}}.
json multipacking_to_json(const Multipacking& p);
json broadcast_to_json(const Broadcast& f);
Multipacking multipacking_from_json(const json& j);
Broadcast broadcast_from_json(const json& j);

json violation_to_json(const Violation& v);
json verdict_to_json(const std::optional<Violation>& v);

// {"parameter":"mp"|"gb","value":...,"witness":...,"nodes":...,"millis":...}
json mp_result_to_json(const MpResult& r);
json gb_result_to_json(const GbResult& r);

json trace_to_json(const ConstructionTrace& t);

} // namespace bmp

#endif
