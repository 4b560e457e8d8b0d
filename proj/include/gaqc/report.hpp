#pragma once

#include <string>

#include "json.hpp"

#include "gaqc/goppa.hpp"
#include "gaqc/quantum.hpp"

namespace gaqc {

using Json = nlohmann::ordered_json;

Json to_json(const DistanceCert& d);
/// {"n","k","d":{...},"label"}; `d` is the certificate to publish (usually a computed distance).
Json code_json(const LinearCode& c, const DistanceCert& d);
Json to_json(const AqcReport& r);
Json field_json(const Field& f);
std::string hex(std::uint32_t x, int width = 2);
Json hex_list(const std::vector<gf_t>& xs);

}  // namespace gaqc
