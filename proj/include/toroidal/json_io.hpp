#pragma once

#include <string>

#include "json.hpp"
#include "toroidal/germ.hpp"

namespace toroidal {

using Json = nlohmann::ordered_json;

/// Parses JSON text, converting syntax errors to ParseError.
Json parse_json_text(const std::string& text);

Json to_json(const ExpVec& e);
ExpVec expvec_from_json(const Json& j, std::size_t expected_len = 0);

Json to_json(const TruncSeries& s);
/// `default_trunc` applies to series without a "trunc" field.
TruncSeries series_from_json(const Json& j,
                             std::int64_t default_trunc = TruncSeries::kDefaultTrunc);

Json to_json(const Payload& p);
Payload payload_from_json(const Json& j,
                          std::int64_t default_trunc = TruncSeries::kDefaultTrunc);

Json to_json(const Germ& g);
Germ germ_from_json(const Json& j, std::int64_t default_trunc = TruncSeries::kDefaultTrunc);

Json to_json(const ThreePointGerm& g);

/// Integer read with a ParseError on type mismatch.
std::int64_t json_int(const Json& j, const char* what);
Rational json_rational(const Json& j, const char* what);

}  // namespace toroidal
