#include "toroidal/json_io.hpp"

#include "toroidal/errors.hpp"

namespace toroidal {

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

std::int64_t json_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(ErrorCode::ParseError, std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

Rational json_rational(const Json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<std::int64_t>()));
  fail(ErrorCode::ParseError, std::string(what) + " must be a rational string \"p/q\"");
}

Json to_json(const ExpVec& e) {
  Json a = Json::array();
  for (auto x : e) a.push_back(x);
  return a;
}

ExpVec expvec_from_json(const Json& j, std::size_t expected_len) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "exponent vector must be an array");
  std::vector<std::int64_t> xs;
  for (const auto& x : j) xs.push_back(json_int(x, "exponent entry"));
  if (expected_len && xs.size() != expected_len)
    fail(ErrorCode::ParseError,
         "exponent vector must have length " + std::to_string(expected_len));
  return ExpVec(std::move(xs));
}

Json to_json(const TruncSeries& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms())
    terms.push_back(Json{{"exp", to_json(e)}, {"coef", format_rational(c)}});
  Json out{{"terms", terms}};
  if (s.is_exact())
    out["trunc"] = "exact";
  else
    out["trunc"] = s.window();
  return out;
}

TruncSeries series_from_json(const Json& j, std::int64_t default_trunc) {
  if (!j.is_object() || !j.contains("terms"))
    fail(ErrorCode::ParseError, "series must be an object with terms");
  std::int64_t window = default_trunc;
  if (j.contains("trunc")) {
    const Json& t = j["trunc"];
    if (t.is_string() && t.get<std::string>() == "exact")
      window = TruncSeries::kExact;
    else
      window = json_int(t, "trunc");
  }
  if (window < 0) fail(ErrorCode::ParseError, "trunc must be nonnegative");
  TruncSeries::Terms terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coef"))
      fail(ErrorCode::ParseError, "series term needs exp and coef");
    ExpVec e = expvec_from_json(t["exp"], 3);
    if (!e.is_nonnegative()) fail(ErrorCode::ParseError, "series exponents must be >= 0");
    if (e.total_degree() > window)
      fail(ErrorCode::ParseError, "series term " + e.to_string() + " exceeds trunc");
    terms[e] += json_rational(t["coef"], "coef");
  }
  return TruncSeries(std::move(terms), window);
}

Json to_json(const Payload& p) {
  Json out{{"exp", to_json(p.exp)}};
  if (p.coef != 1) out["coef"] = format_rational(p.coef);
  if (p.series) out["series"] = to_json(*p.series);
  return out;
}

Payload payload_from_json(const Json& j, std::int64_t default_trunc) {
  if (!j.is_object() || !j.contains("exp"))
    fail(ErrorCode::ParseError, "payload must be an object with exp");
  Payload p;
  p.exp = expvec_from_json(j["exp"], 3);
  if (j.contains("coef")) p.coef = json_rational(j["coef"], "coef");
  if (j.contains("series")) p.series = series_from_json(j["series"], default_trunc);
  return p;
}

Json to_json(const Germ& g) {
  Json out{{"target_kind", std::string(point_kind_name(g.target_kind))},
           {"domain_kind", std::string(point_kind_name(g.domain_kind))}};
  if (g.form_tag) out["form_tag"] = std::string(form_tag_name(*g.form_tag));
  out["u"] = to_json(g.payloads[0]);
  out["v"] = to_json(g.payloads[1]);
  out["w"] = to_json(g.payloads[2]);
  Json consts = Json::object();
  for (const auto& [k, c] : g.constants) consts[k] = format_rational(c);
  out["constants"] = consts;
  return out;
}

Germ germ_from_json(const Json& j, std::int64_t default_trunc) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "germ must be a JSON object");
  for (const char* key : {"target_kind", "domain_kind", "u", "v", "w"})
    if (!j.contains(key)) fail(ErrorCode::ParseError, std::string("germ is missing ") + key);
  Germ g;
  if (!j["target_kind"].is_string() || !j["domain_kind"].is_string())
    fail(ErrorCode::ParseError, "point kinds must be strings");
  g.target_kind = parse_point_kind(j["target_kind"].get<std::string>());
  g.domain_kind = parse_point_kind(j["domain_kind"].get<std::string>());
  if (j.contains("form_tag")) {
    if (!j["form_tag"].is_string()) fail(ErrorCode::ParseError, "form_tag must be a string");
    g.form_tag = parse_form_tag(j["form_tag"].get<std::string>());
  }
  g.payloads[0] = payload_from_json(j["u"], default_trunc);
  g.payloads[1] = payload_from_json(j["v"], default_trunc);
  g.payloads[2] = payload_from_json(j["w"], default_trunc);
  if (j.contains("constants")) {
    if (!j["constants"].is_object()) fail(ErrorCode::ParseError, "constants must be an object");
    for (const auto& [k, c] : j["constants"].items()) g.constants[k] = json_rational(c, "constant");
  }
  return g;
}

Json to_json(const ThreePointGerm& g) {
  Json terms = Json::array();
  for (const auto& [c, e] : g.series_terms)
    terms.push_back(Json{{"coef", format_rational(c)}, {"exp", to_json(e)}});
  return Json{{"target_kind", std::string(point_kind_name(g.target_kind))},
              {"u_exp", to_json(g.u_exp)},
              {"v_exp", to_json(g.v_exp)},
              {"series_terms", terms},
              {"n_exp", to_json(g.n_exp)}};
}

}  // namespace toroidal
