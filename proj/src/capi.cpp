#include "toroidal/toroidal.h"

#include <new>
#include <optional>
#include <string>
#include <vector>

#include "toroidal/blowup.hpp"
#include "toroidal/errors.hpp"
#include "toroidal/fan.hpp"
#include "toroidal/germ.hpp"
#include "toroidal/jacobian.hpp"
#include "toroidal/json_io.hpp"
#include "toroidal/principalize.hpp"
#include "toroidal/relations.hpp"
#include "toroidal/suite.hpp"
#include "toroidal/tau.hpp"

struct toroidal_result {
  int status = TOROIDAL_OK;
  std::string text;
};

struct toroidal_germ {
  toroidal::Germ germ;
  std::int64_t trunc = toroidal::TruncSeries::kDefaultTrunc;
};

struct toroidal_fan {
  toroidal::FanInput input;
};

namespace {

using toroidal::Json;

toroidal_result* make_result(int status, std::string text) {
  auto* r = new (std::nothrow) toroidal_result;
  if (r) {
    r->status = status;
    r->text = std::move(text);
  }
  return r;
}

void store(toroidal_result** out, int status, std::string text) {
  if (out) *out = make_result(status, std::move(text));
}

Json header(std::optional<std::uint64_t> seed, std::optional<std::int64_t> trunc) {
  Json p{{"tool", "toroidal"}, {"version", TOROIDAL_VERSION}};
  p["seed"] = seed ? Json(*seed) : Json(nullptr);
  p["trunc_degree"] = trunc ? Json(*trunc) : Json(nullptr);
  return p;
}

std::string report(Json prov, const Json& body) {
  Json out{{"provenance", std::move(prov)}};
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  return out.dump(2) + "\n";
}

/// Runs `fn`, translating exceptions into status codes and messages.
template <class Fn>
int guarded(toroidal_result** out, Fn&& fn) {
  if (out) *out = nullptr;
  try {
    store(out, TOROIDAL_OK, fn());
    return TOROIDAL_OK;
  } catch (const toroidal::Error& e) {
    int status = static_cast<int>(e.code());
    store(out, status, e.what());
    return status;
  } catch (const std::bad_alloc&) {
    return TOROIDAL_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    store(out, TOROIDAL_INTERNAL_ERROR, std::string("InternalError: ") + e.what());
    return TOROIDAL_INTERNAL_ERROR;
  }
}

void require(const void* p, const char* what) {
  if (!p) toroidal::fail(toroidal::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

Json charts_with_germs(const std::vector<std::pair<toroidal::Chart, toroidal::Germ>>& charts) {
  Json arr = Json::array();
  for (const auto& [chart, germ] : charts) {
    Json entry{{"chart", toroidal::to_json(chart)}, {"germ", toroidal::to_json(germ)}};
    entry["form"] = std::string(toroidal::form_tag_name(toroidal::classify(germ)));
    arr.push_back(std::move(entry));
  }
  return arr;
}

}  // namespace

extern "C" {

const char* toroidal_version(void) { return TOROIDAL_VERSION; }

const char* toroidal_status_name(int status) {
  if (status == TOROIDAL_OK) return "Ok";
  if (status == TOROIDAL_INTERNAL_ERROR) return "InternalError";
  if (status >= TOROIDAL_MALFORMED_GERM && status <= TOROIDAL_INVALID_ARGUMENT)
    return toroidal::error_name(static_cast<toroidal::ErrorCode>(status)).data();
  return "Unknown";
}

const char* toroidal_result_text(const toroidal_result* result) {
  return result ? result->text.c_str() : "";
}

int toroidal_result_status(const toroidal_result* result) {
  return result ? result->status : TOROIDAL_INVALID_ARGUMENT;
}

void toroidal_result_free(toroidal_result* result) { delete result; }

int toroidal_germ_parse(const char* json, int64_t default_trunc, toroidal_germ** out,
                        toroidal_result** error) {
  if (out) *out = nullptr;
  toroidal_germ* handle = nullptr;
  int status = guarded(error, [&] {
    require(json, "germ text");
    require(out, "output handle");
    if (default_trunc < 1)
      toroidal::fail(toroidal::ErrorCode::InvalidArgument, "truncation degree must be positive");
    auto g = toroidal::germ_from_json(toroidal::parse_json_text(json), default_trunc);
    toroidal::check_structure(g);
    handle = new toroidal_germ{std::move(g), default_trunc};
    return std::string();
  });
  if (status == TOROIDAL_OK) {
    *out = handle;
    if (error) {
      toroidal_result_free(*error);
      *error = nullptr;
    }
  }
  return status;
}

void toroidal_germ_free(toroidal_germ* germ) { delete germ; }

int toroidal_fan_parse(const char* json, toroidal_fan** out, toroidal_result** error) {
  if (out) *out = nullptr;
  toroidal_fan* handle = nullptr;
  int status = guarded(error, [&] {
    require(json, "fan text");
    require(out, "output handle");
    handle = new toroidal_fan{toroidal::fan_from_json(toroidal::parse_json_text(json))};
    return std::string();
  });
  if (status == TOROIDAL_OK) {
    *out = handle;
    if (error) {
      toroidal_result_free(*error);
      *error = nullptr;
    }
  }
  return status;
}

void toroidal_fan_free(toroidal_fan* fan) { delete fan; }

int toroidal_classify(const toroidal_germ* germ, toroidal_result** out) {
  return guarded(out, [&] {
    require(germ, "germ");
    const auto& g = germ->germ;
    toroidal::FormTag tag = toroidal::classify(g);
    Json body{{"form", std::string(toroidal::form_tag_name(tag))}};
    if (g.form_tag) {
      body["declared"] = std::string(toroidal::form_tag_name(*g.form_tag));
      body["violations"] = toroidal::validate(g);
    }
    return report(header(std::nullopt, germ->trunc), body);
  });
}

int toroidal_tau(const toroidal_germ* germ, toroidal_result** out) {
  return guarded(out, [&] {
    require(germ, "germ");
    auto details = toroidal::tau_details(toroidal::to_three_point(germ->germ));
    Json body;
    if (details.tau.is_minus_infinity())
      body["tau"] = "-inf";
    else if (details.tau.value().fits_slong_p())
      body["tau"] = details.tau.value().get_si();
    else
      body["tau"] = details.tau.value().get_str();
    Json h = Json::array(), a = Json::array(), f = Json::array();
    for (const auto& e : details.h_gens) h.push_back(toroidal::to_json(e));
    for (const auto& e : details.a_gens) a.push_back(toroidal::to_json(e));
    for (const auto& d : details.invariant_factors) f.push_back(d.get_str());
    body["h_gens"] = h;
    body["a_gens"] = a;
    body["invariant_factors"] = f;
    return report(header(std::nullopt, germ->trunc), body);
  });
}

int toroidal_lambda(const toroidal_germ* germ, toroidal_result** out) {
  return guarded(out, [&] {
    require(germ, "germ");
    auto verdict = toroidal::classify_by_lambda(germ->germ);
    return report(header(std::nullopt, germ->trunc), verdict.to_json());
  });
}

int toroidal_blowup_domain(const toroidal_germ* germ, const char* center,
                           const char* const* translations, int n_translations,
                           toroidal_result** out) {
  return guarded(out, [&] {
    require(germ, "germ");
    require(center, "center");
    std::vector<toroidal::Rational> consts;
    for (int i = 0; i < n_translations; ++i) {
      require(translations[i], "translation");
      consts.push_back(toroidal::parse_rational(translations[i]));
    }
    auto kind = toroidal::parse_center_kind(center);
    Json body{{"side", "Domain"},
              {"center_kind", std::string(toroidal::center_kind_name(kind))},
              {"charts", charts_with_germs(toroidal::domain_charts(kind, germ->germ, consts))}};
    return report(header(std::nullopt, germ->trunc), body);
  });
}

int toroidal_blowup_target(const toroidal_germ* germ, int center_form, toroidal_result** out) {
  return guarded(out, [&] {
    require(germ, "germ");
    toroidal::TargetPoint point;
    switch (germ->germ.target_kind) {
      case toroidal::PointKind::TwoPoint: point = toroidal::TargetPoint::TwoPoint; break;
      case toroidal::PointKind::ThreePoint: point = toroidal::TargetPoint::ThreePoint; break;
      default:
        toroidal::fail(toroidal::ErrorCode::InvalidCenterForm,
                       "target blow-ups need a 2-point or 3-point target");
    }
    Json arr = Json::array();
    for (const auto& chart : toroidal::target_charts(point, center_form)) {
      Json entry{{"chart", toroidal::to_json(chart)}};
      try {
        auto lifted = toroidal::apply_target_chart(germ->germ, chart);
        entry["lifts"] = true;
        entry["germ"] = toroidal::to_json(lifted);
        entry["form"] = std::string(toroidal::form_tag_name(toroidal::classify(lifted)));
      } catch (const toroidal::Error& e) {
        if (e.code() != toroidal::ErrorCode::MalformedGerm) throw;
        entry["lifts"] = false;
        entry["reason"] = e.what();
      }
      arr.push_back(std::move(entry));
    }
    Json body{{"side", "Target"}, {"center_form", center_form}, {"charts", arr}};
    return report(header(std::nullopt, germ->trunc), body);
  });
}

int toroidal_resolve3(int64_t a, int64_t b, int64_t c, const char* lambda, int max_steps,
                      toroidal_format format, toroidal_result** out) {
  return guarded(out, [&] {
    if (max_steps < 1)
      toroidal::fail(toroidal::ErrorCode::InvalidArgument, "step budget must be positive");
    toroidal::ThreePointPreRel rel{a, b, c, lambda ? toroidal::parse_rational(lambda)
                                                   : toroidal::Rational(1)};
    auto result = toroidal::resolve3(rel, max_steps);
    Json prov = header(std::nullopt, std::nullopt);
    if (format == TOROIDAL_FORMAT_DOT)
      return "// provenance: " + prov.dump() + "\n" + result.tree.to_dot("resolve3");
    return report(std::move(prov), result.to_json());
  });
}

int toroidal_principalize(const toroidal_fan* fan, const char* strategy, int budget,
                          toroidal_result** out) {
  return guarded(out, [&] {
    require(fan, "fan");
    std::string mode = strategy ? strategy : "pair";
    const auto& in = fan->input;
    if (in.divisors.divisors.size() < 2)
      toroidal::fail(toroidal::ErrorCode::InvalidArgument, "principalization needs two or more divisors");
    toroidal::PrincipalizeResult res;
    if (mode == "pair") {
      if (in.divisors.divisors.size() == 2)
        res = toroidal::principalize_pair(in.fan, in.divisors.divisors[0], in.divisors.divisors[1],
                                          budget);
      else
        res = toroidal::principalize_many(in.fan, in.divisors, budget);
    } else if (mode == "mixed") {
      res = toroidal::principalize_with_3points(in.fan, in.divisors, budget);
    } else {
      toroidal::fail(toroidal::ErrorCode::InvalidArgument, "unknown strategy '" + mode + "'");
    }
    Json body = res.to_json();
    body["strategy"] = mode;
    return report(header(std::nullopt, std::nullopt), body);
  });
}

int toroidal_suite(uint64_t seed, int64_t trunc, const char* const* only, int n_only,
                   toroidal_result** out) {
  return guarded(out, [&] {
    if (trunc < 1)
      toroidal::fail(toroidal::ErrorCode::InvalidArgument, "truncation degree must be positive");
    std::vector<std::string> ids;
    for (int i = 0; i < n_only; ++i) {
      require(only[i], "criterion id");
      bool known = false;
      for (const auto& info : toroidal::criteria()) known = known || info.id == only[i];
      if (!known)
        toroidal::fail(toroidal::ErrorCode::InvalidArgument,
                       std::string("unknown criterion '") + only[i] + "'");
      ids.emplace_back(only[i]);
    }
    auto rep = toroidal::run_suite(toroidal::SuiteConfig{seed, trunc}, ids);
    return rep.to_json().dump(2) + "\n";
  });
}

}  // extern "C"
