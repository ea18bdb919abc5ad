#include "geoscale/geoscale.h"

#include "analysis.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

using namespace geoscale;
using ordered_json = nlohmann::ordered_json;

extern "C" {
struct gs_instance {
  Instance value;
};
struct gs_trace {
  Trace value;
};
}

namespace {

thread_local std::string g_last_error;

gs_status fail(gs_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
gs_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return fail(GS_ERR_PARSE, e.what());
  } catch (const DomainError& e) {
    return fail(GS_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GS_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

gs_status require(bool ok, const char* what) {
  if (ok) return GS_OK;
  return fail(GS_ERR_INVALID_ARGUMENT, std::string(what) + " must not be null");
}

EngineConfig config_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid config JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  EngineConfig cfg;
  std::uint64_t seed = 0;
  std::string policy = "max-ratio";
  for (const auto& [key, value] : j.items()) {
    if (key == "variant") {
      if (!value.is_string()) throw ParseError("config field 'variant' must be a string");
      cfg.variant = parse_variant(value.get<std::string>());
    } else if (key == "policy") {
      if (!value.is_string()) throw ParseError("config field 'policy' must be a string");
      policy = value.get<std::string>();
    } else if (key == "seed") {
      if (!value.is_number_unsigned() && !value.is_number_integer())
        throw ParseError("config field 'seed' must be an integer");
      seed = value.get<std::uint64_t>();
    } else if (key == "mu0") {
      if (!value.is_string()) throw ParseError("config field 'mu0' must be a rational string");
      cfg.mu0 = parse_ratio(value.get<std::string>());
    } else if (key == "alpha") {
      if (!value.is_string()) throw ParseError("config field 'alpha' must be a rational string");
      cfg.alpha = parse_ratio(value.get<std::string>());
    } else if (key == "early_stop") {
      if (!value.is_boolean()) throw ParseError("config field 'early_stop' must be a bool");
      cfg.early_stop = value.get<bool>();
    } else if (key == "certify") {
      if (!value.is_boolean()) throw ParseError("config field 'certify' must be a bool");
      cfg.certify = value.get<bool>();
    } else if (key == "step_limit") {
      if (!value.is_number_integer() || value.get<std::int64_t>() < 1)
        throw ParseError("config field 'step_limit' must be a positive integer");
      cfg.step_limit = value.get<long>();
    } else {
      throw ParseError("unknown config field '" + key + "'");
    }
  }
  cfg.policy = parse_policy(policy, seed);
  return cfg;
}

} // namespace

extern "C" {

const char* gs_version(void) { return "geoscale 0.1.0"; }

const char* gs_status_name(gs_status status) {
  switch (status) {
    case GS_OK: return "ok";
    case GS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GS_ERR_PARSE: return "parse error";
    case GS_ERR_DOMAIN: return "domain error";
    case GS_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* gs_last_error(void) { return g_last_error.c_str(); }

void gs_string_free(char* text) { std::free(text); }

gs_status gs_instance_from_json(const char* text, gs_instance** out) {
  if (gs_status s = require(text, "text"); s != GS_OK) return s;
  if (gs_status s = require(out, "out"); s != GS_OK) return s;
  return guarded([&] {
    *out = new gs_instance{parse_instance(text)};
    return GS_OK;
  });
}

gs_status gs_instance_simplex(int n, const char* objective, const char* alpha,
                              gs_instance** out) {
  if (gs_status s = require(objective, "objective"); s != GS_OK) return s;
  if (gs_status s = require(out, "out"); s != GS_OK) return s;
  return guarded([&]() -> gs_status {
    Polytope p = make_simplex(n);
    std::vector<ExactInt> c;
    std::string kind = objective;
    if (kind == "linear") {
      c = objective_linear(n);
    } else if (kind == "pow2") {
      c = objective_geometric(n, 2);
    } else if (kind == "alpha-pow") {
      if (!alpha)
        return fail(GS_ERR_INVALID_ARGUMENT,
                    "alpha is required for the alpha-pow objective");
      ExactRatio a = parse_ratio(alpha);
      if (a <= 1) throw DomainError("alpha must exceed 1");
      c = objective_geometric(n, ceil_ratio(a));
    } else {
      return fail(GS_ERR_INVALID_ARGUMENT,
                  "unknown objective \"" + kind + "\"");
    }
    *out = new gs_instance{make_instance(std::move(p), std::move(c), 0)};
    return GS_OK;
  });
}

gs_status gs_instance_random(int n, uint64_t m, uint64_t seed, uint32_t cmax,
                             gs_instance** out) {
  if (gs_status s = require(out, "out"); s != GS_OK) return s;
  return guarded([&] {
    *out = new gs_instance{random_instance(n, m, seed, cmax)};
    return GS_OK;
  });
}

gs_status gs_instance_to_json(const gs_instance* instance, char** out_json) {
  if (gs_status s = require(instance, "instance"); s != GS_OK) return s;
  if (gs_status s = require(out_json, "out_json"); s != GS_OK) return s;
  return guarded([&] {
    *out_json = copy_string(write_instance(instance->value));
    return GS_OK;
  });
}

int gs_instance_dimension(const gs_instance* instance) {
  return instance ? instance->value.polytope.n : 0;
}

int64_t gs_instance_vertex_count(const gs_instance* instance) {
  return instance
             ? static_cast<int64_t>(instance->value.polytope.vertices.size())
             : 0;
}

void gs_instance_free(gs_instance* instance) { delete instance; }

gs_status gs_solve(const gs_instance* instance, const char* config_json,
                   gs_trace** out) {
  if (gs_status s = require(instance, "instance"); s != GS_OK) return s;
  if (gs_status s = require(out, "out"); s != GS_OK) return s;
  return guarded([&] {
    EngineConfig cfg =
        config_json ? config_from_json(config_json) : EngineConfig{};
    *out = new gs_trace{run(instance->value, cfg)};
    return GS_OK;
  });
}

gs_status gs_trace_to_json(const gs_trace* trace, char** out_json) {
  if (gs_status s = require(trace, "trace"); s != GS_OK) return s;
  if (gs_status s = require(out_json, "out_json"); s != GS_OK) return s;
  return guarded([&] {
    *out_json = copy_string(trace_to_json(trace->value));
    return GS_OK;
  });
}

gs_status gs_trace_check(const gs_instance* instance, const gs_trace* trace,
                         char** out_json) {
  if (gs_status s = require(instance, "instance"); s != GS_OK) return s;
  if (gs_status s = require(trace, "trace"); s != GS_OK) return s;
  if (gs_status s = require(out_json, "out_json"); s != GS_OK) return s;
  return guarded([&] {
    std::vector<std::string> bad =
        check_invariants(instance->value, trace->value);
    ordered_json arr = ordered_json::array();
    for (const std::string& v : bad) arr.push_back(v);
    *out_json = copy_string(arr.dump());
    return GS_OK;
  });
}

void gs_trace_free(gs_trace* trace) { delete trace; }

gs_status gs_brute_force(const gs_instance* instance, char** out_json) {
  if (gs_status s = require(instance, "instance"); s != GS_OK) return s;
  if (gs_status s = require(out_json, "out_json"); s != GS_OK) return s;
  return guarded([&] {
    Optimum best = brute_force_opt(instance->value);
    ordered_json j;
    j["index"] = best.index;
    j["vertex"] = instance->value.polytope.vertices[best.index].bits;
    j["value"] = best.value.str();
    *out_json = copy_string(j.dump());
    return GS_OK;
  });
}

gs_status gs_omega_report(const char* alpha, char** out_json) {
  if (gs_status s = require(alpha, "alpha"); s != GS_OK) return s;
  if (gs_status s = require(out_json, "out_json"); s != GS_OK) return s;
  return guarded([&] {
    *out_json = copy_string(omega_report_json(omega_report(parse_ratio(alpha))));
    return GS_OK;
  });
}

gs_status gs_omega_bands(const char* definition, const char* alpha_max,
                         char** out_json) {
  if (gs_status s = require(definition, "definition"); s != GS_OK) return s;
  if (gs_status s = require(alpha_max, "alpha_max"); s != GS_OK) return s;
  if (gs_status s = require(out_json, "out_json"); s != GS_OK) return s;
  return guarded([&]() -> gs_status {
    std::string def = definition;
    OmegaDefinition d;
    if (def == "strict")
      d = OmegaDefinition::Strict;
    else if (def == "corrected")
      d = OmegaDefinition::Corrected;
    else
      return fail(GS_ERR_INVALID_ARGUMENT, "unknown definition \"" + def + "\"");
    *out_json =
        copy_string(omega_bands_json(omega_bands(d, parse_ratio(alpha_max))));
    return GS_OK;
  });
}

gs_status gs_predicted_halvings(const char* mu0, const char* alpha, int n,
                                const char* mode, int64_t* out) {
  if (gs_status s = require(mu0, "mu0"); s != GS_OK) return s;
  if (gs_status s = require(alpha, "alpha"); s != GS_OK) return s;
  if (gs_status s = require(mode, "mode"); s != GS_OK) return s;
  if (gs_status s = require(out, "out"); s != GS_OK) return s;
  return guarded([&]() -> gs_status {
    std::string m = mode;
    HaltMode h;
    if (m == "literal")
      h = HaltMode::Literal;
    else if (m == "early-stop")
      h = HaltMode::EarlyStop;
    else
      return fail(GS_ERR_INVALID_ARGUMENT, "unknown mode \"" + m + "\"");
    *out = predicted_halvings(parse_ratio(mu0), parse_ratio(alpha), n, h);
    return GS_OK;
  });
}

gs_status gs_verify_theorem(const char* theorem, int n, const char* alpha,
                            char** out_json) {
  if (gs_status s = require(theorem, "theorem"); s != GS_OK) return s;
  if (gs_status s = require(out_json, "out_json"); s != GS_OK) return s;
  return guarded([&] {
    VerifyOverrides ov;
    if (alpha) ov.alpha = parse_ratio(alpha);
    TheoremReport report = verify_theorem(parse_theorem_id(theorem), n, ov);
    *out_json = copy_string(theorem_report_json(report));
    return GS_OK;
  });
}

gs_status gs_max_jump(int n, const char* alpha, const char* policy,
                      uint64_t seed, int* out) {
  if (gs_status s = require(alpha, "alpha"); s != GS_OK) return s;
  if (gs_status s = require(policy, "policy"); s != GS_OK) return s;
  if (gs_status s = require(out, "out"); s != GS_OK) return s;
  return guarded([&] {
    *out = max_jump_empirical(n, parse_ratio(alpha), parse_policy(policy, seed));
    return GS_OK;
  });
}

gs_status gs_sweep(const char* alphas, const char* ns, const char* policy,
                   uint64_t seed, char** out_json) {
  if (gs_status s = require(alphas, "alphas"); s != GS_OK) return s;
  if (gs_status s = require(ns, "ns"); s != GS_OK) return s;
  if (gs_status s = require(policy, "policy"); s != GS_OK) return s;
  if (gs_status s = require(out_json, "out_json"); s != GS_OK) return s;
  return guarded([&] {
    std::vector<SweepRow> rows = run_sweep(
        parse_alpha_list(alphas), parse_n_list(ns), parse_policy(policy, seed));
    ordered_json arr = ordered_json::array();
    for (const SweepRow& row : rows)
      arr.push_back(ordered_json::parse(sweep_row_json(row)));
    *out_json = copy_string(arr.dump());
    return GS_OK;
  });
}

} // extern "C"
