#include "scaling.hpp"

#include <json.hpp>

namespace geoscale {

using ordered_json = nlohmann::ordered_json;

std::string variant_name(EngineVariant variant) {
  return variant == EngineVariant::Mra ? "mra" : "feasibility";
}

EngineVariant parse_variant(const std::string& name) {
  if (name == "mra") return EngineVariant::Mra;
  if (name == "feasibility") return EngineVariant::Feasibility;
  throw ParseError("unknown variant \"" + name + "\"");
}

ExactRatio default_mu0(const Instance& instance) {
  ExactInt cmax = inf_norm(instance.objective);
  ExactInt p = 1;
  while (p <= cmax) p <<= 1;
  return ExactRatio(p);
}

long default_step_limit(int n, const ExactRatio& mu0) {
  ExactInt scaled = ceil_ratio(mu0 * n);
  long bits = static_cast<long>(bit_length(scaled));
  return 10L * (n + 2) * (bits + 2);
}

namespace {

std::vector<Phase> build_phases(const std::vector<Step>& steps) {
  std::vector<Phase> phases;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (phases.empty() || phases.back().kind != steps[i].kind)
      phases.push_back(Phase{steps[i].kind, i, i});
    else
      phases.back().last = i;
  }
  return phases;
}

} // namespace

Trace run(const Instance& instance, const EngineConfig& config) {
  const auto& verts = instance.polytope.vertices;
  int n = instance.polytope.n;

  if (config.alpha <= 1) throw DomainError("alpha must exceed 1");
  ExactRatio mu0 = config.mu0 ? *config.mu0 : default_mu0(instance);
  if (mu0 <= ExactRatio(inf_norm(instance.objective)))
    throw DomainError("mu0 must exceed |c|_inf = " +
                      inf_norm(instance.objective).str());
  long step_limit =
      config.step_limit ? *config.step_limit : default_step_limit(n, mu0);
  if (step_limit < 1) throw DomainError("step limit must be at least 1");

  Trace trace;
  trace.variant = config.variant;
  trace.policy = config.policy;
  trace.mu0 = mu0;
  trace.alpha = config.alpha;
  trace.early_stop = config.early_stop;
  trace.certify = config.certify;
  trace.step_limit = step_limit;
  trace.n = n;
  trace.vertex_count = verts.size();
  trace.start = instance.start;
  trace.start_value = dot(instance.objective, verts[instance.start]);

  ExactRatio mu = mu0;
  std::size_t cur = instance.start;
  const ExactRatio threshold(1, n);
  const ExactRatio half(1, 2);
  bool certified = false;
  bool aborted = false;

  auto record = [&](StepKind kind, const ExactRatio& mu_before,
                    const ExactRatio& mu_after, std::size_t before,
                    std::size_t after, std::optional<ExactRatio> chosen) {
    Step s;
    s.index = trace.steps.size();
    s.kind = kind;
    s.mu_before = mu_before;
    s.mu_after = mu_after;
    s.iterate_before = before;
    s.iterate_after = after;
    s.objective_after = dot(instance.objective, verts[after]);
    s.chosen_ratio = std::move(chosen);
    trace.steps.push_back(std::move(s));
  };

  for (;;) {
    if (static_cast<long>(trace.steps.size()) >= step_limit) {
      aborted = true;
      break;
    }

    std::optional<std::size_t> target;
    std::optional<ExactRatio> target_ratio;
    if (config.variant == EngineVariant::Mra) {
      OracleAnswer ans = mra_argmax(instance, cur);
      if (ans.index && *ans.ratio >= mu) {
        target = ans.index;
        target_ratio = ans.ratio;
      }
    } else {
      OracleAnswer ans = select(config.policy, instance, cur, mu);
      if (ans.index) {
        target = ans.index;
        target_ratio = ans.ratio;
      }
    }

    if (target) {
      record(StepKind::Augment, mu, mu, cur, *target, target_ratio);
      cur = *target;
    } else if (config.early_stop && mu <= half) {
      OracleAnswer imp = improve_any(instance, cur);
      if (!imp.index) {
        certified = true;
        break;
      }
      record(StepKind::Augment, mu, mu, cur, *imp.index, imp.ratio);
      cur = *imp.index;
    } else {
      ExactRatio mu_next = mu / config.alpha;
      record(StepKind::Halve, mu, mu_next, cur, cur, std::nullopt);
      mu = mu_next;
    }

    if (mu < threshold) break;
  }

  trace.loop_steps = trace.steps.size();

  if (config.certify && !certified && !aborted) {
    for (;;) {
      OracleAnswer imp = improve_any(instance, cur);
      if (!imp.index) break;
      record(StepKind::Augment, mu, mu, cur, *imp.index, imp.ratio);
      cur = *imp.index;
    }
    certified = true;
  }

  trace.phases = build_phases(trace.steps);
  trace.summary = summarize(trace);
  trace.summary.certified = certified;
  trace.summary.aborted = aborted;
  return trace;
}

Summary summarize(const Trace& trace) {
  Summary s;
  s.certified = trace.summary.certified;
  s.aborted = trace.summary.aborted;
  s.total = static_cast<long>(trace.steps.size());
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    if (trace.steps[i].kind == StepKind::Halve)
      ++s.halve_count;
    else if (i < trace.loop_steps)
      ++s.augment_count;
    else
      ++s.certify_augment_count;
  }
  if (trace.steps.empty()) {
    s.final_vertex = trace.start;
    s.final_value = trace.start_value;
  } else {
    s.final_vertex = trace.steps.back().iterate_after;
    s.final_value = trace.steps.back().objective_after;
  }
  return s;
}

std::vector<std::string> check_invariants(const Instance& instance,
                                          const Trace& trace) {
  const auto& verts = instance.polytope.vertices;
  if (trace.n != instance.polytope.n ||
      trace.vertex_count != verts.size() ||
      trace.start >= verts.size())
    throw DomainError("trace does not belong to this instance");

  std::vector<std::string> bad;
  auto flag = [&](std::size_t i, const std::string& what) {
    bad.push_back("step " + std::to_string(i) + ": " + what);
  };

  ExactRatio mu = trace.mu0;
  std::size_t cur = trace.start;
  ExactInt value = dot(instance.objective, verts[trace.start]);
  if (trace.start_value != value)
    bad.push_back("recorded start value " + trace.start_value.str() +
                  " differs from c.x_start = " + value.str());
  Optimum opt = brute_force_opt(instance);

  if (trace.loop_steps > trace.steps.size())
    bad.push_back("loop step count exceeds total steps");

  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const Step& s = trace.steps[i];
    if (s.index != i) flag(i, "index out of sequence");
    if (s.iterate_before >= verts.size() || s.iterate_after >= verts.size()) {
      flag(i, "vertex index out of range");
      continue;
    }
    if (s.iterate_before != cur) flag(i, "iterate chain broken");
    if (s.mu_before != mu)
      flag(i, "mu chain broken: recorded " + ratio_str(s.mu_before) +
                  ", expected " + ratio_str(mu));
    if (s.objective_after != dot(instance.objective, verts[s.iterate_after]))
      flag(i, "recorded objective differs from c.x");

    if (s.kind == StepKind::Halve) {
      if (s.iterate_after != s.iterate_before) flag(i, "halving moved the iterate");
      if (s.mu_after * trace.alpha != s.mu_before)
        flag(i, "halving did not divide mu by alpha");
      if (s.chosen_ratio) flag(i, "halving carries a ratio");
      ExactRatio gap(opt.value - value);
      if (gap > s.mu_before * instance.polytope.n)
        flag(i, "halving while optimality gap " + ratio_str(gap) +
                    " exceeds mu*n = " + ratio_str(s.mu_before * instance.polytope.n));
    } else {
      if (s.mu_after != s.mu_before) flag(i, "augmenting changed mu");
      if (s.iterate_after == s.iterate_before) {
        flag(i, "augmenting kept the iterate");
      } else {
        if (s.objective_after <= value)
          flag(i, "augmenting did not increase the objective");
        if (!s.chosen_ratio)
          flag(i, "augmenting lacks a ratio");
        else if (*s.chosen_ratio !=
                 ratio(instance.objective, verts[s.iterate_before],
                       verts[s.iterate_after]))
          flag(i, "recorded ratio differs from c.(y-x)/|y-x|_1");
      }
    }

    mu = s.mu_after;
    cur = s.iterate_after;
    value = s.objective_after;
  }

  Summary expect = summarize(trace);
  const Summary& got = trace.summary;
  if (got.augment_count != expect.augment_count ||
      got.halve_count != expect.halve_count ||
      got.certify_augment_count != expect.certify_augment_count ||
      got.total != expect.total)
    bad.push_back("summary counts disagree with the recorded steps");
  if (got.final_vertex != expect.final_vertex ||
      got.final_value != expect.final_value)
    bad.push_back("summary final state disagrees with the recorded steps");

  long augments = got.augment_count + got.certify_augment_count;
  if (augments > static_cast<long>(verts.size()) - 1)
    bad.push_back("more augmenting steps than |v(P)| - 1");

  if (trace.phases != build_phases(trace.steps))
    bad.push_back("phases are not the maximal same-kind runs");

  if (got.certified && !got.aborted && got.final_value != opt.value)
    bad.push_back("certified run ended at value " + got.final_value.str() +
                  ", optimum is " + opt.value.str());

  return bad;
}

std::string trace_to_json(const Trace& trace) {
  ordered_json j;
  ordered_json cfg;
  cfg["variant"] = variant_name(trace.variant);
  if (trace.variant == EngineVariant::Feasibility) {
    cfg["policy"] = policy_name(trace.policy);
    if (trace.policy.kind == PolicyKind::Random)
      cfg["seed"] = trace.policy.seed;
  }
  cfg["mu0"] = ratio_str(trace.mu0);
  cfg["alpha"] = ratio_str(trace.alpha);
  cfg["early_stop"] = trace.early_stop;
  cfg["certify"] = trace.certify;
  cfg["step_limit"] = trace.step_limit;
  cfg["n"] = trace.n;
  cfg["vertices"] = trace.vertex_count;
  cfg["start"] = trace.start;
  j["config"] = std::move(cfg);

  ordered_json steps = ordered_json::array();
  for (const Step& s : trace.steps) {
    ordered_json e;
    e["i"] = s.index;
    e["kind"] = s.kind == StepKind::Augment ? "A" : "H";
    e["mu"] = ratio_str(s.mu_before);
    e["mu_after"] = ratio_str(s.mu_after);
    e["x"] = s.iterate_after;
    e["obj"] = s.objective_after.str();
    steps.push_back(std::move(e));
  }
  j["steps"] = std::move(steps);

  ordered_json phases = ordered_json::array();
  for (const Phase& p : trace.phases) {
    ordered_json e;
    e["kind"] = p.kind == StepKind::Augment ? "A" : "H";
    e["first"] = p.first;
    e["last"] = p.last;
    phases.push_back(std::move(e));
  }
  j["phases"] = std::move(phases);

  ordered_json sum;
  sum["augment_count"] = trace.summary.augment_count;
  sum["halve_count"] = trace.summary.halve_count;
  sum["certify_augment_count"] = trace.summary.certify_augment_count;
  sum["total"] = trace.summary.total;
  sum["final_vertex"] = trace.summary.final_vertex;
  sum["final_value"] = trace.summary.final_value.str();
  sum["certified"] = trace.summary.certified;
  sum["aborted"] = trace.summary.aborted;
  j["summary"] = std::move(sum);

  return j.dump();
}

} // namespace geoscale
