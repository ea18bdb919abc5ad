#pragma once

#include "oracles.hpp"

#include <optional>
#include <string>
#include <vector>

namespace geoscale {

enum class EngineVariant { Mra, Feasibility };

enum class StepKind { Augment, Halve };

struct EngineConfig {
  EngineVariant variant = EngineVariant::Mra;
  Policy policy;                      // feasibility variant only
  std::optional<ExactRatio> mu0;      // default: smallest 2-power > |c|_inf
  ExactRatio alpha = ExactRatio(2);   // scale divisor, > 1
  bool early_stop = false;
  bool certify = true;
  std::optional<long> step_limit;     // default: see default_step_limit
};

struct Step {
  std::size_t index = 0;
  StepKind kind = StepKind::Halve;
  ExactRatio mu_before;
  ExactRatio mu_after;
  std::size_t iterate_before = 0;
  std::size_t iterate_after = 0;
  ExactInt objective_after;
  std::optional<ExactRatio> chosen_ratio; // augmenting steps only
};

/// Maximal run of steps of one kind.
struct Phase {
  StepKind kind = StepKind::Halve;
  std::size_t first = 0;
  std::size_t last = 0;

  bool operator==(const Phase&) const = default;
};

struct Summary {
  long augment_count = 0;         // augmenting steps inside the main loop
  long halve_count = 0;
  long certify_augment_count = 0; // augmenting steps after the loop exits
  long total = 0;
  std::size_t final_vertex = 0;
  ExactInt final_value;
  bool certified = false;
  bool aborted = false;
};

struct Trace {
  // resolved configuration echo
  EngineVariant variant = EngineVariant::Mra;
  Policy policy;
  ExactRatio mu0;
  ExactRatio alpha;
  bool early_stop = false;
  bool certify = false;
  long step_limit = 0;
  int n = 0;
  std::size_t vertex_count = 0;
  std::size_t start = 0;
  ExactInt start_value;

  std::vector<Step> steps;
  std::size_t loop_steps = 0; // steps[loop_steps..] happened after the loop
  std::vector<Phase> phases;
  Summary summary;
};

/// Smallest power of two strictly greater than |c|_inf.
ExactRatio default_mu0(const Instance& instance);

/// 10 * (n + 2) * (bits(ceil(mu0 * n)) + 2): generous versus the known
/// worst cases, small enough to stop runaway configurations.
long default_step_limit(int n, const ExactRatio& mu0);

/// Runs geometric scaling until mu < 1/n, then certifies if configured.
/// Stops early (with certificate) when early_stop is set and mu <= 1/2.
/// Aborts with summary.aborted once step_limit steps are recorded.
Trace run(const Instance& instance, const EngineConfig& config);

/// Recomputes the summary from the recorded steps.
Summary summarize(const Trace& trace);

/// Returns human-readable violations; empty means the trace is coherent
/// with the instance. Rejects traces for a different instance shape.
std::vector<std::string> check_invariants(const Instance& instance,
                                          const Trace& trace);

/// Stable JSON rendering (fixed field order, exact rationals as "p/q").
std::string trace_to_json(const Trace& trace);

std::string variant_name(EngineVariant variant);
EngineVariant parse_variant(const std::string& name);

} // namespace geoscale
