#pragma once

#include "scaling.hpp"

#include <string>
#include <vector>

namespace geoscale {

/// Window width count at divisor alpha with b = ceil(alpha): the number
/// of integers t >= 1 satisfying the jump inequality. "Strict" counts
///   alpha * b * (1 - b^-t) > t,
/// "corrected" restores the geometric-sum factor:
///   alpha * b * (1 - b^-t) > t * (b - 1).
/// Both agree on alpha in (1, 2]. Evaluated by exact cross-multiplication.
int omega_strict(const ExactRatio& alpha);
int omega_corrected(const ExactRatio& alpha);

struct OmegaReport {
  ExactRatio alpha;
  ExactInt ceiling;
  int omega_strict = 0;
  int omega_corrected = 0;
  std::vector<int> satisfied_t; // t values satisfying the strict form
  std::string note;             // known discrepancies, empty if none
};

OmegaReport omega_report(const ExactRatio& alpha);
std::string omega_report_json(const OmegaReport& report);

enum class OmegaDefinition { Strict, Corrected };

/// Half-open interval (lo, hi] on which the count is constant.
struct OmegaBand {
  ExactRatio lo;
  ExactRatio hi;
  int omega = 0;

  bool operator==(const OmegaBand&) const = default;
};

/// Partition of (1, alpha_max] into maximal constant-count bands with
/// exact rational endpoints (breakpoints or integers).
std::vector<OmegaBand> omega_bands(OmegaDefinition definition,
                                   const ExactRatio& alpha_max);
std::string omega_bands_json(const std::vector<OmegaBand>& bands);
std::string render_bands_text(const std::vector<OmegaBand>& bands);
std::string omega_bands_csv(const std::vector<OmegaBand>& bands);

enum class HaltMode { Literal, EarlyStop };

/// Least k with mu0 * alpha^-k below the halt threshold: strictly below
/// 1/n for Literal, at most 1/2 for EarlyStop. Exact rational iteration.
long predicted_halvings(const ExactRatio& mu0, const ExactRatio& alpha, int n,
                        HaltMode mode);

enum class TheoremId { StepCountMra, StepCountPow2, StepCountAlpha, StepCountFourThirds };

/// Accepts "2.1", "3.1", "4.1", "4.4".
TheoremId parse_theorem_id(const std::string& name);
std::string theorem_label(TheoremId id);

struct TheoremReport {
  std::string label;
  int n = 0;
  EngineVariant variant = EngineVariant::Mra;
  Policy policy;
  ExactRatio alpha;
  ExactRatio mu0;
  long predicted_augment = 0;
  long predicted_halve = 0;
  long observed_augment = 0;
  long observed_halve = 0;
  bool match = false;
  std::string notes;
};

struct VerifyOverrides {
  std::optional<ExactRatio> alpha;
  std::optional<ExactRatio> mu0;
};

/// Runs the named worst-case family at dimension n and compares the
/// closed-form step counts against the engine. n >= 3. The alpha-indexed
/// family requires alpha in (1, 2] (the closed form stops there); larger
/// alpha is refused with a pointer to the sweep + corrected count.
TheoremReport verify_theorem(TheoremId id, int n,
                             const VerifyOverrides& overrides = {});

/// Largest index advance over the in-loop augmenting steps; 0 if none.
/// Meaningful for chain instances whose vertex list is the chain order.
int max_loop_jump(const Trace& trace);

/// Max jump observed on the alpha family instance at dimension n.
int max_jump_empirical(int n, const ExactRatio& alpha, const Policy& policy);

struct SweepRow {
  TheoremReport report; // label "sweep"; prediction via the corrected count
  int max_jump = 0;
  int omega = 0;        // corrected count at this alpha
};

SweepRow sweep_point(int n, const ExactRatio& alpha, const Policy& policy);

/// Cartesian product, computed in parallel, returned sorted by (alpha, n).
std::vector<SweepRow> run_sweep(std::vector<ExactRatio> alphas,
                                std::vector<int> ns, const Policy& policy);

std::string theorem_report_json(const TheoremReport& report);
std::string sweep_row_json(const SweepRow& row);
std::string report_csv_header();
std::string report_csv_row(const TheoremReport& report);
std::string render_reports_text(const std::vector<TheoremReport>& reports);

/// "3..8,12" -> {3,4,5,6,7,8,12}; sorted, deduplicated.
std::vector<int> parse_n_list(const std::string& text);
/// "4/3,3/2" -> rationals; sorted, deduplicated.
std::vector<ExactRatio> parse_alpha_list(const std::string& text);

} // namespace geoscale
