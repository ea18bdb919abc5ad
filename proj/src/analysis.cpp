#include "analysis.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <future>
#include <sstream>

namespace geoscale {

using ordered_json = nlohmann::ordered_json;

namespace {

// Jump inequality at (alpha, t), by exact cross-multiplication of
//   alpha * b * (1 - b^-t) ? t * rhs_factor,   b = ceil(alpha):
//   p * b * (b^t - 1) > t * q * rhs_factor * b^t.
bool jump_holds(const ExactRatio& alpha, const ExactInt& b, const ExactInt& bt,
                unsigned t, bool corrected) {
  ExactInt p = num(alpha), q = den(alpha);
  ExactInt lhs = p * b * (bt - 1);
  ExactInt rhs = ExactInt(t) * q * bt;
  if (corrected) rhs *= b - 1;
  return lhs > rhs;
}

int omega_count(const ExactRatio& alpha, bool corrected,
                std::vector<int>* satisfied) {
  if (alpha <= 1) throw DomainError("alpha must exceed 1");
  ExactInt b = ceil_ratio(alpha);
  // alpha*b*(1-b^-t) < alpha*b, so no t >= alpha*b can satisfy the bound
  ExactInt limit = ceil_ratio(alpha * ExactRatio(b)) + 1;
  int count = 0;
  ExactInt bt = 1;
  for (ExactInt t = 1; t <= limit; ++t) {
    bt *= b;
    if (jump_holds(alpha, b, bt, static_cast<unsigned>(t), corrected)) {
      ++count;
      if (satisfied) satisfied->push_back(static_cast<int>(t));
    }
  }
  return count;
}

} // namespace

int omega_strict(const ExactRatio& alpha) {
  return omega_count(alpha, false, nullptr);
}

int omega_corrected(const ExactRatio& alpha) {
  return omega_count(alpha, true, nullptr);
}

OmegaReport omega_report(const ExactRatio& alpha) {
  OmegaReport r;
  r.alpha = alpha;
  r.ceiling = ceil_ratio(alpha);
  r.omega_corrected = omega_count(alpha, true, nullptr);
  r.omega_strict = omega_count(alpha, false, &r.satisfied_t);
  std::vector<std::string> notes;
  if (alpha > 2 && alpha <= ExactRatio(729, 364))
    notes.push_back("strict count on (2, 729/364] is 5; the value 6 first holds beyond 729/364");
  if (r.omega_strict != r.omega_corrected)
    notes.push_back("definitions diverge above 2: the geometric-sum form gives " +
                    std::to_string(r.omega_corrected));
  for (std::size_t i = 0; i < notes.size(); ++i) {
    if (i) r.note += "; ";
    r.note += notes[i];
  }
  return r;
}

std::string omega_report_json(const OmegaReport& report) {
  ordered_json j;
  j["alpha"] = ratio_str(report.alpha);
  j["ceiling"] = report.ceiling.str();
  j["omega_strict"] = report.omega_strict;
  j["omega_corrected"] = report.omega_corrected;
  j["satisfied_t"] = report.satisfied_t;
  j["note"] = report.note;
  return j.dump();
}

std::vector<OmegaBand> omega_bands(OmegaDefinition definition,
                                   const ExactRatio& alpha_max) {
  if (alpha_max <= 1) throw DomainError("alpha_max must exceed 1");
  bool corrected = definition == OmegaDefinition::Corrected;
  std::vector<OmegaBand> bands;
  for (ExactInt m = 1; ExactRatio(m) < alpha_max; ++m) {
    ExactInt b = m + 1;
    ExactRatio lo(m);
    ExactRatio hi_band = std::min(ExactRatio(b), alpha_max);
    std::vector<ExactRatio> points{lo};
    ExactInt bt = 1; // b^(t-1) below
    for (unsigned t = 1;; ++t) {
      // breakpoint where the t-th inequality turns into equality:
      //   strict    t * b^(t-1) / (b^t - 1)
      //   corrected t * (b-1) * b^(t-1) / (b^t - 1)
      ExactInt numv = ExactInt(t) * bt;
      if (corrected) numv *= b - 1;
      ExactRatio bp(numv, bt * b - 1);
      bt *= b;
      if (bp >= hi_band) break;
      if (bp > lo) points.push_back(bp);
      if (t > 10000) throw DomainError("band enumeration did not terminate");
    }
    points.push_back(hi_band);
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
      int w = omega_count(points[i + 1], corrected, nullptr);
      bands.push_back(OmegaBand{points[i], points[i + 1], w});
    }
  }
  return bands;
}

std::string omega_bands_json(const std::vector<OmegaBand>& bands) {
  ordered_json arr = ordered_json::array();
  for (const OmegaBand& band : bands) {
    ordered_json j;
    j["lo"] = ratio_str(band.lo);
    j["hi"] = ratio_str(band.hi);
    j["omega"] = band.omega;
    arr.push_back(std::move(j));
  }
  return arr.dump();
}

std::string omega_bands_csv(const std::vector<OmegaBand>& bands) {
  std::string out = "lo,hi,omega\n";
  for (const OmegaBand& band : bands)
    out += ratio_str(band.lo) + "," + ratio_str(band.hi) + "," +
           std::to_string(band.omega) + "\n";
  return out;
}

std::string render_bands_text(const std::vector<OmegaBand>& bands) {
  std::string out;
  for (const OmegaBand& band : bands)
    out += "(" + ratio_str(band.lo) + ", " + ratio_str(band.hi) +
           "]  omega=" + std::to_string(band.omega) + "\n";
  return out;
}

long predicted_halvings(const ExactRatio& mu0, const ExactRatio& alpha, int n,
                        HaltMode mode) {
  if (mu0 <= 0) throw DomainError("mu0 must be positive");
  if (alpha <= 1) throw DomainError("alpha must exceed 1");
  if (n < 1) throw DomainError("dimension must be at least 1");
  ExactRatio mu = mu0;
  long k = 0;
  if (mode == HaltMode::Literal) {
    ExactRatio threshold(1, n);
    while (mu >= threshold) {
      mu /= alpha;
      ++k;
    }
  } else {
    ExactRatio half(1, 2);
    while (mu > half) {
      mu /= alpha;
      ++k;
    }
  }
  return k;
}

TheoremId parse_theorem_id(const std::string& name) {
  if (name == "2.1") return TheoremId::StepCountMra;
  if (name == "3.1") return TheoremId::StepCountPow2;
  if (name == "4.1") return TheoremId::StepCountAlpha;
  if (name == "4.4") return TheoremId::StepCountFourThirds;
  throw ParseError("unknown check \"" + name + "\" (expected 2.1, 3.1, 4.1 or 4.4)");
}

std::string theorem_label(TheoremId id) {
  switch (id) {
    case TheoremId::StepCountMra: return "2.1";
    case TheoremId::StepCountPow2: return "3.1";
    case TheoremId::StepCountAlpha: return "4.1";
    case TheoremId::StepCountFourThirds: return "4.4";
  }
  throw DomainError("bad check id");
}

int max_loop_jump(const Trace& trace) {
  int best = 0;
  for (std::size_t i = 0; i < trace.loop_steps; ++i) {
    const Step& s = trace.steps[i];
    if (s.kind != StepKind::Augment) continue;
    int jump = static_cast<int>(s.iterate_after) - static_cast<int>(s.iterate_before);
    if (jump > best) best = jump;
  }
  return best;
}

namespace {

long ceil_div(long a, long b) { return (a + b - 1) / b; }

TheoremReport report_from_trace(std::string label, int n, const EngineConfig& cfg,
                                const Trace& trace, long predicted_augment,
                                long predicted_halve, std::string notes) {
  TheoremReport r;
  r.label = std::move(label);
  r.n = n;
  r.variant = cfg.variant;
  r.policy = cfg.policy;
  r.alpha = trace.alpha;
  r.mu0 = trace.mu0;
  r.predicted_augment = predicted_augment;
  r.predicted_halve = predicted_halve;
  r.observed_augment = trace.summary.augment_count;
  r.observed_halve = trace.summary.halve_count;
  r.match = r.predicted_augment == r.observed_augment &&
            r.predicted_halve == r.observed_halve;
  r.notes = std::move(notes);
  return r;
}

/// Family instance for the alpha-indexed runs: base-b power objective on
/// the chain, started at the origin, divisor alpha, scale alpha * b^n.
struct AlphaFamily {
  Instance instance;
  EngineConfig config;
};

AlphaFamily alpha_family(int n, const ExactRatio& alpha, const Policy& policy,
                         const std::optional<ExactRatio>& mu0_override) {
  if (alpha <= 1) throw DomainError("alpha must exceed 1");
  ExactInt b = ceil_ratio(alpha);
  Instance inst = make_instance(make_simplex(n), objective_geometric(n, b), 0);
  EngineConfig cfg;
  cfg.variant = EngineVariant::Feasibility;
  cfg.policy = policy;
  cfg.alpha = alpha;
  cfg.mu0 = mu0_override ? *mu0_override : alpha * ExactRatio(pow_int(b, n));
  return AlphaFamily{std::move(inst), std::move(cfg)};
}

} // namespace

TheoremReport verify_theorem(TheoremId id, int n,
                             const VerifyOverrides& overrides) {
  if (n < 3) throw DomainError("n must be at least 3");

  switch (id) {
    case TheoremId::StepCountMra: {
      Instance inst = make_instance(make_simplex(n), objective_linear(n), 0);
      EngineConfig cfg;
      cfg.variant = EngineVariant::Mra;
      if (overrides.mu0) cfg.mu0 = overrides.mu0;
      Trace trace = run(inst, cfg);
      long ph = predicted_halvings(trace.mu0, trace.alpha, n, HaltMode::Literal);
      std::string notes;
      if (max_loop_jump(trace) > 1) notes = "non-unit jump observed";
      return report_from_trace(theorem_label(id), n, cfg, trace, n, ph,
                               std::move(notes));
    }
    case TheoremId::StepCountPow2: {
      Instance inst =
          make_instance(make_simplex(n), objective_geometric(n, 2), 0);
      EngineConfig cfg;
      cfg.variant = EngineVariant::Feasibility;
      cfg.policy = Policy{PolicyKind::MaxGain, 0};
      cfg.mu0 = overrides.mu0 ? *overrides.mu0
                              : ExactRatio(pow_int(2, static_cast<unsigned>(n) + 1));
      Trace trace = run(inst, cfg);
      long ph = predicted_halvings(trace.mu0, trace.alpha, n, HaltMode::Literal);
      std::string notes = "max_jump=" + std::to_string(max_loop_jump(trace));
      return report_from_trace(theorem_label(id), n, cfg, trace, ceil_div(n, 3),
                               ph, std::move(notes));
    }
    case TheoremId::StepCountAlpha:
    case TheoremId::StepCountFourThirds: {
      ExactRatio alpha;
      if (id == TheoremId::StepCountFourThirds) {
        alpha = ExactRatio(4, 3);
        if (overrides.alpha && *overrides.alpha != alpha)
          throw DomainError("this check fixes alpha = 4/3");
      } else {
        if (!overrides.alpha) throw DomainError("alpha is required for check 4.1");
        alpha = *overrides.alpha;
      }
      if (alpha <= 1) throw DomainError("alpha must exceed 1");
      if (alpha > 2)
        throw DomainError(
            "the closed-form count covers alpha in (1, 2] only; "
            "use sweep with the corrected window count for larger alpha");
      AlphaFamily fam = alpha_family(n, alpha, Policy{PolicyKind::MaxGain, 0},
                                     overrides.mu0);
      Trace trace = run(fam.instance, fam.config);
      int w = omega_strict(alpha);
      long ph = predicted_halvings(trace.mu0, alpha, n, HaltMode::Literal);
      std::string notes = "omega=" + std::to_string(w) +
                          " max_jump=" + std::to_string(max_loop_jump(trace));
      return report_from_trace(theorem_label(id), n, fam.config, trace,
                               ceil_div(n, w), ph, std::move(notes));
    }
  }
  throw DomainError("bad check id");
}

int max_jump_empirical(int n, const ExactRatio& alpha, const Policy& policy) {
  if (n < 1) throw DomainError("dimension must be at least 1");
  AlphaFamily fam = alpha_family(n, alpha, policy, std::nullopt);
  return max_loop_jump(run(fam.instance, fam.config));
}

SweepRow sweep_point(int n, const ExactRatio& alpha, const Policy& policy) {
  if (n < 1) throw DomainError("dimension must be at least 1");
  AlphaFamily fam = alpha_family(n, alpha, policy, std::nullopt);
  Trace trace = run(fam.instance, fam.config);
  int w = omega_corrected(alpha);
  long ph = predicted_halvings(trace.mu0, alpha, n, HaltMode::Literal);
  SweepRow row;
  row.report = report_from_trace("sweep", n, fam.config, trace, ceil_div(n, w),
                                 ph, "");
  row.max_jump = max_loop_jump(trace);
  row.omega = w;
  return row;
}

std::vector<SweepRow> run_sweep(std::vector<ExactRatio> alphas,
                                std::vector<int> ns, const Policy& policy) {
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  std::vector<std::future<SweepRow>> jobs;
  for (const ExactRatio& a : alphas)
    for (int n : ns)
      jobs.push_back(std::async(std::launch::async, [n, a, &policy] {
        return sweep_point(n, a, policy);
      }));
  std::vector<SweepRow> rows;
  rows.reserve(jobs.size());
  for (auto& job : jobs) rows.push_back(job.get());
  return rows;
}

namespace {

std::string policy_cell(const TheoremReport& report) {
  return report.variant == EngineVariant::Mra ? "mra"
                                              : policy_name(report.policy);
}

} // namespace

std::string theorem_report_json(const TheoremReport& report) {
  ordered_json j;
  j["theorem"] = report.label;
  j["n"] = report.n;
  j["variant"] = variant_name(report.variant);
  j["policy"] = policy_cell(report);
  j["alpha"] = ratio_str(report.alpha);
  j["mu0"] = ratio_str(report.mu0);
  ordered_json pred;
  pred["augment"] = report.predicted_augment;
  pred["halve"] = report.predicted_halve;
  j["predicted"] = std::move(pred);
  ordered_json obs;
  obs["augment"] = report.observed_augment;
  obs["halve"] = report.observed_halve;
  j["observed"] = std::move(obs);
  j["match"] = report.match;
  j["notes"] = report.notes;
  return j.dump();
}

std::string sweep_row_json(const SweepRow& row) {
  ordered_json j = ordered_json::parse(theorem_report_json(row.report));
  j["max_jump"] = row.max_jump;
  j["omega_corrected"] = row.omega;
  return j.dump();
}

std::string report_csv_header() {
  return "theorem,n,alpha,policy,mu0,predicted_augment,observed_augment,"
         "predicted_halve,observed_halve,match";
}

std::string report_csv_row(const TheoremReport& report) {
  std::ostringstream out;
  out << report.label << ',' << report.n << ',' << ratio_str(report.alpha)
      << ',' << policy_cell(report) << ',' << ratio_str(report.mu0) << ','
      << report.predicted_augment << ',' << report.observed_augment << ','
      << report.predicted_halve << ',' << report.observed_halve << ','
      << (report.match ? "true" : "false");
  return out.str();
}

std::string render_reports_text(const std::vector<TheoremReport>& reports) {
  std::vector<std::array<std::string, 10>> rows;
  rows.push_back({"theorem", "n", "alpha", "policy", "mu0", "pred_aug",
                  "obs_aug", "pred_halve", "obs_halve", "match"});
  for (const TheoremReport& r : reports)
    rows.push_back({r.label, std::to_string(r.n), ratio_str(r.alpha),
                    policy_cell(r), ratio_str(r.mu0),
                    std::to_string(r.predicted_augment),
                    std::to_string(r.observed_augment),
                    std::to_string(r.predicted_halve),
                    std::to_string(r.observed_halve),
                    r.match ? "yes" : "NO"});
  std::array<std::size_t, 10> width{};
  for (const auto& row : rows)
    for (std::size_t k = 0; k < row.size(); ++k)
      width[k] = std::max(width[k], row[k].size());
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      out += rows[i][k];
      if (k + 1 < rows[i].size())
        out += std::string(width[k] - rows[i][k].size() + 2, ' ');
    }
    out += '\n';
    if (i == 0) continue;
    const TheoremReport& r = reports[i - 1];
    if (!r.notes.empty()) out += "  " + r.notes + "\n";
  }
  return out;
}

namespace {

int parse_small_int(const std::string& item) {
  ExactInt v = parse_int(item);
  if (v < 0 || v > 1000000)
    throw ParseError("dimension out of range: \"" + item + "\"");
  return static_cast<int>(v);
}

// Keeps empty segments, so "4/3," surfaces as a parse error downstream.
std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (true) {
    std::size_t comma = text.find(',', begin);
    parts.push_back(text.substr(begin, comma - begin));
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return parts;
}

} // namespace

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& item : split_commas(text)) {
    std::size_t dots = item.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(parse_small_int(item));
      } else {
        int lo = parse_small_int(item.substr(0, dots));
        int hi = parse_small_int(item.substr(dots + 2));
        if (lo > hi) throw ParseError("empty range");
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const std::runtime_error&) {
      throw ParseError("bad dimension list entry \"" + item + "\"");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ExactRatio> parse_alpha_list(const std::string& text) {
  std::vector<ExactRatio> out;
  for (const std::string& item : split_commas(text))
    out.push_back(parse_ratio(item));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace geoscale
