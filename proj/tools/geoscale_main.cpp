#include <geoscale/geoscale.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using ordered_json = nlohmann::ordered_json;

namespace {

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { gs_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

struct OwnedInstance {
  gs_instance* ptr = nullptr;
  ~OwnedInstance() { gs_instance_free(ptr); }
};

struct OwnedTrace {
  gs_trace* ptr = nullptr;
  ~OwnedTrace() { gs_trace_free(ptr); }
};

int lib_error() {
  std::cerr << "error: " << gs_last_error() << "\n";
  return 1;
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open \"" << out_path << "\" for writing\n";
    return 1;
  }
  out << text;
  return 0;
}

// "3..8,12" -> {3,...,8,12}
bool parse_dims(const std::string& text, std::vector<int>& out) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t dots = item.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoi(item));
      } else {
        int lo = std::stoi(item.substr(0, dots));
        int hi = std::stoi(item.substr(dots + 2));
        if (lo > hi) return false;
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const std::exception&) {
      return false;
    }
  }
  return !out.empty();
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size());
    for (std::size_t k = 0; k < row.size(); ++k)
      width[k] = std::max(width[k], row[k].size());
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      out += row[k];
      if (k + 1 < row.size()) out += std::string(width[k] - row[k].size() + 2, ' ');
    }
    out += '\n';
  }
  return out;
}

std::string report_csv_line(const ordered_json& r) {
  std::ostringstream out;
  out << r["theorem"].get<std::string>() << ',' << r["n"].get<long>() << ','
      << r["alpha"].get<std::string>() << ',' << r["policy"].get<std::string>()
      << ',' << r["mu0"].get<std::string>() << ','
      << r["predicted"]["augment"].get<long>() << ','
      << r["observed"]["augment"].get<long>() << ','
      << r["predicted"]["halve"].get<long>() << ','
      << r["observed"]["halve"].get<long>() << ','
      << (r["match"].get<bool>() ? "true" : "false");
  return out.str();
}

const char* kCsvHeader =
    "theorem,n,alpha,policy,mu0,predicted_augment,observed_augment,"
    "predicted_halve,observed_halve,match";

std::vector<std::string> report_text_cells(const ordered_json& r) {
  return {r["theorem"].get<std::string>(),
          std::to_string(r["n"].get<long>()),
          r["alpha"].get<std::string>(),
          r["policy"].get<std::string>(),
          r["mu0"].get<std::string>(),
          std::to_string(r["predicted"]["augment"].get<long>()),
          std::to_string(r["observed"]["augment"].get<long>()),
          std::to_string(r["predicted"]["halve"].get<long>()),
          std::to_string(r["observed"]["halve"].get<long>()),
          r["match"].get<bool>() ? "yes" : "NO"};
}

int cmd_solve(const std::string& instance_path, int simplex_n,
              const std::string& objective, const std::string& variant,
              const std::string& policy, std::uint64_t seed,
              const std::string& mu0, const std::string& alpha, bool early_stop,
              bool certify, std::int64_t step_limit, const std::string& out_path) {
  OwnedInstance instance;
  if (simplex_n > 0) {
    if (gs_instance_simplex(simplex_n, objective.c_str(), alpha.c_str(),
                            &instance.ptr) != GS_OK)
      return lib_error();
  } else {
    std::ifstream in(instance_path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read \"" << instance_path << "\"\n";
      return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (gs_instance_from_json(text.c_str(), &instance.ptr) != GS_OK)
      return lib_error();
  }

  ordered_json cfg;
  cfg["variant"] = variant;
  if (variant == "feasibility") {
    cfg["policy"] = policy;
    if (policy == "random") cfg["seed"] = seed;
  }
  if (!mu0.empty()) cfg["mu0"] = mu0;
  cfg["alpha"] = alpha;
  cfg["early_stop"] = early_stop;
  cfg["certify"] = certify;
  if (step_limit > 0) cfg["step_limit"] = step_limit;

  OwnedTrace trace;
  if (gs_solve(instance.ptr, cfg.dump().c_str(), &trace.ptr) != GS_OK)
    return lib_error();

  OwnedString violations;
  if (gs_trace_check(instance.ptr, trace.ptr, &violations.ptr) != GS_OK)
    return lib_error();
  ordered_json bad = ordered_json::parse(violations.str());
  if (!bad.empty()) {
    std::cerr << "error: trace failed self-audit:\n";
    for (const auto& v : bad) std::cerr << "  " << v.get<std::string>() << "\n";
    return 1;
  }

  OwnedString json;
  if (gs_trace_to_json(trace.ptr, &json.ptr) != GS_OK) return lib_error();
  return emit(json.str() + "\n", out_path);
}

int cmd_verify(const std::string& theorem, const std::string& dims,
               const std::string& alpha, const std::string& format,
               const std::string& out_path) {
  std::vector<int> ns;
  if (!parse_dims(dims, ns)) {
    std::cerr << "error: bad dimension list \"" << dims << "\"\n";
    return 1;
  }
  std::vector<ordered_json> reports;
  for (int n : ns) {
    OwnedString json;
    if (gs_verify_theorem(theorem.c_str(), n,
                          alpha.empty() ? nullptr : alpha.c_str(),
                          &json.ptr) != GS_OK)
      return lib_error();
    reports.push_back(ordered_json::parse(json.str()));
  }

  std::string text;
  if (format == "csv") {
    text = std::string(kCsvHeader) + "\n";
    for (const auto& r : reports) text += report_csv_line(r) + "\n";
  } else if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(r);
    text = arr.dump() + "\n";
  } else {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"theorem", "n", "alpha", "policy", "mu0", "pred_aug",
                    "obs_aug", "pred_halve", "obs_halve", "match"});
    for (const auto& r : reports) rows.push_back(report_text_cells(r));
    text = render_table(rows);
    for (const auto& r : reports) {
      std::string notes = r["notes"].get<std::string>();
      if (!notes.empty())
        text += "note (n=" + std::to_string(r["n"].get<long>()) + "): " + notes + "\n";
    }
  }
  return emit(text, out_path);
}

int cmd_omega(const std::string& alpha, bool bands, const std::string& alpha_max,
              const std::string& definition, const std::string& format,
              const std::string& out_path) {
  if (bands) {
    OwnedString json;
    if (gs_omega_bands(definition.c_str(), alpha_max.c_str(), &json.ptr) != GS_OK)
      return lib_error();
    if (format == "json") return emit(json.str() + "\n", out_path);
    ordered_json arr = ordered_json::parse(json.str());
    std::string text;
    if (format == "csv") {
      text = "lo,hi,omega\n";
      for (const auto& b : arr)
        text += b["lo"].get<std::string>() + "," + b["hi"].get<std::string>() +
                "," + std::to_string(b["omega"].get<int>()) + "\n";
    } else {
      for (const auto& b : arr)
        text += "(" + b["lo"].get<std::string>() + ", " +
                b["hi"].get<std::string>() +
                "]  omega=" + std::to_string(b["omega"].get<int>()) + "\n";
    }
    return emit(text, out_path);
  }

  OwnedString json;
  if (gs_omega_report(alpha.c_str(), &json.ptr) != GS_OK) return lib_error();
  if (format == "json") return emit(json.str() + "\n", out_path);
  ordered_json r = ordered_json::parse(json.str());
  std::string text = "omega_strict=" +
                     std::to_string(r["omega_strict"].get<int>()) +
                     " omega_corrected=" +
                     std::to_string(r["omega_corrected"].get<int>()) + "\n";
  std::string note = r["note"].get<std::string>();
  if (!note.empty()) text += "note: " + note + "\n";
  return emit(text, out_path);
}

int cmd_sweep(const std::string& alphas, const std::string& dims,
              const std::string& policy, std::uint64_t seed,
              const std::string& format, const std::string& out_path) {
  OwnedString json;
  if (gs_sweep(alphas.c_str(), dims.c_str(), policy.c_str(), seed, &json.ptr) !=
      GS_OK)
    return lib_error();
  if (format == "json") return emit(json.str() + "\n", out_path);
  ordered_json arr = ordered_json::parse(json.str());

  std::string text;
  if (policy == "random") text += "# seed=" + std::to_string(seed) + "\n";
  if (format == "csv") {
    text += std::string(kCsvHeader) + "\n";
    for (const auto& r : arr) text += report_csv_line(r) + "\n";
  } else {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"theorem", "n", "alpha", "policy", "mu0", "pred_aug",
                    "obs_aug", "pred_halve", "obs_halve", "match", "max_jump",
                    "omega"});
    for (const auto& r : arr) {
      std::vector<std::string> cells = report_text_cells(r);
      cells.push_back(std::to_string(r["max_jump"].get<int>()));
      cells.push_back(std::to_string(r["omega_corrected"].get<int>()));
      rows.push_back(std::move(cells));
    }
    text += render_table(rows);
  }
  return emit(text, out_path);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact geometric scaling over explicit 0/1 polytopes"};
  app.set_version_flag("--version", std::string(gs_version()));
  app.require_subcommand(1);

  std::string instance_path, objective = "linear", variant = "mra";
  std::string policy = "max-ratio", mu0, alpha = "2", out_path;
  int simplex_n = 0;
  std::uint64_t seed = 0;
  bool early_stop = false, certify = true;
  std::int64_t step_limit = 0;

  CLI::App* solve = app.add_subcommand(
      "solve", "run the scaling engine and print the full trace as JSON");
  CLI::Option* opt_instance =
      solve->add_option("instance,--instance", instance_path,
                        "instance JSON file");
  CLI::Option* opt_simplex =
      solve->add_option("--simplex", simplex_n, "built-in chain instance of this dimension")
          ->check(CLI::PositiveNumber);
  opt_instance->excludes(opt_simplex);
  opt_simplex->excludes(opt_instance);
  solve->add_option("--objective", objective, "objective for --simplex: linear|pow2|alpha-pow")
      ->check(CLI::IsMember({"linear", "pow2", "alpha-pow"}))
      ->needs(opt_simplex);
  solve->add_option("--variant", variant, "engine variant")
      ->check(CLI::IsMember({"mra", "feasibility"}));
  solve->add_option("--policy", policy,
                    "feasibility selection rule: max-ratio|max-gain|min-gain|lex|random")
      ->check(CLI::IsMember({"max-ratio", "max-gain", "min-gain", "lex", "random"}));
  solve->add_option("--seed", seed, "seed for the random policy")
      ->envname("GEOSCALE_SEED");
  solve->add_option("--mu0", mu0, "initial scale, rational p/q (default: smallest 2-power above |c|_inf)");
  solve->add_option("--alpha", alpha, "scale divisor, rational > 1");
  solve->add_flag("--early-stop", early_stop,
                  "stop once the scale is at most 1/2 and nothing improves");
  solve->add_flag("--certify,!--literal", certify,
                  "augment to a certified optimum after the loop (default on; --literal disables)");
  solve->add_option("--step-limit", step_limit, "abort after this many steps")
      ->check(CLI::PositiveNumber);
  solve->add_option("--out", out_path, "write output here instead of stdout");

  std::string theorem, dims, verify_alpha, verify_format = "text";
  CLI::App* verify = app.add_subcommand(
      "verify", "compare closed-form step counts against engine runs");
  verify->add_option("--theorem", theorem, "which count to check: 2.1|3.1|4.1|4.4")
      ->required()
      ->check(CLI::IsMember({"2.1", "3.1", "4.1", "4.4"}));
  verify->add_option("--n", dims, "dimensions, e.g. 3..8 or 4,6,10")->required();
  verify->add_option("--alpha", verify_alpha, "divisor for 4.1, rational in (1,2]");
  verify->add_option("--format", verify_format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  verify->add_option("--out", out_path, "write output here instead of stdout");

  std::string omega_alpha, omega_alpha_max, omega_def = "strict";
  std::string omega_format = "text";
  bool omega_bands_flag = false;
  CLI::App* omega = app.add_subcommand(
      "omega", "window width counts and their bands");
  CLI::Option* opt_oalpha =
      omega->add_option("--alpha", omega_alpha, "report both counts at this rational");
  CLI::Option* opt_obands =
      omega->add_flag("--bands", omega_bands_flag, "partition (1, alpha-max] into constant bands");
  CLI::Option* opt_omax =
      omega->add_option("--alpha-max", omega_alpha_max, "right end for --bands")
          ->needs(opt_obands);
  opt_oalpha->excludes(opt_obands);
  opt_obands->excludes(opt_oalpha);
  opt_obands->needs(opt_omax);
  omega->add_option("--definition", omega_def, "strict|corrected (for --bands)")
      ->check(CLI::IsMember({"strict", "corrected"}));
  omega->add_option("--format", omega_format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  omega->add_option("--out", out_path, "write output here instead of stdout");

  std::string sweep_alphas, sweep_dims, sweep_policy = "max-gain";
  std::string sweep_format = "csv";
  std::uint64_t sweep_seed = 0;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "grid of engine runs against corrected-count predictions");
  sweep->add_option("--alpha", sweep_alphas, "divisors, e.g. 4/3,3/2,2")->required();
  sweep->add_option("--n", sweep_dims, "dimensions, e.g. 6..12,18")->required();
  sweep->add_option("--policy", sweep_policy, "selection rule")
      ->check(CLI::IsMember({"max-ratio", "max-gain", "min-gain", "lex", "random"}));
  sweep->add_option("--seed", sweep_seed, "seed for the random policy")
      ->envname("GEOSCALE_SEED");
  sweep->add_option("--format", sweep_format, "csv|text|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  sweep->add_option("--out", out_path, "write output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*solve) {
    if (instance_path.empty() && simplex_n == 0) {
      std::cerr << "error: give an instance file or --simplex N\n";
      return 2;
    }
    return cmd_solve(instance_path, simplex_n, objective, variant, policy, seed,
                     mu0, alpha, early_stop, certify, step_limit, out_path);
  }
  if (*verify)
    return cmd_verify(theorem, dims, verify_alpha, verify_format, out_path);
  if (*omega) {
    if (omega_alpha.empty() && !omega_bands_flag) {
      std::cerr << "error: give --alpha or --bands with --alpha-max\n";
      return 2;
    }
    return cmd_omega(omega_alpha, omega_bands_flag, omega_alpha_max, omega_def,
                     omega_format, out_path);
  }
  if (*sweep)
    return cmd_sweep(sweep_alphas, sweep_dims, sweep_policy, sweep_seed,
                     sweep_format, out_path);
  return 2;
}
