#include "isingnpp/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "isingnpp/correspondence.h"
#include "isingnpp/errors.h"
#include "isingnpp/instance.h"
#include "isingnpp/report_io.h"
#include "isingnpp/solvers.h"
#include "isingnpp/spinmodel.h"
#include "isingnpp/statmech.h"

namespace isingnpp {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Format { kCsv, kJsonl };

// Everything a subcommand may read from the command line.
struct RunConfig {
  std::string instance_path;
  std::optional<std::size_t> n;
  std::optional<unsigned> bits;
  std::optional<std::uint64_t> seed;
  std::string output;
  std::string format;
  std::vector<std::string> solvers;
  bool all = false;
  std::optional<std::size_t> cap;
  std::optional<std::uint64_t> budget;
  double t_max = 10.0;
  double t_min = 1e-3;
  std::size_t steps = 40;
  double tol = 1e-6;
  std::string scale = "auto";
  bool timing = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::size_t n_min = 16, n_max = 28, n_step = 1;
  unsigned b_min = 4, b_max = 40, b_step = 4;
  std::size_t trials = 10;
};

Json real(double v) { return round_real(v); }

Json optional_millis(bool timing, std::chrono::nanoseconds d) {
  return timing ? real(to_millis(d)) : Json(nullptr);
}

Json seed_json(const std::optional<std::uint64_t>& seed) {
  return seed ? Json(*seed) : Json(nullptr);
}

Format parse_format(const std::string& text, Format fallback) {
  if (text.empty()) return fallback;
  if (text == "csv") return Format::kCsv;
  if (text == "jsonl") return Format::kJsonl;
  throw UsageError("--format must be csv or jsonl");
}

ScaleMode parse_scale(const std::string& text) {
  if (text == "auto") return ScaleMode::kAuto;
  if (text == "none") return ScaleMode::kNone;
  if (text == "normalized") return ScaleMode::kNormalized;
  throw UsageError("--scale must be auto, none or normalized");
}

TemperatureSchedule schedule_from(const RunConfig& cfg) {
  if (!(cfg.t_max > cfg.t_min) || !(cfg.t_min > 0)) throw UsageError("need --tmax > --tmin > 0");
  if (cfg.steps < 2) throw UsageError("--steps must be >= 2");
  return TemperatureSchedule::geometric(cfg.t_max, cfg.t_min, cfg.steps);
}

Instance load_instance(const RunConfig& cfg) {
  const bool any_triple = cfg.n || cfg.bits || cfg.seed;
  const bool full_triple = cfg.n && cfg.bits && cfg.seed;
  if (!cfg.instance_path.empty() && any_triple) {
    throw UsageError("conflicting instance sources: give an instance file or -n/-b/-s, not both");
  }
  if (!cfg.instance_path.empty()) {
    try {
      return read_instance_file(cfg.instance_path);
    } catch (const ParseError& e) {
      throw UsageError(cfg.instance_path + ": " + e.what());
    }
  }
  if (!full_triple) throw UsageError("need an instance file or all of -n, -b and -s");
  return generate(*cfg.n, *cfg.bits, *cfg.seed);
}

std::vector<SolverKind> selected_solvers(const RunConfig& cfg) {
  std::vector<std::string> names = cfg.solvers;
  if (cfg.all || names.empty()) names = {"all"};
  std::vector<SolverKind> kinds;
  for (const auto& name : names) {
    if (name == "all") {
      for (auto k : all_solvers()) kinds.push_back(k);
      continue;
    }
    auto kind = solver_from_name(name);
    if (!kind) throw UsageError("unknown solver '" + name + "'");
    kinds.push_back(*kind);
  }
  std::vector<SolverKind> unique;
  for (auto k : kinds) {
    if (std::find(unique.begin(), unique.end(), k) == unique.end()) unique.push_back(k);
  }
  return unique;
}

std::string cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// --- subcommands -----------------------------------------------------------

void cmd_gen(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.instance_path.empty()) throw UsageError("gen does not read an instance file");
  out << serialize(load_instance(cfg));
}

void cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(cfg);
  const Format format = parse_format(cfg.format, Format::kJsonl);
  SolverOptions options;
  if (cfg.cap) options.brute_force_cap = *cfg.cap;
  options.node_budget = cfg.budget;

  const bool explicit_selection = !cfg.all && !cfg.solvers.empty() &&
      std::find(cfg.solvers.begin(), cfg.solvers.end(), "all") == cfg.solvers.end();
  std::vector<SolverResult> results;
  for (SolverKind kind : selected_solvers(cfg)) {
    if (kind == SolverKind::kBruteForce && !explicit_selection &&
        inst.n() > options.brute_force_cap) {
      err << "note: skipping brute (n=" << inst.n() << " exceeds cap "
          << options.brute_force_cap << ")\n";
      continue;
    }
    results.push_back(solve(inst, kind, options));
  }

  if (format == Format::kCsv) {
    out << "solver,n,bits,seed,energy,discrepancy,witness,exact,workNodes,peakStored,wallTimeMs\n";
  }
  for (const auto& r : results) {
    if (format == Format::kJsonl) {
      Json j;
      j["solver"] = solver_name(r.solver);
      j["n"] = inst.n();
      j["bits"] = inst.bits();
      j["seed"] = seed_json(inst.seed());
      j["energy"] = to_string(r.energy.value);
      j["discrepancy"] = to_string(r.discrepancy);
      j["witness"] = r.witness.to_hex();
      j["exact"] = r.exact;
      j["workNodes"] = r.work_nodes;
      j["peakStored"] = r.peak_stored;
      j["wallTimeMs"] = optional_millis(cfg.timing, r.wall_time);
      out << j.dump() << '\n';
    } else {
      out << solver_name(r.solver) << ',' << inst.n() << ',' << inst.bits() << ','
          << (inst.seed() ? std::to_string(*inst.seed()) : "") << ',' << r.energy.value << ','
          << r.discrepancy << ',' << r.witness.to_hex() << ',' << (r.exact ? "true" : "false")
          << ',' << r.work_nodes << ',' << r.peak_stored << ','
          << (cfg.timing ? format_real(to_millis(r.wall_time)) : "") << '\n';
    }
  }
}

void cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_instance(cfg);
  const Spectrum spec = spectrum(inst, {cfg.cap.value_or(24), cfg.jobs});
  if (parse_format(cfg.format, Format::kCsv) == Format::kCsv) {
    write_spectrum_csv(out, spec);
    return;
  }
  for (const auto& [e, g] : spec.entries) {
    Json j;
    j["energy"] = to_string(e);
    j["degeneracy"] = g;
    out << j.dump() << '\n';
  }
}

void cmd_thermo(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_instance(cfg);
  const auto schedule = schedule_from(cfg);
  const auto mode = parse_scale(cfg.scale);
  const Spectrum spec = spectrum(inst, {cfg.cap.value_or(24), cfg.jobs});
  const ThermoCurve curve = thermo_curve(spec, schedule, mode);
  if (parse_format(cfg.format, Format::kCsv) == Format::kCsv) {
    write_thermo_csv(out, curve);
    return;
  }
  for (const auto& r : curve.rows) {
    Json j;
    j["T"] = real(r.temperature);
    j["beta"] = real(r.beta);
    j["lnZ"] = real(r.log_z);
    j["meanE"] = real(r.mean_energy);
    j["freeE"] = real(r.free_energy);
    j["scale"] = to_string(curve.scale);
    out << j.dump() << '\n';
  }
}

bool cmd_correspond(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_instance(cfg);
  if (parse_format(cfg.format, Format::kJsonl) != Format::kJsonl) {
    throw UsageError("correspond writes jsonl only");
  }
  CorrespondenceOptions options;
  options.schedule = schedule_from(cfg);
  options.tol = cfg.tol;
  options.scale_mode = parse_scale(cfg.scale);
  if (cfg.cap) options.enumeration_cap = *cfg.cap;
  options.jobs = cfg.jobs;
  const CorrespondenceReport r = correspond(inst, options);

  auto opt_bool = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
  Json j;
  j["n"] = r.n;
  j["bits"] = r.bits;
  j["seed"] = seed_json(r.seed);
  j["solver"] = solver_name(r.solver);
  j["eGroundSolver"] = to_string(r.e_ground_solver.value);
  j["witness"] = r.solver_witness.to_hex();
  j["eGroundSpectrum"] =
      r.e_ground_spectrum ? Json(to_string(r.e_ground_spectrum->value)) : Json(nullptr);
  j["degeneracy"] = r.degeneracy ? Json(*r.degeneracy) : Json(nullptr);
  j["witnessInEigenspace"] = opt_bool(r.witness_in_eigenspace);
  j["eigenspaceResidualsZero"] = opt_bool(r.eigenspace_residuals_zero);
  if (r.limit) {
    j["limitEstimate"] = real(r.limit->estimate);
    j["limitLower"] = real(r.limit->lower);
    j["limitUpper"] = real(r.limit->upper);
    j["scale"] = to_string(r.limit->scale);
    j["tFinal"] = real(r.limit->final_temperature);
    j["lastChange"] = real(r.limit->last_change);
    j["converged"] = r.limit->converged;
  } else {
    j["limitEstimate"] = nullptr;
  }
  j["limitWithinBracket"] = opt_bool(r.limit_within_bracket);
  j["agree"] = r.agree;
  Json cost = Json::array();
  for (const auto& c : r.cost) {
    Json e;
    e["method"] = c.method;
    e["workNodes"] = c.work_nodes;
    e["wallTimeMs"] = optional_millis(cfg.timing, c.wall_time);
    cost.push_back(e);
  }
  j["cost"] = cost;
  out << j.dump() << '\n';
  return r.agree;
}

void cmd_scaling(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.instance_path.empty() || cfg.n) throw UsageError("scaling takes --nmin/--nmax/--nstep");
  if (cfg.n_step == 0 || cfg.n_min == 0 || cfg.n_min > cfg.n_max) {
    throw UsageError("need 1 <= --nmin <= --nmax and --nstep >= 1");
  }
  if (cfg.trials == 0) throw UsageError("--trials must be >= 1");
  ScalingOptions options;
  for (std::size_t n = cfg.n_min; n <= cfg.n_max; n += cfg.n_step) options.n_values.push_back(n);
  options.bits = cfg.bits.value_or(48);
  options.trials = cfg.trials;
  options.seed = cfg.seed.value_or(1);
  options.solvers = cfg.solvers.empty() && !cfg.all
                        ? std::vector<SolverKind>{SolverKind::kMeetInTheMiddle,
                                                  SolverKind::kSchroeppelShamir}
                        : selected_solvers(cfg);
  if (cfg.cap) options.solver.brute_force_cap = *cfg.cap;
  options.jobs = cfg.jobs;
  const ScalingStudy study = scaling_study(options);
  const Format format = parse_format(cfg.format, Format::kCsv);

  if (format == Format::kCsv) {
    out << "n,bits,trials,solver,completed,meanWorkNodes,meanPeakStored,meanWallMs,error\n";
  }
  for (const auto& row : study.rows) {
    for (const auto& c : row.cells) {
      if (format == Format::kCsv) {
        out << row.n << ',' << row.bits << ',' << row.trials << ',' << solver_name(c.solver) << ','
            << c.completed << ',' << format_real(c.mean_work_nodes) << ','
            << format_real(c.mean_peak_stored) << ','
            << (cfg.timing ? format_real(c.mean_wall_ms) : "") << ',' << cell(c.error) << '\n';
      } else {
        Json j;
        j["type"] = "row";
        j["n"] = row.n;
        j["bits"] = row.bits;
        j["trials"] = row.trials;
        j["solver"] = solver_name(c.solver);
        j["completed"] = c.completed;
        j["meanWorkNodes"] = real(c.mean_work_nodes);
        j["meanPeakStored"] = real(c.mean_peak_stored);
        j["meanWallMs"] = cfg.timing ? real(c.mean_wall_ms) : Json(nullptr);
        j["error"] = c.error.empty() ? Json(nullptr) : Json(c.error);
        out << j.dump() << '\n';
      }
    }
  }
  for (const auto& f : study.fits) {
    if (format == Format::kJsonl) {
      Json j;
      j["type"] = "fit";
      j["solver"] = solver_name(f.solver);
      j["workSlope"] = real(f.work.slope);
      j["workIntercept"] = real(f.work.intercept);
      j["workRmsResidual"] = real(f.work.rms_residual);
      j["peakSlope"] = real(f.peak.slope);
      j["peakIntercept"] = real(f.peak.intercept);
      j["peakRmsResidual"] = real(f.peak.rms_residual);
      j["points"] = f.work.points;
      j["avogadroLog2WorkExtrapolated"] = real(f.avogadro_log2_work);
      out << j.dump() << '\n';
    }
    err << "fit " << solver_name(f.solver) << ": log2(workNodes) = "
        << format_real(f.work.intercept) << " + " << format_real(f.work.slope)
        << " n (rms " << format_real(f.work.rms_residual) << "), log2(peakStored) slope "
        << format_real(f.peak.slope) << "; extrapolated to n = 6.02e23: workNodes ~ 2^"
        << format_real(f.avogadro_log2_work) << " (projection, not measured)\n";
  }
}

void cmd_phase(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.instance_path.empty()) throw UsageError("phase generates its own instances");
  if (cfg.b_step == 0 || cfg.b_min == 0 || cfg.b_min > cfg.b_max) {
    throw UsageError("need 1 <= --bmin <= --bmax and --bstep >= 1");
  }
  if (cfg.trials == 0) throw UsageError("--trials must be >= 1");
  std::vector<unsigned> bits;
  for (unsigned b = cfg.b_min; b <= cfg.b_max; b += cfg.b_step) bits.push_back(b);
  const auto rows = phase_sweep(cfg.n.value_or(20), bits, cfg.trials, cfg.seed.value_or(1), cfg.jobs);
  const Format format = parse_format(cfg.format, Format::kCsv);
  if (format == Format::kCsv) out << "bits,alpha,trials,perfect,fraction,stdError\n";
  for (const auto& r : rows) {
    if (format == Format::kCsv) {
      out << r.bits << ',' << format_real(r.alpha) << ',' << r.trials << ',' << r.perfect << ','
          << format_real(r.fraction) << ',' << format_real(r.std_error) << '\n';
    } else {
      Json j;
      j["bits"] = r.bits;
      j["alpha"] = real(r.alpha);
      j["trials"] = r.trials;
      j["perfect"] = r.perfect;
      j["fraction"] = real(r.fraction);
      j["stdError"] = real(r.std_error);
      out << j.dump() << '\n';
    }
  }
}

// --- option wiring ---------------------------------------------------------

void add_instance_source(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("instance", cfg.instance_path, "Instance file (npp v1 text format)");
  sub->add_option("-n", cfg.n, "Generator: number of spins")->check(CLI::PositiveNumber);
  sub->add_option("-b,--bits", cfg.bits, "Generator: weights drawn from [1, 2^bits - 1]")
      ->check(CLI::PositiveNumber);
  sub->add_option("-s,--seed", cfg.seed, "Generator: 64-bit seed");
}

void add_output(CLI::App* sub, RunConfig& cfg, const std::string& formats) {
  sub->add_option("-o,--output", cfg.output, "Output file (default: standard output)");
  sub->add_option("--format", cfg.format, "Output format: " + formats);
}

void add_schedule(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--tmax", cfg.t_max, "Hottest temperature of the geometric schedule")
      ->capture_default_str();
  sub->add_option("--tmin", cfg.t_min, "Coldest temperature of the geometric schedule")
      ->capture_default_str();
  sub->add_option("--steps", cfg.steps, "Number of temperatures (>= 2)")->capture_default_str();
  sub->add_option("--scale", cfg.scale,
                  "Energy scale: auto (normalize when beta*E_max > 700), none, normalized")
      ->capture_default_str();
}

void add_jobs(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--jobs", cfg.jobs, "Worker threads (default: available cores)")
      ->check(CLI::PositiveNumber);
}

void add_timing(CLI::App* sub, RunConfig& cfg) {
  sub->add_flag("--timing", cfg.timing,
                "Record wall times (otherwise wallTimeMs is null so output is reproducible)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact spin-glass / number-partitioning toolkit", "isingnpp"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 ok, 1 correspond disagreement, 2 usage error, 3 capacity error.\n"
      "Instance file: 'npp v1 n=<N> bits=<b> seed=<s|none>' then N decimal weights.\n"
      "Outputs:\n"
      "  solve      jsonl|csv  solver,n,bits,seed,energy,discrepancy,witness,exact,\n"
      "                        workNodes,peakStored,wallTimeMs\n"
      "  spectrum   csv|jsonl  energy,degeneracy (ascending energy)\n"
      "  thermo     csv|jsonl  T,beta,lnZ,meanE,freeE,scale (energies divided by scale)\n"
      "  correspond jsonl      one report per run\n"
      "  scaling    csv|jsonl  n,bits,trials,solver,completed,meanWorkNodes,meanPeakStored,\n"
      "                        meanWallMs,error (jsonl adds type=fit records)\n"
      "  phase      csv|jsonl  bits,alpha,trials,perfect,fraction,stdError\n"
      "Reals are printed with 12 significant digits.");

  auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
  gen->add_option("-n", cfg.n, "Number of spins")->required()->check(CLI::PositiveNumber);
  gen->add_option("-b,--bits", cfg.bits, "Weights drawn from [1, 2^bits - 1]")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("-s,--seed", cfg.seed, "64-bit seed")->required();
  gen->add_option("-o,--output", cfg.output, "Output file (default: standard output)");

  auto* solve_cmd = app.add_subcommand("solve", "Solve the partitioning problem");
  add_instance_source(solve_cmd, cfg);
  add_output(solve_cmd, cfg, "jsonl (default) or csv");
  solve_cmd->add_option("--solver", cfg.solvers, "brute, mitm, ss, kk, ckk or all (repeatable)")
      ->delimiter(',');
  solve_cmd->add_flag("--all", cfg.all, "Run every solver");
  solve_cmd->add_option("--cap", cfg.cap, "Brute-force spin cap (default 28)");
  solve_cmd->add_option("--budget", cfg.budget, "Node budget for ckk");
  add_timing(solve_cmd, cfg);
  add_jobs(solve_cmd, cfg);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Exact energy spectrum with degeneracies");
  add_instance_source(spectrum_cmd, cfg);
  add_output(spectrum_cmd, cfg, "csv (default) or jsonl");
  spectrum_cmd->add_option("--cap", cfg.cap, "Enumeration spin cap (default 24)");
  add_jobs(spectrum_cmd, cfg);

  auto* thermo_cmd = app.add_subcommand("thermo", "ln Z, <E> and -T ln Z along a cooling schedule");
  add_instance_source(thermo_cmd, cfg);
  add_output(thermo_cmd, cfg, "csv (default) or jsonl");
  add_schedule(thermo_cmd, cfg);
  thermo_cmd->add_option("--cap", cfg.cap, "Enumeration spin cap (default 24)");
  add_jobs(thermo_cmd, cfg);

  auto* corr_cmd = app.add_subcommand(
      "correspond", "Cross-check spectrum, solver and T -> 0 limit; exit 1 on disagreement");
  add_instance_source(corr_cmd, cfg);
  add_output(corr_cmd, cfg, "jsonl");
  add_schedule(corr_cmd, cfg);
  corr_cmd->add_option("--tol", cfg.tol, "Convergence tolerance of the limit estimate")
      ->capture_default_str();
  corr_cmd->add_option("--cap", cfg.cap, "Enumeration spin cap (default 24)");
  add_timing(corr_cmd, cfg);
  add_jobs(corr_cmd, cfg);

  auto* scaling_cmd = app.add_subcommand("scaling", "Measure solver work counters against n");
  scaling_cmd->add_option("--nmin", cfg.n_min, "Smallest n")->capture_default_str();
  scaling_cmd->add_option("--nmax", cfg.n_max, "Largest n")->capture_default_str();
  scaling_cmd->add_option("--nstep", cfg.n_step, "Step in n")->capture_default_str();
  scaling_cmd->add_option("-b,--bits", cfg.bits, "Weight bits (default 48)")
      ->check(CLI::PositiveNumber);
  scaling_cmd->add_option("-s,--seed", cfg.seed, "Base seed (default 1)");
  scaling_cmd->add_option("--trials", cfg.trials, "Instances per n")->capture_default_str();
  scaling_cmd->add_option("--solver", cfg.solvers, "Solvers (default mitm,ss)")->delimiter(',');
  scaling_cmd->add_option("--cap", cfg.cap, "Brute-force spin cap (default 28)");
  add_output(scaling_cmd, cfg, "csv (default) or jsonl");
  add_timing(scaling_cmd, cfg);
  add_jobs(scaling_cmd, cfg);

  auto* phase_cmd = app.add_subcommand("phase", "Perfect-partition fraction against bits / n");
  phase_cmd->add_option("-n", cfg.n, "Number of spins (default 20)")->check(CLI::PositiveNumber);
  phase_cmd->add_option("--bmin", cfg.b_min, "Smallest bits")->capture_default_str();
  phase_cmd->add_option("--bmax", cfg.b_max, "Largest bits")->capture_default_str();
  phase_cmd->add_option("--bstep", cfg.b_step, "Step in bits")->capture_default_str();
  phase_cmd->add_option("-s,--seed", cfg.seed, "Base seed (default 1)");
  phase_cmd->add_option("--trials", cfg.trials, "Instances per bits value")->capture_default_str();
  add_output(phase_cmd, cfg, "csv (default) or jsonl");
  add_jobs(phase_cmd, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (*gen) {
      cmd_gen(cfg, buffer);
    } else if (*solve_cmd) {
      cmd_solve(cfg, buffer, err);
    } else if (*spectrum_cmd) {
      cmd_spectrum(cfg, buffer);
    } else if (*thermo_cmd) {
      cmd_thermo(cfg, buffer);
    } else if (*corr_cmd) {
      if (!cmd_correspond(cfg, buffer)) {
        err << "correspondence check failed: legs disagree\n";
        code = kExitDisagree;
      }
    } else if (*scaling_cmd) {
      cmd_scaling(cfg, buffer, err);
    } else if (*phase_cmd) {
      cmd_phase(cfg, buffer);
    }
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (cfg.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!(file << buffer.str())) {
      err << "error: cannot write '" << cfg.output << "'\n";
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace isingnpp
