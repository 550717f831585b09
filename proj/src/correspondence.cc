#include "isingnpp/correspondence.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "isingnpp/errors.h"
#include "parallel.h"

namespace isingnpp {
namespace {

using Clock = std::chrono::steady_clock;

constexpr double kBracketSlack = 1e-9;

std::chrono::nanoseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
}

}  // namespace

CorrespondenceReport correspond(const Instance& inst, const CorrespondenceOptions& options) {
  CorrespondenceReport report;
  report.n = inst.n();
  report.bits = inst.bits();
  report.seed = inst.seed();

  report.solver = inst.n() <= options.solver.brute_force_cap ? SolverKind::kBruteForce
                                                             : SolverKind::kMeetInTheMiddle;
  const SolverResult solved = solve(inst, report.solver, options.solver);
  report.e_ground_solver = solved.energy;
  report.solver_witness = solved.witness;
  report.cost.push_back({std::string(solver_name(report.solver)), solved.work_nodes,
                         solved.wall_time});

  bool agree = true;
  if (inst.n() <= options.enumeration_cap) {
    const EnumerationOptions enumeration{options.enumeration_cap, options.jobs};
    const std::uint64_t canonical = std::uint64_t{1} << (inst.n() - 1);

    auto start = Clock::now();
    const Spectrum spec = spectrum(inst, enumeration);
    report.cost.push_back({"spectrum", canonical, since(start)});

    start = Clock::now();
    const GroundEigenspace ground = ground_eigenspace(inst, enumeration);
    report.cost.push_back({"eigenspace", canonical, since(start)});

    report.e_ground_spectrum = Energy{spec.min_energy()};
    report.degeneracy = ground.states.size();
    report.witness_in_eigenspace =
        std::binary_search(ground.states.begin(), ground.states.end(), solved.witness);
    report.eigenspace_residuals_zero =
        std::all_of(ground.states.begin(), ground.states.end(), [&](const Configuration& c) {
          return residual(inst, ground.energy, c) == 0;
        });

    start = Clock::now();
    LimitEstimate limit = ground_energy_via_limit(spec, options.schedule, options.tol,
                                                  options.scale_mode);
    report.cost.push_back({"limit", spec.entries.size() * options.schedule.size(), since(start)});

    const double e_solver = ratio_to_double(solved.energy.value, limit.scale);
    const double lower =
        e_solver - limit.final_temperature * static_cast<double>(inst.n()) * std::numbers::ln2;
    report.solver_ground_scaled = e_solver;
    report.limit_within_bracket = limit.estimate >= lower - kBracketSlack &&
                                  limit.estimate <= e_solver + kBracketSlack;

    agree = *report.e_ground_spectrum == report.e_ground_solver &&
            ground.energy == report.e_ground_solver && *report.witness_in_eigenspace &&
            *report.eigenspace_residuals_zero && *report.limit_within_bracket &&
            limit.within_bracket;
    report.limit = std::move(limit);
  }
  report.agree = agree;
  return report;
}

LogLinearFit fit_log2(const std::vector<double>& n, const std::vector<double>& values) {
  if (n.size() != values.size()) throw InvalidArgument("fit needs equal-length inputs");
  LogLinearFit fit;
  fit.points = n.size();
  if (n.size() < 2) return fit;
  const double m = static_cast<double>(n.size());
  double sx = 0, sy = 0;
  std::vector<double> y(values.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    y[i] = std::log2(values[i]);
    sx += n[i];
    sy += y[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    sxx += (n[i] - mx) * (n[i] - mx);
    sxy += (n[i] - mx) * (y[i] - my);
  }
  if (sxx == 0) throw InvalidArgument("fit needs at least two distinct n");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double r = y[i] - fit.log2_at(n[i]);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / m);
  return fit;
}

ScalingStudy scaling_study(const ScalingOptions& options) {
  if (options.trials == 0) throw InvalidArgument("trials must be >= 1");
  if (options.solvers.empty()) throw InvalidArgument("select at least one solver");
  if (!std::is_sorted(options.n_values.begin(), options.n_values.end())) {
    throw InvalidArgument("n values must be ascending");
  }

  struct Sample {
    bool ok = false;
    std::string error;
    SolverResult result;
  };

  ScalingStudy study;
  for (std::size_t n : options.n_values) {
    ScalingRow row;
    row.n = n;
    row.bits = options.bits;
    row.trials = options.trials;

    const std::size_t k = options.solvers.size();
    std::vector<Sample> samples(options.trials * k);
    internal::parallel_for(options.trials, options.jobs, [&](std::size_t t) {
      const Instance inst = generate(n, options.bits, derive_seed(options.seed, n, options.bits, t));
      for (std::size_t s = 0; s < k; ++s) {
        Sample& slot = samples[t * k + s];
        try {
          slot.result = solve(inst, options.solvers[s], options.solver);
          slot.ok = true;
        } catch (const CapacityError& e) {
          slot.error = e.what();
        }
      }
    });

    for (std::size_t s = 0; s < k; ++s) {
      ScalingCell cell;
      cell.solver = options.solvers[s];
      for (std::size_t t = 0; t < options.trials; ++t) {
        const Sample& sample = samples[t * k + s];
        if (!sample.ok) {
          if (cell.error.empty()) cell.error = sample.error;
          continue;
        }
        ++cell.completed;
        cell.mean_work_nodes += static_cast<double>(sample.result.work_nodes);
        cell.mean_peak_stored += static_cast<double>(sample.result.peak_stored);
        cell.mean_wall_ms += std::chrono::duration<double, std::milli>(sample.result.wall_time).count();
      }
      if (cell.completed > 0) {
        const double c = static_cast<double>(cell.completed);
        cell.mean_work_nodes /= c;
        cell.mean_peak_stored /= c;
        cell.mean_wall_ms /= c;
      }
      row.cells.push_back(cell);
    }
    study.rows.push_back(std::move(row));
  }

  for (std::size_t s = 0; s < options.solvers.size(); ++s) {
    std::vector<double> ns, work, peak;
    for (const auto& row : study.rows) {
      const ScalingCell& cell = row.cells[s];
      if (cell.completed != row.trials) continue;
      ns.push_back(static_cast<double>(row.n));
      work.push_back(cell.mean_work_nodes);
      peak.push_back(cell.mean_peak_stored);
    }
    if (ns.size() < 2) continue;
    ScalingFit fit;
    fit.solver = options.solvers[s];
    fit.work = fit_log2(ns, work);
    fit.peak = fit_log2(ns, peak);
    fit.avogadro_log2_work = fit.work.log2_at(kAvogadroSpins);
    study.fits.push_back(fit);
  }
  return study;
}

std::vector<PhaseRow> phase_sweep(std::size_t n, std::vector<unsigned> bits_values,
                                  std::size_t trials, std::uint64_t seed, unsigned jobs,
                                  const SolverOptions& solver) {
  if (trials == 0) throw InvalidArgument("trials must be >= 1");
  std::sort(bits_values.begin(), bits_values.end());
  std::vector<PhaseRow> rows;
  for (unsigned bits : bits_values) {
    std::vector<char> perfect(trials, 0);
    internal::parallel_for(trials, jobs, [&](std::size_t t) {
      const Instance inst = generate(n, bits, derive_seed(seed, n, bits, t));
      perfect[t] = meet_in_the_middle(inst, solver).discrepancy <= 1;
    });
    PhaseRow row;
    row.bits = bits;
    row.alpha = static_cast<double>(bits) / static_cast<double>(n);
    row.trials = trials;
    row.perfect = static_cast<std::size_t>(std::count(perfect.begin(), perfect.end(), 1));
    row.fraction = static_cast<double>(row.perfect) / static_cast<double>(trials);
    row.std_error = std::sqrt(row.fraction * (1.0 - row.fraction) / static_cast<double>(trials));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace isingnpp
