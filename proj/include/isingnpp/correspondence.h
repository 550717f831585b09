#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isingnpp/instance.h"
#include "isingnpp/solvers.h"
#include "isingnpp/spinmodel.h"
#include "isingnpp/statmech.h"

namespace isingnpp {

struct CorrespondenceOptions {
  TemperatureSchedule schedule = TemperatureSchedule::standard();
  double tol = 1e-6;
  ScaleMode scale_mode = ScaleMode::kAuto;
  std::size_t enumeration_cap = 24;
  SolverOptions solver;
  unsigned jobs = 1;
};

struct MethodCost {
  std::string method;
  std::uint64_t work_nodes = 0;
  std::chrono::nanoseconds wall_time{0};
};

// Finite-n cross-check of the quantum ground energy (spectrum minimum and its
// eigenspace), the classical optimum (an exact solver) and the zero
// temperature limit of -T ln Z. Legs that are infeasible at this n are
// absent, never silently skipped.
struct CorrespondenceReport {
  std::size_t n = 0;
  unsigned bits = 0;
  std::optional<std::uint64_t> seed;

  SolverKind solver = SolverKind::kBruteForce;
  Energy e_ground_solver;
  Configuration solver_witness;

  std::optional<Energy> e_ground_spectrum;
  std::optional<std::size_t> degeneracy;      // ground eigenspace size
  std::optional<bool> witness_in_eigenspace;  // solver witness is a ground state
  std::optional<bool> eigenspace_residuals_zero;
  std::optional<LimitEstimate> limit;
  // E_ground from the solver in the limit's scaled units, when limit is set.
  std::optional<double> solver_ground_scaled;
  std::optional<bool> limit_within_bracket;

  bool agree = false;
  std::vector<MethodCost> cost;
};

CorrespondenceReport correspond(const Instance& inst, const CorrespondenceOptions& options = {});

struct ScalingOptions {
  std::vector<std::size_t> n_values;  // ascending
  unsigned bits = 48;
  std::size_t trials = 5;
  std::uint64_t seed = 1;
  std::vector<SolverKind> solvers;
  SolverOptions solver;
  unsigned jobs = 1;
};

struct ScalingCell {
  SolverKind solver = SolverKind::kBruteForce;
  std::size_t completed = 0;  // trials that ran without a capacity error
  double mean_work_nodes = 0.0;
  double mean_peak_stored = 0.0;
  double mean_wall_ms = 0.0;
  std::string error;  // first capacity error, if any
};

struct ScalingRow {
  std::size_t n = 0;
  unsigned bits = 0;
  std::size_t trials = 0;
  std::vector<ScalingCell> cells;  // one per selected solver, in selection order
};

// Least-squares line through (n, log2 value).
struct LogLinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
  std::size_t points = 0;

  double log2_at(double n) const { return intercept + slope * n; }
};

LogLinearFit fit_log2(const std::vector<double>& n, const std::vector<double>& values);

// Avogadro-scale spin count used for the extrapolated projection.
inline constexpr double kAvogadroSpins = 6.02214076e23;

struct ScalingFit {
  SolverKind solver = SolverKind::kBruteForce;
  LogLinearFit work;
  LogLinearFit peak;
  // log2 of the work projected to kAvogadroSpins spins. An extrapolation of
  // the fitted line, not a measurement.
  double avogadro_log2_work = 0.0;
};

struct ScalingStudy {
  std::vector<ScalingRow> rows;
  std::vector<ScalingFit> fits;  // one per selected solver with >= 2 points
};

ScalingStudy scaling_study(const ScalingOptions& options);

struct PhaseRow {
  unsigned bits = 0;
  double alpha = 0.0;  // bits / n
  std::size_t trials = 0;
  std::size_t perfect = 0;  // exact discrepancy <= 1
  double fraction = 0.0;
  double std_error = 0.0;  // binomial sqrt(p (1 - p) / trials)
};

// Fraction of seeded instances with a perfect partition, per bits value
// (ascending). Uses meet_in_the_middle.
std::vector<PhaseRow> phase_sweep(std::size_t n, std::vector<unsigned> bits_values,
                                  std::size_t trials, std::uint64_t seed, unsigned jobs = 1,
                                  const SolverOptions& solver = {});

}  // namespace isingnpp
