#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "isingnpp/bigint.h"
#include "isingnpp/configuration.h"
#include "isingnpp/instance.h"
#include "isingnpp/spinmodel.h"

namespace isingnpp {

// Temperatures T_1 > T_2 > ... > T_m > 0 (k_B = 1, beta = 1/T).
class TemperatureSchedule {
 public:
  // Throws InvalidArgument unless non-empty, strictly decreasing and positive.
  explicit TemperatureSchedule(std::vector<double> temperatures);
  // steps temperatures from t_max down to t_min, evenly spaced in log T.
  static TemperatureSchedule geometric(double t_max, double t_min, std::size_t steps);
  // 10 -> 1e-3 in 40 steps.
  static TemperatureSchedule standard() { return geometric(10.0, 1e-3, 40); }

  const std::vector<double>& temperatures() const { return temperatures_; }
  double coldest() const { return temperatures_.back(); }
  std::size_t size() const { return temperatures_.size(); }

 private:
  std::vector<double> temperatures_;
};

// Energies enter floating point divided by an integer scale: 1 (raw) or
// (max_i q_i)^2 (the normalized-weight view, energies at most n^2).
enum class ScaleMode { kAuto, kNone, kNormalized };

// kAuto picks the normalized scale when beta_max * E_max > 700, raw
// otherwise.
BigInt choose_scale(const Spectrum& spec, double beta_max, ScaleMode mode);

// A spectrum converted once to doubles relative to its ground level:
// E_k / scale = ground + offset_k, with offset_k >= 0 computed from the exact
// integer difference E_k - E_min. All thermodynamic sums are anchored at the
// ground level, so no exponential can overflow.
class ThermoLevels {
 public:
  explicit ThermoLevels(const Spectrum& spec, const BigInt& scale = 1);

  std::size_t n() const { return n_; }
  const BigInt& scale() const { return scale_; }
  double ground() const { return ground_; }

  // ln sum_k g_k exp(-beta * offset_k); lies in [ln g_0, n ln 2].
  double log_excess(double beta) const;
  // ln Z = -beta * ground + log_excess(beta).
  double log_partition(double beta) const;
  double mean_energy(double beta) const;
  double free_energy(double temperature) const;

 private:
  std::size_t n_ = 0;
  BigInt scale_;
  double ground_ = 0.0;
  std::vector<double> offsets_;
  std::vector<double> log_degeneracy_;
};

// beta >= 0; throws InvalidArgument otherwise. Energies divided by `scale`.
double log_partition(const Spectrum& spec, double beta, const BigInt& scale = 1);
double mean_energy(const Spectrum& spec, double beta, const BigInt& scale = 1);

// W(k) / W(m) = exp(-beta * (H(k) - H(m))), with the energy difference taken
// exactly before it is converted.
double boltzmann_ratio(const Instance& inst, const Configuration& k, const Configuration& m,
                       double beta);

// -T ln Z along a cooling schedule. Values are in scaled units; multiply by
// `scale` for raw energies.
struct LimitEstimate {
  double estimate = 0.0;        // -T_m ln Z(T_m)
  double lower = 0.0;           // E_min - T_m n ln 2
  double upper = 0.0;           // E_min
  double final_temperature = 0.0;
  double last_change = 0.0;     // |estimate_m - estimate_{m-1}|, 0 for one temperature
  bool converged = false;       // last_change < tol (needs at least two temperatures)
  bool within_bracket = false;  // lower <= estimate <= upper
  BigInt scale = 1;
  std::vector<double> history;  // one estimate per temperature
};

LimitEstimate ground_energy_via_limit(const Spectrum& spec, const TemperatureSchedule& schedule,
                                      double tol = 1e-6, ScaleMode mode = ScaleMode::kAuto);

struct ThermoRow {
  double temperature = 0.0;
  double beta = 0.0;
  double log_z = 0.0;
  double mean_energy = 0.0;
  double free_energy = 0.0;
};

struct ThermoCurve {
  BigInt scale = 1;
  std::vector<ThermoRow> rows;  // schedule order, hottest first
};

ThermoCurve thermo_curve(const Spectrum& spec, const TemperatureSchedule& schedule,
                         ScaleMode mode = ScaleMode::kAuto);

// CSV "T,beta,lnZ,meanE,freeE,scale".
void write_thermo_csv(std::ostream& out, const ThermoCurve& curve);

}  // namespace isingnpp
