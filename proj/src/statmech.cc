#include "isingnpp/statmech.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "isingnpp/errors.h"
#include "isingnpp/report_io.h"

namespace isingnpp {
namespace {

constexpr double kMaxExponent = 700.0;
constexpr double kBracketSlack = 1e-9;

void check_beta(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw InvalidArgument("inverse temperature must be finite and >= 0");
  }
}

}  // namespace

TemperatureSchedule::TemperatureSchedule(std::vector<double> temperatures)
    : temperatures_(std::move(temperatures)) {
  if (temperatures_.empty()) throw InvalidArgument("temperature schedule is empty");
  for (std::size_t i = 0; i < temperatures_.size(); ++i) {
    const double t = temperatures_[i];
    if (!(t > 0.0) || !std::isfinite(t)) {
      throw InvalidArgument("temperatures must be finite and > 0");
    }
    if (i > 0 && !(t < temperatures_[i - 1])) {
      throw InvalidArgument("temperature schedule must be strictly decreasing");
    }
  }
}

TemperatureSchedule TemperatureSchedule::geometric(double t_max, double t_min,
                                                   std::size_t steps) {
  if (!(t_max > t_min) || !(t_min > 0.0)) throw InvalidArgument("need t_max > t_min > 0");
  if (steps < 2) throw InvalidArgument("geometric schedule needs at least 2 steps");
  std::vector<double> ts(steps);
  const double ratio = std::log(t_min / t_max);
  for (std::size_t i = 0; i < steps; ++i) {
    ts[i] = t_max * std::exp(ratio * static_cast<double>(i) / static_cast<double>(steps - 1));
  }
  ts.front() = t_max;
  ts.back() = t_min;
  return TemperatureSchedule(std::move(ts));
}

BigInt choose_scale(const Spectrum& spec, double beta_max, ScaleMode mode) {
  switch (mode) {
    case ScaleMode::kNone:
      return 1;
    case ScaleMode::kNormalized:
      return spec.max_weight * spec.max_weight;
    case ScaleMode::kAuto:
      break;
  }
  const double e_max = spec.max_energy().convert_to<double>();
  if (beta_max * e_max > kMaxExponent) return spec.max_weight * spec.max_weight;
  return 1;
}

ThermoLevels::ThermoLevels(const Spectrum& spec, const BigInt& scale)
    : n_(spec.n), scale_(scale) {
  if (spec.entries.empty()) throw InvalidArgument("empty spectrum");
  if (scale_ < 1) throw InvalidArgument("energy scale must be >= 1");
  const BigInt& e_min = spec.min_energy();
  ground_ = ratio_to_double(e_min, scale_);
  offsets_.reserve(spec.entries.size());
  log_degeneracy_.reserve(spec.entries.size());
  for (const auto& [e, g] : spec.entries) {
    offsets_.push_back(ratio_to_double(e - e_min, scale_));
    log_degeneracy_.push_back(std::log(static_cast<double>(g)));
  }
}

double ThermoLevels::log_excess(double beta) const {
  check_beta(beta);
  if (beta == 0.0) return static_cast<double>(n_) * std::numbers::ln2;
  double peak = -INFINITY;
  for (std::size_t k = 0; k < offsets_.size(); ++k) {
    peak = std::max(peak, log_degeneracy_[k] - beta * offsets_[k]);
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < offsets_.size(); ++k) {
    sum += std::exp(log_degeneracy_[k] - beta * offsets_[k] - peak);
  }
  return peak + std::log(sum);
}

double ThermoLevels::log_partition(double beta) const {
  return -beta * ground_ + log_excess(beta);
}

double ThermoLevels::mean_energy(double beta) const {
  check_beta(beta);
  double peak = -INFINITY;
  for (std::size_t k = 0; k < offsets_.size(); ++k) {
    peak = std::max(peak, log_degeneracy_[k] - beta * offsets_[k]);
  }
  double weight_sum = 0.0;
  double energy_sum = 0.0;
  for (std::size_t k = 0; k < offsets_.size(); ++k) {
    const double w = std::exp(log_degeneracy_[k] - beta * offsets_[k] - peak);
    weight_sum += w;
    energy_sum += w * offsets_[k];
  }
  return ground_ + energy_sum / weight_sum;
}

double ThermoLevels::free_energy(double temperature) const {
  if (!(temperature > 0.0)) throw InvalidArgument("temperature must be > 0");
  return ground_ - temperature * log_excess(1.0 / temperature);
}

double log_partition(const Spectrum& spec, double beta, const BigInt& scale) {
  check_beta(beta);
  return ThermoLevels(spec, scale).log_partition(beta);
}

double mean_energy(const Spectrum& spec, double beta, const BigInt& scale) {
  check_beta(beta);
  return ThermoLevels(spec, scale).mean_energy(beta);
}

double boltzmann_ratio(const Instance& inst, const Configuration& k, const Configuration& m,
                       double beta) {
  check_beta(beta);
  const BigInt diff = energy(inst, k).value - energy(inst, m).value;
  if (diff == 0 || beta == 0.0) return 1.0;
  return std::exp(-beta * diff.convert_to<double>());
}

LimitEstimate ground_energy_via_limit(const Spectrum& spec, const TemperatureSchedule& schedule,
                                      double tol, ScaleMode mode) {
  LimitEstimate out;
  out.scale = choose_scale(spec, 1.0 / schedule.coldest(), mode);
  const ThermoLevels levels(spec, out.scale);
  for (double t : schedule.temperatures()) out.history.push_back(levels.free_energy(t));

  const double t_final = schedule.coldest();
  out.final_temperature = t_final;
  out.estimate = out.history.back();
  out.upper = levels.ground();
  out.lower = levels.ground() - t_final * static_cast<double>(spec.n) * std::numbers::ln2;
  if (out.history.size() >= 2) {
    out.last_change = std::abs(out.history.back() - out.history[out.history.size() - 2]);
    out.converged = out.last_change < tol;
  }
  out.within_bracket = out.estimate >= out.lower - kBracketSlack &&
                       out.estimate <= out.upper + kBracketSlack;
  return out;
}

ThermoCurve thermo_curve(const Spectrum& spec, const TemperatureSchedule& schedule,
                         ScaleMode mode) {
  ThermoCurve curve;
  curve.scale = choose_scale(spec, 1.0 / schedule.coldest(), mode);
  const ThermoLevels levels(spec, curve.scale);
  for (double t : schedule.temperatures()) {
    ThermoRow row;
    row.temperature = t;
    row.beta = 1.0 / t;
    row.log_z = levels.log_partition(row.beta);
    row.mean_energy = levels.mean_energy(row.beta);
    row.free_energy = levels.free_energy(t);
    curve.rows.push_back(row);
  }
  return curve;
}

void write_thermo_csv(std::ostream& out, const ThermoCurve& curve) {
  out << "T,beta,lnZ,meanE,freeE,scale\n";
  const std::string scale = to_string(curve.scale);
  for (const auto& r : curve.rows) {
    out << format_real(r.temperature) << ',' << format_real(r.beta) << ','
        << format_real(r.log_z) << ',' << format_real(r.mean_energy) << ','
        << format_real(r.free_energy) << ',' << scale << '\n';
  }
}

}  // namespace isingnpp
