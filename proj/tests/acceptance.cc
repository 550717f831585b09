// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "isingnpp/cli.h"
#include "isingnpp/correspondence.h"
#include "isingnpp/instance.h"
#include "isingnpp/solvers.h"
#include "isingnpp/spinmodel.h"
#include "isingnpp/statmech.h"
#include "oracles.h"

using namespace isingnpp;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

unsigned cores() { return std::max(1u, std::thread::hardware_concurrency()); }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

std::uint64_t seed_for(std::uint64_t base, std::size_t n, unsigned bits, std::uint64_t trial) {
  return derive_seed(base, n, bits, trial);
}

// 1. Exact solvers agree with brute force; all witnesses have zero residual.
Verdict oracle_equivalence() {
  Verdict v;
  const auto start = Clock::now();
  std::size_t checked = 0;
  for (std::size_t n : {8, 12, 16, 20}) {
    for (unsigned bits : {8u, 16u, 24u}) {
      for (std::uint64_t t = 0; t < 100; ++t) {
        const Instance inst = generate(n, bits, seed_for(101, n, bits, t));
        const SolverResult ref = brute_force(inst);
        if (n <= 12 && ref.energy.value != oracle::min_energy(inst.weights())) {
          v.fail("brute force differs from enumeration oracle");
        }
        for (const SolverResult& r : {ref, meet_in_the_middle(inst), schroeppel_shamir(inst),
                                      complete_kk(inst)}) {
          if (r.energy != ref.energy) {
            v.fail(std::string(solver_name(r.solver)) + " energy differs at n=" +
                   std::to_string(n));
          }
          if (residual(inst, r.energy, r.witness) != 0) {
            v.fail(std::string(solver_name(r.solver)) + " witness residual nonzero");
          }
        }
        ++checked;
      }
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 120.0) v.fail(fmt("took %.1f s", secs));
  if (v.pass) v.detail = std::to_string(checked) + " instances, " + fmt("%.1f s", secs);
  return v;
}

// 2. Coupling expansion equals the squared sum on every configuration.
Verdict expansion_identity() {
  Verdict v;
  std::size_t configs = 0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    const std::size_t n = 1 + t % 12;
    const unsigned bits = 4 + static_cast<unsigned>(t % 5) * 12;
    const Instance inst = generate(n, bits, seed_for(202, n, bits, t));
    const CouplingForm form = expand_couplings(inst);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const auto cfg = Configuration::from_mask(mask, n);
      const BigInt e = oracle::energy(inst.weights(), mask);
      if (coupling_energy(form, cfg).value != e || energy(inst, cfg).value != e) {
        v.fail("mismatch at n=" + std::to_string(n));
      }
      ++configs;
    }
  }
  if (v.pass) v.detail = std::to_string(configs) + " configurations";
  return v;
}

// 3. E_min - T n ln2 <= -T ln Z <= E_min on the default schedule, and the
// limit estimate stays in its bracket at the coldest temperature.
Verdict thermodynamic_sandwich() {
  Verdict v;
  const auto schedule = TemperatureSchedule::standard();
  double worst = 0.0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    const std::size_t n = 1 + t % 16;
    const unsigned bits = 2 + static_cast<unsigned>(t % 4) * 10;
    const Instance inst = generate(n, bits, seed_for(303, n, bits, t));
    const Spectrum spec = spectrum(inst);
    const SolverResult exact = brute_force(inst);
    if (spec.min_energy() != exact.energy.value) v.fail("spectrum minimum differs from brute force");

    const BigInt scale = choose_scale(spec, 1.0 / schedule.coldest(), ScaleMode::kAuto);
    const ThermoLevels levels(spec, scale);
    const double e_min = ratio_to_double(exact.energy.value, scale);
    for (double temp : schedule.temperatures()) {
      const double f = levels.free_energy(temp);
      const double lower = e_min - temp * static_cast<double>(n) * std::numbers::ln2;
      worst = std::max({worst, f - e_min, lower - f});
      if (f > e_min + 1e-9 || f < lower - 1e-9) v.fail(fmt("violated at T=%g", temp));
    }
    const LimitEstimate limit = ground_energy_via_limit(spec, schedule);
    if (limit.final_temperature != 1e-3 && std::abs(limit.final_temperature - 1e-3) > 1e-15) {
      v.fail("limit not evaluated at T = 1e-3");
    }
    if (!limit.within_bracket) v.fail("limit estimate outside its bracket");
    if (limit.upper != e_min) v.fail("limit bracket does not use the brute-force minimum");
  }
  if (v.pass) v.detail = fmt("50 instances x 40 temperatures, largest violation %.3g", worst);
  return v;
}

// 4. d lnZ / d beta = -<E> by a five-point stencil; <E> non-increasing in beta.
Verdict derivative_consistency() {
  Verdict v;
  double worst = 0.0;
  std::vector<double> betas;
  for (int k = 0; k <= 30; ++k) betas.push_back(0.01 * std::pow(1000.0, k / 30.0));
  for (std::uint64_t t = 0; t < 30; ++t) {
    const std::size_t n = 2 + t % 15;
    const unsigned bits = 4 + static_cast<unsigned>(t % 3) * 6;
    const Spectrum spec = spectrum(generate(n, bits, seed_for(404, n, bits, t)));
    const ThermoLevels levels(spec, choose_scale(spec, 10.0, ScaleMode::kAuto));
    double previous = levels.mean_energy(0.0);
    for (double beta : betas) {
      const double h = 1e-3 * beta;
      const double fd =
          (-levels.log_partition(beta + 2 * h) + 8 * levels.log_partition(beta + h) -
           8 * levels.log_partition(beta - h) + levels.log_partition(beta - 2 * h)) /
          (12 * h);
      const double mean = levels.mean_energy(beta);
      const double rel = std::abs(-fd - mean) / std::max(1.0, std::abs(mean));
      worst = std::max(worst, rel);
      if (rel > 1e-6) v.fail(fmt("derivative off by %.3g at beta=%g", rel, beta));
      if (mean > previous) v.fail(fmt("<E> increased at beta=%g", beta));
      previous = mean;
    }
  }
  if (v.pass) v.detail = fmt("30 spectra x 31 betas, worst relative error %.3g", worst);
  return v;
}

// 5. Flip symmetry: even degeneracies and eigenspace sizes; E(A) = E(~A).
Verdict symmetry_degeneracy() {
  Verdict v;
  for (std::uint64_t t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 18;
    const unsigned bits = 1 + static_cast<unsigned>(t % 6) * 4;
    const Instance inst = generate(n, bits, seed_for(505, n, bits, t));
    for (const auto& [e, g] : spectrum(inst).entries) {
      if (g % 2 != 0) v.fail("odd degeneracy");
    }
    if (ground_eigenspace(inst).states.size() % 2 != 0) v.fail("odd ground eigenspace");
  }
  std::mt19937_64 rng(5050);
  for (int pair = 0; pair < 100000; ++pair) {
    const std::size_t n = 1 + rng() % 64;
    const unsigned bits = 1 + static_cast<unsigned>(rng() % 96);
    const Instance inst = generate(n, bits, rng());
    std::uint64_t mask = rng();
    if (n < 64) mask &= (std::uint64_t{1} << n) - 1;
    const auto cfg = Configuration::from_mask(mask, n);
    if (energy(inst, cfg) != energy(inst, cfg.complement())) v.fail("E(A) != E(complement)");
  }
  if (v.pass) v.detail = "60 spectra, 100000 flip pairs";
  return v;
}

// 6. Fitted log2 slopes of the cost counters.
Verdict complexity_counters() {
  Verdict v;
  const auto start = Clock::now();
  ScalingOptions brute;
  for (std::size_t n = 10; n <= 20; ++n) brute.n_values.push_back(n);
  brute.trials = 3;
  brute.solvers = {SolverKind::kBruteForce};
  const ScalingStudy b = scaling_study(brute);

  ScalingOptions split;
  for (std::size_t n = 16; n <= 28; ++n) split.n_values.push_back(n);
  split.trials = 5;
  split.solvers = {SolverKind::kMeetInTheMiddle, SolverKind::kSchroeppelShamir};
  split.jobs = cores();
  const ScalingStudy s = scaling_study(split);

  if (b.fits.size() != 1 || s.fits.size() != 2) {
    v.fail("missing fits");
    return v;
  }
  const double brute_slope = b.fits[0].work.slope;
  const double mitm_slope = s.fits[0].work.slope;
  const double ss_peak_slope = s.fits[1].peak.slope;
  for (const auto& row : b.rows) {
    if (row.cells[0].mean_work_nodes != std::ldexp(1.0, static_cast<int>(row.n) - 1)) {
      v.fail("brute workNodes is not 2^(n-1)");
    }
  }
  if (std::abs(brute_slope - 1.0) > 1e-12) v.fail(fmt("brute slope %.15g", brute_slope));
  if (std::abs(mitm_slope - 0.5) > 0.1) v.fail(fmt("mitm slope %.4f", mitm_slope));
  if (std::abs(ss_peak_slope - 0.25) > 0.1) v.fail(fmt("ss peak slope %.4f", ss_peak_slope));
  const double secs = seconds_since(start);
  if (secs >= 300.0) v.fail(fmt("took %.1f s", secs));
  v.detail = fmt("brute %.6f, mitm %.4f, ss peak %.4f", brute_slope, mitm_slope, ss_peak_slope) +
             fmt(", %.1f s", secs) + (v.pass ? "" : "; " + v.detail);
  return v;
}

// 7. Karmarkar-Karp is a heuristic: never better than exact, sometimes worse.
Verdict heuristic_gap() {
  Verdict v;
  const Instance fixed = Instance::from_weights({8, 7, 6, 5, 4});
  const SolverResult kk = karmarkar_karp(fixed);
  if (kk.discrepancy != 2) v.fail("kk discrepancy on [8,7,6,5,4] is " + to_string(kk.discrepancy));
  for (SolverKind kind : all_solvers()) {
    if (is_exact_solver(kind) && solve(fixed, kind).discrepancy != 0) {
      v.fail(std::string(solver_name(kind)) + " nonzero on [8,7,6,5,4]");
    }
  }
  std::size_t worse = 0, total = 0;
  for (std::size_t n = 2; n <= 24; ++n) {
    for (unsigned bits : {4u, 12u, 24u, 40u}) {
      for (std::uint64_t t = 0; t < 20; ++t) {
        const Instance inst = generate(n, bits, seed_for(707, n, bits, t));
        const SolverResult h = karmarkar_karp(inst);
        const SolverResult e = meet_in_the_middle(inst);
        if (h.energy < e.energy) v.fail("kk beat the exact optimum");
        if (residual(inst, h.energy, h.witness) != 0) v.fail("kk witness residual nonzero");
        worse += h.energy > e.energy;
        ++total;
      }
    }
  }
  if (v.pass) {
    v.detail = "kk [8,7,6,5,4] -> 2 vs 0; kk worse on " + std::to_string(worse) + "/" +
               std::to_string(total);
  }
  return v;
}

// 8. The correspond subcommand exits 0 on seeded instances with n <= 20.
Verdict correspondence_gate() {
  Verdict v;
  std::size_t agreed = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 20;
    const unsigned bits = 1 + static_cast<unsigned>((t * 7) % 48);
    const std::uint64_t seed = seed_for(808, n, bits, t);
    std::ostringstream out, err;
    const int code = run_cli({"correspond", "-n", std::to_string(n), "-b", std::to_string(bits),
                              "-s", std::to_string(seed)},
                             out, err);
    if (code == 0) {
      ++agreed;
    } else {
      v.fail("exit " + std::to_string(code) + " for n=" + std::to_string(n) +
             " bits=" + std::to_string(bits) + ": " + err.str());
    }
  }
  v.detail = std::to_string(agreed) + "/100 agree" + (v.pass ? "" : "; " + v.detail);
  return v;
}

// 9. Perfect-partition fraction falls from ~1 to ~0 as bits/n crosses the boundary.
Verdict phase_direction() {
  Verdict v;
  std::vector<unsigned> bits;
  for (unsigned b = 4; b <= 40; b += 2) bits.push_back(b);
  const auto rows = phase_sweep(20, bits, 200, 909, cores());
  const auto at = [&](unsigned b) {
    return std::find_if(rows.begin(), rows.end(), [b](const PhaseRow& r) { return r.bits == b; })
        ->fraction;
  };
  if (at(4) < 0.9) v.fail(fmt("fraction %.3f at bits=4", at(4)));
  if (at(40) > 0.1) v.fail(fmt("fraction %.3f at bits=40", at(40)));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    // Three standard errors, with a floor of one event out of `trials`.
    const double noise =
        3.0 * std::hypot(rows[i].std_error, rows[i - 1].std_error) + 1.0 / rows[i].trials;
    if (rows[i].fraction > rows[i - 1].fraction + noise) {
      v.fail(fmt("fraction rises at bits=%g", rows[i].bits));
    }
  }
  v.detail = fmt("bits=4: %.3f, bits=20: %.3f, bits=40: %.3f", at(4), at(20), at(40)) +
             (v.pass ? "" : "; " + v.detail);
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"1 oracle equivalence", oracle_equivalence},
      {"2 expansion identity", expansion_identity},
      {"3 thermodynamic sandwich", thermodynamic_sandwich},
      {"4 derivative consistency", derivative_consistency},
      {"5 symmetry and degeneracy", symmetry_degeneracy},
      {"6 complexity counters", complexity_counters},
      {"7 heuristic gap", heuristic_gap},
      {"8 correspondence gate", correspondence_gate},
      {"9 phase sweep direction", phase_direction},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    failures += !v.pass;
    std::printf("%s  %-28s %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
