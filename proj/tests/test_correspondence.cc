#include <doctest.h>

#include <cmath>
#include <numbers>

#include "isingnpp/correspondence.h"
#include "isingnpp/errors.h"
#include "oracles.h"

using namespace isingnpp;
using doctest::Approx;

TEST_CASE("correspond on two equal weights") {
  const auto r = correspond(Instance::from_weights({1, 1}));
  CHECK(r.agree);
  CHECK(r.e_ground_solver.value == 0);
  REQUIRE(r.e_ground_spectrum);
  CHECK(r.e_ground_spectrum->value == 0);
  CHECK(r.degeneracy == std::optional<std::size_t>(2));
  REQUIRE(r.limit);
  CHECK(r.limit->scale == 1);
  const double t = r.limit->final_temperature;
  CHECK(r.limit->estimate <= 0.0);
  CHECK(r.limit->estimate >= -2 * t * std::numbers::ln2);
}

TEST_CASE("correspond on small fixed instances") {
  const auto three = correspond(Instance::from_weights({3, 1, 1}));
  CHECK(three.agree);
  CHECK(three.e_ground_solver.value == 1);
  CHECK(three.e_ground_spectrum->value == 1);
  CHECK(three.degeneracy == std::optional<std::size_t>(2));
  CHECK(three.witness_in_eigenspace == std::optional<bool>(true));
  CHECK(three.eigenspace_residuals_zero == std::optional<bool>(true));

  const auto five = correspond(Instance::from_weights({8, 7, 6, 5, 4}));
  CHECK(five.agree);
  CHECK(five.e_ground_solver.value == 0);
  CHECK(five.solver == SolverKind::kBruteForce);
}

TEST_CASE("correspond marks infeasible legs absent") {
  CorrespondenceOptions options;
  options.enumeration_cap = 10;
  options.solver.brute_force_cap = 10;
  const auto r = correspond(generate(12, 16, 5), options);
  CHECK(r.solver == SolverKind::kMeetInTheMiddle);
  CHECK_FALSE(r.e_ground_spectrum);
  CHECK_FALSE(r.limit);
  CHECK_FALSE(r.degeneracy);
  CHECK(r.agree);
  CHECK(r.e_ground_solver.value == oracle::min_energy(generate(12, 16, 5).weights()));
}

TEST_CASE("correspond agrees on random instances") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = generate(2 + seed % 12, 4 + static_cast<unsigned>(seed % 20), seed);
    const auto r = correspond(inst);
    CHECK(r.agree);
    CHECK(*r.degeneracy % 2 == 0);
  }
}

TEST_CASE("fit_log2 recovers exact lines") {
  const auto fit = fit_log2({1, 2, 3, 4}, {2, 4, 8, 16});
  CHECK(fit.slope == Approx(1.0).epsilon(1e-14));
  CHECK(fit.intercept == Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(fit.rms_residual < 1e-12);
  CHECK_THROWS_AS(fit_log2({1, 1}, {2, 4}), InvalidArgument);
}

TEST_CASE("scaling study on brute force has slope exactly one") {
  ScalingOptions options;
  options.n_values = {8, 9, 10, 11, 12};
  options.bits = 16;
  options.trials = 3;
  options.solvers = {SolverKind::kBruteForce, SolverKind::kMeetInTheMiddle};
  const auto study = scaling_study(options);
  REQUIRE(study.rows.size() == 5);
  REQUIRE(study.fits.size() == 2);
  CHECK(study.rows[2].cells[0].mean_work_nodes == 512.0);
  CHECK(study.fits[0].work.slope == Approx(1.0).epsilon(1e-12));
  CHECK(study.fits[0].avogadro_log2_work == Approx(study.fits[0].work.log2_at(kAvogadroSpins)));
  CHECK(study.fits[1].work.slope > 0.3);
  CHECK(study.fits[1].work.slope < 0.7);
}

TEST_CASE("scaling study records capacity errors per cell") {
  ScalingOptions options;
  options.n_values = {4, 6};
  options.trials = 2;
  options.solvers = {SolverKind::kBruteForce};
  options.solver.brute_force_cap = 5;
  const auto study = scaling_study(options);
  CHECK(study.rows[0].cells[0].completed == 2);
  CHECK(study.rows[1].cells[0].completed == 0);
  CHECK_FALSE(study.rows[1].cells[0].error.empty());
  CHECK(study.fits.empty());
}

TEST_CASE("scaling study does not depend on the worker count") {
  ScalingOptions options;
  options.n_values = {10, 14};
  options.trials = 6;
  options.solvers = {SolverKind::kSchroeppelShamir, SolverKind::kCompleteKarmarkarKarp};
  const auto a = scaling_study(options);
  options.jobs = 4;
  const auto b = scaling_study(options);
  for (std::size_t r = 0; r < a.rows.size(); ++r) {
    for (std::size_t c = 0; c < a.rows[r].cells.size(); ++c) {
      CHECK(a.rows[r].cells[c].mean_work_nodes == b.rows[r].cells[c].mean_work_nodes);
      CHECK(a.rows[r].cells[c].mean_peak_stored == b.rows[r].cells[c].mean_peak_stored);
    }
  }
}

TEST_CASE("phase sweep rows") {
  const auto rows = phase_sweep(12, {30, 2, 12}, 20, 9, 2);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].bits == 2);
  CHECK(rows[2].bits == 30);
  CHECK(rows[0].alpha == Approx(2.0 / 12));
  CHECK(rows[0].fraction == 1.0);
  CHECK(rows[2].fraction == 0.0);
  CHECK(rows[1].std_error ==
        Approx(std::sqrt(rows[1].fraction * (1 - rows[1].fraction) / 20)));
  CHECK(phase_sweep(12, {2, 12, 30}, 20, 9, 1)[1].perfect == rows[1].perfect);
  CHECK_THROWS_AS(phase_sweep(12, {4}, 0, 1), InvalidArgument);
}
