#include "isingnpp/solvers.h"
#include "solver_common.h"
#include "sum_kernel.h"

namespace isingnpp {
namespace {

template <class Sum>
SolverResult scan_all(const Instance& inst, internal::Clock::time_point start) {
  const auto w = internal::convert_weights<Sum>(inst);
  Sum total = 0;
  for (const auto& x : w) total += x;
  const std::uint64_t count = std::uint64_t{1} << (inst.n() - 1);

  // No early exit: the scan certifies the optimum by visiting every
  // configuration, and the strict comparison keeps the smallest up-set.
  Sum best = total + 1;
  std::uint64_t best_mask = 1;
  internal::for_each_canonical<Sum>(w, total, 0, count, [&](std::uint64_t mask, const Sum& d) {
    const Sum a = internal::abs_value(d);
    if (a < best) {
      best = a;
      best_mask = mask;
    }
  });
  return internal::finish_result(inst, SolverKind::kBruteForce,
                                 Configuration::from_mask(best_mask, inst.n()),
                                 internal::to_big(best), true, count, 1, start);
}

}  // namespace

SolverResult brute_force(const Instance& inst, const SolverOptions& options) {
  const auto start = internal::Clock::now();
  if (inst.n() > options.brute_force_cap || inst.n() > 63) {
    throw CapacityError("brute force over n=" + std::to_string(inst.n()) +
                        " exceeds cap " + std::to_string(options.brute_force_cap) +
                        "; use mitm or ss");
  }
  if (internal::fits_int64(inst)) return scan_all<std::int64_t>(inst, start);
  return scan_all<BigInt>(inst, start);
}

}  // namespace isingnpp
