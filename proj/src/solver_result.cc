#include <stdexcept>

#include "solver_common.h"

namespace isingnpp {

std::string_view solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::kBruteForce: return "brute";
    case SolverKind::kMeetInTheMiddle: return "mitm";
    case SolverKind::kSchroeppelShamir: return "ss";
    case SolverKind::kKarmarkarKarp: return "kk";
    case SolverKind::kCompleteKarmarkarKarp: return "ckk";
  }
  return "?";
}

std::optional<SolverKind> solver_from_name(std::string_view name) {
  for (SolverKind k : all_solvers()) {
    if (solver_name(k) == name) return k;
  }
  return std::nullopt;
}

std::vector<SolverKind> all_solvers() {
  return {SolverKind::kBruteForce, SolverKind::kMeetInTheMiddle, SolverKind::kSchroeppelShamir,
          SolverKind::kKarmarkarKarp, SolverKind::kCompleteKarmarkarKarp};
}

bool is_exact_solver(SolverKind kind) { return kind != SolverKind::kKarmarkarKarp; }

unsigned parity_bound(const Instance& inst) {
  return static_cast<unsigned>(boost::multiprecision::bit_test(inst.total(), 0));
}

SolverResult solve(const Instance& inst, SolverKind kind, const SolverOptions& options) {
  switch (kind) {
    case SolverKind::kBruteForce: return brute_force(inst, options);
    case SolverKind::kMeetInTheMiddle: return meet_in_the_middle(inst, options);
    case SolverKind::kSchroeppelShamir: return schroeppel_shamir(inst, options);
    case SolverKind::kKarmarkarKarp: return karmarkar_karp(inst);
    case SolverKind::kCompleteKarmarkarKarp: return complete_kk(inst, options);
  }
  throw InvalidArgument("unknown solver");
}

namespace internal {

SolverResult finish_result(const Instance& inst, SolverKind kind, Configuration witness,
                           const BigInt& claimed, bool exact, std::uint64_t work_nodes,
                           std::uint64_t peak_stored, Clock::time_point start) {
  SolverResult r;
  r.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  r.solver = kind;
  r.witness = witness.canonical();
  BigInt d = discrepancy(inst, r.witness);
  if (d < 0) d = -d;
  if (d != claimed) {
    throw std::logic_error(std::string(solver_name(kind)) + ": witness discrepancy " +
                           to_string(d) + " differs from search value " + to_string(claimed));
  }
  r.energy = Energy::from_discrepancy(d);
  r.discrepancy = std::move(d);
  r.exact = exact;
  r.work_nodes = work_nodes;
  r.peak_stored = peak_stored;
  return r;
}

}  // namespace internal
}  // namespace isingnpp
