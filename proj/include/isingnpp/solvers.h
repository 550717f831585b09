#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isingnpp/bigint.h"
#include "isingnpp/configuration.h"
#include "isingnpp/instance.h"
#include "isingnpp/spinmodel.h"

namespace isingnpp {

enum class SolverKind {
  kBruteForce,
  kMeetInTheMiddle,
  kSchroeppelShamir,
  kKarmarkarKarp,
  kCompleteKarmarkarKarp,
};

// Short names used on the command line and in reports: brute, mitm, ss, kk, ckk.
std::string_view solver_name(SolverKind kind);
std::optional<SolverKind> solver_from_name(std::string_view name);
std::vector<SolverKind> all_solvers();
bool is_exact_solver(SolverKind kind);

struct SolverResult {
  SolverKind solver = SolverKind::kBruteForce;
  Energy energy;        // discrepancy^2
  BigInt discrepancy;   // >= 0
  Configuration witness;  // spin 0 up
  bool exact = false;     // optimum proven
  std::uint64_t work_nodes = 0;   // partial solutions / subset sums examined
  std::uint64_t peak_stored = 0;  // most subset sums held at once
  std::chrono::nanoseconds wall_time{0};
};

struct SolverOptions {
  std::size_t brute_force_cap = 28;
  // Largest half (meet-in-the-middle) or quarter (Schroeppel-Shamir) list
  // size, as a power of two, before a CapacityError.
  unsigned max_list_bits = 30;
  // complete_kk stops after this many search nodes and reports exact = false.
  // The first descent (plain differencing) always completes.
  std::optional<std::uint64_t> node_budget;
};

// 0 when the total weight is even, 1 when odd. No split can do better.
unsigned parity_bound(const Instance& inst);

// Exhaustive scan of the 2^(n-1) configurations with spin 0 up, in ascending
// up-set order. Returns the smallest optimal up-set. work_nodes = 2^(n-1).
// Throws CapacityError when n > options.brute_force_cap.
SolverResult brute_force(const Instance& inst, const SolverOptions& options = {});

// Horowitz-Sahni: the first ceil(n/2) spins form the left half. Both halves'
// subset sums are generated in sorted order and matched by one coordinated
// scan (left ascending, right descending).
// work_nodes = 2^|L| + 2^|R| + scan steps; peak_stored = 2^|L| + 2^|R|.
SolverResult meet_in_the_middle(const Instance& inst, const SolverOptions& options = {});

// Same scan as meet_in_the_middle, but each half's sums are streamed in order
// from its two quarter lists through a heap over quarter pairs, so only
// O(2^(n/4)) sums are stored. Falls back to meet_in_the_middle for n < 4.
SolverResult schroeppel_shamir(const Instance& inst, const SolverOptions& options = {});

// Largest differencing method. exact = false.
SolverResult karmarkar_karp(const Instance& inst);

// Complete differencing search (difference branch first, then sum), pruned
// when the largest remaining number dominates the rest and stopped once the
// parity bound is reached.
SolverResult complete_kk(const Instance& inst, const SolverOptions& options = {});

SolverResult solve(const Instance& inst, SolverKind kind, const SolverOptions& options = {});

}  // namespace isingnpp
