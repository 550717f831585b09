#pragma once

#include <chrono>

#include "isingnpp/errors.h"
#include "isingnpp/solvers.h"

namespace isingnpp::internal {

using Clock = std::chrono::steady_clock;

// Fills energy/discrepancy from the witness itself (exact re-evaluation) and
// orients the witness with spin 0 up. `claimed` is the discrepancy the
// search believes it found; a mismatch is a bug.
SolverResult finish_result(const Instance& inst, SolverKind kind, Configuration witness,
                           const BigInt& claimed, bool exact, std::uint64_t work_nodes,
                           std::uint64_t peak_stored, Clock::time_point start);

}  // namespace isingnpp::internal
