#include "isingnpp/solvers.h"
#include "solver_common.h"
#include "sum_kernel.h"

namespace isingnpp {
namespace {

template <class Sum>
class ListStream {
 public:
  ListStream(const std::vector<internal::SubsetSum<Sum>>& list, bool ascending)
      : list_(list), ascending_(ascending), pos_(0) {}

  bool next(Sum& sum, std::uint64_t& mask) {
    if (pos_ == list_.size()) return false;
    const auto& e = ascending_ ? list_[pos_] : list_[list_.size() - 1 - pos_];
    ++pos_;
    sum = e.sum;
    mask = e.mask;
    return true;
  }

 private:
  const std::vector<internal::SubsetSum<Sum>>& list_;
  bool ascending_;
  std::size_t pos_;
};

template <class Sum>
SolverResult run(const Instance& inst, internal::Clock::time_point start) {
  const auto w = internal::convert_weights<Sum>(inst);
  Sum total = 0;
  for (const auto& x : w) total += x;
  const std::size_t half = (inst.n() + 1) / 2;
  const std::span<const Sum> all(w);

  const auto left = internal::sorted_subset_sums<Sum>(all.first(half));
  const auto right = internal::sorted_subset_sums<Sum>(all.subspan(half));
  const std::uint64_t stored = left.size() + right.size();

  ListStream<Sum> ls(left, true), rs(right, false);
  const auto scan = internal::coordinated_scan<Sum>(ls, rs, total, parity_bound(inst));

  const std::uint64_t mask = scan.left_mask | (scan.right_mask << half);
  return internal::finish_result(inst, SolverKind::kMeetInTheMiddle,
                                 Configuration::from_mask(mask, inst.n()),
                                 internal::to_big(scan.best), true, stored + scan.steps, stored,
                                 start);
}

}  // namespace

SolverResult meet_in_the_middle(const Instance& inst, const SolverOptions& options) {
  const auto start = internal::Clock::now();
  const std::size_t half = (inst.n() + 1) / 2;
  if (inst.n() > 64 || half > options.max_list_bits) {
    throw CapacityError("meet in the middle over n=" + std::to_string(inst.n()) +
                        " needs 2^" + std::to_string(half) + " stored sums per half");
  }
  if (internal::fits_int64(inst)) return run<std::int64_t>(inst, start);
  return run<BigInt>(inst, start);
}

}  // namespace isingnpp
