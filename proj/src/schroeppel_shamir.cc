#include <queue>

#include "isingnpp/solvers.h"
#include "solver_common.h"
#include "sum_kernel.h"

namespace isingnpp {
namespace {

struct StorageMeter {
  std::uint64_t current = 0;
  std::uint64_t peak = 0;
  std::uint64_t produced = 0;  // half sums popped from either heap

  void add(std::uint64_t k) {
    current += k;
    peak = std::max(peak, current);
  }
  void remove(std::uint64_t k) { current -= k; }
};

// Streams every sum first[i] + second[j] in sorted order (ascending or
// descending) while storing one heap entry per element of `first`.
template <class Sum>
class PairHeapStream {
 public:
  PairHeapStream(const std::vector<internal::SubsetSum<Sum>>& first,
                 const std::vector<internal::SubsetSum<Sum>>& second, unsigned second_shift,
                 bool ascending, StorageMeter& meter)
      : first_(first),
        second_(second),
        shift_(second_shift),
        ascending_(ascending),
        heap_(Order{ascending}),
        meter_(meter) {
    const std::uint32_t j0 = ascending_ ? 0 : static_cast<std::uint32_t>(second_.size() - 1);
    for (std::uint32_t i = 0; i < first_.size(); ++i) push(i, j0);
  }

  bool next(Sum& sum, std::uint64_t& mask) {
    if (heap_.empty()) return false;
    const Entry top = heap_.top();
    heap_.pop();
    meter_.remove(1);
    ++meter_.produced;
    sum = top.sum;
    mask = first_[top.i].mask | (second_[top.j].mask << shift_);
    if (ascending_) {
      if (top.j + 1 < second_.size()) push(top.i, top.j + 1);
    } else {
      if (top.j > 0) push(top.i, top.j - 1);
    }
    return true;
  }

 private:
  struct Entry {
    Sum sum;
    std::uint32_t i;
    std::uint32_t j;
  };
  // priority_queue puts the "largest" on top, so the ascending stream orders
  // by greater-than. Index tie-breaks keep the stream deterministic.
  struct Order {
    bool ascending;
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.sum != b.sum) return ascending ? a.sum > b.sum : a.sum < b.sum;
      if (a.i != b.i) return a.i > b.i;
      return a.j > b.j;
    }
  };

  void push(std::uint32_t i, std::uint32_t j) {
    heap_.push(Entry{first_[i].sum + second_[j].sum, i, j});
    meter_.add(1);
  }

  const std::vector<internal::SubsetSum<Sum>>& first_;
  const std::vector<internal::SubsetSum<Sum>>& second_;
  unsigned shift_;
  bool ascending_;
  std::priority_queue<Entry, std::vector<Entry>, Order> heap_;
  StorageMeter& meter_;
};

template <class Sum>
SolverResult run(const Instance& inst, internal::Clock::time_point start) {
  const auto w = internal::convert_weights<Sum>(inst);
  Sum total = 0;
  for (const auto& x : w) total += x;
  const std::size_t n = inst.n();
  const std::size_t half = (n + 1) / 2;
  const std::size_t left_q = (half + 1) / 2;
  const std::size_t right_q = (n - half + 1) / 2;
  const std::span<const Sum> all(w);

  StorageMeter meter;
  const auto a = internal::sorted_subset_sums<Sum>(all.subspan(0, left_q));
  const auto b = internal::sorted_subset_sums<Sum>(all.subspan(left_q, half - left_q));
  const auto c = internal::sorted_subset_sums<Sum>(all.subspan(half, right_q));
  const auto d = internal::sorted_subset_sums<Sum>(all.subspan(half + right_q));
  const std::uint64_t quarter_sums = a.size() + b.size() + c.size() + d.size();
  meter.add(quarter_sums);

  PairHeapStream<Sum> left(a, b, static_cast<unsigned>(left_q), true, meter);
  PairHeapStream<Sum> right(c, d, static_cast<unsigned>(right_q), false, meter);
  const auto scan = internal::coordinated_scan<Sum>(left, right, total, parity_bound(inst));

  const std::uint64_t mask = scan.left_mask | (scan.right_mask << half);
  return internal::finish_result(inst, SolverKind::kSchroeppelShamir,
                                 Configuration::from_mask(mask, n), internal::to_big(scan.best),
                                 true, quarter_sums + meter.produced, meter.peak, start);
}

}  // namespace

SolverResult schroeppel_shamir(const Instance& inst, const SolverOptions& options) {
  if (inst.n() < 4) {
    auto r = meet_in_the_middle(inst, options);
    r.solver = SolverKind::kSchroeppelShamir;
    return r;
  }
  const auto start = internal::Clock::now();
  const std::size_t quarter = (inst.n() + 3) / 4;
  if (inst.n() > 64 || quarter > options.max_list_bits) {
    throw CapacityError("Schroeppel-Shamir over n=" + std::to_string(inst.n()) +
                        " needs 2^" + std::to_string(quarter) + " stored sums per quarter");
  }
  if (internal::fits_int64(inst)) return run<std::int64_t>(inst, start);
  return run<BigInt>(inst, start);
}

}  // namespace isingnpp
