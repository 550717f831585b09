#include <queue>

#include "isingnpp/solvers.h"
#include "solver_common.h"
#include "sum_kernel.h"

namespace isingnpp {
namespace {

template <class Sum>
SolverResult run(const Instance& inst, internal::Clock::time_point start) {
  const auto w = internal::convert_weights<Sum>(inst);
  const std::size_t n = w.size();

  struct Item {
    Sum value;
    std::size_t id;
  };
  // Largest value first; equal values by ascending id.
  auto order = [](const Item& a, const Item& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.id > b.id;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(order)> heap(order);
  for (std::size_t i = 0; i < n; ++i) heap.push({w[i], i});

  // Differencing a against b puts them on opposite sides; a keeps standing
  // for the combined residue, so b hangs below a in the difference tree.
  std::vector<std::pair<std::size_t, std::size_t>> attached;  // (child, parent)
  std::uint64_t steps = 0;
  while (heap.size() > 1) {
    Item a = heap.top();
    heap.pop();
    Item b = heap.top();
    heap.pop();
    attached.emplace_back(b.id, a.id);
    heap.push({a.value - b.value, a.id});
    ++steps;
  }
  const Item root = heap.top();

  // Two-colour the tree: a child is attached after its parent's own subtree
  // grew, so walking the attachments backwards always meets the parent first.
  std::vector<signed char> up(n, -1);
  up[root.id] = 1;
  for (auto it = attached.rbegin(); it != attached.rend(); ++it) {
    up[it->first] = static_cast<signed char>(!up[it->second]);
  }
  Configuration witness(n);
  for (std::size_t i = 0; i < n; ++i) witness.set_up(i, up[i] == 1);

  return internal::finish_result(inst, SolverKind::kKarmarkarKarp, std::move(witness),
                                 internal::to_big(root.value), false, steps, n, start);
}

}  // namespace

SolverResult karmarkar_karp(const Instance& inst) {
  const auto start = internal::Clock::now();
  if (internal::fits_int64(inst)) return run<std::int64_t>(inst, start);
  return run<BigInt>(inst, start);
}

}  // namespace isingnpp
