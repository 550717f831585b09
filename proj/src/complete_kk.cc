#include <algorithm>

#include "isingnpp/solvers.h"
#include "solver_common.h"
#include "sum_kernel.h"

namespace isingnpp {
namespace {

template <class Sum>
class CompleteKk {
 public:
  CompleteKk(const Instance& inst, std::optional<std::uint64_t> budget)
      : n_(inst.n()), budget_(budget), floor_(parity_bound(inst)), best_witness_(inst.n()) {
    const auto w = internal::convert_weights<Sum>(inst);
    Sum total = 0;
    List list;
    for (std::size_t i = 0; i < n_; ++i) {
      list.push_back({w[i], i});
      total += w[i];
    }
    std::sort(list.begin(), list.end(), Before{});
    best_ = total + 1;
    search(list);
  }

  bool complete() const { return !exhausted_; }
  const Sum& best() const { return best_; }
  const Configuration& witness() const { return best_witness_; }
  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t peak_stored() const { return peak_stored_; }

 private:
  // A group is a single item (id < n) or a combination of two groups: on
  // opposite sides for a difference, on the same side for a sum.
  struct Group {
    std::size_t a;
    std::size_t b;
    bool same_side;
  };
  struct Entry {
    Sum value;
    std::size_t id;
  };
  using List = std::vector<Entry>;
  // Descending value, then ascending id.
  struct Before {
    bool operator()(const Entry& x, const Entry& y) const {
      if (x.value != y.value) return y.value < x.value;
      return x.id < y.id;
    }
  };

  bool done() const { return exhausted_ || best_ <= floor_; }

  void search(const List& list) {
    // The budget only applies once the first descent (plain differencing)
    // has produced an incumbent.
    if (budget_ && nodes_ >= *budget_ && have_incumbent_) {
      exhausted_ = true;
      return;
    }
    ++nodes_;
    stored_ += list.size();
    peak_stored_ = std::max(peak_stored_, stored_);
    expand(list);
    stored_ -= list.size();
  }

  void expand(const List& list) {
    if (list.size() == 1) {
      record(list[0].value, list, true);
      return;
    }
    Sum rest = 0;
    for (std::size_t k = 1; k < list.size(); ++k) rest += list[k].value;
    if (!(list[0].value < rest)) {
      // The largest number outweighs everything else: its best residue is
      // forced, with all other groups on the opposite side.
      record(list[0].value - rest, list, false);
      return;
    }
    // A lower bound no better than the incumbent prunes both branches.
    if (!(floor_ < best_)) return;

    const Entry& a = list[0];
    const Entry& b = list[1];
    for (bool same_side : {false, true}) {
      const std::size_t id = n_ + groups_.size();
      groups_.push_back({a.id, b.id, same_side});
      List child(list.begin() + 2, list.end());
      Entry merged{same_side ? Sum(a.value + b.value) : Sum(a.value - b.value), id};
      child.insert(std::upper_bound(child.begin(), child.end(), merged, Before{}), merged);
      search(child);
      groups_.pop_back();
      if (done()) return;
    }
  }

  // single_group: the residue is list[0] alone; otherwise list[0] against
  // every other group.
  void record(const Sum& residue, const List& list, bool single_group) {
    if (!(residue < best_)) return;
    best_ = residue;
    have_incumbent_ = true;
    Configuration cfg(n_);
    assign(list[0].id, true, cfg);
    if (!single_group) {
      for (std::size_t k = 1; k < list.size(); ++k) assign(list[k].id, false, cfg);
    }
    best_witness_ = std::move(cfg);
  }

  void assign(std::size_t id, bool up, Configuration& cfg) const {
    if (id < n_) {
      cfg.set_up(id, up);
      return;
    }
    const Group& g = groups_[id - n_];
    assign(g.a, up, cfg);
    assign(g.b, g.same_side ? up : !up, cfg);
  }

  std::size_t n_;
  std::optional<std::uint64_t> budget_;
  unsigned floor_;
  std::vector<Group> groups_;
  Sum best_;
  Configuration best_witness_;
  std::uint64_t nodes_ = 0;
  std::uint64_t stored_ = 0;
  std::uint64_t peak_stored_ = 0;
  bool exhausted_ = false;
  bool have_incumbent_ = false;
};

template <class Sum>
SolverResult run(const Instance& inst, const SolverOptions& options,
                 internal::Clock::time_point start) {
  CompleteKk<Sum> search(inst, options.node_budget);
  return internal::finish_result(inst, SolverKind::kCompleteKarmarkarKarp, search.witness(),
                                 internal::to_big(search.best()), search.complete(),
                                 search.nodes(), search.peak_stored(), start);
}

}  // namespace

SolverResult complete_kk(const Instance& inst, const SolverOptions& options) {
  const auto start = internal::Clock::now();
  if (internal::fits_int64(inst)) return run<std::int64_t>(inst, options, start);
  return run<BigInt>(inst, options, start);
}

}  // namespace isingnpp
