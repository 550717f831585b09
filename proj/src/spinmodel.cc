#include "isingnpp/spinmodel.h"

#include <algorithm>
#include <thread>

#include "isingnpp/errors.h"
#include "sum_kernel.h"

namespace isingnpp {
namespace {

void check_size(const Instance& inst, const Configuration& cfg) {
  if (cfg.n() != inst.n()) {
    throw InvalidArgument("configuration has " + std::to_string(cfg.n()) +
                          " spins, instance has " + std::to_string(inst.n()));
  }
}

void check_cap(const Instance& inst, const EnumerationOptions& options) {
  if (inst.n() > options.cap || inst.n() > 40) {
    throw CapacityError("exhaustive enumeration of n=" + std::to_string(inst.n()) +
                        " spins exceeds cap " + std::to_string(std::min<std::size_t>(options.cap, 40)) +
                        "; use the solvers for the ground energy");
  }
}

// Run-length encoded |discrepancy| values of canonical configurations.
template <class Sum>
using Histogram = std::vector<std::pair<Sum, std::uint64_t>>;

template <class Sum>
Histogram<Sum> histogram_range(std::span<const Sum> w, const Sum& total, std::uint64_t begin,
                               std::uint64_t end) {
  std::vector<Sum> values;
  values.reserve(end - begin);
  internal::for_each_canonical<Sum>(w, total, begin, end, [&](std::uint64_t, const Sum& d) {
    values.push_back(internal::abs_value(d));
  });
  std::sort(values.begin(), values.end());
  Histogram<Sum> out;
  for (auto& v : values) {
    if (!out.empty() && out.back().first == v) {
      ++out.back().second;
    } else {
      out.emplace_back(std::move(v), 1);
    }
  }
  return out;
}

template <class Sum>
Spectrum spectrum_impl(const Instance& inst, unsigned jobs) {
  const auto w = internal::convert_weights<Sum>(inst);
  Sum total = 0;
  for (const auto& x : w) total += x;
  const std::uint64_t count = std::uint64_t{1} << (inst.n() - 1);
  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::uint64_t>(jobs, 1, std::max<std::uint64_t>(1, count / 4096)));

  std::vector<Histogram<Sum>> parts(workers);
  if (workers == 1) {
    parts[0] = histogram_range<Sum>(w, total, 0, count);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < workers; ++t) {
      threads.emplace_back([&, t] {
        const std::uint64_t lo = count * t / workers;
        const std::uint64_t hi = count * (t + 1) / workers;
        parts[t] = histogram_range<Sum>(w, total, lo, hi);
      });
    }
    for (auto& th : threads) th.join();
  }

  Histogram<Sum> merged;
  for (auto& p : parts) {
    merged.insert(merged.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  Spectrum spec;
  spec.n = inst.n();
  spec.max_weight = inst.max_weight();
  for (std::size_t i = 0; i < merged.size();) {
    std::uint64_t degeneracy = 0;
    std::size_t j = i;
    for (; j < merged.size() && merged[j].first == merged[i].first; ++j) degeneracy += merged[j].second;
    const BigInt d = internal::to_big(merged[i].first);
    // Each canonical configuration stands for itself and its complement.
    spec.entries.emplace_hint(spec.entries.end(), d * d, 2 * degeneracy);
    i = j;
  }
  return spec;
}

template <class Sum>
GroundEigenspace eigenspace_impl(const Instance& inst) {
  const auto w = internal::convert_weights<Sum>(inst);
  Sum total = 0;
  for (const auto& x : w) total += x;
  const std::uint64_t count = std::uint64_t{1} << (inst.n() - 1);

  Sum best = internal::abs_value(total) + 1;
  std::vector<std::uint64_t> masks;
  internal::for_each_canonical<Sum>(w, total, 0, count, [&](std::uint64_t mask, const Sum& d) {
    const Sum a = internal::abs_value(d);
    if (a < best) {
      best = a;
      masks.clear();
    }
    if (a == best) masks.push_back(mask);
  });

  GroundEigenspace out;
  out.energy = Energy::from_discrepancy(internal::to_big(best));
  for (auto m : masks) {
    auto cfg = Configuration::from_mask(m, inst.n());
    out.states.push_back(cfg.complement());
    out.states.push_back(std::move(cfg));
  }
  std::sort(out.states.begin(), out.states.end());
  return out;
}

}  // namespace

BigInt discrepancy(const Instance& inst, const Configuration& cfg) {
  check_size(inst, cfg);
  BigInt up = 0;
  for (std::size_t i = 0; i < inst.n(); ++i) {
    if (cfg.is_up(i)) up += inst.weight(i);
  }
  return 2 * up - inst.total();
}

Energy energy(const Instance& inst, const Configuration& cfg) {
  return Energy::from_discrepancy(discrepancy(inst, cfg));
}

const BigInt& CouplingForm::coupling(std::size_t i, std::size_t j) const {
  if (i >= j || j >= n) throw InvalidArgument("coupling index requires i < j < n");
  // Row i starts after rows 0..i-1, which hold (n-1) + ... + (n-i) entries.
  const std::size_t row_start = i * (2 * n - i - 1) / 2;
  return couplings[row_start + (j - i - 1)];
}

CouplingForm expand_couplings(const Instance& inst) {
  CouplingForm form;
  form.n = inst.n();
  const auto& q = inst.weights();
  for (std::size_t i = 0; i < form.n; ++i) {
    form.constant += q[i] * q[i];
    for (std::size_t j = i + 1; j < form.n; ++j) form.couplings.push_back(2 * q[i] * q[j]);
  }
  return form;
}

Energy coupling_energy(const CouplingForm& form, const Configuration& cfg) {
  if (cfg.n() != form.n) throw InvalidArgument("configuration size does not match coupling form");
  BigInt value = form.constant;
  std::size_t k = 0;
  for (std::size_t i = 0; i < form.n; ++i) {
    for (std::size_t j = i + 1; j < form.n; ++j, ++k) {
      if (cfg.is_up(i) == cfg.is_up(j)) {
        value += form.couplings[k];
      } else {
        value -= form.couplings[k];
      }
    }
  }
  return Energy{std::move(value)};
}

std::uint64_t Spectrum::total() const {
  std::uint64_t sum = 0;
  for (const auto& [e, g] : entries) sum += g;
  return sum;
}

Spectrum spectrum(const Instance& inst, const EnumerationOptions& options) {
  check_cap(inst, options);
  if (internal::fits_int64(inst)) return spectrum_impl<std::int64_t>(inst, options.jobs);
  return spectrum_impl<BigInt>(inst, options.jobs);
}

GroundEigenspace ground_eigenspace(const Instance& inst, const EnumerationOptions& options) {
  check_cap(inst, options);
  if (internal::fits_int64(inst)) return eigenspace_impl<std::int64_t>(inst);
  return eigenspace_impl<BigInt>(inst);
}

BigInt residual(const Instance& inst, const Energy& candidate, const Configuration& cfg) {
  const BigInt diff = energy(inst, cfg).value - candidate.value;
  return diff < 0 ? BigInt(-diff) : diff;
}

void write_spectrum_csv(std::ostream& out, const Spectrum& spec) {
  out << "energy,degeneracy\n";
  for (const auto& [e, g] : spec.entries) out << e << ',' << g << '\n';
}

}  // namespace isingnpp
