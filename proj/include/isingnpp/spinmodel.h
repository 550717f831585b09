#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "isingnpp/bigint.h"
#include "isingnpp/configuration.h"
#include "isingnpp/instance.h"

namespace isingnpp {

// Eigenvalue of the diagonal Hamiltonian (sum_i q_i S_i)^2. Always the square
// of an integer discrepancy.
struct Energy {
  BigInt value;

  static Energy from_discrepancy(const BigInt& d) { return Energy{d * d}; }

  friend bool operator==(const Energy&, const Energy&) = default;
  friend std::strong_ordering operator<=>(const Energy& a, const Energy& b) {
    if (a.value < b.value) return std::strong_ordering::less;
    if (b.value < a.value) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

// Signed discrepancy sum_{i up} q_i - sum_{i down} q_i, computed as
// 2 * (up-set sum) - total. Throws InvalidArgument on a size mismatch.
BigInt discrepancy(const Instance& inst, const Configuration& cfg);
Energy energy(const Instance& inst, const Configuration& cfg);

// Degree-2 expansion of the squared sum into a constant plus pair couplings:
//   (sum_i q_i S_i)^2 = sum_i q_i^2 + sum_{i<j} 2 q_i q_j S_i S_j.
// All couplings are positive (antiferromagnetic).
struct CouplingForm {
  std::size_t n = 0;
  BigInt constant;
  std::vector<BigInt> couplings;  // upper triangle, row-major over i < j

  const BigInt& coupling(std::size_t i, std::size_t j) const;
};

CouplingForm expand_couplings(const Instance& inst);
Energy coupling_energy(const CouplingForm& form, const Configuration& cfg);

// Distinct energies with their degeneracies over all 2^n configurations.
struct Spectrum {
  std::size_t n = 0;
  std::map<BigInt, std::uint64_t> entries;
  BigInt max_weight;  // carried for the normalized thermodynamic view

  std::uint64_t total() const;
  const BigInt& min_energy() const { return entries.begin()->first; }
  const BigInt& max_energy() const { return entries.rbegin()->first; }
};

struct EnumerationOptions {
  std::size_t cap = 24;  // largest n enumerated exhaustively
  unsigned jobs = 1;     // worker threads; the result does not depend on it
};

// Throws CapacityError when inst.n() > options.cap.
Spectrum spectrum(const Instance& inst, const EnumerationOptions& options = {});

struct GroundEigenspace {
  Energy energy;
  std::vector<Configuration> states;  // ascending by up-set value
};

GroundEigenspace ground_eigenspace(const Instance& inst,
                                   const EnumerationOptions& options = {});

// |energy(inst, cfg) - candidate|; zero iff cfg is an eigenstate with that
// eigenvalue.
BigInt residual(const Instance& inst, const Energy& candidate, const Configuration& cfg);

// CSV "energy,degeneracy", ascending energy.
void write_spectrum_csv(std::ostream& out, const Spectrum& spec);

}  // namespace isingnpp
