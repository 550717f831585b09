#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isingnpp/bigint.h"

namespace isingnpp {

// Positive integer weights q_1..q_n shared by the spin glass and the
// partitioning problem. Every weight lies in [1, 2^bits - 1]. Immutable.
class Instance {
 public:
  // Throws InvalidArgument when a weight is out of range, n == 0 or bits == 0.
  static Instance create(std::vector<BigInt> weights, unsigned bits,
                         std::optional<std::uint64_t> seed = std::nullopt);
  // Uses the smallest bits that fits the largest weight.
  static Instance from_weights(std::vector<BigInt> weights);
  static Instance from_weights(std::initializer_list<long long> weights);

  std::size_t n() const { return weights_.size(); }
  const std::vector<BigInt>& weights() const { return weights_; }
  const BigInt& weight(std::size_t i) const { return weights_[i]; }
  unsigned bits() const { return bits_; }
  const std::optional<std::uint64_t>& seed() const { return seed_; }

  const BigInt& total() const { return total_; }
  const BigInt& max_weight() const { return max_weight_; }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.bits_ == b.bits_ && a.seed_ == b.seed_ && a.weights_ == b.weights_;
  }

 private:
  Instance() = default;

  std::vector<BigInt> weights_;
  unsigned bits_ = 0;
  std::optional<std::uint64_t> seed_;
  BigInt total_;
  BigInt max_weight_;
};

struct NormalizedInstance {
  BigInt scale;                // max_i q_i
  std::vector<double> ratios;  // q_i / scale, each in (0, 1]
};

// Draws n weights uniformly from [1, 2^bits - 1].
//
// Generator: std::mt19937_64 seeded with `seed` (its output sequence is fixed
// by the C++ standard). Each weight is assembled from ceil(bits / 64)
// consecutive 64-bit outputs, most significant word first, truncated to its
// low `bits` bits; a zero draw is rejected and redrawn. The result depends
// only on (n, bits, seed).
Instance generate(std::size_t n, unsigned bits, std::uint64_t seed);

NormalizedInstance normalize(const Instance& inst);

// Text format:
//   npp v1 n=<N> bits=<b> seed=<s|none>
// followed by N lines holding one decimal weight each. LF line endings.
std::string serialize(const Instance& inst);
// Throws ParseError naming the offending line.
Instance parse(std::string_view text);
// Throws Error if the file cannot be read, ParseError on bad content.
Instance read_instance_file(const std::string& path);

// Per-trial seed for experiments: a splitmix64 chain over
// (seed, n, bits, trial), so every cell of a sweep is reproducible on its own.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t n, std::uint64_t bits,
                          std::uint64_t trial);

}  // namespace isingnpp
