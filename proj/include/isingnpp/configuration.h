#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace isingnpp {

// A sign assignment S in {-1,+1}^n stored as its up-set: bit i is set iff
// spin i points up (S_i = +1). Spins are indexed from 0. Bits at positions
// >= n are always clear.
//
// Ordering compares n first, then the up-set as an unsigned integer, so
// sorting a list of configurations sorts it by bitmask value.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::size_t n);  // all spins down

  // Throws InvalidArgument if n > 64 or mask has bits at or above n.
  static Configuration from_mask(std::uint64_t mask, std::size_t n);
  // Throws InvalidArgument on an index >= n.
  static Configuration from_upset(std::span<const std::size_t> up, std::size_t n);
  // signs[i] must be +1 or -1.
  static Configuration from_signs(std::span<const int> signs);

  std::size_t n() const { return n_; }
  bool is_up(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1u;
  }
  int sign(std::size_t i) const { return is_up(i) ? 1 : -1; }
  void set_up(std::size_t i, bool up);

  Configuration complement() const;
  // Orientation with spin 0 up; every configuration and its complement map
  // to the same canonical form.
  Configuration canonical() const;

  // Requires n <= 64.
  std::uint64_t mask() const;
  std::vector<std::size_t> upset() const;
  std::size_t up_count() const;
  // Lower-case hex of the up-set value without leading zeros ("0" if empty).
  std::string to_hex() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend std::strong_ordering operator<=>(const Configuration& a,
                                          const Configuration& b);

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace isingnpp
