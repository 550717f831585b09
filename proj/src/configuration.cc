#include "isingnpp/configuration.h"

#include <bit>
#include <cstdio>

#include "isingnpp/errors.h"

namespace isingnpp {

Configuration::Configuration(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

Configuration Configuration::from_mask(std::uint64_t mask, std::size_t n) {
  if (n > 64) throw InvalidArgument("configuration mask supports at most 64 spins");
  if (n < 64 && (mask >> n) != 0) {
    throw InvalidArgument("mask has bits set beyond spin count " + std::to_string(n));
  }
  Configuration cfg(n);
  if (n > 0) cfg.words_[0] = mask;
  return cfg;
}

Configuration Configuration::from_upset(std::span<const std::size_t> up, std::size_t n) {
  Configuration cfg(n);
  for (std::size_t i : up) {
    if (i >= n) throw InvalidArgument("spin index out of range");
    cfg.set_up(i, true);
  }
  return cfg;
}

Configuration Configuration::from_signs(std::span<const int> signs) {
  Configuration cfg(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1) throw InvalidArgument("spin sign must be +1 or -1");
    cfg.set_up(i, signs[i] == 1);
  }
  return cfg;
}

void Configuration::set_up(std::size_t i, bool up) {
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (up) {
    words_[i / 64] |= bit;
  } else {
    words_[i / 64] &= ~bit;
  }
}

Configuration Configuration::complement() const {
  Configuration out = *this;
  for (auto& w : out.words_) w = ~w;
  if (n_ % 64 != 0) out.words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  return out;
}

Configuration Configuration::canonical() const {
  if (n_ == 0 || is_up(0)) return *this;
  return complement();
}

std::uint64_t Configuration::mask() const {
  if (n_ > 64) throw InvalidArgument("configuration has more than 64 spins");
  return words_.empty() ? 0 : words_[0];
}

std::vector<std::size_t> Configuration::upset() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (is_up(i)) out.push_back(i);
  }
  return out;
}

std::size_t Configuration::up_count() const {
  std::size_t count = 0;
  for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

std::string Configuration::to_hex() const {
  std::string out;
  char buf[17];
  for (std::size_t k = words_.size(); k-- > 0;) {
    if (out.empty()) {
      if (words_[k] == 0) continue;
      std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(words_[k]));
    } else {
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(words_[k]));
    }
    out += buf;
  }
  return out.empty() ? "0" : out;
}

std::strong_ordering operator<=>(const Configuration& a, const Configuration& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (std::size_t k = a.words_.size(); k-- > 0;) {
    if (auto c = a.words_[k] <=> b.words_[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace isingnpp
