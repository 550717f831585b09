#include "isingnpp/instance.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "isingnpp/errors.h"

namespace isingnpp {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool parse_u64(std::string_view text, std::uint64_t& out) {
  if (text.empty() || text.size() > 20) return false;
  std::uint64_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
    const std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
    if (value > (UINT64_MAX - digit) / 10) return false;
    value = value * 10 + digit;
  }
  out = value;
  return true;
}

// Splits "key=value"; returns false when the key does not match.
bool take_field(std::string_view token, std::string_view key, std::string_view& value) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key ||
      token[key.size()] != '=') {
    return false;
  }
  value = token.substr(key.size() + 1);
  return true;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace

Instance Instance::create(std::vector<BigInt> weights, unsigned bits,
                          std::optional<std::uint64_t> seed) {
  if (weights.empty()) throw InvalidArgument("instance needs at least one weight (n >= 1)");
  if (bits == 0) throw InvalidArgument("bits must be >= 1");
  const BigInt limit = max_for_bits(bits);
  Instance inst;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 1) {
      throw InvalidArgument("weight " + std::to_string(i) + " must be positive");
    }
    if (weights[i] > limit) {
      throw InvalidArgument("weight " + std::to_string(i) + " exceeds 2^" +
                            std::to_string(bits) + " - 1");
    }
    inst.total_ += weights[i];
    if (weights[i] > inst.max_weight_) inst.max_weight_ = weights[i];
  }
  inst.weights_ = std::move(weights);
  inst.bits_ = bits;
  inst.seed_ = seed;
  return inst;
}

Instance Instance::from_weights(std::vector<BigInt> weights) {
  BigInt largest = 0;
  for (const auto& w : weights) largest = std::max(largest, w);
  const unsigned bits = std::max(1u, bit_length(largest));
  return create(std::move(weights), bits);
}

Instance Instance::from_weights(std::initializer_list<long long> weights) {
  std::vector<BigInt> converted;
  converted.reserve(weights.size());
  for (long long w : weights) converted.emplace_back(w);
  return from_weights(std::move(converted));
}

Instance generate(std::size_t n, unsigned bits, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("n must be >= 1");
  if (bits == 0) throw InvalidArgument("bits must be >= 1");
  std::mt19937_64 engine(seed);
  const unsigned words = (bits + 63) / 64;
  const BigInt limit = max_for_bits(bits);
  std::vector<BigInt> weights;
  weights.reserve(n);
  while (weights.size() < n) {
    BigInt value = 0;
    for (unsigned k = 0; k < words; ++k) {
      value <<= 64;
      value |= BigInt(engine());
    }
    value &= limit;
    if (value == 0) continue;
    weights.push_back(std::move(value));
  }
  return Instance::create(std::move(weights), bits, seed);
}

NormalizedInstance normalize(const Instance& inst) {
  NormalizedInstance out;
  out.scale = inst.max_weight();
  out.ratios.reserve(inst.n());
  for (const auto& w : inst.weights()) {
    out.ratios.push_back(w == out.scale ? 1.0 : ratio_to_double(w, out.scale));
  }
  return out;
}

std::string serialize(const Instance& inst) {
  std::ostringstream out;
  out << "npp v1 n=" << inst.n() << " bits=" << inst.bits() << " seed=";
  if (inst.seed()) {
    out << *inst.seed();
  } else {
    out << "none";
  }
  out << '\n';
  for (const auto& w : inst.weights()) out << w << '\n';
  return out.str();
}

Instance parse(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header");

  std::vector<std::string_view> tokens;
  {
    std::string_view header = lines[0];
    std::size_t pos = 0;
    while (pos < header.size()) {
      std::size_t end = header.find(' ', pos);
      if (end == std::string_view::npos) end = header.size();
      if (end > pos) tokens.push_back(header.substr(pos, end - pos));
      pos = end + 1;
    }
  }
  std::string_view n_text, bits_text, seed_text;
  if (tokens.size() != 5 || tokens[0] != "npp" || tokens[1] != "v1" ||
      !take_field(tokens[2], "n", n_text) || !take_field(tokens[3], "bits", bits_text) ||
      !take_field(tokens[4], "seed", seed_text)) {
    throw ParseError(1, "malformed header, expected 'npp v1 n=<N> bits=<b> seed=<s|none>'");
  }
  std::uint64_t n = 0, bits = 0;
  if (!parse_u64(n_text, n) || n == 0) throw ParseError(1, "n must be a positive integer");
  if (!parse_u64(bits_text, bits) || bits == 0 || bits > 1u << 20) {
    throw ParseError(1, "bits must be a positive integer");
  }
  std::optional<std::uint64_t> seed;
  if (seed_text != "none") {
    std::uint64_t s = 0;
    if (!parse_u64(seed_text, s)) throw ParseError(1, "seed must be an unsigned 64-bit integer or 'none'");
    seed = s;
  }

  const BigInt limit = max_for_bits(static_cast<unsigned>(bits));
  std::vector<BigInt> weights;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const std::size_t line_no = k + 1;
    if (weights.size() == n) {
      throw ParseError(line_no, "expected " + std::to_string(n) + " weights, found more");
    }
    BigInt w;
    if (!parse_decimal(lines[k], w)) throw ParseError(line_no, "malformed weight");
    if (w == 0) throw ParseError(line_no, "weight must be positive");
    if (w > limit) {
      throw ParseError(line_no, "weight exceeds 2^" + std::to_string(bits) + " - 1");
    }
    weights.push_back(std::move(w));
  }
  if (weights.size() != n) {
    throw ParseError(lines.size() + 1, "expected " + std::to_string(n) + " weights, found " +
                                           std::to_string(weights.size()));
  }
  return Instance::create(std::move(weights), static_cast<unsigned>(bits), seed);
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read instance file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t n, std::uint64_t bits,
                          std::uint64_t trial) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ n);
  h = splitmix64(h ^ bits);
  return splitmix64(h ^ trial);
}

}  // namespace isingnpp
