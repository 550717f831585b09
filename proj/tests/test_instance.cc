#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "isingnpp/errors.h"
#include "isingnpp/instance.h"

using namespace isingnpp;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("generate respects the weight range") {
  const Instance inst = generate(5, 8, 42);
  CHECK(inst.n() == 5);
  CHECK(inst.bits() == 8);
  CHECK(inst.seed() == std::optional<std::uint64_t>(42));
  for (const auto& w : inst.weights()) {
    CHECK(w >= 1);
    CHECK(w <= 255);
  }
}

TEST_CASE("generate with one bit can only produce 1") {
  for (std::uint64_t seed : {0ull, 1ull, 99ull, 0xffffffffffffffffull}) {
    const Instance inst = generate(1, 1, seed);
    REQUIRE(inst.n() == 1);
    CHECK(inst.weight(0) == 1);
  }
}

TEST_CASE("generate is a pure function of (n, bits, seed)") {
  CHECK(generate(16, 20, 7) == generate(16, 20, 7));
  CHECK(serialize(generate(16, 20, 7)) == serialize(generate(16, 20, 7)));
  CHECK(generate(16, 20, 7).weights() != generate(16, 20, 8).weights());
}

TEST_CASE("generate rejects empty instances and zero bits") {
  CHECK_THROWS_AS(generate(0, 8, 1), InvalidArgument);
  CHECK_THROWS_AS(generate(4, 0, 1), InvalidArgument);
}

TEST_CASE("generator engine matches the standard's mt19937_64 reference value") {
  // The standard fixes the 10000th output of a default-seeded engine.
  std::mt19937_64 engine;
  engine.discard(9999);
  CHECK(engine() == 9981545732273789042ull);
}

TEST_CASE("generated instances match golden files") {
  const std::string dir = ISINGNPP_GOLDEN_DIR;
  CHECK(serialize(generate(5, 8, 42)) == read_file(dir + "/gen_n5_b8_s42.npp"));
  CHECK(serialize(generate(16, 20, 7)) == read_file(dir + "/gen_n16_b20_s7.npp"));
  CHECK(serialize(generate(3, 130, 5)) == read_file(dir + "/gen_n3_b130_s5.npp"));
}

TEST_CASE("generated weights stay below 2^bits") {
  for (unsigned bits : {1u, 2u, 7u, 31u, 63u, 64u, 65u, 100u, 200u}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Instance inst = generate(9, bits, seed);
      for (const auto& w : inst.weights()) {
        CHECK(w >= 1);
        CHECK(bit_length(w) <= bits);
      }
    }
  }
}

TEST_CASE("normalize divides by the largest weight") {
  auto a = normalize(Instance::from_weights({2, 4}));
  CHECK(a.scale == 4);
  CHECK(a.ratios == std::vector<double>{0.5, 1.0});

  auto b = normalize(Instance::from_weights({7}));
  CHECK(b.scale == 7);
  CHECK(b.ratios == std::vector<double>{1.0});

  auto c = normalize(Instance::from_weights({3, 1, 1}));
  CHECK(c.scale == 3);
  CHECK(c.ratios == std::vector<double>{1.0, 1.0 / 3.0, 1.0 / 3.0});
}

TEST_CASE("normalized ratios have exactly one maximum when weights are distinct") {
  const auto norm = normalize(generate(30, 40, 11));
  int ones = 0;
  for (double r : norm.ratios) {
    CHECK(r > 0.0);
    CHECK(r <= 1.0);
    ones += r == 1.0;
  }
  CHECK(ones == 1);
}

TEST_CASE("serialize writes the v1 header and one weight per line") {
  const Instance inst = Instance::create({3, 5}, 4);
  CHECK(serialize(inst) == "npp v1 n=2 bits=4 seed=none\n3\n5\n");
  CHECK(parse(serialize(inst)) == inst);
}

TEST_CASE("parse inverts serialize") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const unsigned bits = 1 + static_cast<unsigned>(rng() % 150);
    const Instance inst = generate(n, bits, rng());
    CHECK(parse(serialize(inst)) == inst);
  }
  const Instance unseeded = Instance::create({1, 2, 3}, 2);
  CHECK(parse(serialize(unseeded)) == unseeded);
}

TEST_CASE("parse reports errors with line numbers") {
  CHECK(parse_error("npp v1 n=3 bits=4 seed=none\n1\n2\n").find("expected 3 weights") !=
        std::string::npos);
  CHECK(parse_error("npp v1 n=2 bits=4 seed=none\n0\n2\n") == "line 2: weight must be positive");
  CHECK(parse_error("npp v1 n=2 bits=4 seed=none\n1\n16\n") == "line 3: weight exceeds 2^4 - 1");
  CHECK(parse_error("npp v1 n=1 bits=4 seed=none\n1\n2\n").find("line 3") == 0);
  CHECK(parse_error("npp v1 n=1 bits=4 seed=none\n-1\n") == "line 2: malformed weight");
  CHECK(parse_error("npp v1 n=1 bits=4 seed=none\n 1\n") == "line 2: malformed weight");
  CHECK(parse_error("npp v2 n=1 bits=4 seed=none\n1\n").find("line 1: malformed header") == 0);
  CHECK(parse_error("npp v1 n=0 bits=4 seed=none\n").find("line 1") == 0);
  CHECK(parse_error("npp v1 n=1 bits=0 seed=none\n1\n").find("line 1") == 0);
  CHECK(parse_error("npp v1 n=1 bits=4 seed=x\n1\n").find("line 1") == 0);
  CHECK(parse_error("").find("line 1") == 0);
}

TEST_CASE("Instance::create validates weights") {
  CHECK_THROWS_AS(Instance::create({}, 4), InvalidArgument);
  CHECK_THROWS_AS(Instance::create({0}, 4), InvalidArgument);
  CHECK_THROWS_AS(Instance::create({16}, 4), InvalidArgument);
  CHECK_NOTHROW(Instance::create({15}, 4));
  const auto inst = Instance::from_weights({8, 7, 6, 5, 4});
  CHECK(inst.bits() == 4);
  CHECK(inst.total() == 30);
  CHECK(inst.max_weight() == 8);
}

TEST_CASE("derive_seed separates cells") {
  CHECK(derive_seed(1, 20, 8, 0) == derive_seed(1, 20, 8, 0));
  CHECK(derive_seed(1, 20, 8, 0) != derive_seed(1, 20, 8, 1));
  CHECK(derive_seed(1, 20, 8, 0) != derive_seed(1, 20, 9, 0));
  CHECK(derive_seed(1, 20, 8, 0) != derive_seed(1, 21, 8, 0));
  CHECK(derive_seed(1, 20, 8, 0) != derive_seed(2, 20, 8, 0));
}
