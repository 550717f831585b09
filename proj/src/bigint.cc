#include "isingnpp/bigint.h"

#include <boost/multiprecision/cpp_int.hpp>

namespace isingnpp {

std::string to_string(const BigInt& value) { return value.str(); }

bool parse_decimal(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  BigInt result = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
    result *= 10;
    result += c - '0';
  }
  out = std::move(result);
  return true;
}

unsigned bit_length(const BigInt& value) {
  if (value == 0) return 0;
  BigInt magnitude = boost::multiprecision::abs(value);
  return static_cast<unsigned>(boost::multiprecision::msb(magnitude)) + 1;
}

BigInt max_for_bits(unsigned bits) {
  BigInt one = 1;
  return (one << bits) - 1;
}

double ratio_to_double(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 1) return numerator.convert_to<double>();
  boost::multiprecision::cpp_rational q(numerator, denominator);
  return q.convert_to<double>();
}

}  // namespace isingnpp
