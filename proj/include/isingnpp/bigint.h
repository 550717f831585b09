#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace isingnpp {

// Unbounded signed integer used for weights, sums and energies.
using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const BigInt& value);

// Parses a non-empty string of ASCII decimal digits. Returns false on any
// other input (signs, whitespace, empty).
bool parse_decimal(std::string_view text, BigInt& out);

// Number of bits needed to represent |value|; 0 for value == 0.
unsigned bit_length(const BigInt& value);

// 2^bits - 1.
BigInt max_for_bits(unsigned bits);

// Nearest double to numerator / denominator (denominator > 0).
double ratio_to_double(const BigInt& numerator, const BigInt& denominator);

}  // namespace isingnpp
