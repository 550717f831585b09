#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "isingnpp/bigint.h"

namespace isingnpp {

// Fixed 12-significant-digit rendering used by every CSV and JSON output so
// files are byte-identical across runs.
std::string format_real(double value);

// The double whose shortest round-trip representation is format_real(value).
double round_real(double value);

double to_millis(std::chrono::nanoseconds d);

}  // namespace isingnpp
