// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcsim {

// Raised when a simulation would exceed its memory budget. Callers that
// want a structured failure instead of an exception (the bench harness,
// the CLI) catch this type.
class InfeasibleError : public std::runtime_error {
public:
  InfeasibleError(std::uint64_t required, std::uint64_t budget,
                  const std::string& what_for);

  std::uint64_t required_bytes;
  std::uint64_t budget_bytes;
};

// 75% of currently available system memory; the default simulation guard.
std::uint64_t default_memory_guard();

// "64 GiB", "12.5 MiB", "973 B", ... power-of-two units.
std::string human_bytes(double bytes);

// Accepts raw byte counts and suffixed forms: "96GiB", "1.5GB", "512MiB",
// "8PB"... Decimal suffixes (kB/MB/GB/TB/PB) are powers of ten, binary
// suffixes (KiB/MiB/GiB/TiB/PiB) powers of two.
std::uint64_t parse_bytes(const std::string& text);

// Outcome index rendered MSB-first, e.g. index 5 at width 4 -> "0101".
std::string index_to_bitstring(std::uint64_t index, std::size_t width);

double mean(const std::vector<double>& xs);
double median(std::vector<double> xs);
double stddev(const std::vector<double>& xs);

} // namespace qcsim
