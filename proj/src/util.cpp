// SPDX-License-Identifier: Apache-2.0
#include "qcsim/util.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <sys/sysinfo.h>

namespace qcsim {

InfeasibleError::InfeasibleError(std::uint64_t required, std::uint64_t budget,
                                 const std::string& what_for)
    : std::runtime_error("infeasible: " + what_for + " requires " +
                         human_bytes(static_cast<double>(required)) +
                         " > guard " +
                         human_bytes(static_cast<double>(budget))),
      required_bytes(required),
      budget_bytes(budget) {}

std::uint64_t default_memory_guard() {
  // Prefer MemAvailable, which accounts for reclaimable caches.
  std::ifstream meminfo("/proc/meminfo");
  std::string key;
  std::uint64_t value = 0;
  std::string unit;
  while (meminfo >> key >> value >> unit) {
    if (key == "MemAvailable:") {
      return value * 1024 / 4 * 3;
    }
  }
  struct sysinfo info{};
  if (sysinfo(&info) == 0) {
    const std::uint64_t total =
        static_cast<std::uint64_t>(info.freeram) * info.mem_unit;
    return total / 4 * 3;
  }
  return 8ull << 30;
}

std::string human_bytes(double bytes) {
  static const char* units[] = {"B", "KiB", "MiB", "GiB", "TiB", "PiB", "EiB"};
  int u = 0;
  while (bytes >= 1024.0 && u < 6) {
    bytes /= 1024.0;
    ++u;
  }
  char buf[64];
  if (bytes == std::floor(bytes) && bytes < 1e15) {
    std::snprintf(buf, sizeof(buf), "%.0f %s", bytes, units[u]);
  } else {
    std::snprintf(buf, sizeof(buf), "%.2f %s", bytes, units[u]);
  }
  return buf;
}

std::uint64_t parse_bytes(const std::string& text) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse byte size: " + text);
  }
  std::string suffix = text.substr(pos);
  suffix.erase(std::remove(suffix.begin(), suffix.end(), ' '), suffix.end());

  double scale = 1.0;
  if (suffix.empty() || suffix == "B" || suffix == "b") {
    scale = 1.0;
  } else if (suffix == "kB" || suffix == "KB") {
    scale = 1e3;
  } else if (suffix == "MB") {
    scale = 1e6;
  } else if (suffix == "GB") {
    scale = 1e9;
  } else if (suffix == "TB") {
    scale = 1e12;
  } else if (suffix == "PB") {
    scale = 1e15;
  } else if (suffix == "KiB" || suffix == "kiB") {
    scale = 1024.0;
  } else if (suffix == "MiB") {
    scale = 1048576.0;
  } else if (suffix == "GiB") {
    scale = 1073741824.0;
  } else if (suffix == "TiB") {
    scale = 1099511627776.0;
  } else if (suffix == "PiB") {
    scale = 1125899906842624.0;
  } else {
    throw std::invalid_argument("unknown byte-size suffix: " + suffix);
  }
  return static_cast<std::uint64_t>(value * scale);
}

std::string index_to_bitstring(std::uint64_t index, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if ((index >> i) & 1ull) {
      s[width - 1 - i] = '1';
    }
  }
  return s;
}

double mean(const std::vector<double>& xs) {
  if (xs.empty()) {
    return 0.0;
  }
  double sum = 0.0;
  for (double x : xs) {
    sum += x;
  }
  return sum / static_cast<double>(xs.size());
}

double median(std::vector<double> xs) {
  if (xs.empty()) {
    return 0.0;
  }
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  if (xs.size() % 2 == 1) {
    return xs[mid];
  }
  return 0.5 * (xs[mid - 1] + xs[mid]);
}

double stddev(const std::vector<double>& xs) {
  if (xs.size() < 2) {
    return 0.0;
  }
  const double m = mean(xs);
  double sum = 0.0;
  for (double x : xs) {
    sum += (x - m) * (x - m);
  }
  return std::sqrt(sum / static_cast<double>(xs.size() - 1));
}

} // namespace qcsim
