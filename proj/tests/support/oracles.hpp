// Independent brute-force evaluators the implementation is checked against.
// Keep these free of polder/judge.hpp logic beyond the shared types.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace oracle {

struct CleanedOutcome {
  bool keep = false;
  int chosen = -1;  // 0 or 1 when keep
};

// Literal reading of the cleaned-subset selection rules: both averages at
// least 4.0; every single criterion at least 3.5; the absolute average
// difference neither below 0.25 nor above 2.0; highest average wins and a
// tie goes to the reference.
inline CleanedOutcome cleaned_rules(const std::array<double, 3>& a,
                                    const std::array<double, 3>& b,
                                    int reference) {
  const double avg_a = (a[0] + a[1] + a[2]) / 3.0;
  const double avg_b = (b[0] + b[1] + b[2]) / 3.0;
  if (avg_a < 4.0) return {};
  if (avg_b < 4.0) return {};
  for (double s : a) {
    if (s < 3.5) return {};
  }
  for (double s : b) {
    if (s < 3.5) return {};
  }
  const double diff = std::fabs(avg_a - avg_b);
  if (diff < 0.25) return {};
  if (diff > 2.0) return {};
  CleanedOutcome out;
  out.keep = true;
  if (avg_a == avg_b) {
    out.chosen = reference;
  } else {
    out.chosen = avg_a > avg_b ? 0 : 1;
  }
  return out;
}

// All 125 integer triples in {1..5}^3, in lexicographic order.
inline std::vector<std::array<double, 3>> all_integer_triples() {
  std::vector<std::array<double, 3>> out;
  for (int d = 1; d <= 5; ++d) {
    for (int h = 1; h <= 5; ++h) {
      for (int c = 1; c <= 5; ++c) {
        out.push_back({double(d), double(h), double(c)});
      }
    }
  }
  return out;
}

// Count / total, computed over the emitted stream itself.
inline double share_of(std::size_t selected, std::size_t total) {
  return total == 0 ? 0.0 : static_cast<double>(selected) /
                                static_cast<double>(total);
}

}  // namespace oracle
