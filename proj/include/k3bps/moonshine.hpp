#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace k3bps {

/// Distinct dimensions of the irreducible representations of M24.
inline constexpr std::array<std::int64_t, 20> kM24Dimensions{
    1,    23,   45,   231,  252,  253,  483,  770,  990,  1035,
    1265, 1771, 2024, 2277, 3312, 3520, 5313, 5544, 5796, 10395};

struct M24Decomposition {
  std::int64_t n = 0;
  bool allow_ones = true;
  int max_summands = 6;
  /// Minimal number of summands, if some decomposition within the cap exists.
  std::optional<int> min_count;
  /// Every multiset of that size, each sorted descending; list sorted descending.
  std::vector<std::vector<std::int64_t>> solutions;
  /// No decomposition with <= max_summands parts was found, so the cap
  /// decided the outcome (unless `impossible` is set).
  bool cap_reached = false;
  /// n is not a sum of allowed dimensions at all (decided for n <= 10^6).
  bool impossible = false;
};

/// All decompositions of n into the fewest dimensions, searching by summand
/// count up to max_summands.
M24Decomposition decompose_m24(std::int64_t n, bool allow_ones = true, int max_summands = 6);

}  // namespace k3bps
