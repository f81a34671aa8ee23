#include <k3bps/moonshine.hpp>

#include <k3bps/error.hpp>

#include <algorithm>
#include <functional>

namespace k3bps {

namespace {

constexpr std::int64_t kReachabilityLimit = 1'000'000;

bool reachable(std::int64_t n, const std::vector<std::int64_t>& parts) {
  std::vector<char> ok(static_cast<std::size_t>(n) + 1, 0);
  ok[0] = 1;
  for (std::int64_t s = 1; s <= n; ++s)
    for (auto p : parts)
      if (p <= s && ok[static_cast<std::size_t>(s - p)]) {
        ok[static_cast<std::size_t>(s)] = 1;
        break;
      }
  return ok[static_cast<std::size_t>(n)];
}

}  // namespace

M24Decomposition decompose_m24(std::int64_t n, bool allow_ones, int max_summands) {
  if (n < 1) throw DomainError("decompose_m24: n must be positive");
  M24Decomposition out;
  out.n = n;
  out.allow_ones = allow_ones;
  out.max_summands = max_summands;

  std::vector<std::int64_t> parts;  // descending
  for (auto d : kM24Dimensions)
    if (allow_ones || d != 1) parts.push_back(d);
  std::sort(parts.rbegin(), parts.rend());

  std::vector<std::int64_t> current;
  // Nonincreasing sequences of exactly `left` more parts drawn from parts[from..].
  std::function<void(std::int64_t, int, std::size_t)> search = [&](std::int64_t rest, int left,
                                                                    std::size_t from) {
    if (left == 0) {
      if (rest == 0) out.solutions.push_back(current);
      return;
    }
    for (std::size_t i = from; i < parts.size(); ++i) {
      const auto p = parts[i];
      if (p > rest) continue;
      if (p * left < rest) break;  // even `left` copies of p cannot reach rest
      current.push_back(p);
      search(rest - p, left - 1, i);
      current.pop_back();
    }
  };

  for (int count = 1; count <= max_summands; ++count) {
    search(n, count, 0);
    if (!out.solutions.empty()) {
      out.min_count = count;
      std::sort(out.solutions.rbegin(), out.solutions.rend());
      return out;
    }
  }
  out.cap_reached = true;
  if (n <= kReachabilityLimit) out.impossible = !reachable(n, parts);
  return out;
}

}  // namespace k3bps
