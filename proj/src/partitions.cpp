#include "lvo/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace lvo {

std::string ColoredPartition::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t j = 0; j < parts.size(); ++j) {
    if (j) os << "|";
    for (size_t i = 0; i < parts[j].size(); ++i) os << (i ? "," : "") << parts[j][i];
  }
  os << "]";
  return os.str();
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<std::vector<int>>& partitions_of(int n) {
  static std::map<int, std::vector<std::vector<int>>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  if (out.empty()) out.push_back({});  // n = 0
  return cache.emplace(n, std::move(out)).first->second;
}

namespace {

void gen_colored(int colors, int color, int rest, ColoredPartition& cur,
                 std::vector<ColoredPartition>& out) {
  if (color == colors) {
    if (rest == 0) out.push_back(cur);
    return;
  }
  for (int m = 0; m <= rest; ++m) {
    for (const auto& p : partitions_of(m)) {
      cur.parts[color] = p;
      gen_colored(colors, color + 1, rest - m, cur, out);
    }
  }
  cur.parts[color].clear();
}

}  // namespace

std::vector<ColoredPartition> colored_partitions(int colors, int n) {
  std::vector<ColoredPartition> out;
  ColoredPartition cur;
  cur.parts.assign(colors, {});
  if (colors == 0) {
    if (n == 0) out.push_back(cur);
    return out;
  }
  gen_colored(colors, 0, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<mpz_class> colored_partition_counts(int colors, int max_level) {
  std::vector<mpz_class> dp(max_level + 1, 0);
  dp[0] = 1;
  for (int rep = 0; rep < colors; ++rep) {
    for (int k = 1; k <= max_level; ++k) {
      for (int n = k; n <= max_level; ++n) dp[n] += dp[n - k];
    }
  }
  return dp;
}

}  // namespace lvo
