#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hotplug {

// Exact binomial coefficient. Desk-scale arguments only; throws on overflow
// rather than wrapping.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: r = C(n-k+i, i) after each step
    if (r > UINT64_MAX) throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::uint64_t>(r);
}

// 1-based lexicographic rank of a sorted k-subset of [n].
inline std::uint64_t subset_rank(int n, const std::vector<int>& subset) {
  std::uint64_t rank = 1;
  int prev = 0;
  const int k = static_cast<int>(subset.size());
  for (int i = 0; i < k; ++i) {
    for (int c = prev + 1; c < subset[i]; ++c)
      rank += binomial(n - c, k - i - 1);
    prev = subset[i];
  }
  return rank;
}

// Inverse of subset_rank: the k-subset of [n] with the given 1-based lex rank.
inline std::vector<int> subset_unrank(int n, int k, std::uint64_t rank) {
  if (rank < 1 || rank > binomial(n, k)) throw std::out_of_range("subset rank out of range");
  std::vector<int> out;
  out.reserve(k);
  int c = 1;
  std::uint64_t r = rank;
  for (int i = 0; i < k; ++i) {
    while (true) {
      std::uint64_t below = binomial(n - c, k - i - 1);
      if (r <= below) break;
      r -= below;
      ++c;
    }
    out.push_back(c++);
  }
  return out;
}

// Visits every k-subset of [n] in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(std::vector<int>{});
    return;
  }
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    fn(const_cast<const std::vector<int>&>(cur));
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

}  // namespace hotplug
