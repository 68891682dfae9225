#pragma once

#include <array>
#include <vector>

namespace idp {

// Stable LSD radix sort on an unsigned key no larger than max_key. Eleven
// bits per pass keeps the scatter targets few enough to stay in cache.
template <typename T, typename Key>
void radix_sort(std::vector<T>& items, unsigned max_key, Key&& key) {
  constexpr int kBits = 11;
  constexpr unsigned kMask = (1u << kBits) - 1;
  std::vector<T> tmp(items.size());
  std::array<int, 1u << kBits> count;
  for (int shift = 0; shift < 32 && (max_key >> shift) != 0; shift += kBits) {
    count.fill(0);
    for (const T& it : items) ++count[(unsigned(key(it)) >> shift) & kMask];
    int sum = 0;
    for (auto& c : count) {
      const int here = c;
      c = sum;
      sum += here;
    }
    for (const T& it : items) tmp[count[(unsigned(key(it)) >> shift) & kMask]++] = it;
    items.swap(tmp);
  }
}

}  // namespace idp
