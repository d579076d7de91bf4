#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <vector>

namespace mcc {

/// Canonical order on nonzero integer vectors used by every bounded search:
/// primitive vectors (gcd 1) whose first nonzero entry is positive, ordered by
/// max-norm, then by number of nonzero entries, then lexicographically with
/// larger entries first. The standard basis vectors e₁, e₂, … therefore come
/// first, in that order.
inline bool canonical_less(const std::vector<long>& a, const std::vector<long>& b) {
  auto norm = [](const std::vector<long>& v) {
    long m = 0;
    for (long x : v) m = std::max(m, std::labs(x));
    return m;
  };
  auto weight = [](const std::vector<long>& v) { return std::count_if(v.begin(), v.end(), [](long x) { return x != 0; }); };
  if (norm(a) != norm(b)) return norm(a) < norm(b);
  if (weight(a) != weight(b)) return weight(a) < weight(b);
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

inline bool is_canonical_primitive(const std::vector<long>& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x);
  if (g != 1) return false;
  for (long x : v)
    if (x != 0) return x > 0;
  return false;
}

/// Canonical primitive vectors of dimension `dim` with max-norm exactly `h`, sorted.
inline std::vector<std::vector<long>> canonical_shell(std::size_t dim, long h) {
  std::vector<std::vector<long>> out;
  std::vector<long> v(dim, -h);
  while (true) {
    long m = 0;
    for (long x : v) m = std::max(m, std::labs(x));
    if (m == h && is_canonical_primitive(v)) out.push_back(v);
    std::size_t i = 0;
    while (i < dim && v[i] == h) v[i++] = -h;
    if (i == dim) break;
    ++v[i];
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

/// Calls fn(v) for canonical primitive vectors of max-norm ≤ height in
/// canonical order until fn returns true. Returns whether fn stopped the scan.
template <class Fn>
bool for_each_canonical(std::size_t dim, long height, Fn&& fn) {
  for (long h = 1; h <= height; ++h)
    for (const auto& v : canonical_shell(dim, h))
      if (fn(v)) return true;
  return false;
}

}  // namespace mcc
