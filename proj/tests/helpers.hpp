#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "salem/numsys.hpp"

namespace testutil {

// Runs fn and reports the ErrorKind it raised; anything else fails the test.
template <typename Fn>
salem::ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const salem::Error& e) {
    return e.kind();
  }
  throw std::logic_error("expected a salem::Error");
}

// 53-bit uniform double in [0,1).
inline double urand(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline int uint_below(std::mt19937_64& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

// Weights drawn from [lo, hi] per digit, then normalized.  The default range
// keeps every weight within ~10% of 1/q, so codec truncation error stays
// near (1/q)^depth for the depths used in the tests.
inline std::vector<double> random_weights(int q, std::mt19937_64& rng,
                                          double lo = 0.9, double hi = 1.1) {
  std::vector<double> w(static_cast<std::size_t>(q));
  double sum = 0.0;
  for (auto& v : w) {
    v = lo + (hi - lo) * urand(rng);
    sum += v;
  }
  for (auto& v : w) v /= sum;
  return w;
}

inline salem::SalemSystem random_system(int q, std::mt19937_64& rng,
                                        double lo = 0.9, double hi = 1.1) {
  return salem::validate_system(q, random_weights(q, rng, lo, hi));
}

inline salem::SalemSystem uniform_system(int q) {
  return salem::validate_system(
      q, std::vector<double>(static_cast<std::size_t>(q), 1.0 / q));
}

inline salem::DigitPermutation random_permutation(int q, std::mt19937_64& rng) {
  std::vector<int> map(static_cast<std::size_t>(q));
  std::iota(map.begin(), map.end(), 0);
  std::shuffle(map.begin(), map.end(), rng);
  return salem::make_permutation(std::move(map));
}

// Canonical rational in (0,1): a random finite prefix with a nonzero last digit.
inline salem::DigitString random_rational(const salem::SalemSystem& sys,
                                          int max_len, std::mt19937_64& rng) {
  const int len = 1 + uint_below(rng, max_len);
  std::vector<int> prefix(static_cast<std::size_t>(len));
  for (auto& d : prefix) d = uint_below(rng, sys.q);
  if (prefix.back() == 0) prefix.back() = 1 + uint_below(rng, sys.q - 1);
  return salem::make_digit_string(sys, std::move(prefix));
}

inline std::vector<std::vector<int>> all_permutations(int q) {
  std::vector<int> map(static_cast<std::size_t>(q));
  std::iota(map.begin(), map.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(map);
  } while (std::next_permutation(map.begin(), map.end()));
  return out;
}

}  // namespace testutil
