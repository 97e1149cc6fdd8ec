#pragma once

#include <cstddef>
#include <vector>

#include "salem/errors.hpp"

namespace salem {

/// Digit system over {0,...,q-1}: weights p_t in (0,1) summing to 1 and
/// their cumulative offsets beta_t (beta_0 = 0, beta_q = 1).  A number
/// x in [0,1] expands as x = beta_{i_1} + sum_k beta_{i_k} * prod_{r<k} p_{i_r}.
struct SalemSystem {
  int q = 0;
  std::vector<double> p;
  std::vector<double> beta;  // q+1 entries, beta[t] = p[0] + ... + p[t-1]

  double max_p() const;
  double min_p() const;
};

/// Checks q >= 2, every weight in (0,1), and |sum(p) - 1| <= 1e-12, then
/// builds the cumulative offsets.
SalemSystem validate_system(int q, const std::vector<double>& p);

/// Permutation of the digit alphabet, stored as its image vector.
struct DigitPermutation {
  std::vector<int> map;

  int q() const { return static_cast<int>(map.size()); }
  int operator()(int d) const { return map[static_cast<std::size_t>(d)]; }
  bool is_identity() const;
  bool is_reversal() const;  // theta(t) = q-1-t
};

DigitPermutation make_permutation(std::vector<int> map);
DigitPermutation identity_permutation(int q);
DigitPermutation reversal_permutation(int q);

/// Finite or eventually periodic digit sequence.  An empty period means the
/// implicit all-zero tail.  `canonical` is false exactly when the tail is
/// eventually the constant digit q-1 and the string is not the standard
/// representation of the number 1 (every digit equal to q-1).
struct DigitString {
  std::vector<int> prefix;
  std::vector<int> period;
  bool canonical = false;

  bool has_period() const { return !period.empty(); }
  std::size_t prefix_size() const { return prefix.size(); }

  /// k-th digit (0-based), extending through the period or the zero tail.
  int digit_at(std::size_t k) const;
};

/// Validates digits against the alphabet and computes the canonical flag.
DigitString make_digit_string(const SalemSystem& sys, std::vector<int> prefix,
                              std::vector<int> period = {});

/// Cylinder of rank m: the set of numbers whose first m digits equal `base`.
struct Cylinder {
  std::vector<int> base;
};

struct CylinderBounds {
  double inf = 0.0;
  double sup = 0.0;
  double length = 0.0;
};

/// Smallest depth with (max p)^depth < 1e-14, capped at 2000.
int default_depth(const SalemSystem& sys);

/// Greedy digit extraction: at each step emits the digit t with
/// beta[t] <= r < beta[t+1] and rescales the remainder to (r - beta[t])/p[t].
/// At x = beta[t] exactly the digit t is emitted (zero tail); x = 1 yields
/// the constant string q-1.  A remainder within 1e-13 of the next digit
/// boundary (measured in units of x) rounds up, so boundary values reached
/// through other float paths encode canonically.
DigitString encode(const SalemSystem& sys, double x, int depth);

/// Value of a digit string.  Eventually periodic tails are summed in closed
/// form: a constant tail of digit j contributes beta_j / (1 - p_j) scaled by
/// the accumulated product, and a longer period uses the geometric series of
/// its per-period factor.
double decode(const SalemSystem& sys, const DigitString& digits);

/// Rewrites a tail of constant digit q-1 to the finite form: the last digit
/// not equal to q-1 is incremented and the tail becomes zero.  The constant
/// string q-1 (the number 1) is returned unchanged.  Decode is preserved.
DigitString canonicalize(const SalemSystem& sys, const DigitString& digits);

/// Drops the first n digits.  Finite strings extend with zeros; periodic
/// tails rotate.
DigitString shift(const SalemSystem& sys, const DigitString& digits,
                  std::size_t n);

/// First n digits as an explicit zero-tail string.
DigitString truncate(const SalemSystem& sys, const DigitString& digits,
                     std::size_t n);

/// inf = value of (base, zero tail), length = prod p over base, sup = inf + length.
CylinderBounds cylinder_bounds(const SalemSystem& sys, const Cylinder& c);

void check_digits(const SalemSystem& sys, const std::vector<int>& digits);

}  // namespace salem
