#pragma once

#include <vector>

#include "salem/numsys.hpp"

namespace salem {

/// Salem-type function with a digit permutation: x with digits i_1 i_2 ...
/// maps to the number whose digits are theta(i_1) theta(i_2) ...
struct ModifiedSalem {
  SalemSystem system;
  DigitPermutation theta;
};

ModifiedSalem make_modified_salem(SalemSystem system, DigitPermutation theta);

/// One-sided limits at a point with a finite digit expansion.
struct JumpReport {
  double x0 = 0.0;
  double left_limit = 0.0;
  double right_limit = 0.0;
  double jump = 0.0;  // right - left
};

/// Maps every digit through theta.  The implicit zero tail becomes the
/// constant tail theta(0), materialized as a period when theta(0) != 0.
DigitString apply_permutation(const ModifiedSalem& f, const DigitString& digits);

/// Value of f on a digit representation (closed-form tails, no truncation).
double eval_on_digits(const ModifiedSalem& f, const DigitString& digits);

/// f(x) through the codec: encode at `depth`, permute, decode.
/// Truncation error is at most (max p)^depth.
double eval_f(const ModifiedSalem& f, double x, int depth);
double eval_f(const ModifiedSalem& f, double x);  // default depth

/// Classical Salem-type value of a finite q-ary digit vector:
/// beta_{i_1} + sum_k beta_{i_k} * prod_{r<k} p_{i_r}.
double classic_salem(const SalemSystem& sys, const std::vector<int>& qary_digits);

/// Residual |f(sigma^{n-1} x) - beta_{theta(i_n)} - p_{theta(i_n)} f(sigma^n x)|
/// for the point given by `digits`, evaluated on the first n+depth digits.
/// At most 2 * (max p)^depth up to float rounding.
double functional_eq_residual(const ModifiedSalem& f, const DigitString& digits,
                              int n, int depth);

/// One-sided limits at a point with finite expansion i_1...i_m, i_m != 0:
///   right limit: digits theta(i_1)...theta(i_m) with constant tail theta(0),
///   left limit:  digits theta(i_1)...theta(i_m - 1) with constant tail theta(q-1).
/// The input must be a zero-tail prefix ending in a nonzero digit; the
/// endpoints 0 and 1 are excluded.
JumpReport one_sided_limits(const ModifiedSalem& f, const DigitString& rational);

}  // namespace salem
