#include "salem/salemfun.hpp"

#include <algorithm>
#include <cmath>

namespace salem {

ModifiedSalem make_modified_salem(SalemSystem system, DigitPermutation theta) {
  if (theta.q() != system.q)
    fail(ErrorKind::ConfigError, "permutation size must equal q");
  return ModifiedSalem{std::move(system), std::move(theta)};
}

DigitString apply_permutation(const ModifiedSalem& f, const DigitString& digits) {
  check_digits(f.system, digits.prefix);
  check_digits(f.system, digits.period);
  std::vector<int> prefix(digits.prefix.size());
  std::transform(digits.prefix.begin(), digits.prefix.end(), prefix.begin(),
                 [&](int d) { return f.theta(d); });
  std::vector<int> period;
  if (digits.has_period()) {
    period.resize(digits.period.size());
    std::transform(digits.period.begin(), digits.period.end(), period.begin(),
                   [&](int d) { return f.theta(d); });
  } else if (f.theta(0) != 0) {
    period = {f.theta(0)};  // image of the implicit zero tail
  }
  return make_digit_string(f.system, std::move(prefix), std::move(period));
}

double eval_on_digits(const ModifiedSalem& f, const DigitString& digits) {
  return decode(f.system, apply_permutation(f, digits));
}

double eval_f(const ModifiedSalem& f, double x, int depth) {
  return eval_on_digits(f, encode(f.system, x, depth));
}

double eval_f(const ModifiedSalem& f, double x) {
  return eval_f(f, x, default_depth(f.system));
}

double classic_salem(const SalemSystem& sys, const std::vector<int>& qary_digits) {
  check_digits(sys, qary_digits);
  return decode(sys, DigitString{qary_digits, {}, true});
}

double functional_eq_residual(const ModifiedSalem& f, const DigitString& digits,
                              int n, int depth) {
  if (n < 1) fail(ErrorKind::ArgumentOutOfDomain, "digit index n must be >= 1");
  if (depth < 1) fail(ErrorKind::ArgumentOutOfDomain, "depth must be >= 1");
  const SalemSystem& sys = f.system;
  // Both sides see the same zero-extended truncation, so the identity is
  // exact up to rounding and the digit-(n+depth) cutoff.
  const DigitString t = truncate(sys, digits, static_cast<std::size_t>(n + depth));
  const int i_n = t.digit_at(static_cast<std::size_t>(n - 1));
  const double lhs = eval_on_digits(f, shift(sys, t, static_cast<std::size_t>(n - 1)));
  const double rhs = eval_on_digits(f, shift(sys, t, static_cast<std::size_t>(n)));
  const int ti = f.theta(i_n);
  return std::abs(lhs - sys.beta[static_cast<std::size_t>(ti)] -
                  sys.p[static_cast<std::size_t>(ti)] * rhs);
}

JumpReport one_sided_limits(const ModifiedSalem& f, const DigitString& rational) {
  const SalemSystem& sys = f.system;
  check_digits(sys, rational.prefix);
  check_digits(sys, rational.period);
  const int q = sys.q;

  const bool all_top =
      std::all_of(rational.prefix.begin(), rational.prefix.end(),
                  [q](int d) { return d == q - 1; }) &&
      !rational.period.empty() &&
      std::all_of(rational.period.begin(), rational.period.end(),
                  [q](int d) { return d == q - 1; });
  if (all_top)
    fail(ErrorKind::EndpointExcluded, "no two-sided limit at the endpoint 1");
  if (rational.has_period())
    fail(ErrorKind::NotRational, "input has a nontrivial periodic tail");
  if (rational.prefix.empty() ||
      std::all_of(rational.prefix.begin(), rational.prefix.end(),
                  [](int d) { return d == 0; }))
    fail(ErrorKind::EndpointExcluded, "no two-sided limit at the endpoint 0");
  if (rational.prefix.back() == 0)
    fail(ErrorKind::NotRational, "finite expansion must end in a nonzero digit");

  std::vector<int> right(rational.prefix.size());
  std::transform(rational.prefix.begin(), rational.prefix.end(), right.begin(),
                 [&](int d) { return f.theta(d); });
  std::vector<int> left = right;
  left.back() = f.theta(rational.prefix.back() - 1);

  JumpReport rep;
  rep.x0 = decode(sys, rational);
  rep.right_limit = decode(sys, make_digit_string(sys, std::move(right), {f.theta(0)}));
  rep.left_limit = decode(sys, make_digit_string(sys, std::move(left), {f.theta(q - 1)}));
  rep.jump = rep.right_limit - rep.left_limit;
  return rep;
}

}  // namespace salem
