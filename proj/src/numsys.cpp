#include "salem/numsys.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace salem {

namespace {

constexpr double kWeightSumTol = 1e-12;

// Absolute snap width, in units of x, of the greedy boundary rounding.
constexpr double kBoundarySnap = 1e-13;

bool all_equal_to(const std::vector<int>& v, int d) {
  return std::all_of(v.begin(), v.end(), [d](int e) { return e == d; });
}

// Computes the canonical flag for an already validated prefix/period pair.
DigitString assemble(int q, std::vector<int> prefix, std::vector<int> period) {
  DigitString d;
  d.prefix = std::move(prefix);
  d.period = std::move(period);
  const bool top_tail = !d.period.empty() && all_equal_to(d.period, q - 1);
  d.canonical = !top_tail || all_equal_to(d.prefix, q - 1);
  return d;
}

}  // namespace

double SalemSystem::max_p() const {
  return *std::max_element(p.begin(), p.end());
}

double SalemSystem::min_p() const {
  return *std::min_element(p.begin(), p.end());
}

SalemSystem validate_system(int q, const std::vector<double>& p) {
  if (q < 2) fail(ErrorKind::TooFewDigits, "digit alphabet needs q >= 2");
  if (static_cast<int>(p.size()) != q)
    fail(ErrorKind::WeightCountMismatch,
         "expected " + std::to_string(q) + " weights, got " +
             std::to_string(p.size()));
  for (double w : p) {
    if (!(w > 0.0 && w < 1.0))
      fail(ErrorKind::WeightOutOfRange, "weights must lie in (0,1)");
  }
  const double sum = std::accumulate(p.begin(), p.end(), 0.0);
  if (std::abs(sum - 1.0) > kWeightSumTol)
    fail(ErrorKind::WeightSumMismatch,
         "weights sum to " + std::to_string(sum) + ", not 1");

  SalemSystem sys;
  sys.q = q;
  sys.p = p;
  sys.beta.resize(static_cast<std::size_t>(q) + 1);
  sys.beta[0] = 0.0;
  for (int t = 0; t < q; ++t)
    sys.beta[static_cast<std::size_t>(t) + 1] =
        sys.beta[static_cast<std::size_t>(t)] + p[static_cast<std::size_t>(t)];
  return sys;
}

bool DigitPermutation::is_identity() const {
  for (int t = 0; t < q(); ++t)
    if (map[static_cast<std::size_t>(t)] != t) return false;
  return true;
}

bool DigitPermutation::is_reversal() const {
  for (int t = 0; t < q(); ++t)
    if (map[static_cast<std::size_t>(t)] != q() - 1 - t) return false;
  return true;
}

DigitPermutation make_permutation(std::vector<int> map) {
  const int q = static_cast<int>(map.size());
  if (q < 2) fail(ErrorKind::TooFewDigits, "permutation needs q >= 2 entries");
  std::vector<char> seen(static_cast<std::size_t>(q), 0);
  for (int v : map) {
    if (v < 0 || v >= q)
      fail(ErrorKind::DigitOutOfRange, "permutation image outside alphabet");
    if (seen[static_cast<std::size_t>(v)])
      fail(ErrorKind::DigitOutOfRange, "permutation image repeats a digit");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return DigitPermutation{std::move(map)};
}

DigitPermutation identity_permutation(int q) {
  std::vector<int> m(static_cast<std::size_t>(q));
  std::iota(m.begin(), m.end(), 0);
  return make_permutation(std::move(m));
}

DigitPermutation reversal_permutation(int q) {
  std::vector<int> m(static_cast<std::size_t>(q));
  for (int t = 0; t < q; ++t) m[static_cast<std::size_t>(t)] = q - 1 - t;
  return make_permutation(std::move(m));
}

int DigitString::digit_at(std::size_t k) const {
  if (k < prefix.size()) return prefix[k];
  if (period.empty()) return 0;
  return period[(k - prefix.size()) % period.size()];
}

void check_digits(const SalemSystem& sys, const std::vector<int>& digits) {
  for (int d : digits) {
    if (d < 0 || d >= sys.q)
      fail(ErrorKind::DigitOutOfRange,
           "digit " + std::to_string(d) + " outside alphabet of size " +
               std::to_string(sys.q));
  }
}

DigitString make_digit_string(const SalemSystem& sys, std::vector<int> prefix,
                              std::vector<int> period) {
  check_digits(sys, prefix);
  check_digits(sys, period);
  return assemble(sys.q, std::move(prefix), std::move(period));
}

int default_depth(const SalemSystem& sys) {
  const double mp = sys.max_p();
  const int d = static_cast<int>(std::floor(std::log(1e-14) / std::log(mp))) + 1;
  return std::clamp(d, 1, 2000);
}

DigitString encode(const SalemSystem& sys, double x, int depth) {
  if (!(x >= 0.0 && x <= 1.0))
    fail(ErrorKind::ArgumentOutOfDomain, "x must lie in [0,1]");
  if (depth < 1) fail(ErrorKind::ArgumentOutOfDomain, "depth must be >= 1");
  const int q = sys.q;
  if (x == 1.0) {
    // Unique expansion of 1: every digit is q-1.
    return assemble(q, std::vector<int>(static_cast<std::size_t>(depth), q - 1),
                    {q - 1});
  }

  std::vector<int> digits;
  digits.reserve(static_cast<std::size_t>(depth));
  double r = x;
  double scale = 1.0;  // prod p over emitted digits; converts r-units to x-units
  for (int k = 0; k < depth; ++k) {
    auto it = std::upper_bound(sys.beta.begin(), sys.beta.end(), r);
    int t = static_cast<int>(it - sys.beta.begin()) - 1;
    t = std::clamp(t, 0, q - 1);
    // Snap up when the gap to the next boundary is below float resolution,
    // so cylinder endpoints computed by other float paths round to their
    // canonical digits instead of dipping into the previous cylinder.
    if (t + 1 <= q - 1) {
      const double gap = sys.beta[static_cast<std::size_t>(t) + 1] - r;
      if (gap * scale <= kBoundarySnap && kBoundarySnap / scale <= 0.5 * sys.min_p())
        ++t;
    }
    digits.push_back(t);
    r = (r - sys.beta[static_cast<std::size_t>(t)]) / sys.p[static_cast<std::size_t>(t)];
    r = std::clamp(r, 0.0, 1.0);
    scale *= sys.p[static_cast<std::size_t>(t)];
  }
  return assemble(q, std::move(digits), {});
}

double decode(const SalemSystem& sys, const DigitString& digits) {
  check_digits(sys, digits.prefix);
  check_digits(sys, digits.period);
  double v = 0.0;
  double scale = 1.0;
  for (int d : digits.prefix) {
    v += scale * sys.beta[static_cast<std::size_t>(d)];
    scale *= sys.p[static_cast<std::size_t>(d)];
  }
  if (!digits.period.empty()) {
    double head = 0.0;
    double factor = 1.0;
    for (int d : digits.period) {
      head += factor * sys.beta[static_cast<std::size_t>(d)];
      factor *= sys.p[static_cast<std::size_t>(d)];
    }
    v += scale * (head / (1.0 - factor));
  }
  return std::clamp(v, 0.0, 1.0);
}

DigitString canonicalize(const SalemSystem& sys, const DigitString& digits) {
  check_digits(sys, digits.prefix);
  check_digits(sys, digits.period);
  const int q = sys.q;
  if (digits.period.empty() || !all_equal_to(digits.period, q - 1))
    return assemble(q, digits.prefix, digits.period);

  // Tail is the constant digit q-1: carry into the last smaller prefix digit.
  std::vector<int> prefix = digits.prefix;
  while (!prefix.empty() && prefix.back() == q - 1) prefix.pop_back();
  if (prefix.empty()) return assemble(q, digits.prefix, digits.period);  // the number 1
  ++prefix.back();
  return assemble(q, std::move(prefix), {});
}

DigitString shift(const SalemSystem& sys, const DigitString& digits,
                  std::size_t n) {
  check_digits(sys, digits.prefix);
  check_digits(sys, digits.period);
  if (n <= digits.prefix.size()) {
    std::vector<int> prefix(digits.prefix.begin() + static_cast<std::ptrdiff_t>(n),
                            digits.prefix.end());
    return assemble(sys.q, std::move(prefix), digits.period);
  }
  if (digits.period.empty()) return assemble(sys.q, {}, {});
  const std::size_t k = (n - digits.prefix.size()) % digits.period.size();
  std::vector<int> period(digits.period.begin() + static_cast<std::ptrdiff_t>(k),
                          digits.period.end());
  period.insert(period.end(), digits.period.begin(),
                digits.period.begin() + static_cast<std::ptrdiff_t>(k));
  return assemble(sys.q, {}, std::move(period));
}

DigitString truncate(const SalemSystem& sys, const DigitString& digits,
                     std::size_t n) {
  check_digits(sys, digits.prefix);
  check_digits(sys, digits.period);
  std::vector<int> prefix(n);
  for (std::size_t k = 0; k < n; ++k) prefix[k] = digits.digit_at(k);
  return assemble(sys.q, std::move(prefix), {});
}

CylinderBounds cylinder_bounds(const SalemSystem& sys, const Cylinder& c) {
  if (c.base.empty())
    fail(ErrorKind::ArgumentOutOfDomain, "cylinder rank must be >= 1");
  check_digits(sys, c.base);
  CylinderBounds b;
  b.inf = decode(sys, DigitString{c.base, {}, true});
  b.length = 1.0;
  for (int d : c.base) b.length *= sys.p[static_cast<std::size_t>(d)];
  b.sup = b.inf + b.length;
  return b;
}

}  // namespace salem
