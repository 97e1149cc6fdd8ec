#include "salem/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace salem {

namespace {

bool fits_enumeration(int q, int rank) {
  double n = 1.0;
  for (int i = 0; i < rank; ++i) {
    n *= q;
    if (n > 1e7) return false;
  }
  return true;
}

}  // namespace

double constant_tail_value(const SalemSystem& sys, int digit) {
  if (digit < 0 || digit >= sys.q)
    fail(ErrorKind::DigitOutOfRange, "tail digit outside alphabet");
  return sys.beta[static_cast<std::size_t>(digit)] /
         (1.0 - sys.p[static_cast<std::size_t>(digit)]);
}

IncrementResult increment_on_cylinder(const ModifiedSalem& f, const Cylinder& c) {
  const SalemSystem& sys = f.system;
  const CylinderBounds b = cylinder_bounds(sys, c);
  const double tail_hi = constant_tail_value(sys, f.theta(sys.q - 1));
  const double tail_lo = constant_tail_value(sys, f.theta(0));
  double image_scale = 1.0;
  for (int d : c.base) image_scale *= sys.p[static_cast<std::size_t>(f.theta(d))];

  IncrementResult r;
  r.cylinder = c;
  r.mu = (tail_hi - tail_lo) * image_scale;
  r.length = b.length;
  r.ratio = r.mu / r.length;
  return r;
}

std::vector<double> derivative_ratio_sequence(const ModifiedSalem& f,
                                              const DigitString& digits,
                                              int max_rank) {
  if (max_rank < 1)
    fail(ErrorKind::ArgumentOutOfDomain, "max_rank must be >= 1");
  const SalemSystem& sys = f.system;
  check_digits(sys, digits.prefix);
  check_digits(sys, digits.period);
  std::vector<double> seq(static_cast<std::size_t>(max_rank));
  double acc = 1.0;
  for (int m = 0; m < max_rank; ++m) {
    const int d = digits.digit_at(static_cast<std::size_t>(m));
    acc *= sys.p[static_cast<std::size_t>(f.theta(d))] /
           sys.p[static_cast<std::size_t>(d)];
    seq[static_cast<std::size_t>(m)] = acc;
  }
  return seq;
}

double singularity_rate(const ModifiedSalem& f) {
  const SalemSystem& sys = f.system;
  double k = 1.0;
  for (int m = 0; m < sys.q; ++m) {
    const double ratio = sys.p[static_cast<std::size_t>(f.theta(m))] /
                         sys.p[static_cast<std::size_t>(m)];
    k *= std::pow(ratio, sys.p[static_cast<std::size_t>(m)]);
  }
  return k;
}

FrequencyTable digit_frequencies(const SalemSystem& sys, const DigitString& digits,
                                 long long r) {
  if (r < 1) fail(ErrorKind::ArgumentOutOfDomain, "sample length must be >= 1");
  check_digits(sys, digits.prefix);
  check_digits(sys, digits.period);
  FrequencyTable t;
  t.counts.assign(static_cast<std::size_t>(sys.q), 0);
  t.r = r;
  for (long long k = 0; k < r; ++k)
    ++t.counts[static_cast<std::size_t>(digits.digit_at(static_cast<std::size_t>(k)))];
  t.freqs.resize(static_cast<std::size_t>(sys.q));
  for (int d = 0; d < sys.q; ++d)
    t.freqs[static_cast<std::size_t>(d)] =
        static_cast<double>(t.counts[static_cast<std::size_t>(d)]) /
        static_cast<double>(r);
  return t;
}

IntegralResult integral_closed_form(const ModifiedSalem& f) {
  const SalemSystem& sys = f.system;
  IntegralResult r;
  for (int t = 0; t < sys.q; ++t) {
    const int ti = f.theta(t);
    r.numerator += sys.beta[static_cast<std::size_t>(ti)] *
                   sys.p[static_cast<std::size_t>(t)];
    r.denominator += sys.p[static_cast<std::size_t>(ti)] *
                     sys.p[static_cast<std::size_t>(t)];
  }
  r.denominator = 1.0 - r.denominator;
  r.value = r.numerator / r.denominator;
  return r;
}

double integral_riemann(const ModifiedSalem& f, int rank) {
  if (rank < 1) fail(ErrorKind::ArgumentOutOfDomain, "rank must be >= 1");
  const SalemSystem& sys = f.system;
  if (!fits_enumeration(sys.q, rank))
    fail(ErrorKind::RankTooLarge, "q^rank exceeds the 1e7 enumeration guard");

  const double tail0 = constant_tail_value(sys, f.theta(0));
  double acc = 0.0;
  // Depth-first over all bases in lexicographic order; fv accumulates the
  // image value of the base, fscale its weight product, w the cylinder length.
  auto rec = [&](auto&& self, int level, double fv, double fscale, double w) -> void {
    if (level == rank) {
      acc += (fv + fscale * tail0) * w;
      return;
    }
    for (int t = 0; t < sys.q; ++t) {
      const int ti = f.theta(t);
      self(self, level + 1,
           fv + fscale * sys.beta[static_cast<std::size_t>(ti)],
           fscale * sys.p[static_cast<std::size_t>(ti)],
           w * sys.p[static_cast<std::size_t>(t)]);
    }
  };
  rec(rec, 0, 0.0, 1.0, 1.0);
  return acc;
}

MoranResult moran_dimension(const SalemSystem& sys,
                            const std::vector<int>& digit_set) {
  if (digit_set.empty())
    fail(ErrorKind::EmptyDigitSet, "dimension of the empty digit set is undefined");
  check_digits(sys, digit_set);
  std::set<int> unique(digit_set.begin(), digit_set.end());

  MoranResult r;
  r.digit_set.assign(unique.begin(), unique.end());
  if (r.digit_set.size() == 1) {
    r.alpha = 0.0;
    r.residual = 0.0;
    return r;
  }

  auto g = [&](double alpha) {
    double s = 0.0;
    for (int d : r.digit_set)
      s += std::pow(sys.p[static_cast<std::size_t>(d)], alpha);
    return s - 1.0;
  };

  double lo = 0.0, hi = 1.0;
  if (g(1.0) >= 0.0) {
    // Full alphabet: sum p_r = 1 up to the validation tolerance.
    r.alpha = 1.0;
    r.residual = std::abs(g(1.0));
    return r;
  }
  double mid = 0.5;
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double v = g(mid);
    if (std::abs(v) <= 1e-13) break;
    if (v > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  r.alpha = mid;
  r.residual = std::abs(g(mid));
  return r;
}

FixedSetClass fixed_point_set(const ModifiedSalem& f) {
  FixedSetClass c;
  for (int t = 0; t < f.system.q; ++t)
    if (f.theta(t) == t) c.fixed_digits.push_back(t);

  const std::size_t n = c.fixed_digits.size();
  if (n == 0) {
    c.kind = FixedSetKind::Empty;
  } else if (n == 1) {
    c.kind = FixedSetKind::Singleton;
    c.point = constant_tail_value(f.system, c.fixed_digits.front());
  } else if (n == static_cast<std::size_t>(f.system.q)) {
    c.kind = FixedSetKind::Interval;
    c.dimension = moran_dimension(f.system, c.fixed_digits);
  } else {
    c.kind = FixedSetKind::Fractal;
    c.dimension = moran_dimension(f.system, c.fixed_digits);
  }
  return c;
}

DimensionBounds graph_dimension_bounds(const ModifiedSalem& f) {
  const SalemSystem& sys = f.system;
  double a = 1.0, b = 0.0;
  for (int t = 0; t < sys.q; ++t) {
    a = std::min({a, sys.p[static_cast<std::size_t>(t)],
                  sys.p[static_cast<std::size_t>(f.theta(t))]});
    b = std::max({b, sys.p[static_cast<std::size_t>(t)],
                  sys.p[static_cast<std::size_t>(f.theta(t))]});
  }
  DimensionBounds d;
  d.a = a;
  d.b = b;
  // Extended precision keeps log q / -log(1/q) at exactly 1 for uniform
  // weights, where 1/q is not representable.
  const long double lq = std::log(static_cast<long double>(sys.q));
  d.alpha1 = static_cast<double>(lq / -std::log(static_cast<long double>(a)));
  d.alpha2 = static_cast<double>(lq / -std::log(static_cast<long double>(b)));
  d.lo = std::min(d.alpha1, d.alpha2);
  d.hi = std::max(d.alpha1, d.alpha2);
  return d;
}

std::optional<MonotonicityWitness> monotonicity_witness(const ModifiedSalem& f,
                                                        int search_rank) {
  if (search_rank < 1)
    fail(ErrorKind::ArgumentOutOfDomain, "search rank must be >= 1");
  const SalemSystem& sys = f.system;
  if (!fits_enumeration(sys.q, search_rank))
    fail(ErrorKind::RankTooLarge, "q^rank exceeds the 1e7 enumeration guard");

  const double tail0 = constant_tail_value(sys, f.theta(0));
  for (int rank = 1; rank <= search_rank; ++rank) {
    bool have_prev = false;
    double prev_x = 0.0, prev_f = 0.0;
    bool ascent = false;
    std::optional<MonotonicityWitness> descent;
    // Lexicographic leaves are the rank-`rank` left endpoints in increasing
    // x order.
    auto rec = [&](auto&& self, int level, double x, double xs, double fv,
                   double fs) -> void {
      if (level == rank) {
        const double fx = fv + fs * tail0;
        if (have_prev) {
          if (prev_f < fx) ascent = true;
          if (prev_f > fx && prev_x < x && !descent)
            descent = MonotonicityWitness{prev_x, x, prev_f, fx, rank};
        }
        have_prev = true;
        prev_x = x;
        prev_f = fx;
        return;
      }
      for (int t = 0; t < sys.q; ++t) {
        const int ti = f.theta(t);
        self(self, level + 1, x + xs * sys.beta[static_cast<std::size_t>(t)],
             xs * sys.p[static_cast<std::size_t>(t)],
             fv + fs * sys.beta[static_cast<std::size_t>(ti)],
             fs * sys.p[static_cast<std::size_t>(ti)]);
      }
    };
    rec(rec, 0, 0.0, 1.0, 0.0, 1.0);
    if (descent && ascent) return descent;
  }
  return std::nullopt;
}

DigitString sample_digits(const SalemSystem& sys, std::size_t length,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> digits(length);
  for (std::size_t k = 0; k < length; ++k) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    auto it = std::upper_bound(sys.beta.begin(), sys.beta.end(), u);
    digits[k] = std::clamp(static_cast<int>(it - sys.beta.begin()) - 1, 0,
                           sys.q - 1);
  }
  return make_digit_string(sys, std::move(digits));
}

}  // namespace salem
