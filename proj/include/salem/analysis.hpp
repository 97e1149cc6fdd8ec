#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "salem/salemfun.hpp"

namespace salem {

/// Increment of f over one cylinder together with the length ratio.
struct IncrementResult {
  Cylinder cylinder;
  double mu = 0.0;      // f(sup) - f(inf), boundary values taken inside the cylinder
  double length = 0.0;  // prod p over the base
  double ratio = 0.0;   // mu / length
};

struct FrequencyTable {
  std::vector<long long> counts;
  long long r = 0;
  std::vector<double> freqs;
};

struct MoranResult {
  std::vector<int> digit_set;
  double alpha = 0.0;
  double residual = 0.0;  // |sum p_r^alpha - 1|, 0 for singletons by convention
};

struct DimensionBounds {
  double a = 0.0;       // min weight
  double b = 0.0;       // max weight
  double alpha1 = 0.0;  // log q / log(1/a)
  double alpha2 = 0.0;  // log q / log(1/b)
  double lo = 0.0;
  double hi = 0.0;
};

struct IntegralResult {
  double value = 0.0;
  double numerator = 0.0;    // sum_t beta_{theta(t)} p_t
  double denominator = 0.0;  // 1 - sum_t p_{theta(t)} p_t
};

enum class FixedSetKind { Empty, Singleton, Interval, Fractal };

/// Classification of {x : f(x) = x} restricted to digitwise fixed points.
struct FixedSetClass {
  FixedSetKind kind = FixedSetKind::Empty;
  std::vector<int> fixed_digits;
  std::optional<double> point;          // Singleton only
  std::optional<MoranResult> dimension; // Interval and Fractal
};

struct MonotonicityWitness {
  double x1 = 0.0, x2 = 0.0;  // x1 < x2, f(x1) > f(x2)
  double f1 = 0.0, f2 = 0.0;
  int rank = 0;
};

/// Value beta_j / (1 - p_j) of the constant digit-j string.
double constant_tail_value(const SalemSystem& sys, int digit);

/// mu = (tail(theta(q-1)) - tail(theta(0))) * prod p_{theta(c_r)}.
IncrementResult increment_on_cylinder(const ModifiedSalem& f, const Cylinder& c);

/// Entry m is prod_{r<=m} p_{theta(c_r)} / p_{c_r} for the rank-m cylinder
/// around the given digit string, computed incrementally.
std::vector<double> derivative_ratio_sequence(const ModifiedSalem& f,
                                              const DigitString& digits,
                                              int max_rank);

/// K = prod_m (p_{theta(m)} / p_m)^{p_m}; K <= 1 with equality iff the
/// permuted weights equal the weights.
double singularity_rate(const ModifiedSalem& f);

FrequencyTable digit_frequencies(const SalemSystem& sys, const DigitString& digits,
                                 long long r);

/// Integral of f over [0,1]:
/// (sum_t beta_{theta(t)} p_t) / (1 - sum_t p_{theta(t)} p_t).
IntegralResult integral_closed_form(const ModifiedSalem& f);

/// Left-endpoint Riemann sum over all q^rank cylinders, closed-form values
/// at the endpoints.  Requires q^rank <= 1e7.
double integral_riemann(const ModifiedSalem& f, int rank);

/// Solves sum_{r in set} p_r^alpha = 1 by bisection on [0,1]; singletons give
/// alpha = 0, the full alphabet gives alpha = 1.
MoranResult moran_dimension(const SalemSystem& sys,
                            const std::vector<int>& digit_set);

FixedSetClass fixed_point_set(const ModifiedSalem& f);

/// Box dimension bracket of the graph from the extreme weights
/// a = min({p_t} u {p_{theta(t)}}), b = max(...): alpha1 = log q / log(1/a),
/// alpha2 = log q / log(1/b).  Both raw values are reported along with the
/// ordered interval [lo, hi]; no clamping.
DimensionBounds graph_dimension_bounds(const ModifiedSalem& f);

/// Scans rank <= search_rank cylinder left endpoints in increasing order and
/// returns the first descending adjacent pair, provided an ascending pair
/// also exists (so globally monotone functions, in either direction, give
/// no witness).
std::optional<MonotonicityWitness> monotonicity_witness(const ModifiedSalem& f,
                                                        int search_rank);

/// Digit string of the given length sampled with P(t) = p_t.
DigitString sample_digits(const SalemSystem& sys, std::size_t length,
                          std::uint64_t seed);

}  // namespace salem
