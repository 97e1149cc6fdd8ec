#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "salem/salemfun.hpp"

namespace salem {

/// Affine contraction psi_t(x, y) = (p_t x + beta_t, p_{theta(t)} y + beta_{theta(t)}).
/// The graph of f is the unique attractor of the family {psi_t}.
struct AffinePair {
  int digit = 0;
  double x_scale = 0.0;
  double x_offset = 0.0;
  double y_scale = 0.0;
  double y_offset = 0.0;
};

struct GraphPoint {
  double x = 0.0;
  double y = 0.0;
};

enum class CloudMode { Deterministic, Chaos, External };

struct GraphCloud {
  std::vector<GraphPoint> points;
  CloudMode mode = CloudMode::External;
  int depth = 0;           // deterministic mode
  std::uint64_t seed = 0;  // chaos mode
};

struct SelfAffinityReport {
  double max_deviation = 0.0;
  std::size_t failure_count = 0;
  std::size_t checks = 0;
};

struct CoverReport {
  double L1 = 0.0;  // sum_m p_m p_{theta(m)}
  int rank = 0;
  double total_area = 0.0;  // L1^rank
};

struct BoxCountReport {
  std::vector<double> levels;
  std::vector<std::size_t> counts;
  double slope = 0.0;  // OLS fit of log N against log(1/eps)
};

std::vector<AffinePair> ifs_maps(const ModifiedSalem& f);

/// All q^depth compositions applied to the anchor (0, f(0)), in lexicographic
/// address order.  Every point lies on the graph.  Requires q^depth <= 1e7.
GraphCloud attractor_deterministic(const ModifiedSalem& f, int depth);

/// Chaos game from the anchor with uniformly chosen maps; the first 50
/// iterates are discarded, so n steps yield max(0, n-50) points.
GraphCloud attractor_chaos(const ModifiedSalem& f, std::size_t n,
                           std::uint64_t seed);

/// Wraps externally supplied points (each must lie in [0,1]^2).
GraphCloud cloud_from_points(std::vector<GraphPoint> points);

/// Applies every map to every cloud point and compares the image y against
/// eval_f of the image x at the default depth.
SelfAffinityReport verify_self_affinity(const ModifiedSalem& f,
                                        const GraphCloud& cloud, double tol);

/// Rank-r rectangle cover of the graph: q^r rectangles of total area L1^r.
CoverReport cover_area(const ModifiedSalem& f, int rank);

/// Occupied-box counts over dyadic grids.  Levels must be at least three
/// strictly decreasing powers of 1/2; boxes are half-open with the floor
/// convention and the top row/column clamped.
BoxCountReport box_count(const GraphCloud& cloud,
                         const std::vector<double>& levels);

void write_csv(const GraphCloud& cloud, std::ostream& out);
void write_jsonl(const GraphCloud& cloud, std::ostream& out);

}  // namespace salem
