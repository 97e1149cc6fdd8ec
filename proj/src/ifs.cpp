#include "salem/ifs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <unordered_set>

#include "salem/analysis.hpp"

namespace salem {

namespace {

bool fits_enumeration(int q, int depth) {
  double n = 1.0;
  for (int i = 0; i < depth; ++i) {
    n *= q;
    if (n > 1e7) return false;
  }
  return true;
}

GraphPoint clamp_unit(GraphPoint p) {
  p.x = std::clamp(p.x, 0.0, 1.0);
  p.y = std::clamp(p.y, 0.0, 1.0);
  return p;
}

}  // namespace

std::vector<AffinePair> ifs_maps(const ModifiedSalem& f) {
  const SalemSystem& sys = f.system;
  std::vector<AffinePair> maps(static_cast<std::size_t>(sys.q));
  for (int t = 0; t < sys.q; ++t) {
    const int ti = f.theta(t);
    maps[static_cast<std::size_t>(t)] =
        AffinePair{t, sys.p[static_cast<std::size_t>(t)],
                   sys.beta[static_cast<std::size_t>(t)],
                   sys.p[static_cast<std::size_t>(ti)],
                   sys.beta[static_cast<std::size_t>(ti)]};
  }
  return maps;
}

GraphCloud attractor_deterministic(const ModifiedSalem& f, int depth) {
  if (depth < 1) fail(ErrorKind::ArgumentOutOfDomain, "depth must be >= 1");
  const SalemSystem& sys = f.system;
  if (!fits_enumeration(sys.q, depth))
    fail(ErrorKind::DepthTooLarge, "q^depth exceeds the 1e7 enumeration guard");

  const double y0 = constant_tail_value(sys, f.theta(0));  // f(0)
  GraphCloud cloud;
  cloud.mode = CloudMode::Deterministic;
  cloud.depth = depth;
  cloud.points.reserve(static_cast<std::size_t>(std::pow(sys.q, depth)));
  auto rec = [&](auto&& self, int level, double x, double xs, double fv,
                 double fs) -> void {
    if (level == depth) {
      cloud.points.push_back(clamp_unit({x, fv + fs * y0}));
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
  return cloud;
}

GraphCloud attractor_chaos(const ModifiedSalem& f, std::size_t n,
                           std::uint64_t seed) {
  if (n < 1) fail(ErrorKind::ArgumentOutOfDomain, "step count must be >= 1");
  const SalemSystem& sys = f.system;
  const auto maps = ifs_maps(f);
  constexpr std::size_t kBurnIn = 50;

  GraphCloud cloud;
  cloud.mode = CloudMode::Chaos;
  cloud.seed = seed;
  if (n > kBurnIn) cloud.points.reserve(n - kBurnIn);

  std::mt19937_64 rng(seed);
  GraphPoint p{0.0, constant_tail_value(sys, f.theta(0))};
  for (std::size_t step = 1; step <= n; ++step) {
    const auto& m = maps[static_cast<std::size_t>(
        rng() % static_cast<std::uint64_t>(sys.q))];
    p = GraphPoint{m.x_scale * p.x + m.x_offset, m.y_scale * p.y + m.y_offset};
    if (step > kBurnIn) cloud.points.push_back(clamp_unit(p));
  }
  return cloud;
}

GraphCloud cloud_from_points(std::vector<GraphPoint> points) {
  for (const auto& p : points) {
    if (!(p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0))
      fail(ErrorKind::ArgumentOutOfDomain, "cloud points must lie in [0,1]^2");
  }
  GraphCloud cloud;
  cloud.points = std::move(points);
  cloud.mode = CloudMode::External;
  return cloud;
}

SelfAffinityReport verify_self_affinity(const ModifiedSalem& f,
                                        const GraphCloud& cloud, double tol) {
  if (cloud.points.empty())
    fail(ErrorKind::InsufficientPoints, "cloud has no points to verify");
  const auto maps = ifs_maps(f);
  const int depth = default_depth(f.system);

  SelfAffinityReport rep;
  for (const auto& p : cloud.points) {
    for (const auto& m : maps) {
      const double qx = m.x_scale * p.x + m.x_offset;
      const double qy = m.y_scale * p.y + m.y_offset;
      const double dev = std::abs(qy - eval_f(f, std::clamp(qx, 0.0, 1.0), depth));
      rep.max_deviation = std::max(rep.max_deviation, dev);
      if (dev > tol) ++rep.failure_count;
      ++rep.checks;
    }
  }
  return rep;
}

CoverReport cover_area(const ModifiedSalem& f, int rank) {
  if (rank < 1) fail(ErrorKind::ArgumentOutOfDomain, "rank must be >= 1");
  const SalemSystem& sys = f.system;
  CoverReport rep;
  rep.rank = rank;
  for (int m = 0; m < sys.q; ++m)
    rep.L1 += sys.p[static_cast<std::size_t>(m)] *
              sys.p[static_cast<std::size_t>(f.theta(m))];
  rep.total_area = 1.0;
  for (int i = 0; i < rank; ++i) rep.total_area *= rep.L1;
  return rep;
}

BoxCountReport box_count(const GraphCloud& cloud,
                         const std::vector<double>& levels) {
  if (cloud.points.size() < 1000)
    fail(ErrorKind::InsufficientPoints,
         "box counting needs at least 1000 points");
  if (levels.size() < 3)
    fail(ErrorKind::TooFewLevels, "box counting needs at least 3 grid levels");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    int e = 0;
    if (!(levels[i] > 0.0 && levels[i] < 1.0) ||
        std::frexp(levels[i], &e) != 0.5)
      fail(ErrorKind::ArgumentOutOfDomain,
           "grid sizes must be powers of 1/2 below 1");
    if (i > 0 && levels[i] >= levels[i - 1])
      fail(ErrorKind::ArgumentOutOfDomain,
           "grid sizes must be strictly decreasing");
  }

  BoxCountReport rep;
  rep.levels = levels;
  rep.counts.resize(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const double inv = 1.0 / levels[i];
    const auto side = static_cast<std::uint64_t>(inv);
    std::unordered_set<std::uint64_t> boxes;
    for (const auto& p : cloud.points) {
      auto ix = static_cast<std::uint64_t>(p.x * inv);
      auto iy = static_cast<std::uint64_t>(p.y * inv);
      ix = std::min(ix, side - 1);
      iy = std::min(iy, side - 1);
      boxes.insert(ix * side + iy);
    }
    rep.counts[i] = boxes.size();
  }

  // OLS slope of log N against log(1/eps).
  const auto n = static_cast<double>(levels.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const double lx = std::log(1.0 / levels[i]);
    const double ly = std::log(static_cast<double>(rep.counts[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return rep;
}

void write_csv(const GraphCloud& cloud, std::ostream& out) {
  out << "x,y\n";
  char buf[64];
  for (const auto& p : cloud.points) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.x, p.y);
    out << buf;
  }
}

void write_jsonl(const GraphCloud& cloud, std::ostream& out) {
  char buf[80];
  for (const auto& p : cloud.points) {
    std::snprintf(buf, sizeof buf, "{\"x\":%.17g,\"y\":%.17g}\n", p.x, p.y);
    out << buf;
  }
}

}  // namespace salem
