#include "gsa/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "gsa/driver.hpp"

namespace gsa {

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("need matching series of length >= 2");
  const double k = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0) throw std::invalid_argument("log-log fit needs positive values");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = k * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("log-log fit needs distinct x values");
  return (k * sxy - sx * sy) / denom;
}

BenchResult bench_scaling(const BenchConfig& config) {
  if (config.sizes.size() < 3) throw std::invalid_argument("need >= 3 sizes");
  for (std::size_t i = 1; i < config.sizes.size(); ++i) {
    if (config.sizes[i] <= config.sizes[i - 1]) throw std::invalid_argument("sizes must be strictly increasing");
  }
  if (config.repeats < 1) throw std::invalid_argument("need at least one repeat");

  BenchResult result;
  std::vector<double> xs, ys;
  for (NodeId n : config.sizes) {
    GenOptions opts;
    opts.kind = config.kind;
    opts.n = n;
    opts.sigma = config.sigma > 0 ? config.sigma : std::max<Symbol>(1, n / 2);
    opts.seed = config.seed;
    opts.density = config.density;
    const LabeledGraph g = generate(opts);

    RunStats stats;
    (void)min_partition(g, &stats);
    std::vector<std::int64_t> times;
    for (int r = 0; r < config.repeats; ++r) {
      const auto start = std::chrono::steady_clock::now();
      const Partition p = min_partition(g);
      const auto stop = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    }
    std::sort(times.begin(), times.end());

    BenchRecord rec;
    rec.kind = config.kind;
    rec.n = n;
    rec.m = g.edge_count();
    rec.seed = config.seed;
    rec.wall_ns = times[times.size() / 2];
    rec.depth = stats.depth();
    for (const LevelStats& level : stats.levels) rec.max_edge_work = std::max(rec.max_edge_work, level.max_edge_work);
    result.records.push_back(rec);
    xs.push_back(static_cast<double>(n));
    ys.push_back(static_cast<double>(std::max<std::int64_t>(rec.wall_ns, 1)));
  }
  result.slope = loglog_slope(xs, ys);
  return result;
}

}  // namespace gsa
