#pragma once

#include <cstdint>
#include <vector>

#include "gsa/generators.hpp"

namespace gsa {

struct BenchRecord {
  GenKind kind = GenKind::Random;
  NodeId n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::int64_t wall_ns = 0;         // median over repeats
  std::size_t max_edge_work = 0;    // largest single exploration, any level
  std::size_t depth = 0;            // recursion levels
};

struct BenchConfig {
  GenKind kind = GenKind::Random;
  std::vector<NodeId> sizes;
  int repeats = 3;
  std::uint64_t seed = 1;
  Symbol sigma = 0;       // 0: n / 2 (at least 1)
  double density = 0.5;
};

struct BenchResult {
  std::vector<BenchRecord> records;
  double slope = 0.0;     // least-squares slope of log(time) over log(n)
};

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// Times min_partition once per size after one discarded warm-up run per
// size. Throws std::invalid_argument unless there are at least three
// strictly increasing sizes.
BenchResult bench_scaling(const BenchConfig& config);

}  // namespace gsa
