#pragma once

#include <cstdint>
#include <string>

#include "gsa/graph.hpp"

namespace gsa {

enum class GenKind { Random, Cycle, DeBruijn, Chain };

GenKind parse_gen_kind(const std::string& name);
const char* to_string(GenKind kind);

struct GenOptions {
  GenKind kind = GenKind::Random;
  NodeId n = 0;
  Symbol sigma = 1;
  std::uint64_t seed = 0;
  double density = 0.1;  // random only: chance of filling each free (node, symbol) slot
};

// Every output passes validate() and depends only on the options.
//
//   Random    labels drawn uniformly with every symbol used; each node gets
//             one incoming edge, then each remaining (u, c) successor slot is
//             filled with probability `density` by a random node labelled c.
//   Cycle     n-cycle, node i labelled i mod sigma.
//   DeBruijn  de Bruijn graph with n = sigma^k nodes; node x is entered from
//             (x div sigma) + j * sigma^(k-1) and labelled x mod sigma.
//   Chain     source with a self-loop, a path, and a sink with a self-loop;
//             labels cycle through the alphabet.
//
// Throws std::invalid_argument for impossible parameters.
LabeledGraph generate(const GenOptions& opts);

}  // namespace gsa
