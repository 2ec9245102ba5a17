#pragma once

#include <cstdint>
#include <string>

#include "lurker/graph.hpp"

namespace lurker {

enum class NetworkModel : uint8_t { WattsStrogatz, BarabasiAlbert, Complete };

std::string to_string(NetworkModel m);
NetworkModel network_model_from_string(const std::string& s);

struct NetworkSpec {
  NetworkModel model = NetworkModel::WattsStrogatz;
  int32_t n = 5000;
  int32_t mean_degree = 4;    // WS ring degree; even, >= 2, < n
  int32_t edges_per_node = 2; // BA attachment count m; >= 1, < n
  double beta = 0.0;          // WS rewiring probability in [0,1]
  uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument naming the offending field
};

// Dispatches on spec.model.
Graph generate(const NetworkSpec& spec);

// Ring lattice with mean_degree/2 neighbors per side, then each lattice
// edge's far endpoint rewired with probability beta to a uniform random
// non-self, non-duplicate target. If rewiring disconnects the graph the
// whole construction is retried with the next seed (up to 100 times).
Graph generate_ws(const NetworkSpec& spec);

// Preferential attachment seeded with an (edges_per_node+1)-clique; each new
// node draws targets proportionally to degree, discarding duplicate draws.
Graph generate_ba(const NetworkSpec& spec);

Graph generate_complete(int32_t n);

}  // namespace lurker
