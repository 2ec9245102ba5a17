#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "lurker/graph.hpp"

namespace lurker {

struct DisconnectedGraphError : std::runtime_error {
  int32_t component_count;
  explicit DisconnectedGraphError(int32_t components)
      : std::runtime_error("graph is disconnected (" + std::to_string(components) + " components)"),
        component_count(components) {}
};

int32_t component_count(const Graph& g);

struct GraphMetrics {
  double avg_path_length;
  int32_t diameter;
  double clustering;    // mean local coefficient
  double transitivity;  // global coefficient
};

// Exact metrics from one all-pairs BFS pass (worker_count threads;
// 0 = hardware concurrency). Throws DisconnectedGraphError when g is not
// connected. Results are deterministic regardless of worker_count.
GraphMetrics path_metrics(const Graph& g, int worker_count = 0);

double avg_path_length(const Graph& g, int worker_count = 0);
int32_t diameter(const Graph& g, int worker_count = 0);

// Mean local clustering coefficient over all nodes; degree < 2 contributes 0.
// Requires a connected graph, like the path metrics.
double clustering_coefficient(const Graph& g);

// Global clustering coefficient: 3 * triangles / connected triples. Agrees
// with the local mean on regular lattices but weighs hubs more on
// heterogeneous graphs.
double transitivity(const Graph& g);

}  // namespace lurker
