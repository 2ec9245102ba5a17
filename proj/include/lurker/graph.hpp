#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lurker {

// Immutable undirected simple graph in CSR form. Node ids are exactly
// 0..node_count()-1 and every neighbor list is sorted. Safe for shared
// read-only access from any number of threads.
class Graph {
 public:
  Graph() = default;

  // Sorts each list and checks simplicity + symmetry (throws std::invalid_argument).
  static Graph from_adjacency(std::vector<std::vector<int32_t>> adjacency);

  int32_t node_count() const { return static_cast<int32_t>(offsets_.size()) - 1; }
  int64_t edge_count() const { return static_cast<int64_t>(adjacency_.size()) / 2; }

  int32_t degree(int32_t v) const { return static_cast<int32_t>(offsets_[v + 1] - offsets_[v]); }

  std::span<const int32_t> neighbors(int32_t v) const {
    return {adjacency_.data() + offsets_[v], static_cast<size_t>(offsets_[v + 1] - offsets_[v])};
  }

  bool has_edge(int32_t u, int32_t v) const;

  // Every edge once, as (u, v) with u < v, ordered by u then v.
  std::vector<std::pair<int32_t, int32_t>> edges() const;

  // Re-checks the structural invariants; throws std::invalid_argument on violation.
  void validate() const;

 private:
  std::vector<int64_t> offsets_{0};
  std::vector<int32_t> adjacency_;
};

// Edge-list text format: a '# nodes=<n>' header, any further '#' comment
// lines, then one 'u v' pair per line ordered by u then v (u < v).
void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>& comments = {});
Graph read_edge_list(std::istream& in);

}  // namespace lurker
