#include "lurker/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lurker {

Graph Graph::from_adjacency(std::vector<std::vector<int32_t>> adjacency) {
  Graph g;
  const auto n = static_cast<int32_t>(adjacency.size());
  g.offsets_.resize(static_cast<size_t>(n) + 1);
  int64_t total = 0;
  for (int32_t v = 0; v < n; ++v) {
    std::sort(adjacency[v].begin(), adjacency[v].end());
    g.offsets_[v] = total;
    total += static_cast<int64_t>(adjacency[v].size());
  }
  g.offsets_[n] = total;
  g.adjacency_.reserve(static_cast<size_t>(total));
  for (int32_t v = 0; v < n; ++v)
    g.adjacency_.insert(g.adjacency_.end(), adjacency[v].begin(), adjacency[v].end());
  g.validate();
  return g;
}

bool Graph::has_edge(int32_t u, int32_t v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int32_t, int32_t>> Graph::edges() const {
  std::vector<std::pair<int32_t, int32_t>> out;
  out.reserve(static_cast<size_t>(edge_count()));
  for (int32_t u = 0; u < node_count(); ++u)
    for (int32_t v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::validate() const {
  const int32_t n = node_count();
  for (int32_t v = 0; v < n; ++v) {
    const auto nb = neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i) {
      const int32_t w = nb[i];
      if (w < 0 || w >= n)
        throw std::invalid_argument("graph: neighbor id out of range at node " + std::to_string(v));
      if (w == v)
        throw std::invalid_argument("graph: self-loop at node " + std::to_string(v));
      if (i > 0 && nb[i - 1] == w)
        throw std::invalid_argument("graph: duplicate neighbor " + std::to_string(w) + " at node " +
                                    std::to_string(v));
      if (!has_edge(w, v))
        throw std::invalid_argument("graph: asymmetric edge " + std::to_string(v) + "-" +
                                    std::to_string(w));
    }
  }
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  out << "# nodes=" << g.node_count() << "\n";
  for (const auto& c : comments) out << "# " << c << "\n";
  for (int32_t u = 0; u < g.node_count(); ++u)
    for (int32_t v : g.neighbors(u))
      if (u < v) out << u << " " << v << "\n";
}

Graph read_edge_list(std::istream& in) {
  int32_t n = -1;
  std::vector<std::vector<int32_t>> adjacency;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("nodes=");
      if (pos != std::string::npos) n = std::stoi(line.substr(pos + 6));
      continue;
    }
    std::istringstream ls(line);
    int32_t u, v;
    if (!(ls >> u >> v)) throw std::invalid_argument("edge list: malformed line '" + line + "'");
    const auto need = static_cast<size_t>(std::max(u, v)) + 1;
    if (adjacency.size() < need) adjacency.resize(need);
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  if (n < 0) throw std::invalid_argument("edge list: missing '# nodes=<n>' header");
  if (static_cast<size_t>(n) < adjacency.size())
    throw std::invalid_argument("edge list: node id exceeds declared node count");
  adjacency.resize(static_cast<size_t>(n));
  return Graph::from_adjacency(std::move(adjacency));
}

}  // namespace lurker
