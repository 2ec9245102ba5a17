#include "lurker/netgen.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "lurker/seeds.hpp"

namespace lurker {

std::string to_string(NetworkModel m) {
  switch (m) {
    case NetworkModel::WattsStrogatz: return "ws";
    case NetworkModel::BarabasiAlbert: return "ba";
    case NetworkModel::Complete: return "complete";
  }
  return "?";
}

NetworkModel network_model_from_string(const std::string& s) {
  if (s == "ws") return NetworkModel::WattsStrogatz;
  if (s == "ba") return NetworkModel::BarabasiAlbert;
  if (s == "complete") return NetworkModel::Complete;
  throw std::invalid_argument("model: must be one of ws, ba, complete");
}

void NetworkSpec::validate() const {
  if (n < 2) throw std::invalid_argument("n: must be >= 2");
  switch (model) {
    case NetworkModel::WattsStrogatz:
      if (mean_degree < 2) throw std::invalid_argument("mean_degree: must be >= 2");
      if (mean_degree % 2 != 0) throw std::invalid_argument("mean_degree: must be even");
      if (n <= mean_degree) throw std::invalid_argument("n: must exceed mean_degree");
      if (beta < 0.0 || beta > 1.0) throw std::invalid_argument("beta: must be in [0,1]");
      break;
    case NetworkModel::BarabasiAlbert:
      if (edges_per_node < 1) throw std::invalid_argument("edges_per_node: must be >= 1");
      if (edges_per_node >= n) throw std::invalid_argument("edges_per_node: must be < n");
      break;
    case NetworkModel::Complete:
      break;
  }
}

Graph generate(const NetworkSpec& spec) {
  switch (spec.model) {
    case NetworkModel::WattsStrogatz: return generate_ws(spec);
    case NetworkModel::BarabasiAlbert: return generate_ba(spec);
    case NetworkModel::Complete: return generate_complete(spec.n);
  }
  throw std::invalid_argument("model: unknown");
}

namespace {

bool contains(const std::vector<int32_t>& v, int32_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

void erase_value(std::vector<int32_t>& v, int32_t x) {
  v.erase(std::find(v.begin(), v.end(), x));
}

bool adjacency_connected(const std::vector<std::vector<int32_t>>& adj) {
  const auto n = static_cast<int32_t>(adj.size());
  std::vector<char> seen(n, 0);
  std::vector<int32_t> stack{0};
  seen[0] = 1;
  int32_t reached = 1;
  while (!stack.empty()) {
    const int32_t v = stack.back();
    stack.pop_back();
    for (int32_t w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

std::vector<std::vector<int32_t>> ws_attempt(int32_t n, int32_t k, double beta, uint64_t seed) {
  std::vector<std::vector<int32_t>> adj(n);
  for (auto& a : adj) a.reserve(static_cast<size_t>(k) + 4);
  for (int32_t j = 1; j <= k / 2; ++j)
    for (int32_t i = 0; i < n; ++i) {
      const int32_t t = static_cast<int32_t>((i + j) % n);
      adj[i].push_back(t);
      adj[t].push_back(i);
    }
  std::mt19937_64 rng(derive_seed({seed, 0x575347454eULL}));
  for (int32_t j = 1; j <= k / 2; ++j)
    for (int32_t i = 0; i < n; ++i) {
      if (u01(rng) >= beta) continue;
      if (static_cast<int32_t>(adj[i].size()) >= n - 1) continue;  // already linked to everyone
      const int32_t old = static_cast<int32_t>((i + j) % n);
      int32_t t;
      do {
        t = static_cast<int32_t>(bounded(rng, static_cast<uint64_t>(n)));
      } while (t == i || contains(adj[i], t));
      erase_value(adj[i], old);
      erase_value(adj[old], i);
      adj[i].push_back(t);
      adj[t].push_back(i);
    }
  return adj;
}

}  // namespace

Graph generate_ws(const NetworkSpec& spec) {
  spec.validate();
  if (spec.model != NetworkModel::WattsStrogatz)
    throw std::invalid_argument("model: generate_ws requires model=ws");
  for (uint64_t attempt = 0; attempt <= 100; ++attempt) {
    auto adj = ws_attempt(spec.n, spec.mean_degree, spec.beta, spec.seed + attempt);
    if (adjacency_connected(adj)) return Graph::from_adjacency(std::move(adj));
  }
  throw std::runtime_error("generate_ws: rewiring left the graph disconnected for 100 consecutive seeds");
}

Graph generate_ba(const NetworkSpec& spec) {
  spec.validate();
  if (spec.model != NetworkModel::BarabasiAlbert)
    throw std::invalid_argument("model: generate_ba requires model=ba");
  const int32_t n = spec.n;
  const int32_t m = spec.edges_per_node;
  std::vector<std::vector<int32_t>> adj(n);
  // node appears once per unit of degree; drives degree-proportional sampling
  std::vector<int32_t> pool;
  pool.reserve(2 * static_cast<size_t>(m) * n);
  for (int32_t u = 0; u <= m && u < n; ++u)
    for (int32_t v = u + 1; v <= m && v < n; ++v) {
      adj[u].push_back(v);
      adj[v].push_back(u);
      pool.push_back(u);
      pool.push_back(v);
    }
  std::mt19937_64 rng(derive_seed({spec.seed, 0x424147454eULL}));
  std::vector<int32_t> chosen;
  chosen.reserve(m);
  for (int32_t i = m + 1; i < n; ++i) {
    chosen.clear();
    while (static_cast<int32_t>(chosen.size()) < m) {
      const int32_t cand = pool[bounded(rng, pool.size())];
      if (!contains(chosen, cand)) chosen.push_back(cand);
    }
    for (int32_t t : chosen) {
      adj[i].push_back(t);
      adj[t].push_back(i);
      pool.push_back(t);
      pool.push_back(i);
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph generate_complete(int32_t n) {
  if (n < 2) throw std::invalid_argument("n: must be >= 2");
  std::vector<std::vector<int32_t>> adj(n);
  for (int32_t i = 0; i < n; ++i) {
    adj[i].reserve(static_cast<size_t>(n) - 1);
    for (int32_t j = 0; j < n; ++j)
      if (j != i) adj[i].push_back(j);
  }
  return Graph::from_adjacency(std::move(adj));
}

}  // namespace lurker
