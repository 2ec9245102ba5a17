#include "lurker/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace lurker {

namespace {

// BFS from source; fills dist (-1 = unreached), returns number reached.
int32_t bfs(const Graph& g, int32_t source, std::vector<int32_t>& dist, std::vector<int32_t>& queue) {
  std::fill(dist.begin(), dist.end(), -1);
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  size_t head = 0;
  while (head < queue.size()) {
    const int32_t v = queue[head++];
    const int32_t dv = dist[v];
    for (int32_t w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dv + 1;
        queue.push_back(w);
      }
  }
  return static_cast<int32_t>(queue.size());
}

int resolve_workers(int worker_count) {
  if (worker_count > 0) return worker_count;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 2;
}

void require_connected(const Graph& g) {
  const int32_t components = component_count(g);
  if (components != 1) throw DisconnectedGraphError(components);
}

}  // namespace

int32_t component_count(const Graph& g) {
  const int32_t n = g.node_count();
  std::vector<int32_t> dist(n), queue;
  queue.reserve(n);
  std::vector<char> seen(n, 0);
  int32_t components = 0;
  for (int32_t v = 0; v < n; ++v) {
    if (seen[v]) continue;
    ++components;
    bfs(g, v, dist, queue);
    for (int32_t w : queue) seen[w] = 1;
  }
  return components;
}

GraphMetrics path_metrics(const Graph& g, int worker_count) {
  require_connected(g);
  const int32_t n = g.node_count();
  const int workers = std::min<int>(resolve_workers(worker_count), n);

  // Per-source integer results; the final reduction is order-independent.
  std::vector<int64_t> dist_sum(n, 0);
  std::vector<int32_t> ecc(n, 0);
  std::atomic<int32_t> next{0};

  auto work = [&]() {
    std::vector<int32_t> dist(n), queue;
    queue.reserve(n);
    for (;;) {
      const int32_t source = next.fetch_add(1, std::memory_order_relaxed);
      if (source >= n) break;
      bfs(g, source, dist, queue);
      int64_t sum = 0;
      int32_t maxd = 0;
      for (int32_t v = 0; v < n; ++v) {
        sum += dist[v];
        maxd = std::max(maxd, dist[v]);
      }
      dist_sum[source] = sum;
      ecc[source] = maxd;
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int t = 0; t < workers; ++t) threads.emplace_back(work);
  for (auto& t : threads) t.join();

  int64_t total = 0;
  int32_t diam = 0;
  for (int32_t v = 0; v < n; ++v) {
    total += dist_sum[v];
    diam = std::max(diam, ecc[v]);
  }
  const double pairs = static_cast<double>(n) * (n - 1);
  return {static_cast<double>(total) / pairs, diam, clustering_coefficient(g), transitivity(g)};
}

double avg_path_length(const Graph& g, int worker_count) {
  return path_metrics(g, worker_count).avg_path_length;
}

int32_t diameter(const Graph& g, int worker_count) {
  return path_metrics(g, worker_count).diameter;
}

double clustering_coefficient(const Graph& g) {
  require_connected(g);
  const int32_t n = g.node_count();
  std::vector<int32_t> stamp(n, -1);
  double sum = 0.0;
  for (int32_t v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    const auto k = static_cast<int32_t>(nb.size());
    if (k < 2) continue;
    for (int32_t w : nb) stamp[w] = v;
    int64_t links = 0;  // unordered neighbor pairs that are themselves adjacent
    for (int32_t w : nb)
      for (int32_t u : g.neighbors(w))
        if (u > w && stamp[u] == v) ++links;
    sum += 2.0 * static_cast<double>(links) / (static_cast<double>(k) * (k - 1));
  }
  return sum / static_cast<double>(n);
}

double transitivity(const Graph& g) {
  require_connected(g);
  const int32_t n = g.node_count();
  std::vector<int32_t> stamp(n, -1);
  int64_t closed = 0;  // ordered triangles, 3 per triangle per apex orientation
  int64_t triples = 0;
  for (int32_t v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    const auto k = static_cast<int64_t>(nb.size());
    triples += k * (k - 1) / 2;
    if (k < 2) continue;
    for (int32_t w : nb) stamp[w] = v;
    for (int32_t w : nb)
      for (int32_t u : g.neighbors(w))
        if (u > w && stamp[u] == v) ++closed;
  }
  if (triples == 0) return 0.0;
  return static_cast<double>(closed) / static_cast<double>(triples);
}

}  // namespace lurker
