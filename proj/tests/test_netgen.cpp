#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include <doctest.h>

#include "lurker/metrics.hpp"
#include "lurker/netgen.hpp"

using namespace lurker;

namespace {

NetworkSpec ws(int32_t n, int32_t k, double beta, uint64_t seed = 0) {
  NetworkSpec s;
  s.model = NetworkModel::WattsStrogatz;
  s.n = n;
  s.mean_degree = k;
  s.beta = beta;
  s.seed = seed;
  return s;
}

NetworkSpec ba(int32_t n, int32_t m, uint64_t seed = 0) {
  NetworkSpec s;
  s.model = NetworkModel::BarabasiAlbert;
  s.n = n;
  s.edges_per_node = m;
  s.seed = seed;
  return s;
}

bool same_graph(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count()) return false;
  for (int32_t v = 0; v < a.node_count(); ++v) {
    const auto na = a.neighbors(v);
    const auto nb = b.neighbors(v);
    if (!std::equal(na.begin(), na.end(), nb.begin(), nb.end())) return false;
  }
  return true;
}

// least-squares slope of log10(count) on log10(degree) for the pooled
// degree histogram, restricted to degrees >= min_degree
double tail_slope(const std::map<int32_t, int64_t>& histogram, int32_t min_degree) {
  std::vector<double> xs, ys;
  for (const auto& [degree, count] : histogram) {
    if (degree < min_degree || count == 0) continue;
    xs.push_back(std::log10(static_cast<double>(degree)));
    ys.push_back(std::log10(static_cast<double>(count)));
  }
  REQUIRE(xs.size() >= 5);
  const auto n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_SUITE("netgen") {

TEST_CASE("ws lattice with degree n-1 is the complete graph") {
  const Graph g = generate_ws(ws(5, 4, 0.0));
  CHECK(g.edge_count() == 10);
  for (int32_t v = 0; v < 5; ++v) CHECK(g.degree(v) == 4);
  CHECK(clustering_coefficient(g) == 1.0);
}

TEST_CASE("ws with beta = 0 ignores the seed") {
  const Graph a = generate_ws(ws(200, 4, 0.0, 1));
  const Graph b = generate_ws(ws(200, 4, 0.0, 99));
  CHECK(same_graph(a, b));
}

TEST_CASE("ws rewiring preserves the edge count") {
  for (double beta : {0.0, 0.3, 0.8, 1.0})
    for (uint64_t seed : {1ull, 2ull, 3ull}) {
      const Graph g = generate_ws(ws(500, 6, beta, seed));
      CHECK(g.edge_count() == 500 * 6 / 2);
    }
}

TEST_CASE("ws output stays connected even under full rewiring") {
  // k = 2 rings disconnect easily; the retry policy must absorb that
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = generate_ws(ws(30, 2, 1.0, seed));
    CHECK(component_count(g) == 1);
  }
}

TEST_CASE("ws spec violations are rejected") {
  CHECK_THROWS_AS(generate_ws(ws(100, 3, 0.0)), std::invalid_argument);   // odd degree
  CHECK_THROWS_AS(generate_ws(ws(4, 4, 0.0)), std::invalid_argument);     // n <= mean_degree
  CHECK_THROWS_AS(generate_ws(ws(100, 4, 1.5)), std::invalid_argument);   // beta out of range
}

TEST_CASE("ba with n = m+1 is the seed clique") {
  const Graph g = generate_ba(ba(3, 2));
  CHECK(g.edge_count() == 3);
  for (int32_t v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("ba edge count is clique plus m per attached node") {
  for (int32_t m : {1, 2, 3})
    for (uint64_t seed : {1ull, 7ull}) {
      const Graph g = generate_ba(ba(300, m, seed));
      CHECK(g.edge_count() == m * (m + 1) / 2 + static_cast<int64_t>(m) * (300 - m - 1));
    }
}

TEST_CASE("ba rejects m >= n") {
  CHECK_THROWS_AS(generate_ba(ba(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(generate_ba(ba(5, 0)), std::invalid_argument);
}

TEST_CASE("ba grows hubs: max degree far above the mean") {
  const Graph g = generate_ba(ba(5000, 2, 17));
  const double mean_degree = 2.0 * static_cast<double>(g.edge_count()) / g.node_count();
  CHECK(mean_degree == doctest::Approx(4.0).epsilon(0.01));
  int32_t max_degree = 0;
  for (int32_t v = 0; v < g.node_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
  CHECK(max_degree > 10.0 * mean_degree);
}

TEST_CASE("ba degree distribution tail falls off with exponent near -3") {
  std::map<int32_t, int64_t> histogram;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate_ba(ba(5000, 2, 1000 + seed));
    for (int32_t v = 0; v < g.node_count(); ++v) ++histogram[g.degree(v)];
  }
  const double slope = tail_slope(histogram, 8);
  CHECK(slope == doctest::Approx(-3.0).epsilon(0.5 / 3.0));  // within +-0.5
}

TEST_CASE("complete graphs") {
  CHECK(generate_complete(3).edge_count() == 3);
  CHECK(generate_complete(2).edge_count() == 1);
  CHECK_THROWS_AS(generate_complete(1), std::invalid_argument);
  const Graph big = generate_complete(5000);
  CHECK(big.degree(0) == 4999);
  CHECK(big.degree(4999) == 4999);
  CHECK(big.edge_count() == 5000LL * 4999 / 2);
}

TEST_CASE("same spec and seed reproduce the graph bit for bit") {
  const Graph a1 = generate_ws(ws(400, 4, 0.5, 42));
  const Graph a2 = generate_ws(ws(400, 4, 0.5, 42));
  CHECK(same_graph(a1, a2));
  const Graph b1 = generate_ba(ba(400, 2, 42));
  const Graph b2 = generate_ba(ba(400, 2, 42));
  CHECK(same_graph(b1, b2));
}

TEST_CASE("generated graphs pass the structural validator") {
  // validate() throws on any symmetry/simplicity violation
  for (uint64_t seed = 0; seed < 5; ++seed) {
    generate_ws(ws(300, 4, 0.5, seed)).validate();
    generate_ba(ba(300, 2, seed)).validate();
  }
  generate_complete(50).validate();
}

TEST_CASE("ws clustering decays monotonically with beta on 20-seed averages") {
  const double betas[] = {0.0, 0.3, 0.5, 0.8};
  double prev = 2.0;
  for (double beta : betas) {
    double mean = 0.0;
    for (uint64_t seed = 0; seed < 20; ++seed)
      mean += clustering_coefficient(generate_ws(ws(2000, 4, beta, 300 + seed)));
    mean /= 20.0;
    CHECK(mean < prev);
    prev = mean;
  }
}

}  // TEST_SUITE
