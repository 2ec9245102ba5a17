#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "lurker/engine.hpp"
#include "lurker/netgen.hpp"
#include "lurker/seeds.hpp"

using namespace lurker;

namespace {

GameParams base_params() {
  GameParams p;
  p.synergy = 2.0;
  p.interest = 0.5;
  p.adoption_noise = 0.5;
  p.coin = 1.0;
  return p;
}

Graph ring(int32_t n, int32_t k) {
  NetworkSpec s;
  s.model = NetworkModel::WattsStrogatz;
  s.n = n;
  s.mean_degree = k;
  s.beta = 0.0;
  return generate_ws(s);
}

Graph two_nodes() { return Graph::from_adjacency({{1}, {0}}); }

Graph random_connected_graph(std::mt19937_64& rng, int32_t n) {
  std::vector<std::vector<int32_t>> adj(n);
  auto link = [&](int32_t u, int32_t v) {
    if (u == v) return;
    if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) return;
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  for (int32_t v = 1; v < n; ++v) link(v, static_cast<int32_t>(bounded(rng, v)));
  const auto extra = bounded(rng, static_cast<uint64_t>(2 * n));
  for (uint64_t e = 0; e < extra; ++e)
    link(static_cast<int32_t>(bounded(rng, n)), static_cast<int32_t>(bounded(rng, n)));
  return Graph::from_adjacency(std::move(adj));
}

std::vector<Strategy> mixed_strategies(std::mt19937_64& rng, int32_t n) {
  std::vector<Strategy> s(n, Strategy::Defector);
  for (int32_t v = 0; v < n; ++v)
    if (bounded(rng, 2) == 0) s[v] = Strategy::Cooperator;
  s[0] = Strategy::Cooperator;  // keep both camps populated
  s[n - 1] = Strategy::Defector;
  return s;
}

// classic networked public-goods payoff: pot divided equally over the fixed
// group size 5, one coin contributed per group; coded independently of the
// engine and of payoff_group
double classic_pgg_payoff(const Graph& g, const std::vector<Strategy>& strategies, int32_t agent,
                          double r, double vc) {
  auto shared_pot = [&](int32_t center) {
    int32_t coop = strategies[center] == Strategy::Cooperator ? 1 : 0;
    for (int32_t w : g.neighbors(center))
      if (strategies[w] == Strategy::Cooperator) ++coop;
    return r * static_cast<double>(coop) * vc / 5.0;
  };
  double total = shared_pot(agent);
  for (int32_t j : g.neighbors(agent)) total += shared_pot(j);
  if (strategies[agent] == Strategy::Cooperator)
    total -= static_cast<double>(g.degree(agent) + 1) * vc;
  return total;
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("groups on the degree-4 ring: five groups of five") {
  const Graph g = ring(20, 4);
  for (int32_t agent : {0, 7, 19}) {
    const auto groups = groups_of(g, agent);
    CHECK(groups.size() == 5);
    for (const auto& group : groups) CHECK(group.size() == 5);
  }
}

TEST_CASE("groups on a star") {
  std::vector<std::vector<int32_t>> adj(5);
  for (int32_t leaf = 1; leaf < 5; ++leaf) {
    adj[0].push_back(leaf);
    adj[leaf].push_back(0);
  }
  const Graph g = Graph::from_adjacency(std::move(adj));
  CHECK(groups_of(g, 0).size() == 5);  // z + 1 with z = 4
  CHECK(groups_of(g, 3).size() == 2);
}

TEST_CASE("groups on a complete graph are all identical") {
  const Graph g = generate_complete(6);
  const auto groups = groups_of(g, 2);
  CHECK(groups.size() == 6);
  for (const auto& group : groups) {
    CHECK(group.size() == 6);
    for (int32_t v = 0; v < 6; ++v) CHECK(group[v] == v);
  }
}

TEST_CASE("adoption odds wire payoffs, prize and role coin together") {
  const Graph g = two_nodes();
  auto p = base_params();
  p.prize_period = 5;
  // cooperator payoff: 0 from its two one-cooperator groups, +5 prize on
  // this activation; the defector collects 2. Fermi gives 1/(1+e^-6),
  // halved by the role coin.
  int to_coop = 0, to_defect = 0;
  const int trials = 40000;
  for (int t = 0; t < trials; ++t) {
    PopulationState st;
    st.strategies = {Strategy::Cooperator, Strategy::Defector};
    st.streaks = {4, 0};
    Simulation sim(g, p, derive_seed({9000, static_cast<uint64_t>(t)}), st);
    sim.step();
    if (sim.state().strategies[1] == Strategy::Cooperator) ++to_coop;
    if (sim.state().strategies[0] == Strategy::Defector) ++to_defect;
  }
  const double rate_coop = static_cast<double>(to_coop) / trials;
  CHECK(std::abs(rate_coop - 0.4987637) < 0.0075);  // 3 sigma
  CHECK(static_cast<double>(to_defect) / trials < 0.004);  // 0.5 * (1 - 0.99753)
}

TEST_CASE("without the prize the same setup almost never converts") {
  const Graph g = two_nodes();
  const auto p = base_params();
  int to_coop = 0;
  const int trials = 40000;
  for (int t = 0; t < trials; ++t) {
    PopulationState st;
    st.strategies = {Strategy::Cooperator, Strategy::Defector};
    st.streaks = {4, 0};
    Simulation sim(g, p, derive_seed({9500, static_cast<uint64_t>(t)}), st);
    sim.step();
    if (sim.state().strategies[1] == Strategy::Cooperator) ++to_coop;
  }
  // 0.5 / (1 + e^{(2-0)/0.5}) = 0.008993
  CHECK(std::abs(static_cast<double>(to_coop) / trials - 0.008993) < 0.0015);
}

TEST_CASE("degenerate initial densities absorb at step zero") {
  const Graph g = ring(50, 4);
  const auto down = run(g, base_params(), 0.0, 1000, 7);
  CHECK(down.phase == Phase::AllDefect);
  CHECK(down.steps_executed == 0);
  CHECK(down.series.size() == 1);
  const auto up = run(g, base_params(), 1.0, 1000, 7);
  CHECK(up.phase == Phase::AllCooperate);
  CHECK(up.steps_executed == 0);
}

TEST_CASE("identical seed and parameters replay bit for bit") {
  const Graph g = ring(100, 4);
  auto p = base_params();
  p.prize_period = 2;
  const auto a = run(g, p, 0.5, 50000, 31);
  const auto b = run(g, p, 0.5, 50000, 31);
  CHECK(a.phase == b.phase);
  CHECK(a.steps_executed == b.steps_executed);
  REQUIRE(a.series.size() == b.series.size());
  for (size_t i = 0; i < a.series.size(); ++i) {
    CHECK(a.series[i].first == b.series[i].first);
    CHECK(a.series[i].second == b.series[i].second);
  }
}

TEST_CASE("density moves by at most one agent per step") {
  const Graph g = ring(100, 4);
  const auto r = run(g, base_params(), 0.5, 5000, 3, /*sample_stride=*/1);
  for (size_t i = 1; i < r.series.size(); ++i)
    CHECK(std::abs(r.series[i].second - r.series[i - 1].second) <= 1.0 / 100 + 1e-15);
}

TEST_CASE("consensus is absorbing: further steps change nothing") {
  const Graph g = ring(30, 4);
  auto p = base_params();
  p.interest = 0.05;  // deep defection regime, absorbs fast
  Simulation sim(g, p, 11, 0.5);
  while (!sim.absorbed()) sim.step();
  const auto strategies = sim.state().strategies;
  const auto step_before = sim.state().step;
  CHECK(sim.step() == Simulation::StepStatus::Absorbed);
  CHECK(sim.state().step == step_before);
  CHECK(sim.state().strategies == strategies);
}

TEST_CASE("memoryless scratch equals the recomputed activation payoff") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<int32_t>(6 + bounded(rng, 15));
    const Graph g = random_connected_graph(rng, n);
    auto p = base_params();
    p.interest = 0.3 + 0.6 * u01(rng);
    std::vector<Strategy> shadow = mixed_strategies(rng, n);
    Simulation sim(g, p, derive_seed({7, static_cast<uint64_t>(trial)}),
                   PopulationState{shadow, {}, {}, 0, 0});
    sim.on_step = [&](const StepTrace& tr) {
      CHECK(tr.pi_x ==
            doctest::Approx(activation_payoff(g, shadow, tr.imitated, p)).epsilon(1e-12));
      CHECK(tr.pi_y ==
            doctest::Approx(activation_payoff(g, shadow, tr.adopter, p)).epsilon(1e-12));
      if (tr.adopted) shadow[tr.adopter] = shadow[tr.imitated];
    };
    for (int s = 0; s < 400 && !sim.absorbed(); ++s) sim.step();
  }
}

TEST_CASE("repeating one activation from the same state gives the same scratch") {
  const Graph g = ring(40, 4);
  std::mt19937_64 rng(17);
  PopulationState st;
  st.strategies = mixed_strategies(rng, 40);
  Simulation a(g, base_params(), 123, st);
  Simulation b(g, base_params(), 123, st);
  a.step();
  b.step();
  CHECK(a.state().payoffs == b.state().payoffs);
  CHECK(a.state().strategies == b.state().strategies);
}

TEST_CASE("memory-aware totals match an independent ledger replay") {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<int32_t>(8 + bounded(rng, 13));
    const Graph g = random_connected_graph(rng, n);
    auto p = base_params();
    p.memory = MemoryMode::MemoryAware;
    p.prize_period = 1 + static_cast<int32_t>(bounded(rng, 4));
    p.interest = 0.3 + 0.6 * u01(rng);

    std::vector<Strategy> shadow = mixed_strategies(rng, n);
    std::vector<double> ledger(n, 0.0);
    std::vector<int32_t> streaks(n, 0);
    Simulation sim(g, p, derive_seed({8, static_cast<uint64_t>(trial)}),
                   PopulationState{shadow, {}, {}, 0, 0});
    sim.on_step = [&](const StepTrace& tr) {
      for (int side = 0; side < 2; ++side) {
        const int32_t agent = side == 0 ? tr.imitated : tr.adopter;
        double pay = activation_payoff(g, shadow, agent, p);
        if (shadow[agent] == Strategy::Cooperator) {
          ++streaks[agent];
          const double award = prize(streaks[agent], p);
          if (award != 0.0) {
            pay += award;
            streaks[agent] = 0;
          }
        }
        ledger[agent] += pay;
        const double seen = side == 0 ? tr.pi_x : tr.pi_y;
        CHECK(seen == doctest::Approx(ledger[agent]).epsilon(1e-9));
      }
      if (tr.adopted) {
        shadow[tr.adopter] = shadow[tr.imitated];
        streaks[tr.adopter] = 0;
      }
    };
    for (int s = 0; s < 500 && !sim.absorbed(); ++s) sim.step();
    for (int32_t v = 0; v < n; ++v)
      CHECK(sim.state().payoffs[v] == doctest::Approx(ledger[v]).epsilon(1e-9));
  }
}

TEST_CASE("interest 0.2 reproduces the classic public-goods game payoffs") {
  std::mt19937_64 rng(808);
  // the degree-4 ring first: there every group has exactly five members
  std::vector<Graph> graphs;
  graphs.push_back(ring(20, 4));
  for (int trial = 0; trial < 99; ++trial)
    graphs.push_back(random_connected_graph(rng, static_cast<int32_t>(5 + bounded(rng, 16))));

  auto p = base_params();
  p.interest = 0.2;
  for (size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    std::vector<Strategy> shadow = mixed_strategies(rng, g.node_count());
    Simulation sim(g, p, derive_seed({9, i}), PopulationState{shadow, {}, {}, 0, 0});
    sim.on_step = [&](const StepTrace& tr) {
      CHECK(std::abs(tr.pi_x - classic_pgg_payoff(g, shadow, tr.imitated, p.synergy, p.coin)) <
            1e-12);
      CHECK(std::abs(tr.pi_y - classic_pgg_payoff(g, shadow, tr.adopter, p.synergy, p.coin)) <
            1e-12);
      if (tr.adopted) shadow[tr.adopter] = shadow[tr.imitated];
    };
    for (int s = 0; s < 200 && !sim.absorbed(); ++s) sim.step();
  }
}

TEST_CASE("series stride bounds the sample count") {
  const Graph g = ring(60, 4);
  auto p = base_params();
  p.interest = 0.05;
  const auto r = run(g, p, 0.5, 1'000'000, 5);
  CHECK(r.series.size() <= 10002u);
  CHECK(r.series.front().first == 0);
  CHECK(r.series.back().first == r.steps_executed);
}

}  // TEST_SUITE
