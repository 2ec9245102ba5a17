#include "lurker/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lurker/seeds.hpp"

namespace lurker {

std::string to_string(Phase p) {
  switch (p) {
    case Phase::AllCooperate: return "AllCooperate";
    case Phase::AllDefect: return "AllDefect";
    case Phase::Coexistence: return "Coexistence";
  }
  return "?";
}

std::vector<std::vector<int32_t>> groups_of(const Graph& g, int32_t agent) {
  auto closed = [&g](int32_t center) {
    std::vector<int32_t> group(g.neighbors(center).begin(), g.neighbors(center).end());
    group.insert(std::lower_bound(group.begin(), group.end(), center), center);
    return group;
  };
  std::vector<std::vector<int32_t>> groups;
  groups.reserve(g.neighbors(agent).size() + 1);
  groups.push_back(closed(agent));
  for (int32_t j : g.neighbors(agent)) groups.push_back(closed(j));
  return groups;
}

double activation_payoff(const Graph& g, const std::vector<Strategy>& strategies, int32_t agent,
                         const GameParams& p) {
  const bool coop = strategies[agent] == Strategy::Cooperator;
  double total = 0.0;
  for (const auto& group : groups_of(g, agent)) {
    int32_t cooperators = 0;
    for (int32_t member : group)
      if (strategies[member] == Strategy::Cooperator) ++cooperators;
    total += payoff_group(cooperators, coop, p);
  }
  return total;
}

Simulation::Simulation(const Graph& g, GameParams params, uint64_t seed, double init_rho_c)
    : graph_(&g), params_(std::move(params)), rng_(seed) {
  if (init_rho_c < 0.0 || init_rho_c > 1.0)
    throw std::invalid_argument("init_rho_c: must be in [0,1]");
  params_.validate();
  const int32_t n = g.node_count();
  state_.strategies.assign(n, Strategy::Defector);
  state_.payoffs.assign(n, 0.0);
  state_.streaks.assign(n, 0);
  state_.seed = seed;
  const auto n_coop = static_cast<int32_t>(std::llround(init_rho_c * n));
  // partial Fisher-Yates: the first n_coop slots become the cooperators
  std::vector<int32_t> ids(n);
  for (int32_t i = 0; i < n; ++i) ids[i] = i;
  for (int32_t i = 0; i < n_coop; ++i) {
    const auto j = i + static_cast<int32_t>(bounded(rng_, static_cast<uint64_t>(n - i)));
    std::swap(ids[i], ids[j]);
    state_.strategies[ids[i]] = Strategy::Cooperator;
  }
  rebuild_indices();
}

Simulation::Simulation(const Graph& g, GameParams params, uint64_t seed, PopulationState state)
    : graph_(&g), params_(std::move(params)), state_(std::move(state)), rng_(seed) {
  params_.validate();
  const auto n = static_cast<size_t>(g.node_count());
  if (state_.strategies.size() != n)
    throw std::invalid_argument("state: strategies must match the graph's node count");
  state_.payoffs.resize(n, 0.0);
  state_.streaks.resize(n, 0);
  state_.seed = seed;
  rebuild_indices();
}

void Simulation::rebuild_indices() {
  const Graph& g = *graph_;
  const int32_t n = g.node_count();

  coop_count_ = 0;
  closed_coop_.assign(n, 0);
  for (int32_t v = 0; v < n; ++v)
    if (state_.strategies[v] == Strategy::Cooperator) {
      ++coop_count_;
      ++closed_coop_[v];
      for (int32_t w : g.neighbors(v)) ++closed_coop_[w];
    }

  const auto edge_total = static_cast<size_t>(g.edge_count());
  edge_u_.clear();
  edge_v_.clear();
  edge_u_.reserve(edge_total);
  edge_v_.reserve(edge_total);
  incident_offsets_.assign(static_cast<size_t>(n) + 1, 0);
  for (int32_t u = 0; u < n; ++u) incident_offsets_[u + 1] = incident_offsets_[u] + g.degree(u);
  incident_edges_.resize(static_cast<size_t>(incident_offsets_[n]));
  std::vector<int64_t> cursor(incident_offsets_.begin(), incident_offsets_.end() - 1);
  for (int32_t u = 0; u < n; ++u)
    for (int32_t v : g.neighbors(u)) {
      if (u >= v) continue;
      const auto e = static_cast<int32_t>(edge_u_.size());
      edge_u_.push_back(u);
      edge_v_.push_back(v);
      incident_edges_[cursor[u]++] = e;
      incident_edges_[cursor[v]++] = e;
    }

  mixed_.clear();
  mixed_pos_.assign(edge_u_.size(), -1);
  for (size_t e = 0; e < edge_u_.size(); ++e)
    if (state_.strategies[edge_u_[e]] != state_.strategies[edge_v_[e]]) {
      mixed_pos_[e] = static_cast<int32_t>(mixed_.size());
      mixed_.push_back(static_cast<int32_t>(e));
    }
}

void Simulation::set_strategy(int32_t agent, Strategy s) {
  if (state_.strategies[agent] == s) return;
  state_.strategies[agent] = s;
  const int32_t delta = s == Strategy::Cooperator ? 1 : -1;
  coop_count_ += delta;
  closed_coop_[agent] += delta;
  for (int32_t w : graph_->neighbors(agent)) closed_coop_[w] += delta;
  for (int64_t i = incident_offsets_[agent]; i < incident_offsets_[agent + 1]; ++i) {
    const int32_t e = incident_edges_[i];
    const bool mixed_now = state_.strategies[edge_u_[e]] != state_.strategies[edge_v_[e]];
    const int32_t pos = mixed_pos_[e];
    if (mixed_now && pos < 0) {
      mixed_pos_[e] = static_cast<int32_t>(mixed_.size());
      mixed_.push_back(e);
    } else if (!mixed_now && pos >= 0) {
      const int32_t last = mixed_.back();
      mixed_[pos] = last;
      mixed_pos_[last] = pos;
      mixed_.pop_back();
      mixed_pos_[e] = -1;
    }
  }
  state_.streaks[agent] = 0;  // streak survives neither defection nor conversion
}

double Simulation::play(int32_t agent) {
  const Graph& g = *graph_;
  // full pot over all groups via the closed-neighborhood cooperator counts
  int64_t pot_units = closed_coop_[agent];
  for (int32_t j : g.neighbors(agent)) pot_units += closed_coop_[j];
  double pay = params_.synergy * params_.interest * params_.coin * static_cast<double>(pot_units);
  const bool coop = state_.strategies[agent] == Strategy::Cooperator;
  if (coop) {
    // one coin contributed per group played
    pay -= static_cast<double>(g.degree(agent) + 1) * params_.coin;
    const int32_t streak = ++state_.streaks[agent];
    const double award = prize(streak, params_);
    if (award != 0.0) {
      pay += award;
      state_.streaks[agent] = 0;
    }
  }
  if (params_.memory == MemoryMode::MemoryAware) return state_.payoffs[agent] += pay;
  return state_.payoffs[agent] = pay;
}

Simulation::StepStatus Simulation::step() {
  if (mixed_.empty()) return StepStatus::Absorbed;
  int32_t e;
  if (params_.memory == MemoryMode::MemoryAware) {  // PROBE: all-edge sampling
    e = static_cast<int32_t>(bounded(rng_, edge_u_.size()));
  } else {
    e = mixed_[bounded(rng_, mixed_.size())];
  }
  // the selected pair is unordered; a fair coin decides who may imitate whom
  const bool flip = bounded(rng_, 2) != 0;
  const int32_t x = flip ? edge_v_[e] : edge_u_[e];
  const int32_t y = flip ? edge_u_[e] : edge_v_[e];
  const double pi_x = play(x);
  const double pi_y = play(y);
  const bool adopted = u01(rng_) < fermi_prob(pi_x, pi_y, params_);
  if (adopted && state_.strategies[y] != state_.strategies[x])
    set_strategy(y, state_.strategies[x]);
  ++state_.step;
  if (on_step) on_step(StepTrace{x, y, pi_x, pi_y, adopted});
  return StepStatus::Stepped;
}

RunResult run(const Graph& g, const GameParams& params, double init_rho_c, int64_t max_steps,
              uint64_t seed, int64_t sample_stride) {
  if (max_steps < 1) throw std::invalid_argument("max_steps: must be >= 1");
  const int64_t stride = sample_stride > 0 ? sample_stride : std::max<int64_t>(1, max_steps / 10000);

  Simulation sim(g, params, seed, init_rho_c);
  RunResult result;
  result.seed = seed;
  result.series.emplace_back(0, sim.rho_c());
  while (!sim.absorbed() && sim.state().step < max_steps) {
    sim.step();
    if (sim.state().step % stride == 0) result.series.emplace_back(sim.state().step, sim.rho_c());
  }
  result.steps_executed = sim.state().step;
  if (result.series.back().first != result.steps_executed)
    result.series.emplace_back(result.steps_executed, sim.rho_c());
  const int64_t coop = sim.cooperator_count();
  result.phase = coop == g.node_count() ? Phase::AllCooperate
               : coop == 0              ? Phase::AllDefect
                                        : Phase::Coexistence;
  return result;
}

}  // namespace lurker
