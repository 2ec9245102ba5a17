#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "lurker/game.hpp"
#include "lurker/graph.hpp"

namespace lurker {

struct PopulationState {
  std::vector<Strategy> strategies;
  // Lifetime totals under MemoryAware; the last activation's scratch value
  // under Memoryless (overwritten whenever the agent plays).
  std::vector<double> payoffs;
  std::vector<int32_t> streaks;  // uninterrupted cooperative activations
  int64_t step = 0;
  uint64_t seed = 0;  // seed the run's generator was derived from
};

enum class Phase : uint8_t { AllCooperate, AllDefect, Coexistence };

std::string to_string(Phase p);

struct RunResult {
  std::vector<std::pair<int64_t, double>> series;  // (step, rho_c) at the sampling stride
  Phase phase = Phase::Coexistence;
  int64_t steps_executed = 0;
  uint64_t seed = 0;
};

// The groups an agent plays in: the closed neighborhood centered on the
// agent plus the closed neighborhood centered on each of its neighbors.
// A degree-z agent therefore belongs to z+1 groups.
std::vector<std::vector<int32_t>> groups_of(const Graph& g, int32_t agent);

// Slow-path recomputation of one agent's per-activation payoff over all its
// groups (prize excluded). Reference for the engine's incremental counters.
double activation_payoff(const Graph& g, const std::vector<Strategy>& strategies, int32_t agent,
                         const GameParams& p);

// Emitted after every executed step; test observability hook.
struct StepTrace {
  int32_t imitated;  // x, whose strategy may spread
  int32_t adopter;   // y, who draws against the Fermi probability
  double pi_x;
  double pi_y;
  bool adopted;
};

// Sequential Monte Carlo loop on one graph: pick a uniformly random edge
// joining agents with different strategies, let both endpoints play in all
// their groups, reward due prizes, then let one endpoint adopt the other's
// strategy with the Fermi probability. A mixed-edge index is maintained
// incrementally, so absorption is detected exactly and selection stays O(1).
class Simulation {
 public:
  // Places round(n * init_rho_c) cooperators uniformly at random.
  Simulation(const Graph& g, GameParams params, uint64_t seed, double init_rho_c);
  // Starts from an explicit population (strategies sized to the graph).
  Simulation(const Graph& g, GameParams params, uint64_t seed, PopulationState state);

  enum class StepStatus : uint8_t { Stepped, Absorbed };
  StepStatus step();

  bool absorbed() const { return mixed_.empty(); }
  int64_t cooperator_count() const { return coop_count_; }
  double rho_c() const {
    return static_cast<double>(coop_count_) / static_cast<double>(graph_->node_count());
  }
  const PopulationState& state() const { return state_; }
  const GameParams& params() const { return params_; }

  std::function<void(const StepTrace&)> on_step;

 private:
  void rebuild_indices();
  void set_strategy(int32_t agent, Strategy s);
  double play(int32_t agent);

  const Graph* graph_;
  GameParams params_;
  PopulationState state_;
  std::mt19937_64 rng_;
  int64_t coop_count_ = 0;

  // cooperators inside the closed neighborhood {i} + N(i)
  std::vector<int32_t> closed_coop_;
  // flat edge arrays plus the index of currently mixed edges (swap-remove)
  std::vector<int32_t> edge_u_, edge_v_;
  std::vector<int64_t> incident_offsets_;
  std::vector<int32_t> incident_edges_;
  std::vector<int32_t> mixed_;
  std::vector<int32_t> mixed_pos_;  // edge id -> slot in mixed_, or -1
};

// Runs to absorption or max_steps. The series is sampled every
// sample_stride steps (0 = max(1, max_steps / 10000)); the initial and
// final densities are always included.
RunResult run(const Graph& g, const GameParams& params, double init_rho_c, int64_t max_steps,
              uint64_t seed, int64_t sample_stride = 0);

}  // namespace lurker
