#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lurker/engine.hpp"
#include "lurker/game.hpp"
#include "lurker/netgen.hpp"

namespace lurker {

struct SweepSpec {
  NetworkSpec network;  // its seed field is ignored; per-run seeds derive from master_seed
  GameParams base;      // interest and prize_period are overridden per cell
  std::vector<double> nu_grid;    // strictly increasing, in (0,1]
  std::vector<int32_t> k_values;  // prize periods, >= 1
  int32_t runs_per_point = 30;
  int64_t max_steps = 10'000'000;
  double init_rho_c = 0.5;
  uint64_t master_seed = 0;
  int worker_count = 0;  // 0 = hardware concurrency

  void validate() const;
};

struct SweepCell {
  double nu = 0.0;
  int32_t k = 0;
  double frac_cooperate = 0.0;
  double frac_defect = 0.0;
  double frac_coexist = 0.0;
};

struct SweepResult {
  std::vector<SweepCell> cells;  // k-major, nu ascending within each k
};

Phase classify(const RunResult& run);

// Every (nu, k) cell gets runs_per_point independent simulations, each on a
// freshly generated graph (new network seed per run). (cell, run) tasks are
// distributed over worker threads; per-task seeds derive from master_seed,
// so the result does not depend on scheduling.
SweepResult sweep(const SweepSpec& spec);

// Smallest grid nu whose cooperation fraction exceeds 1/2 such that every
// larger grid nu does too (monotone front); nullopt when no such point.
std::optional<double> critical_nu(const SweepResult& result, int32_t k);

// Two-pass threshold estimate for one prize period: a coarse 0.1-step pass
// over (0,1] locates the front, then a fine pass (default step 0.02) refines
// the bracket below it. The front rule runs on the merged grid.
struct CriticalEstimate {
  std::optional<double> value;
  SweepResult merged;  // all measured cells, nu ascending
};

CriticalEstimate estimate_critical_nu_cells(const SweepSpec& spec, int32_t k,
                                            double fine_step = 0.02);
std::optional<double> estimate_critical_nu(const SweepSpec& spec, int32_t k, double fine_step = 0.02);

}  // namespace lurker
