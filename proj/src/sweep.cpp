#include "lurker/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "lurker/seeds.hpp"

namespace lurker {

void SweepSpec::validate() const {
  network.validate();
  base.validate();
  if (nu_grid.empty()) throw std::invalid_argument("nu_grid: must not be empty");
  for (size_t i = 0; i < nu_grid.size(); ++i) {
    if (!(nu_grid[i] > 0.0 && nu_grid[i] <= 1.0))
      throw std::invalid_argument("nu_grid: values must be in (0,1]");
    if (i > 0 && !(nu_grid[i] > nu_grid[i - 1]))
      throw std::invalid_argument("nu_grid: must be strictly increasing");
  }
  if (k_values.empty()) throw std::invalid_argument("k_values: must not be empty");
  for (int32_t k : k_values)
    if (k < 1) throw std::invalid_argument("k_values: prize periods must be >= 1");
  if (runs_per_point < 1) throw std::invalid_argument("runs_per_point: must be >= 1");
  if (max_steps < 1) throw std::invalid_argument("max_steps: must be >= 1");
}

Phase classify(const RunResult& run) { return run.phase; }

SweepResult sweep(const SweepSpec& spec) {
  spec.validate();
  const size_t n_cells = spec.k_values.size() * spec.nu_grid.size();
  const size_t runs = static_cast<size_t>(spec.runs_per_point);
  const size_t n_tasks = n_cells * runs;
  std::vector<Phase> outcomes(n_tasks);

  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (;;) {
      const size_t task = next.fetch_add(1, std::memory_order_relaxed);
      if (task >= n_tasks) break;
      const size_t cell = task / runs;
      const size_t run_idx = task % runs;
      const size_t ki = cell / spec.nu_grid.size();
      const size_t ni = cell % spec.nu_grid.size();

      NetworkSpec net = spec.network;
      net.seed = derive_seed({spec.master_seed, 0x6e6574ULL, cell, run_idx});
      const Graph g = generate(net);

      GameParams params = spec.base;
      params.interest = spec.nu_grid[ni];
      params.prize_period = spec.k_values[ki];
      const uint64_t run_seed = derive_seed({spec.master_seed, 0x72756eULL, cell, run_idx});
      outcomes[task] = run(g, params, spec.init_rho_c, spec.max_steps, run_seed).phase;
    }
  };

  int workers = spec.worker_count;
  if (workers <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    workers = hw > 0 ? static_cast<int>(hw) : 2;
  }
  workers = std::min<size_t>(workers, n_tasks);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int t = 0; t < workers; ++t) threads.emplace_back(work);
  for (auto& t : threads) t.join();

  SweepResult result;
  result.cells.reserve(n_cells);
  for (size_t cell = 0; cell < n_cells; ++cell) {
    SweepCell c;
    c.k = spec.k_values[cell / spec.nu_grid.size()];
    c.nu = spec.nu_grid[cell % spec.nu_grid.size()];
    int64_t coop = 0, defect = 0, coexist = 0;
    for (size_t r = 0; r < runs; ++r) {
      switch (outcomes[cell * runs + r]) {
        case Phase::AllCooperate: ++coop; break;
        case Phase::AllDefect: ++defect; break;
        case Phase::Coexistence: ++coexist; break;
      }
    }
    const auto total = static_cast<double>(runs);
    c.frac_cooperate = static_cast<double>(coop) / total;
    c.frac_defect = static_cast<double>(defect) / total;
    c.frac_coexist = static_cast<double>(coexist) / total;
    result.cells.push_back(c);
  }
  return result;
}

std::optional<double> critical_nu(const SweepResult& result, int32_t k) {
  std::vector<SweepCell> row;
  for (const auto& c : result.cells)
    if (c.k == k) row.push_back(c);
  if (row.size() < 2) return std::nullopt;
  std::sort(row.begin(), row.end(), [](const SweepCell& a, const SweepCell& b) { return a.nu < b.nu; });
  std::optional<double> front;
  for (auto it = row.rbegin(); it != row.rend(); ++it) {
    if (it->frac_cooperate > 0.5)
      front = it->nu;
    else
      break;
  }
  return front;
}

namespace {

std::vector<double> nu_range(double lo, double hi, double step) {
  std::vector<double> grid;
  const auto first = static_cast<int64_t>(std::ceil(lo / step - 1e-9));
  const auto last = static_cast<int64_t>(std::floor(hi / step + 1e-9));
  for (int64_t i = std::max<int64_t>(first, 1); i <= last; ++i)
    grid.push_back(std::round(static_cast<double>(i) * step * 1e9) / 1e9);
  return grid;
}

}  // namespace

CriticalEstimate estimate_critical_nu_cells(const SweepSpec& spec, int32_t k, double fine_step) {
  SweepSpec coarse = spec;
  coarse.k_values = {k};
  coarse.nu_grid = nu_range(0.1, 1.0, 0.1);
  CriticalEstimate est;
  est.merged = sweep(coarse);
  const auto coarse_front = critical_nu(est.merged, k);
  if (coarse_front) {
    // refine the open bracket below the coarse front
    const double lo = *coarse_front - 0.1 + fine_step / 2.0;
    const double hi = *coarse_front - fine_step / 2.0;
    SweepSpec fine = spec;
    fine.k_values = {k};
    fine.nu_grid = nu_range(lo, hi, fine_step);
    if (!fine.nu_grid.empty()) {
      const SweepResult fine_result = sweep(fine);
      est.merged.cells.insert(est.merged.cells.end(), fine_result.cells.begin(),
                              fine_result.cells.end());
    }
  }
  std::sort(est.merged.cells.begin(), est.merged.cells.end(),
            [](const SweepCell& a, const SweepCell& b) { return a.nu < b.nu; });
  est.value = critical_nu(est.merged, k);
  return est;
}

std::optional<double> estimate_critical_nu(const SweepSpec& spec, int32_t k, double fine_step) {
  return estimate_critical_nu_cells(spec, k, fine_step).value;
}

}  // namespace lurker
