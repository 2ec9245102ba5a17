// lurkergame: evolutionary simulator of lurking/delurking dynamics on
// complex networks. Subcommands: generate-network, metrics, simulate,
// meanfield, sweep. All artifacts are CSV-like text with '#' comment
// headers echoing the fully resolved configuration, so any output can be
// reproduced byte-for-byte from its own header.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lurker/engine.hpp"
#include "lurker/game.hpp"
#include "lurker/graph.hpp"
#include "lurker/meanfield.hpp"
#include "lurker/metrics.hpp"
#include "lurker/netgen.hpp"
#include "lurker/sweep.hpp"

namespace {

using nlohmann::json;

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string fmt_num(double v) { return fmt("%.10g", v); }

struct NetworkFlags {
  std::string model = "ws";
  int32_t n = 5000;
  int32_t mean_degree = 4;
  int32_t m = 2;
  double beta = 0.0;
  uint64_t seed = 0;

  lurker::NetworkSpec to_spec() const {
    lurker::NetworkSpec spec;
    spec.model = lurker::network_model_from_string(model);
    spec.n = n;
    spec.mean_degree = mean_degree;
    spec.edges_per_node = m;
    spec.beta = beta;
    spec.seed = seed;
    spec.validate();
    return spec;
  }

  // the degree-like parameter reported next to the model name
  std::string param_value() const {
    if (model == "ws") return fmt("%.2f", beta);
    if (model == "ba") return std::to_string(m);
    return "0";
  }

  void echo(std::vector<std::string>& lines) const {
    lines.push_back("network.model=" + model);
    lines.push_back("network.n=" + std::to_string(n));
    if (model == "ws") {
      lines.push_back("network.mean_degree=" + std::to_string(mean_degree));
      lines.push_back("network.beta=" + fmt_num(beta));
    }
    if (model == "ba") lines.push_back("network.m=" + std::to_string(m));
    lines.push_back("network.seed=" + std::to_string(seed));
  }
};

struct GameFlags {
  double r = 2.0;
  double nu = 0.5;
  double K = 0.5;
  double vc = 1.0;
  double cutoff = 20.0;
  int32_t prize_period = 0;  // 0 disables rewarding
  std::string memory = "memoryless";

  lurker::GameParams to_params() const {
    lurker::GameParams p;
    p.synergy = r;
    p.interest = nu;
    p.adoption_noise = K;
    p.coin = vc;
    p.payoff_cutoff = cutoff;
    if (prize_period > 0) p.prize_period = prize_period;
    p.memory = memory == "memoryaware" ? lurker::MemoryMode::MemoryAware
                                       : lurker::MemoryMode::Memoryless;
    p.validate();
    return p;
  }

  void echo(std::vector<std::string>& lines, bool with_nu = true) const {
    lines.push_back("game.r=" + fmt_num(r));
    if (with_nu) lines.push_back("game.nu=" + fmt_num(nu));
    lines.push_back("game.K=" + fmt_num(K));
    lines.push_back("game.vc=" + fmt_num(vc));
    lines.push_back("game.prize_period=" +
                    (prize_period > 0 ? std::to_string(prize_period) : std::string("none")));
    lines.push_back("game.memory=" + memory);
    lines.push_back("game.cutoff=" + fmt_num(cutoff));
  }
};

const CLI::Validator NuRange(
    [](std::string& s) {
      const double v = std::stod(s);
      return (v > 0.0 && v <= 1.0) ? std::string{} : "value " + s + " not in (0,1]";
    },
    "NU_RANGE");

void add_network_options(CLI::App* cmd, NetworkFlags& f) {
  cmd->add_option("--model", f.model, "network model: ws, ba or complete")
      ->check(CLI::IsMember({"ws", "ba", "complete"}))
      ->capture_default_str();
  cmd->add_option("--n", f.n, "number of agents")->check(CLI::Range(2, 100000000))
      ->capture_default_str();
  cmd->add_option("--mean-degree", f.mean_degree, "ws ring degree (even)")
      ->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--m", f.m, "ba edges per new node")->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--beta", f.beta, "ws rewiring probability")->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--net-seed", f.seed, "network generation seed")->capture_default_str();
}

void add_game_options(CLI::App* cmd, GameFlags& f, bool require_nu) {
  cmd->add_option("--r", f.r, "synergy factor")->check(CLI::PositiveNumber)->capture_default_str();
  if (require_nu) {
    cmd->add_option("--nu", f.nu, "interest-heterogeneity coefficient, in (0,1]")
        ->check(NuRange)->required();
  } else {
    cmd->add_option("--nu", f.nu, "interest-heterogeneity coefficient, in (0,1]")
        ->check(NuRange)->capture_default_str();
  }
  cmd->add_option("--noise-k", f.K, "strategy-adoption uncertainty K")
      ->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--vc", f.vc, "virtual coin value")->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--prize-period", f.prize_period, "reward every k cooperative activations (0 = off)")
      ->check(CLI::Range(0, 1000000000))->capture_default_str();
  cmd->add_option("--memory", f.memory, "payoff accumulation mode")
      ->check(CLI::IsMember({"memoryless", "memoryaware"}))->capture_default_str();
  cmd->add_option("--cutoff", f.cutoff, "clamp on the Fermi exponent")
      ->check(CLI::PositiveNumber)->capture_default_str();
}

std::unique_ptr<std::ofstream> open_output(const std::string& path) {
  if (path.empty()) return nullptr;
  auto out = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*out) throw std::runtime_error("cannot open output file " + path);
  return out;
}

void write_comments(std::ostream& out, const std::vector<std::string>& lines) {
  for (const auto& l : lines) out << "# " << l << "\n";
}

std::vector<int32_t> parse_int_list(const std::string& csv, const char* what) {
  std::vector<int32_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lurkergame: evolutionary lurking/delurking dynamics on complex networks"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from an INI config file (flags take precedence)");
  app.allow_config_extras(CLI::config_extras_mode::error);

  // ---- generate-network ----------------------------------------------
  auto* gen = app.add_subcommand("generate-network", "generate a network and write its edge list");
  NetworkFlags gen_net;
  std::string gen_output;
  add_network_options(gen, gen_net);
  gen->add_option("--output", gen_output, "output file (default: stdout)");

  // ---- metrics ---------------------------------------------------------
  auto* met = app.add_subcommand("metrics", "structural metrics (exact all-pairs BFS)");
  NetworkFlags met_net;
  std::string met_output, met_input;
  int32_t met_seeds = 1;
  int met_workers = 0;
  add_network_options(met, met_net);
  met->add_option("--input", met_input, "read an edge-list file instead of generating");
  met->add_option("--seeds", met_seeds, "number of consecutive seeds to evaluate")
      ->check(CLI::PositiveNumber)->capture_default_str();
  met->add_option("--workers", met_workers, "BFS worker threads (0 = all cores)")
      ->envname("LURKER_WORKERS")->capture_default_str();
  met->add_option("--output", met_output, "output file (default: stdout)");

  // ---- simulate --------------------------------------------------------
  auto* sim = app.add_subcommand("simulate", "Monte Carlo run on one generated network");
  NetworkFlags sim_net;
  GameFlags sim_game;
  double sim_rho0 = 0.5;
  int64_t sim_max_steps = 10'000'000;
  int64_t sim_stride = 0;
  uint64_t sim_seed = 0;
  std::string sim_output;
  add_network_options(sim, sim_net);
  add_game_options(sim, sim_game, /*require_nu=*/true);
  sim->add_option("--init-rho-c", sim_rho0, "initial cooperator density")
      ->check(CLI::Range(0.0, 1.0))->capture_default_str();
  sim->add_option("--max-steps", sim_max_steps, "step budget")->check(CLI::PositiveNumber)
      ->capture_default_str();
  sim->add_option("--sample-stride", sim_stride, "series sampling stride (0 = max_steps/10000)")
      ->capture_default_str();
  sim->add_option("--seed", sim_seed, "simulation seed")->capture_default_str();
  sim->add_option("--output", sim_output, "series CSV file (default: stdout)");

  // ---- meanfield -------------------------------------------------------
  auto* mf = app.add_subcommand("meanfield", "deterministic fully mixed dynamics");
  GameFlags mf_game;
  double mf_rho0 = 0.5, mf_t_end = 50.0, mf_dt = 1e-3;
  std::string mf_output;
  add_game_options(mf, mf_game, /*require_nu=*/false);
  mf->add_option("--rho0", mf_rho0, "initial cooperator density")->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  mf->add_option("--t-end", mf_t_end, "integration horizon")->check(CLI::PositiveNumber)
      ->capture_default_str();
  mf->add_option("--dt", mf_dt, "integration step")->check(CLI::PositiveNumber)
      ->capture_default_str();
  mf->add_option("--output", mf_output, "trajectory CSV file (default: stdout)");

  // ---- sweep -----------------------------------------------------------
  auto* sw = app.add_subcommand("sweep", "phase fractions over a (nu, k) grid");
  NetworkFlags sw_net;
  GameFlags sw_game;
  std::string sw_k_values = "2";
  double sw_nu_min = 0.1, sw_nu_max = 1.0, sw_nu_step = 0.1;
  int32_t sw_runs = 30;
  int64_t sw_max_steps = 10'000'000;
  double sw_rho0 = 0.5;
  uint64_t sw_master_seed = 0;
  int sw_workers = 0;
  bool sw_refine = false;
  std::string sw_output;
  add_network_options(sw, sw_net);
  add_game_options(sw, sw_game, /*require_nu=*/false);
  sw->get_option("--nu")->description("ignored; the sweep varies nu over its grid");
  sw->add_option("--k-values", sw_k_values, "comma-separated prize periods")->capture_default_str();
  sw->add_option("--nu-min", sw_nu_min, "grid start")->check(NuRange)->capture_default_str();
  sw->add_option("--nu-max", sw_nu_max, "grid end")->check(NuRange)->capture_default_str();
  sw->add_option("--nu-step", sw_nu_step, "grid step")->check(CLI::PositiveNumber)
      ->capture_default_str();
  sw->add_flag("--refine", sw_refine, "two-pass threshold refinement (coarse 0.1, fine 0.02)");
  sw->add_option("--runs", sw_runs, "independent runs per grid cell")->check(CLI::PositiveNumber)
      ->capture_default_str();
  sw->add_option("--max-steps", sw_max_steps, "step budget per run")->check(CLI::PositiveNumber)
      ->capture_default_str();
  sw->add_option("--init-rho-c", sw_rho0, "initial cooperator density")
      ->check(CLI::Range(0.0, 1.0))->capture_default_str();
  sw->add_option("--master-seed", sw_master_seed, "master seed for all derived streams")
      ->capture_default_str();
  sw->add_option("--workers", sw_workers, "worker threads (0 = all cores)")
      ->envname("LURKER_WORKERS")->capture_default_str();
  sw->add_option("--output", sw_output, "cell CSV file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    // ---- generate-network ---------------------------------------------
    if (gen->parsed()) {
      const auto spec = gen_net.to_spec();
      const lurker::Graph g = lurker::generate(spec);
      std::vector<std::string> comments{"cmd=generate-network"};
      gen_net.echo(comments);
      auto file = open_output(gen_output);
      std::ostream& out = file ? *file : std::cout;
      lurker::write_edge_list(out, g, comments);
      return 0;
    }

    // ---- metrics --------------------------------------------------------
    if (met->parsed()) {
      std::vector<std::string> comments{"cmd=metrics"};
      std::vector<std::string> rows;
      if (!met_input.empty()) {
        std::ifstream in(met_input);
        if (!in) throw std::runtime_error("cannot open input file " + met_input);
        const lurker::Graph g = lurker::read_edge_list(in);
        comments.push_back("input=" + met_input);
        const auto m = lurker::path_metrics(g, met_workers);
        rows.push_back("file,-," + std::to_string(g.node_count()) + ",-," +
                       fmt("%.6f", m.avg_path_length) + "," + std::to_string(m.diameter) + "," +
                       fmt("%.6f", m.clustering) + "," + fmt("%.6f", m.transitivity));
      } else {
        met_net.echo(comments);
        comments.push_back("seeds=" + std::to_string(met_seeds));
        for (int32_t s = 0; s < met_seeds; ++s) {
          lurker::NetworkSpec spec = met_net.to_spec();
          spec.seed = met_net.seed + static_cast<uint64_t>(s);
          const lurker::Graph g = lurker::generate(spec);
          const auto m = lurker::path_metrics(g, met_workers);
          rows.push_back(met_net.model + "," + met_net.param_value() + "," +
                         std::to_string(spec.n) + "," + std::to_string(spec.seed) + "," +
                         fmt("%.6f", m.avg_path_length) + "," + std::to_string(m.diameter) + "," +
                         fmt("%.6f", m.clustering) + "," + fmt("%.6f", m.transitivity));
        }
      }
      auto file = open_output(met_output);
      std::ostream& out = file ? *file : std::cout;
      write_comments(out, comments);
      out << "model,param,n,seed,avg_path_length,diameter,clustering,transitivity\n";
      for (const auto& r : rows) out << r << "\n";
      return 0;
    }

    // ---- simulate -------------------------------------------------------
    if (sim->parsed()) {
      const auto spec = sim_net.to_spec();
      const auto params = sim_game.to_params();
      const lurker::Graph g = lurker::generate(spec);
      const auto result = lurker::run(g, params, sim_rho0, sim_max_steps, sim_seed, sim_stride);

      std::vector<std::string> comments{"cmd=simulate"};
      sim_net.echo(comments);
      sim_game.echo(comments);
      comments.push_back("run.init_rho_c=" + fmt_num(sim_rho0));
      comments.push_back("run.max_steps=" + std::to_string(sim_max_steps));
      comments.push_back("run.sample_stride=" + std::to_string(sim_stride));
      comments.push_back("run.seed=" + std::to_string(sim_seed));
      comments.push_back("phase=" + lurker::to_string(result.phase));
      comments.push_back("steps_executed=" + std::to_string(result.steps_executed));

      auto file = open_output(sim_output);
      std::ostream& out = file ? *file : std::cout;
      write_comments(out, comments);
      out << "step,rho_c\n";
      for (const auto& [step, rho] : result.series)
        out << step << "," << fmt("%.8f", rho) << "\n";

      json summary{{"phase", lurker::to_string(result.phase)},
                   {"steps_executed", result.steps_executed},
                   {"seed", result.seed},
                   {"final_rho_c", result.series.back().second},
                   {"params",
                    {{"model", sim_net.model}, {"n", spec.n}, {"r", sim_game.r},
                     {"nu", sim_game.nu}, {"K", sim_game.K}, {"vc", sim_game.vc},
                     {"prize_period", sim_game.prize_period}, {"memory", sim_game.memory},
                     {"cutoff", sim_game.cutoff}}}};
      std::cout << summary.dump() << "\n";
      return 0;
    }

    // ---- meanfield ------------------------------------------------------
    if (mf->parsed()) {
      const auto params = mf_game.to_params();
      const auto traj = lurker::integrate(mf_rho0, params, mf_t_end, mf_dt);
      std::vector<std::string> comments{"cmd=meanfield"};
      mf_game.echo(comments);
      comments.push_back("run.rho0=" + fmt_num(mf_rho0));
      comments.push_back("run.t_end=" + fmt_num(mf_t_end));
      comments.push_back("run.dt=" + fmt_num(mf_dt));
      comments.push_back("adopt_cooperation=" + fmt("%.6f", traj.adopt_cooperation));
      comments.push_back("adopt_defection=" + fmt("%.6f", traj.adopt_defection));
      auto file = open_output(mf_output);
      std::ostream& out = file ? *file : std::cout;
      write_comments(out, comments);
      out << "t,rho_c,rho_d\n";
      for (const auto& s : traj.samples)
        out << fmt("%.6f", s.t) << "," << fmt("%.10e", s.rho_c) << "," << fmt("%.10e", s.rho_d)
            << "\n";
      return 0;
    }

    // ---- sweep ----------------------------------------------------------
    if (sw->parsed()) {
      lurker::SweepSpec spec;
      spec.network = sw_net.to_spec();
      spec.base = sw_game.to_params();
      spec.k_values = parse_int_list(sw_k_values, "k-values");
      spec.runs_per_point = sw_runs;
      spec.max_steps = sw_max_steps;
      spec.init_rho_c = sw_rho0;
      spec.master_seed = sw_master_seed;
      spec.worker_count = sw_workers;
      if (sw_nu_step <= 0 || sw_nu_min > sw_nu_max)
        throw std::invalid_argument("nu grid: need nu-min <= nu-max and nu-step > 0");
      for (double nu = sw_nu_min; nu <= sw_nu_max + 1e-9; nu += sw_nu_step)
        spec.nu_grid.push_back(std::min(std::round(nu * 1e9) / 1e9, 1.0));

      std::vector<std::string> comments{"cmd=sweep"};
      sw_net.echo(comments);
      sw_game.echo(comments, /*with_nu=*/false);
      comments.push_back("sweep.k_values=" + sw_k_values);
      comments.push_back("sweep.refine=" + std::string(sw_refine ? "true" : "false"));
      if (!sw_refine)
        comments.push_back("sweep.nu_grid=" + fmt_num(sw_nu_min) + ":" + fmt_num(sw_nu_max) + ":" +
                           fmt_num(sw_nu_step));
      comments.push_back("sweep.runs_per_point=" + std::to_string(sw_runs));
      comments.push_back("sweep.max_steps=" + std::to_string(sw_max_steps));
      comments.push_back("sweep.init_rho_c=" + fmt_num(sw_rho0));
      comments.push_back("sweep.master_seed=" + std::to_string(sw_master_seed));

      std::vector<lurker::SweepCell> cells;
      std::vector<std::string> critical_lines;
      if (sw_refine) {
        for (int32_t k : spec.k_values) {
          const auto est = lurker::estimate_critical_nu_cells(spec, k);
          cells.insert(cells.end(), est.merged.cells.begin(), est.merged.cells.end());
          critical_lines.push_back("critical_nu model=" + sw_net.model +
                                   " param=" + sw_net.param_value() + " memory=" + sw_game.memory +
                                   " k=" + std::to_string(k) + " value=" +
                                   (est.value ? fmt("%.4f", *est.value) : std::string("none")));
        }
      } else {
        const auto result = lurker::sweep(spec);
        cells = result.cells;
        for (int32_t k : spec.k_values) {
          const auto crit = lurker::critical_nu(result, k);
          critical_lines.push_back("critical_nu model=" + sw_net.model +
                                   " param=" + sw_net.param_value() + " memory=" + sw_game.memory +
                                   " k=" + std::to_string(k) + " value=" +
                                   (crit ? fmt("%.4f", *crit) : std::string("none")));
        }
      }

      auto file = open_output(sw_output);
      std::ostream& out = file ? *file : std::cout;
      write_comments(out, comments);
      out << "model,beta_or_m,memory,nu,k,frac_coop,frac_defect,frac_coexist\n";
      for (const auto& c : cells)
        out << sw_net.model << "," << sw_net.param_value() << "," << sw_game.memory << ","
            << fmt("%.4f", c.nu) << "," << c.k << "," << fmt("%.6f", c.frac_cooperate) << ","
            << fmt("%.6f", c.frac_defect) << "," << fmt("%.6f", c.frac_coexist) << "\n";
      write_comments(out, critical_lines);
      for (const auto& l : critical_lines) std::cout << l << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
