#include "lurker/meanfield.hpp"

#include <cmath>
#include <stdexcept>

namespace lurker {

TransitionProbs transition_probs(const GameParams& p) {
  // pi_d - pi_c = vc and pi_c - pi_d = -vc, by cancellation of the pot term.
  return {fermi_prob(0.0, p.coin, p), fermi_prob(0.0, -p.coin, p)};
}

MeanFieldTrajectory integrate(double rho_c0, const GameParams& p, double t_end, double dt) {
  if (rho_c0 < 0.0 || rho_c0 > 1.0) throw std::invalid_argument("rho_c0: must be in [0,1]");
  if (!(dt > 0.0)) throw std::invalid_argument("dt: must be > 0");
  if (!(t_end > 0.0)) throw std::invalid_argument("t_end: must be > 0");

  const auto [pc, pd] = transition_probs(p);
  const double rate = pc - pd;
  const auto f = [rate](double rho) { return rate * rho * (1.0 - rho); };

  MeanFieldTrajectory traj;
  traj.adopt_cooperation = pc;
  traj.adopt_defection = pd;
  const auto full_steps = static_cast<int64_t>(t_end / dt + 1e-9);
  const double tail = t_end - static_cast<double>(full_steps) * dt;
  traj.samples.reserve(static_cast<size_t>(full_steps) + 2);

  double rho = rho_c0;
  traj.samples.push_back({0.0, rho, 1.0 - rho});
  auto advance = [&](double h, double t_next) {
    const double k1 = f(rho);
    const double k2 = f(rho + 0.5 * h * k1);
    const double k3 = f(rho + 0.5 * h * k2);
    const double k4 = f(rho + h * k3);
    rho += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!std::isfinite(rho)) throw std::runtime_error("integrate: non-finite density reached");
    traj.samples.push_back({t_next, rho, 1.0 - rho});
  };
  for (int64_t i = 1; i <= full_steps; ++i) advance(dt, static_cast<double>(i) * dt);
  if (tail > 1e-12) advance(tail, t_end);
  return traj;
}

double closed_form(double rho_c0, const GameParams& p, double t) {
  if (rho_c0 <= 0.0) return 0.0;
  if (rho_c0 >= 1.0) return 1.0;
  const auto [pc, pd] = transition_probs(p);
  const double growth = std::exp((pd - pc) * t);  // +inf decays the density to 0
  return rho_c0 / (rho_c0 + (1.0 - rho_c0) * growth);
}

}  // namespace lurker
