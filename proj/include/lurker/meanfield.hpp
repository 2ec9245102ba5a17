#pragma once

#include <vector>

#include "lurker/game.hpp"

namespace lurker {

// Strategy-revision probabilities in the fully mixed population. The payoff
// differences collapse to +-vc independently of the synergy factor, the
// interest scale and the population size, so both values depend only on
// vc and K.
struct TransitionProbs {
  double adopt_cooperation;  // a defector imitates a cooperator
  double adopt_defection;    // a cooperator imitates a defector
};

TransitionProbs transition_probs(const GameParams& p);

struct MeanFieldSample {
  double t;
  double rho_c;
  double rho_d;
};

struct MeanFieldTrajectory {
  std::vector<MeanFieldSample> samples;  // t strictly increasing; rho_c + rho_d = 1
  double adopt_cooperation = 0.0;
  double adopt_defection = 0.0;
};

// Integrates d(rho_c)/dt = (p_c - p_d) * rho_c * (1 - rho_c) with classic
// fixed-step RK4, sampling at every step. The defector density is carried
// as 1 - rho_c, which makes density conservation exact. Throws
// std::runtime_error if an intermediate value turns non-finite.
MeanFieldTrajectory integrate(double rho_c0, const GameParams& p, double t_end, double dt = 1e-3);

// Analytic logistic solution of the same equation; exact, used as the
// integrator's cross-check.
double closed_form(double rho_c0, const GameParams& p, double t);

}  // namespace lurker
