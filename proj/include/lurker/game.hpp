#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace lurker {

enum class Strategy : uint8_t { Cooperator, Defector };

// Memoryless agents reset their accumulated payoff at every activation;
// memory-aware agents keep it for the whole run.
enum class MemoryMode : uint8_t { Memoryless, MemoryAware };

struct GameParams {
  double synergy = 2.0;         // pool multiplier r, > 0
  double interest = 0.5;        // interest-heterogeneity scale nu, in (0,1]
  double adoption_noise = 0.5;  // Fermi temperature K, > 0
  double coin = 1.0;            // value of one contributed virtual coin, > 0
  std::optional<int32_t> prize_period;  // award every k cooperative activations; empty = no rewarding
  MemoryMode memory = MemoryMode::Memoryless;
  double payoff_cutoff = 20.0;  // symmetric clamp on the Fermi exponent (pi_y - pi_x)/K

  void validate() const {
    if (!(synergy > 0.0)) throw std::invalid_argument("synergy: must be > 0");
    if (!(interest > 0.0 && interest <= 1.0)) throw std::invalid_argument("interest: must be in (0,1]");
    if (!(adoption_noise > 0.0)) throw std::invalid_argument("adoption_noise: must be > 0");
    if (!(coin > 0.0)) throw std::invalid_argument("coin: must be > 0");
    if (prize_period && *prize_period < 1) throw std::invalid_argument("prize_period: must be >= 1");
    if (!(payoff_cutoff > 0.0)) throw std::invalid_argument("payoff_cutoff: must be > 0");
  }
};

struct MeanFieldPayoffs {
  double cooperator;  // r * nu * n_cooperators * vc - vc
  double defector;    // r * nu * n_cooperators * vc
};

// One-shot payoffs in the fully mixed game. Total function: the cooperator
// value is reported even for n_cooperators = 0; callers must ignore it then.
// The prize term is added by the engine, not here.
inline MeanFieldPayoffs payoff_meanfield(int64_t n_cooperators, const GameParams& p) {
  const double pot = p.synergy * p.interest * static_cast<double>(n_cooperators) * p.coin;
  return {pot - p.coin, pot};
}

// Payoff one group member takes out of a single group. The pot is equally
// shared (not divided): every member receives the full scaled pot, and a
// cooperator additionally pays one coin into this group.
inline double payoff_group(int32_t group_cooperators, bool is_cooperator, const GameParams& p) {
  if (is_cooperator && group_cooperators == 0)
    throw std::invalid_argument("payoff_group: a cooperating member counts itself, group_cooperators must be >= 1");
  const double pot = p.synergy * p.interest * static_cast<double>(group_cooperators) * p.coin;
  return is_cooperator ? pot - p.coin : pot;
}

// Reward for an uninterrupted cooperation streak. Fires exactly when the
// streak reaches the prize period k, paying k coins; the caller resets the
// streak counter afterwards (and on any defection). Zero with rewarding off.
inline double prize(int32_t streak, const GameParams& p) {
  if (!p.prize_period) return 0.0;
  return streak == *p.prize_period ? static_cast<double>(streak) * p.coin : 0.0;
}

// Probability that agent y adopts the strategy of agent x given their
// payoffs: (1 + exp[(pi_y - pi_x)/K])^-1. The exponent is clamped at
// +-payoff_cutoff so that huge accumulated payoffs degrade gracefully to a
// near-deterministic richer-wins rule instead of overflowing.
inline double fermi_prob(double pi_x, double pi_y, const GameParams& p) {
  const double z = std::clamp((pi_y - pi_x) / p.adoption_noise, -p.payoff_cutoff, p.payoff_cutoff);
  return 1.0 / (1.0 + std::exp(z));
}

}  // namespace lurker
