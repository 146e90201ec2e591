#include "tendonsim/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tendonsim/errors.hpp"

namespace tendonsim {

namespace {

void check_system(const EnergySystem& system) {
  if (!system.energy || !system.gradient) {
    throw std::invalid_argument("energy system needs both energy and gradient callables");
  }
  if (!system.bounds.empty() && system.bounds.size() != system.coord_names.size()) {
    throw std::invalid_argument("bounds must be empty or match the coordinate count");
  }
}

void check_in_bounds(const EnergySystem& system, const std::vector<double>& coords,
                     double slack = 0.0) {
  if (coords.size() != system.coord_names.size()) {
    throw std::invalid_argument("coordinate count mismatch");
  }
  if (system.bounds.empty()) {
    return;
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const auto& [lo, hi] = system.bounds[i];
    if (coords[i] < lo - slack || coords[i] > hi + slack) {
      throw std::domain_error("coordinate '" + system.coord_names[i] + "' = " +
                              std::to_string(coords[i]) + " outside bounds [" +
                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
  }
}

std::vector<double> clamp_to_bounds(const EnergySystem& system, std::vector<double> coords) {
  if (!system.bounds.empty()) {
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const auto& [lo, hi] = system.bounds[i];
      if (coords[i] < lo) coords[i] = lo;
      if (coords[i] > hi) coords[i] = hi;
    }
  }
  return coords;
}

// Gradient with components pointing out of an active bound zeroed; its norm
// is the stationarity measure for the projected iteration.
double projected_gradient_norm(const EnergySystem& system, const std::vector<double>& coords,
                               const std::vector<double>& grad) {
  double sq = 0.0;
  for (std::size_t i = 0; i < grad.size(); ++i) {
    double g = grad[i];
    if (!system.bounds.empty()) {
      const auto& [lo, hi] = system.bounds[i];
      if ((coords[i] <= lo && g > 0.0) || (coords[i] >= hi && g < 0.0)) {
        g = 0.0;
      }
    }
    sq += g * g;
  }
  return std::sqrt(sq);
}

double checked_energy(const EnergySystem& system, const std::vector<double>& coords) {
  const double e = system.energy(coords);
  if (std::isnan(e)) {
    throw NumericError("energy evaluated to NaN");
  }
  return e;
}

}  // namespace

std::vector<double> system_gradient(const EnergySystem& system,
                                    const std::vector<double>& coords) {
  check_system(system);
  check_in_bounds(system, coords);
  return system.gradient(coords);
}

std::vector<double> finite_diff_gradient(const EnergySystem& system,
                                         const std::vector<double>& coords, double h) {
  check_system(system);
  if (!(h > 0.0)) {
    throw std::invalid_argument("finite-difference step must be positive");
  }
  std::vector<double> probe = coords;
  std::vector<double> grad(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    probe[i] = coords[i] + h;
    check_in_bounds(system, probe);
    const double above = system.energy(probe);
    probe[i] = coords[i] - h;
    check_in_bounds(system, probe);
    const double below = system.energy(probe);
    probe[i] = coords[i];
    grad[i] = (above - below) / (2.0 * h);
  }
  return grad;
}

EquilibriumResult minimize(const EnergySystem& system, const std::vector<double>& initial,
                           const MinimizeOptions& options) {
  check_system(system);
  check_in_bounds(system, initial);
  if (!(options.tolerance > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }

  constexpr double kSufficientDecrease = 1e-4;
  constexpr double kBacktrackFactor = 0.5;
  constexpr double kMinStep = 1e-18;

  EquilibriumResult result;
  result.coords = initial;

  double energy = checked_energy(system, result.coords);
  if (options.record_energy_history) {
    result.energy_history.push_back(energy);
  }
  std::vector<double> grad = system.gradient(result.coords);
  result.residual_norm = projected_gradient_norm(system, result.coords, grad);

  double step = 1.0;
  while (result.residual_norm > options.tolerance &&
         result.iterations < options.max_iterations) {
    std::vector<double> candidate(result.coords.size());
    bool accepted = false;
    while (step >= kMinStep) {
      for (std::size_t i = 0; i < candidate.size(); ++i) {
        candidate[i] = result.coords[i] - step * grad[i];
      }
      candidate = clamp_to_bounds(system, candidate);
      double directional = 0.0;  // <grad, candidate - coords>
      for (std::size_t i = 0; i < candidate.size(); ++i) {
        directional += grad[i] * (candidate[i] - result.coords[i]);
      }
      const double candidate_energy = checked_energy(system, candidate);
      if (candidate_energy <= energy + kSufficientDecrease * directional &&
          directional < 0.0) {
        energy = candidate_energy;
        result.coords = candidate;
        accepted = true;
        break;
      }
      step *= kBacktrackFactor;
    }
    if (!accepted) {
      break;  // no descent direction left at this resolution
    }
    ++result.iterations;
    if (options.record_energy_history) {
      result.energy_history.push_back(energy);
    }
    grad = system.gradient(result.coords);
    result.residual_norm = projected_gradient_norm(system, result.coords, grad);
    step *= 2.0;  // warm-start the next line search
  }

  result.converged = result.residual_norm <= options.tolerance;
  return result;
}

}  // namespace tendonsim
