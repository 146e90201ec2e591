#ifndef TENDONSIM_SOLVER_HPP
#define TENDONSIM_SOLVER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tendonsim {

// A strain-energy landscape over a small set of named free coordinates
// (lengths in mm or angles in rad). energy must be continuous and piecewise
// C1 on the bounded domain; gradient is the matching analytic gradient,
// assembled by the system builder from per-wire tensions and geometric
// Jacobians. Evaluations must be side-effect free.
struct EnergySystem {
  std::vector<std::string> coord_names;
  std::function<double(const std::vector<double>&)> energy;
  std::function<std::vector<double>(const std::vector<double>&)> gradient;
  // Per-coordinate closed intervals; empty means unbounded.
  std::vector<std::pair<double, double>> bounds;

  int dim() const { return static_cast<int>(coord_names.size()); }
};

struct EquilibriumResult {
  std::vector<double> coords;
  double residual_norm = 0.0;  // projected-gradient norm at the solution
  int iterations = 0;
  bool converged = false;
  // Energies of the accepted iterates, starting with the initial point.
  // Filled only when MinimizeOptions::record_energy_history is set.
  std::vector<double> energy_history;
};

struct MinimizeOptions {
  double tolerance = 1e-9;  // gradient-norm stopping threshold
  int max_iterations = 10000;
  bool record_energy_history = false;
};

// Analytic gradient with bounds checking. Throws std::domain_error when
// coords leave the bounded domain.
std::vector<double> system_gradient(const EnergySystem& system,
                                    const std::vector<double>& coords);

// Central-difference gradient estimate, used for verification only.
// Requires coords +- h to stay within bounds.
std::vector<double> finite_diff_gradient(const EnergySystem& system,
                                         const std::vector<double>& coords, double h);

// Energy minimization by projected gradient descent with Armijo
// backtracking (halving steps, sufficient-decrease constant 1e-4). The
// energy kink at the wire dead-band boundary rules out methods that assume
// smooth second derivatives, so only first-order steps are taken. Energy is
// nonincreasing across accepted iterates; terminates when the projected
// gradient norm drops to the tolerance or iterations run out (converged
// stays false then; no exception). NaN energy raises NumericError.
EquilibriumResult minimize(const EnergySystem& system, const std::vector<double>& initial,
                           const MinimizeOptions& options = {});

}  // namespace tendonsim

#endif  // TENDONSIM_SOLVER_HPP
