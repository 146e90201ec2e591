#ifndef TENDONSIM_WIRE_HPP
#define TENDONSIM_WIRE_HPP

#include <utility>

#include "tendonsim/geometry.hpp"

namespace tendonsim {

// Tension baseline of the exponential fiber law.
//
// A wire of natural length l0 carries no developed tension until it is
// stretched beyond its dead band ld; past that the tension grows
// exponentially with the excess strain s = (l - l0) - ld:
//
//   Normalized:  T(s) = exp(K*s) - 1   (zero inside the dead band; default)
//   RawExp:      T(s) = exp(K*s)       (literal exponential, baseline 1)
//
// RawExp keeps a unit pre-tension throughout the dead band. Its strain
// energy omits the corresponding linear ramp over the dead band, so RawExp
// energies are for curve reporting only; equilibrium solving always runs on
// Normalized wires.
enum class Baseline { Normalized, RawExp };

struct WireParams {
  double stiffness = 1.0;        // K, 1/mm
  double natural_length = 1.0;   // l0, mm
  double dead_band = 0.0;        // ld, mm
  Baseline baseline = Baseline::Normalized;
};

// One elastic fiber embedded between two anchor points (mm).
struct Wire {
  WireParams params;
  Vec3 anchor_a;
  Vec3 anchor_b;
};

// Excess strain s = max(0, (length - l0) - ld). Throws std::domain_error for
// nonpositive length or invalid params.
double excess_strain(const WireParams& params, double length);

// Tension at the given length (dimensionless force units). Nonnegative in
// Normalized mode, >= 1 in RawExp mode; monotone nondecreasing in length.
double tension(const WireParams& params, double length);

// Strain energy (force*mm) with d(energy)/d(length) == tension for s > 0 and
// energy == 0 inside the dead band. C1 at the dead-band boundary in
// Normalized mode.
double strain_energy(const WireParams& params, double length);

// Forces the wire exerts on (anchor_a, anchor_b): each anchor is pulled
// toward the opposite one with the current tension. Equal and opposite.
// Throws DegenerateGeometryError for coincident anchors.
std::pair<Vec3, Vec3> wire_force(const Wire& wire);

}  // namespace tendonsim

#endif  // TENDONSIM_WIRE_HPP
