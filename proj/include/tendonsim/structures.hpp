#ifndef TENDONSIM_STRUCTURES_HPP
#define TENDONSIM_STRUCTURES_HPP

#include <string>
#include <vector>

#include "tendonsim/wire.hpp"

namespace tendonsim {

// Two parallel anchor rails: a fixed rail at y = 0 and a moving rail at
// y = rail_separation_y, each with n_wires anchors spread uniformly over
// rail_width_x (all coordinates mm, rails parallel to the x axis, z = 0).
struct AttachmentLayout {
  double rail_separation_y = 200.0;
  double rail_width_x = 20.0;
  int n_wires = 4;

  double wire_pitch() const;
};

enum class StructureKind { Parallel, Cross, ParallelCross };

const char* to_string(StructureKind kind);

// A wire net strung between the two rails. Wires are built taut: each
// natural length equals the built anchor distance, so the net is at rest
// (zero force in Normalized mode) at zero displacement.
struct WireNet {
  std::vector<Wire> wires;               // anchor_a on fixed rail, anchor_b on moving rail
  std::vector<Vec3> fixed_rail_anchors;
  std::vector<Vec3> moving_rail_anchors; // positions at zero displacement
};

// Wire pairing of a structure kind over n anchors per rail:
// Parallel joins anchor i to anchor i; Cross joins i to n-1-i (the middle
// anchor of an odd rail would pair with itself and is skipped);
// ParallelCross is the union of both sets.
std::vector<std::pair<int, int>> structure_pairing(StructureKind kind, int n_anchors);

// Builds the net for one topology. params supplies stiffness, dead band and
// baseline; the natural length of every wire is overwritten with its built
// anchor distance. Throws ConfigError for invalid layouts.
WireNet build_structure(StructureKind kind, const AttachmentLayout& layout,
                        const WireParams& params);

// Total strain energy of the net with the moving rail rigidly translated by
// displacement.
double net_strain_energy(const WireNet& net, const Vec3& displacement);

// Force that must be applied to the moving rail to hold it at the given
// rigid displacement, i.e. the negated sum of the wire forces acting on the
// rail. Equals the gradient of net_strain_energy with respect to the
// displacement, so the component along a positive displacement is positive
// once wires engage. Throws DegenerateGeometryError if the displacement
// collapses a wire.
Vec3 net_restoring_force(const WireNet& net, const Vec3& displacement);

enum class SweepAxis { XShear, YPull };

const char* to_string(SweepAxis axis);

// Tabulated restoring-force component along the sweep axis, one column per
// structure kind, at uniformly spaced displacements.
struct SweepResult {
  SweepAxis axis = SweepAxis::XShear;
  std::vector<double> displacement;  // strictly increasing, starts at 0
  struct Series {
    StructureKind kind;
    std::vector<double> force;
  };
  std::vector<Series> series;
};

// Sweeps the given nets along one axis over [0, max_displacement] in `steps`
// uniformly spaced rows (steps >= 2; row 0 at displacement 0).
SweepResult sweep_displacement(const std::vector<std::pair<StructureKind, WireNet>>& nets,
                               SweepAxis axis, double max_displacement, int steps);

// Builds all three topologies over the same layout and sweeps them together.
SweepResult compare_structures(const AttachmentLayout& layout, const WireParams& params,
                               SweepAxis axis, double max_displacement, int steps);

}  // namespace tendonsim

#endif  // TENDONSIM_STRUCTURES_HPP
