#ifndef TENDONSIM_JOINT_HPP
#define TENDONSIM_JOINT_HPP

#include <string>
#include <utility>
#include <vector>

#include "tendonsim/structures.hpp"
#include "tendonsim/wire.hpp"
#include "tendonsim/wrapping.hpp"

namespace tendonsim {

// Pseudo-spherical joint coordinates. Rotation convention is intrinsic
// pitch-then-yaw about the joint center: a distal point v maps to
// R_x(pitch) * R_z(yaw) * v, so yaw turns about the pitched body axis.
struct JointState {
  double pitch = 0.0;  // rad
  double yaw = 0.0;    // rad
};

struct JointBounds {
  double pitch_min = 0.0;
  double pitch_max = 2.1;    // ~120 deg
  double yaw_min = -0.35;    // ~ -20 deg
  double yaw_max = 0.35;
};

// A ligament sheet spanning a 2-DOF joint, modeled as discrete wires
// between anchor rows on the proximal and distal bodies. All anchors are
// expressed relative to the joint center; the proximal frame is the world
// frame and distal anchors are stored at the identity state.
struct Joint2DOF {
  std::vector<Vec3> proximal_anchors;
  std::vector<Vec3> distal_anchors;
  std::vector<std::pair<int, int>> wire_pairs;  // (proximal index, distal index)
  std::vector<WireParams> sheet_params;         // per wire
  StructureKind sheet_kind = StructureKind::ParallelCross;
  JointBounds bounds;
};

// Symmetric collateral-sheet geometry: anchor rings of radius ring_radius at
// heights +-half_height, spread over +-arc_half_angle about the anterior
// (+y) direction. Natural lengths are fitted at full extension (0, 0) so the
// dead band is consumed there plus `pretension` mm of extra strain; flexion
// slackens every wire, extension and yaw tension them.
struct CollateralGeometry {
  double ring_radius = 15.0;     // mm
  double half_height = 32.0;     // mm
  double arc_half_angle = 0.4363323129985824;  // 25 deg
  int anchor_pairs = 4;
  double pretension = 0.5;       // mm beyond the dead band at (0, 0)
  double stiffness = 1.0;        // 1/mm
  double dead_band = 0.5;        // mm
  JointBounds bounds;
};

Joint2DOF make_collateral_joint(const CollateralGeometry& geometry, StructureKind kind);

// Current wire lengths: distal anchors are rotated by the joint rotation and
// each wire length is the distance between its paired anchors. Throws
// std::domain_error when the state leaves the configured bounds.
std::vector<double> ligament_lengths(const Joint2DOF& joint, const JointState& state);

// Total sheet strain energy at the state.
double sheet_energy(const Joint2DOF& joint, const JointState& state);

// Passive torque (pitch, yaw) = -dE/d(pitch, yaw), assembled analytically
// from wire tensions and anchor velocity Jacobians.
std::pair<double, double> passive_torque(const Joint2DOF& joint, const JointState& state);

struct TorqueCurve {
  std::vector<double> angle;  // strictly monotone abscissa (rad)
  struct Series {
    std::string label;
    std::vector<double> torque;
  };
  std::vector<Series> series;
  std::string fixed_note;  // which coordinates were held fixed
};

// Applied yaw torque (-passive yaw torque, the torque needed to hold the
// displacement) against yaw at a fixed pitch, one series per structure kind
// built over the same collateral geometry.
TorqueCurve torque_vs_yaw_curve(const CollateralGeometry& geometry, double pitch_fixed,
                                double yaw_range, int steps);

struct ScrewHomeTrajectory {
  double initial_yaw = 0.0;
  struct Row {
    double pitch = 0.0;
    double yaw = 0.0;       // relaxed equilibrium yaw at this pitch
    bool converged = true;  // false flags a non-convergent relaxation
  };
  std::vector<Row> rows;  // pitch strictly decreasing from pitch_start to 0
};

// Quasi-static knee extension: pitch steps down a uniform schedule from
// pitch_start to 0 and yaw relaxes to the passive-torque equilibrium at each
// step, warm-started from the previous one. Non-convergent steps are flagged
// and the simulation continues.
ScrewHomeTrajectory screw_home_sim(const Joint2DOF& joint, double initial_yaw,
                                   double pitch_start, int pitch_steps);

// 1-DOF hinge with an elastic band routed around a circular boss at the
// joint center, hip-style: positive angle (extension) winds the band and
// lengthens its path, flexion unwinds and slackens it. The natural length is
// fitted so tension starts exactly at engagement_angle.
struct WrappedHinge {
  Vec2 fixed_anchor{-35.0, 55.0};      // pelvis side, hinge-plane mm
  Vec2 swinging_anchor{-45.0, -65.0};  // femur side at angle 0
  CircleObstacle wrap{{0.0, 0.0}, 25.0};
  double stiffness = 0.15;             // 1/mm
  double dead_band = 0.5;              // mm
  double engagement_angle = 0.5235987755982988;  // 30 deg
};

// Path length of the hinge ligament at the given extension angle.
double hinge_ligament_length(const WrappedHinge& hinge, double angle);

// Natural length implied by the engagement fit: length(engagement) - dead_band.
double hinge_natural_length(const WrappedHinge& hinge);

// Passive hinge torque: 0 while slack, -tension * d(length)/d(angle) once
// the ligament engages (restoring, opposes further extension).
double hinge_passive_torque(const WrappedHinge& hinge, double angle);

// Torque tabulated over [angle_min, angle_max] in `steps` uniform samples.
TorqueCurve soft_limit_curve(const WrappedHinge& hinge, double angle_min, double angle_max,
                             int steps);

}  // namespace tendonsim

#endif  // TENDONSIM_JOINT_HPP
