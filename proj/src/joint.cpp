#include "tendonsim/joint.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tendonsim/errors.hpp"
#include "tendonsim/solver.hpp"

namespace tendonsim {

namespace {

void check_state(const Joint2DOF& joint, const JointState& state) {
  const JointBounds& b = joint.bounds;
  if (state.pitch < b.pitch_min || state.pitch > b.pitch_max) {
    throw std::domain_error("pitch " + std::to_string(state.pitch) + " outside [" +
                            std::to_string(b.pitch_min) + ", " + std::to_string(b.pitch_max) +
                            "]");
  }
  if (state.yaw < b.yaw_min || state.yaw > b.yaw_max) {
    throw std::domain_error("yaw " + std::to_string(state.yaw) + " outside [" +
                            std::to_string(b.yaw_min) + ", " + std::to_string(b.yaw_max) + "]");
  }
}

Vec3 joint_rotate(const JointState& state, const Vec3& v) {
  return rotate_x(rotate_z(v, state.yaw), state.pitch);
}

}  // namespace

Joint2DOF make_collateral_joint(const CollateralGeometry& geometry, StructureKind kind) {
  if (geometry.anchor_pairs < 2) {
    throw ConfigError("collateral sheet needs at least 2 anchor pairs");
  }
  if (!(geometry.ring_radius > 0.0) || !(geometry.half_height > 0.0)) {
    throw ConfigError("collateral ring radius and half height must be positive");
  }

  Joint2DOF joint;
  joint.sheet_kind = kind;
  joint.bounds = geometry.bounds;
  const int n = geometry.anchor_pairs;
  for (int i = 0; i < n; ++i) {
    const double psi = -geometry.arc_half_angle + 2.0 * geometry.arc_half_angle * i / (n - 1);
    const double x = geometry.ring_radius * std::sin(psi);
    const double y = geometry.ring_radius * std::cos(psi);
    joint.proximal_anchors.push_back({x, y, +geometry.half_height});
    joint.distal_anchors.push_back({x, y, -geometry.half_height});
  }

  joint.wire_pairs = structure_pairing(kind, n);
  for (const auto& [i, j] : joint.wire_pairs) {
    const double rest = norm(joint.proximal_anchors[i] - joint.distal_anchors[j]);
    WireParams params;
    params.stiffness = geometry.stiffness;
    params.dead_band = geometry.dead_band;
    params.natural_length = rest - geometry.dead_band - geometry.pretension;
    if (!(params.natural_length > 0.0)) {
      throw ConfigError("collateral pretension leaves wire " + std::to_string(i) +
                        " with nonpositive natural length");
    }
    joint.sheet_params.push_back(params);
  }
  return joint;
}

std::vector<double> ligament_lengths(const Joint2DOF& joint, const JointState& state) {
  check_state(joint, state);
  std::vector<double> lengths;
  lengths.reserve(joint.wire_pairs.size());
  for (const auto& [i, j] : joint.wire_pairs) {
    lengths.push_back(norm(joint.proximal_anchors[i] - joint_rotate(state, joint.distal_anchors[j])));
  }
  return lengths;
}

double sheet_energy(const Joint2DOF& joint, const JointState& state) {
  check_state(joint, state);
  double total = 0.0;
  for (std::size_t w = 0; w < joint.wire_pairs.size(); ++w) {
    const auto& [i, j] = joint.wire_pairs[w];
    const double length =
        norm(joint.proximal_anchors[i] - joint_rotate(state, joint.distal_anchors[j]));
    total += strain_energy(joint.sheet_params[w], length);
  }
  return total;
}

std::pair<double, double> passive_torque(const Joint2DOF& joint, const JointState& state) {
  check_state(joint, state);
  const Vec3 pitch_axis{1.0, 0.0, 0.0};
  // Yaw turns about the pitched body z axis.
  const Vec3 yaw_axis = rotate_x(Vec3{0.0, 0.0, 1.0}, state.pitch);

  double grad_pitch = 0.0;
  double grad_yaw = 0.0;
  for (std::size_t w = 0; w < joint.wire_pairs.size(); ++w) {
    const auto& [i, j] = joint.wire_pairs[w];
    const Vec3 world_distal = joint_rotate(state, joint.distal_anchors[j]);
    const Vec3 span = joint.proximal_anchors[i] - world_distal;
    const double length = norm(span);
    if (length == 0.0) {
      throw DegenerateGeometryError("sheet wire " + std::to_string(w) +
                                    " collapsed to zero length");
    }
    const double t = tension(joint.sheet_params[w], length);
    if (t == 0.0) {
      continue;
    }
    const Vec3 unit = (1.0 / length) * span;
    // d(length)/dq = unit . d(span)/dq with d(world_distal)/dq = axis x world_distal.
    grad_pitch += t * -dot(unit, cross(pitch_axis, world_distal));
    grad_yaw += t * -dot(unit, cross(yaw_axis, world_distal));
  }
  return {-grad_pitch, -grad_yaw};
}

TorqueCurve torque_vs_yaw_curve(const CollateralGeometry& geometry, double pitch_fixed,
                                double yaw_range, int steps) {
  if (steps < 2) {
    throw ConfigError("torque curve needs at least 2 steps");
  }
  if (!(yaw_range > 0.0)) {
    throw ConfigError("torque curve yaw range must be positive");
  }

  TorqueCurve curve;
  curve.fixed_note = "pitch=" + std::to_string(pitch_fixed);
  curve.angle.resize(steps);
  for (int k = 0; k < steps; ++k) {
    curve.angle[k] = -yaw_range + 2.0 * yaw_range * k / (steps - 1);
  }
  for (const StructureKind kind :
       {StructureKind::Parallel, StructureKind::Cross, StructureKind::ParallelCross}) {
    const Joint2DOF joint = make_collateral_joint(geometry, kind);
    TorqueCurve::Series series;
    series.label = to_string(kind);
    series.torque.reserve(steps);
    for (const double yaw : curve.angle) {
      const auto [tp, ty] = passive_torque(joint, {pitch_fixed, yaw});
      series.torque.push_back(-ty);  // applied torque needed to hold the yaw
    }
    curve.series.push_back(std::move(series));
  }
  return curve;
}

ScrewHomeTrajectory screw_home_sim(const Joint2DOF& joint, double initial_yaw,
                                   double pitch_start, int pitch_steps) {
  if (!(pitch_start > 0.0)) {
    throw std::domain_error("screw-home needs a flexed start, pitch_start > 0");
  }
  if (pitch_steps < 1) {
    throw ConfigError("screw-home needs at least 1 pitch step");
  }
  check_state(joint, {pitch_start, initial_yaw});

  ScrewHomeTrajectory trajectory;
  trajectory.initial_yaw = initial_yaw;
  trajectory.rows.reserve(pitch_steps + 1);

  double yaw = initial_yaw;
  for (int k = 0; k <= pitch_steps; ++k) {
    const double pitch = pitch_start * (1.0 - static_cast<double>(k) / pitch_steps);

    EnergySystem relax;
    relax.coord_names = {"yaw"};
    relax.bounds = {{joint.bounds.yaw_min, joint.bounds.yaw_max}};
    relax.energy = [&joint, pitch](const std::vector<double>& q) {
      return sheet_energy(joint, {pitch, q[0]});
    };
    relax.gradient = [&joint, pitch](const std::vector<double>& q) {
      return std::vector<double>{-passive_torque(joint, {pitch, q[0]}).second};
    };
    const EquilibriumResult eq = minimize(relax, {yaw});
    yaw = eq.coords[0];
    trajectory.rows.push_back({pitch, yaw, eq.converged});
  }
  return trajectory;
}

double hinge_ligament_length(const WrappedHinge& hinge, double angle) {
  const Vec2 swinging = rotate(hinge.swinging_anchor, angle);
  return wrapped_path_2d(hinge.fixed_anchor, swinging, hinge.wrap).total_length;
}

double hinge_natural_length(const WrappedHinge& hinge) {
  return hinge_ligament_length(hinge, hinge.engagement_angle) - hinge.dead_band;
}

double hinge_passive_torque(const WrappedHinge& hinge, double angle) {
  WireParams params;
  params.stiffness = hinge.stiffness;
  params.dead_band = hinge.dead_band;
  params.natural_length = hinge_natural_length(hinge);
  const double length = hinge_ligament_length(hinge, angle);
  const double t = tension(params, length);
  if (t == 0.0) {
    return 0.0;
  }
  const double h = 1e-7;
  const double slope =
      (hinge_ligament_length(hinge, angle + h) - hinge_ligament_length(hinge, angle - h)) /
      (2.0 * h);
  return -t * slope;
}

TorqueCurve soft_limit_curve(const WrappedHinge& hinge, double angle_min, double angle_max,
                             int steps) {
  if (!(angle_max > angle_min)) {
    throw ConfigError("soft-limit curve needs angle_max > angle_min");
  }
  if (steps < 2) {
    throw ConfigError("soft-limit curve needs at least 2 steps");
  }
  TorqueCurve curve;
  curve.fixed_note = "hinge";
  TorqueCurve::Series series;
  series.label = "soft_limit";
  curve.angle.resize(steps);
  series.torque.resize(steps);
  for (int k = 0; k < steps; ++k) {
    const double angle = angle_min + (angle_max - angle_min) * k / (steps - 1);
    curve.angle[k] = angle;
    series.torque[k] = hinge_passive_torque(hinge, angle);
  }
  curve.series.push_back(std::move(series));
  return curve;
}

}  // namespace tendonsim
