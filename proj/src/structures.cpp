#include "tendonsim/structures.hpp"

#include <string>

#include "tendonsim/errors.hpp"

namespace tendonsim {

double AttachmentLayout::wire_pitch() const {
  return n_wires > 1 ? rail_width_x / (n_wires - 1) : 0.0;
}

const char* to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::Parallel: return "parallel";
    case StructureKind::Cross: return "cross";
    case StructureKind::ParallelCross: return "parallel_cross";
  }
  return "?";
}

const char* to_string(SweepAxis axis) {
  return axis == SweepAxis::XShear ? "x_shear" : "y_pull";
}

std::vector<std::pair<int, int>> structure_pairing(StructureKind kind, int n_anchors) {
  std::vector<std::pair<int, int>> pairs;
  if (kind == StructureKind::Parallel || kind == StructureKind::ParallelCross) {
    for (int i = 0; i < n_anchors; ++i) {
      pairs.emplace_back(i, i);
    }
  }
  if (kind == StructureKind::Cross || kind == StructureKind::ParallelCross) {
    for (int i = 0; i < n_anchors; ++i) {
      const int j = n_anchors - 1 - i;
      if (j == i) {
        continue;  // odd middle anchor would make a parallel wire
      }
      pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

WireNet build_structure(StructureKind kind, const AttachmentLayout& layout,
                        const WireParams& params) {
  if (layout.n_wires < 2) {
    throw ConfigError("layout needs at least 2 wires per rail, got " +
                      std::to_string(layout.n_wires));
  }
  if (!(layout.rail_separation_y > 0.0)) {
    throw ConfigError("rail separation must be positive");
  }
  if (layout.rail_width_x < 0.0) {
    throw ConfigError("rail width must be nonnegative");
  }

  WireNet net;
  const double pitch = layout.wire_pitch();
  for (int i = 0; i < layout.n_wires; ++i) {
    net.fixed_rail_anchors.push_back({i * pitch, 0.0, 0.0});
    net.moving_rail_anchors.push_back({i * pitch, layout.rail_separation_y, 0.0});
  }

  for (const auto& [i, j] : structure_pairing(kind, layout.n_wires)) {
    Wire wire;
    wire.anchor_a = net.fixed_rail_anchors[i];
    wire.anchor_b = net.moving_rail_anchors[j];
    wire.params = params;
    wire.params.natural_length = norm(wire.anchor_b - wire.anchor_a);  // built taut
    net.wires.push_back(wire);
  }
  return net;
}

double net_strain_energy(const WireNet& net, const Vec3& displacement) {
  double total = 0.0;
  for (const Wire& wire : net.wires) {
    const Vec3 span = (wire.anchor_b + displacement) - wire.anchor_a;
    const double length = norm(span);
    if (length == 0.0) {
      throw DegenerateGeometryError("displacement collapses a wire onto its fixed anchor");
    }
    total += strain_energy(wire.params, length);
  }
  return total;
}

Vec3 net_restoring_force(const WireNet& net, const Vec3& displacement) {
  Vec3 force;
  for (const Wire& wire : net.wires) {
    const Vec3 span = (wire.anchor_b + displacement) - wire.anchor_a;
    const double length = norm(span);
    if (length == 0.0) {
      throw DegenerateGeometryError("displacement collapses a wire onto its fixed anchor");
    }
    force += (tension(wire.params, length) / length) * span;
  }
  return force;
}

SweepResult sweep_displacement(const std::vector<std::pair<StructureKind, WireNet>>& nets,
                               SweepAxis axis, double max_displacement, int steps) {
  if (!(max_displacement > 0.0)) {
    throw ConfigError("sweep displacement range must be positive");
  }
  if (steps < 2) {
    throw ConfigError("sweep needs at least 2 steps, got " + std::to_string(steps));
  }

  SweepResult result;
  result.axis = axis;
  result.displacement.resize(steps);
  for (int k = 0; k < steps; ++k) {
    result.displacement[k] = max_displacement * k / (steps - 1);
  }

  for (const auto& [kind, net] : nets) {
    SweepResult::Series series;
    series.kind = kind;
    series.force.reserve(steps);
    for (const double d : result.displacement) {
      const Vec3 disp = axis == SweepAxis::XShear ? Vec3{d, 0.0, 0.0} : Vec3{0.0, d, 0.0};
      const Vec3 f = net_restoring_force(net, disp);
      series.force.push_back(axis == SweepAxis::XShear ? f.x : f.y);
    }
    result.series.push_back(std::move(series));
  }
  return result;
}

SweepResult compare_structures(const AttachmentLayout& layout, const WireParams& params,
                               SweepAxis axis, double max_displacement, int steps) {
  std::vector<std::pair<StructureKind, WireNet>> nets;
  for (const StructureKind kind :
       {StructureKind::Parallel, StructureKind::Cross, StructureKind::ParallelCross}) {
    nets.emplace_back(kind, build_structure(kind, layout, params));
  }
  return sweep_displacement(nets, axis, max_displacement, steps);
}

}  // namespace tendonsim
