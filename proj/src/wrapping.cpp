#include "tendonsim/wrapping.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tendonsim/errors.hpp"

namespace tendonsim {

namespace {

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 d = b - a;
  const double len_sq = dot(d, d);
  double t = len_sq > 0.0 ? dot(p - a, d) / len_sq : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return norm(p - (a + t * d));
}

// Tangent points on the circle as seen from an external point, one for each
// travel orientation around the circle. `ccw` selects the point where a path
// leaving `p` continues counterclockwise along the circle.
Vec2 tangent_point(Vec2 p, const CircleObstacle& o, bool ccw) {
  const Vec2 d = p - o.center;
  const double dist_sq = dot(d, d);
  const double rho = o.radius;
  const double tau = std::sqrt(dist_sq - rho * rho);
  const double scale = rho / dist_sq;
  const Vec2 radial = (scale * rho) * d;
  const Vec2 lateral = (scale * tau) * perp(d);
  // Counterclockwise travel keeps the center on the left of the path.
  return ccw ? o.center + radial + lateral : o.center + radial - lateral;
}

WrappedPath2D build_wrap(Vec2 a, Vec2 b, const CircleObstacle& o, bool ccw) {
  WrappedPath2D path;
  path.a = a;
  path.b = b;
  path.obstacle = o;
  path.has_arc = true;
  // Travel a -> T_a, around the circle, T_b -> b. The departure tangent
  // point uses the wrap orientation; the arrival point uses the opposite
  // orientation as seen from b (the path leaves the circle there).
  path.tangent_a = tangent_point(a, o, ccw);
  path.tangent_b = tangent_point(b, o, !ccw);
  const double angle_a = std::atan2(path.tangent_a.y - o.center.y, path.tangent_a.x - o.center.x);
  const double angle_b = std::atan2(path.tangent_b.y - o.center.y, path.tangent_b.x - o.center.x);
  double sweep = angle_b - angle_a;
  if (ccw) {
    while (sweep < 0.0) sweep += 2.0 * kPi;
  } else {
    while (sweep > 0.0) sweep -= 2.0 * kPi;
  }
  path.arc_angle = sweep;
  path.total_length = norm(path.tangent_a - a) + o.radius * std::abs(sweep) +
                      norm(b - path.tangent_b);
  return path;
}

}  // namespace

WrappedPath2D wrapped_path_2d(Vec2 a, Vec2 b, const CircleObstacle& obstacle, WrapSide side) {
  if (!(obstacle.radius > 0.0)) {
    throw std::domain_error("wrap circle radius must be positive");
  }
  if (norm(a - obstacle.center) <= obstacle.radius ||
      norm(b - obstacle.center) <= obstacle.radius) {
    throw std::domain_error("wrap anchors must lie strictly outside the circle");
  }
  if (norm(b - a) == 0.0) {
    throw DegenerateGeometryError("wrap anchors coincide");
  }

  if (point_segment_distance(obstacle.center, a, b) >= obstacle.radius) {
    WrappedPath2D path;
    path.a = a;
    path.b = b;
    path.obstacle = obstacle;
    path.total_length = norm(b - a);
    return path;
  }

  // An arc bulging to the left of the chord is traversed clockwise (the
  // circle stays on the travel right), and vice versa.
  const WrappedPath2D left = build_wrap(a, b, obstacle, /*ccw=*/false);
  const WrappedPath2D right = build_wrap(a, b, obstacle, /*ccw=*/true);
  switch (side) {
    case WrapSide::Left: return left;
    case WrapSide::Right: return right;
    case WrapSide::Auto: break;
  }
  return right.total_length < left.total_length ? right : left;
}

double moment_arm(const WrappedPath2D& path, Vec2 pivot) {
  const Vec2 start = path.has_arc ? path.tangent_b : path.a;
  const Vec2 line = path.b - start;
  const double length = norm(line);
  if (length == 0.0) {
    throw DegenerateGeometryError("moment arm of a zero-length path segment");
  }
  return std::abs(cross(line, pivot - start)) / length;
}

const char* to_string(SlipStability stability) {
  switch (stability) {
    case SlipStability::StableMin: return "stable_min";
    case SlipStability::Neutral: return "neutral";
    case SlipStability::Unstable: return "unstable";
  }
  return "?";
}

SphereSlipReport slip_stability_sphere(const Vec3& a, const Vec3& b, const Vec3& sphere_center,
                                       double sphere_radius, int samples) {
  if (!(sphere_radius > 0.0)) {
    throw std::domain_error("sphere radius must be positive");
  }
  if (norm(a - sphere_center) <= sphere_radius || norm(b - sphere_center) <= sphere_radius) {
    throw std::domain_error("slip anchors must lie strictly outside the sphere");
  }
  const Vec3 chord = b - a;
  const double chord_length = norm(chord);
  if (chord_length == 0.0) {
    throw DegenerateGeometryError("slip anchors coincide");
  }

  const Vec3 axis = (1.0 / chord_length) * chord;
  const double t_closest = std::clamp(dot(sphere_center - a, axis), 0.0, chord_length);
  if (norm(sphere_center - (a + t_closest * axis)) >= sphere_radius) {
    throw std::domain_error("straight segment clears the sphere; no wrap to analyze");
  }

  // Frame about the anchor axis: origin at the closest point of the infinite
  // line to the center, first normal toward the center.
  const Vec3 line_foot = a + dot(sphere_center - a, axis) * axis;
  const Vec3 offset = sphere_center - line_foot;
  const double center_distance = norm(offset);
  Vec3 normal0;
  if (center_distance > 1e-12 * sphere_radius) {
    normal0 = (1.0 / center_distance) * offset;
  } else {
    const Vec3 helper = std::abs(axis.z) < 0.9 ? Vec3{0.0, 0.0, 1.0} : Vec3{1.0, 0.0, 0.0};
    normal0 = normalized(helper - dot(helper, axis) * axis);
  }
  const Vec3 normal90 = cross(axis, normal0);

  int count = std::max(samples, 3);
  if (count % 2 == 0) {
    ++count;
  }

  SphereSlipReport report;
  report.profile.reserve(count);
  const double axis_a = dot(a - line_foot, axis);
  const double axis_b = dot(b - line_foot, axis);
  for (int j = 0; j < count; ++j) {
    const double phi = -kPi / 2.0 + kPi * j / (count - 1);
    const Vec3 in_plane_up = std::cos(phi) * normal0 + std::sin(phi) * normal90;
    // Sphere cross-section in the rotated plane. The chord offset from the
    // section center is center_distance*cos(phi) and the section radius
    // sqrt(R^2 - (center_distance*sin(phi))^2); their difference of squares
    // is R^2 - center_distance^2 > 0, so the in-plane chord always cuts the
    // section and a wrap exists in every sampled plane.
    const double plane_gap = center_distance * std::sin(phi);
    const double section_radius =
        std::sqrt(sphere_radius * sphere_radius - plane_gap * plane_gap);
    const Vec2 a2{axis_a, 0.0};
    const Vec2 b2{axis_b, 0.0};
    const CircleObstacle section{{0.0, center_distance * std::cos(phi)}, section_radius};
    // Over the crest: the arc bulges past the section center, i.e. on the +y
    // side here, which is the left of a2->b2.
    const WrappedPath2D wrap = wrapped_path_2d(a2, b2, section, WrapSide::Left);

    SphereSlipReport::Sample sample;
    sample.phi = phi;
    sample.length = wrap.total_length;
    sample.tangent_a = line_foot + wrap.tangent_a.x * axis + wrap.tangent_a.y * in_plane_up;
    sample.tangent_b = line_foot + wrap.tangent_b.x * axis + wrap.tangent_b.y * in_plane_up;
    report.profile.push_back(sample);
  }

  const int mid = count / 2;
  const double step = kPi / (count - 1);
  const double second_diff = report.profile[mid + 1].length - 2.0 * report.profile[mid].length +
                             report.profile[mid - 1].length;
  report.margin = second_diff / (step * step);
  constexpr double kFlatTolerance = 1e-9;
  if (std::abs(second_diff) <= kFlatTolerance) {
    report.stability = SlipStability::Neutral;
  } else if (second_diff < 0.0) {
    report.stability = SlipStability::Unstable;
  } else {
    report.stability = SlipStability::StableMin;
  }
  return report;
}

}  // namespace tendonsim
