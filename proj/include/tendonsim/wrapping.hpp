#ifndef TENDONSIM_WRAPPING_HPP
#define TENDONSIM_WRAPPING_HPP

#include <vector>

#include "tendonsim/geometry.hpp"

namespace tendonsim {

struct CircleObstacle {
  Vec2 center;
  double radius = 1.0;
};

enum class WrapSide { Auto, Left, Right };

// Piecewise straight-arc-straight wire path around a circular obstacle.
// When the straight segment a-b clears the circle there is no arc and the
// path is the segment itself. Arc angle is the signed sweep from tangent_a
// to tangent_b (positive counterclockwise).
struct WrappedPath2D {
  Vec2 a;
  Vec2 b;
  CircleObstacle obstacle;
  bool has_arc = false;
  Vec2 tangent_a;
  Vec2 tangent_b;
  double arc_angle = 0.0;
  double total_length = 0.0;
};

// Shortest tangent-arc-tangent path from a to b around the obstacle on the
// requested side of the directed segment a->b. Auto picks the shorter side,
// ties broken Left. Anchors must lie strictly outside the circle.
WrappedPath2D wrapped_path_2d(Vec2 a, Vec2 b, const CircleObstacle& obstacle,
                              WrapSide side = WrapSide::Auto);

// Perpendicular distance from the pivot to the line of action on the b side
// of the path (the straight segment attached to anchor b; the whole segment
// for straight paths). A wrap around a circle centered at the pivot returns
// exactly the circle radius.
double moment_arm(const WrappedPath2D& path, Vec2 pivot);

enum class SlipStability { StableMin, Neutral, Unstable };

const char* to_string(SlipStability stability);

// Length profile of an over-the-top sphere wrap as the wrap plane rotates
// about the anchor-anchor axis.
struct SphereSlipReport {
  struct Sample {
    double phi = 0.0;     // plane rotation (rad), 0 = plane through the sphere center
    double length = 0.0;  // wrapped path length in that plane
    Vec3 tangent_a;       // wrap contact points mapped back to 3D
    Vec3 tangent_b;
  };
  std::vector<Sample> profile;  // phi strictly increasing over [-pi/2, pi/2]
  SlipStability stability = SlipStability::Neutral;
  double margin = 0.0;  // second-difference estimate of d2(length)/dphi2 at phi = 0
};

// Classifies the lateral slip stability of a straight wire forced over a
// spherical obstacle. Candidate wrap planes contain the a-b axis and are
// parametrized by rotation phi about it; in each plane the wire wraps the
// sphere cross-section over the crest (on the side of the section facing
// away from the chord). phi = 0 is the plane through the sphere center.
// Neutral when the profile is flat at phi = 0 within tolerance, Unstable
// when length decreases away from the nominal plane, StableMin otherwise.
//
// Preconditions: both anchors strictly outside the sphere and the straight
// segment a-b intersecting it (otherwise no wrap is needed and the report
// would be meaningless; a domain error is thrown). samples is rounded up to
// the next odd count >= 3 so that phi = 0 is sampled.
SphereSlipReport slip_stability_sphere(const Vec3& a, const Vec3& b, const Vec3& sphere_center,
                                       double sphere_radius, int samples);

}  // namespace tendonsim

#endif  // TENDONSIM_WRAPPING_HPP
